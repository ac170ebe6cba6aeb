//! Text renderings of a coefficient row.

use std::fmt::Write as _;

use clap::ValueEnum;
use faulhaber_core::{CoefficientRow, Rational};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

/// JSON document for one row. Coefficients are canonical rational strings
/// ascending by power, starting at `n^1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffsDocument {
    pub p: usize,
    pub coefficients: Vec<String>,
}

impl CoeffsDocument {
    pub fn from_row(row: &CoefficientRow) -> Self {
        CoeffsDocument {
            p: row.degree(),
            coefficients: row.coeffs().iter().map(Rational::to_string).collect(),
        }
    }

    pub fn to_row(&self) -> faulhaber_core::Result<CoefficientRow> {
        let cs = self
            .coefficients
            .iter()
            .map(|s| s.parse())
            .collect::<faulhaber_core::Result<Vec<Rational>>>()?;
        CoefficientRow::new(cs)
    }
}

pub fn render(row: &CoefficientRow, format: OutputFormat) -> String {
    match format {
        OutputFormat::Plain => render_plain(row),
        OutputFormat::Json => render_json(row),
        OutputFormat::Latex => render_latex(row),
    }
}

/// `a_1=1/6 a_2=1/2 a_3=1/3`
pub fn render_plain(row: &CoefficientRow) -> String {
    row.coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| format!("a_{}={}", k + 1, a))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Compact JSON with keys in schema order.
pub fn render_json(row: &CoefficientRow) -> String {
    serde_json::to_string(&CoeffsDocument::from_row(row)).expect("plain struct serializes")
}

/// Descending powers, zero terms omitted, e.g.
/// `\frac{1}{3}n^{3}+\frac{1}{2}n^{2}+\frac{1}{6}n`.
pub fn render_latex(row: &CoefficientRow) -> String {
    let mut out = String::new();
    for (k, a) in row.coeffs().iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let power = k + 1;
        if a.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mag = a.abs();
        if mag.is_integer() {
            if mag != Rational::one() {
                write!(out, "{}", mag.numer()).unwrap();
            }
        } else {
            write!(out, "\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()).unwrap();
        }
        if power == 1 {
            out.push('n');
        } else {
            write!(out, "n^{{{power}}}").unwrap();
        }
    }
    out
}
