//! Row-by-row computation of power-sum coefficients.
//!
//! Row `i` holds the coefficients of `n^1 ..= n^(i+1)` in the polynomial for
//! `1^i + ... + n^i`. It is obtained from row `i-1` by
//!
//! * `a(i,j) = (i/j) * a(i-1,j-1)` for `1 < j <= i+1`,
//! * `a(i,1) = 1 - sum_{j>1} a(i,j)`, so the row sums to 1.
//!
//! Only one row is kept in memory and updated in place.

use crate::counter::{Arith, OpCounter};
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// Coefficients `a_1 ..= a_{p+1}` of the power-sum polynomial of degree `p + 1`.
///
/// The constant term is always zero and is not stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CoefficientRow {
    coeffs: Vec<Rational>,
}

impl CoefficientRow {
    /// `coeffs[0]` is the coefficient of `n^1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyRow);
        }
        Ok(CoefficientRow { coeffs })
    }

    /// The exponent `p`; the row has `p + 1` entries.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `n^j`; `None` outside `1..=p+1`.
    pub fn coefficient(&self, j: usize) -> Option<&Rational> {
        j.checked_sub(1).and_then(|k| self.coeffs.get(k))
    }

    /// Same values as a polynomial in `n`, with the zero constant term restored.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut cs = Vec::with_capacity(self.coeffs.len() + 1);
        cs.push(Rational::zero());
        cs.extend(self.coeffs.iter().cloned());
        Polynomial::new(cs)
    }

    /// Drops the constant term of a power-sum polynomial, which must be zero.
    pub fn from_polynomial(poly: &Polynomial) -> Result<Self> {
        let c0 = poly.coeff(0);
        if !c0.is_zero() {
            return Err(Error::NonzeroConstant(c0.to_string()));
        }
        let cs = poly.coeffs().get(1..).unwrap_or_default().to_vec();
        CoefficientRow::new(cs)
    }

    /// Checks the structural properties every power-sum row satisfies:
    /// entries sum to 1, `a_{p+1} = 1/(p+1)`, `a_p = 1/2` for `p >= 1`,
    /// and `a_{p-2} = 0` for `p >= 3`.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let p = self.degree();
        let sum: Rational = self.coeffs.iter().sum();
        if sum != Rational::one() {
            return Err(format!("row {p} sums to {sum}, not 1"));
        }
        let top = &self.coeffs[p];
        if *top != Rational::ratio(1, p as u64 + 1) {
            return Err(format!("row {p}: leading coefficient is {top}"));
        }
        if p >= 1 && self.coeffs[p - 1] != Rational::ratio(1, 2) {
            return Err(format!("row {p}: a_{p} is {}, not 1/2", self.coeffs[p - 1]));
        }
        if p >= 3 && !self.coeffs[p - 3].is_zero() {
            return Err(format!(
                "row {p}: a_{} is {}, not 0",
                p - 2,
                self.coeffs[p - 3]
            ));
        }
        Ok(())
    }
}

/// Advances the rolling row from degree `i - 1` to degree `i` in place.
///
/// Costs `i` multiplications and `i + 1` additions on the arithmetic context.
fn advance(row: &mut Vec<Rational>, i: usize, ar: &mut Arith<'_>) {
    debug_assert_eq!(row.len(), i);
    row.push(Rational::zero());
    let mut s = Rational::zero();
    // row[j - 1] holds a_j
    for j in (2..=i + 1).rev() {
        let ratio = Rational::ratio(i as u64, j as u64);
        row[j - 1] = ar.mul(&ratio, &row[j - 2]);
        s = ar.add(&s, &row[j - 1]);
    }
    row[0] = ar.sub(&Rational::one(), &s);
}

/// Fills row `i` from row `i - 1`.
pub fn next_row(prev: &CoefficientRow, i: usize) -> Result<CoefficientRow> {
    if i == 0 || prev.degree() != i - 1 {
        return Err(Error::DegreeMismatch {
            expected: i.saturating_sub(1),
            actual: prev.degree(),
        });
    }
    let mut coeffs = prev.coeffs.clone();
    advance(&mut coeffs, i, &mut Arith::uncounted());
    Ok(CoefficientRow { coeffs })
}

/// Coefficients of `1^p + ... + n^p`, starting from the row `[1]` for `p = 0`.
///
/// When a counter is supplied it ends at `p(p+1)/2 + p` additions and
/// `p(p+1)/2` multiplications.
pub fn direct_coefficients(p: usize, counter: Option<&mut OpCounter>) -> CoefficientRow {
    let mut ar = Arith::with(counter);
    let mut row = Vec::with_capacity(p + 1);
    row.push(Rational::one());
    for i in 1..=p {
        advance(&mut row, i, &mut ar);
    }
    CoefficientRow { coeffs: row }
}
