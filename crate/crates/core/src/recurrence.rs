//! Power-sum polynomials by repeated integration.
//!
//! With `f_0(n) = n`, each step computes
//! `f_p(n) = p * F(n) + (1 - p * F(1)) * n` where `F` is the antiderivative
//! of `f_{p-1}` vanishing at 0.

use crate::direct::CoefficientRow;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

pub fn integrate_polynomial(f: &Polynomial) -> Polynomial {
    f.integrate()
}

pub fn eval_at_one(f: &Polynomial) -> Rational {
    f.eval_at_one()
}

/// Builds `f_p` from `f_{p-1}` (which has degree `p`).
pub fn lemma_step(f_prev: &Polynomial, p: usize) -> Result<Polynomial> {
    if p == 0 {
        return Err(Error::Domain("integration step needs p >= 1".into()));
    }
    match f_prev.degree() {
        Some(d) if d == p => {}
        d => {
            return Err(Error::DegreeMismatch {
                expected: p,
                actual: d.unwrap_or(0),
            })
        }
    }
    let scaled = f_prev.integrate().scale(&Rational::from(p as i64));
    let correction = Rational::one() - scaled.eval_at_one();
    Ok(&scaled + &Polynomial::monomial(correction, 1))
}

/// The power-sum polynomial `f_p`, as a full polynomial including its
/// constant term.
pub fn lemma_polynomial(p: usize) -> Polynomial {
    let mut f = Polynomial::monomial(Rational::one(), 1);
    for step in 1..=p {
        f = lemma_step(&f, step).expect("f_{step-1} has degree step");
    }
    f
}

pub fn lemma_coefficients(p: usize) -> Result<CoefficientRow> {
    CoefficientRow::from_polynomial(&lemma_polynomial(p))
}
