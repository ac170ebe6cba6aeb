//! Exact coefficients of the polynomials `1^p + 2^p + ... + n^p`.
//!
//! Three independent routes produce the same [`CoefficientRow`]:
//!
//! * [`direct_coefficients`]: a rolling single-row recursion, with optional
//!   operation counting through [`OpCounter`];
//! * [`lemma_coefficients`]: repeated exact integration of polynomials;
//! * [`faulhaber_via_bernoulli`]: the classical Bernoulli-number formula.
//!
//! [`oracle`] evaluates rows and computes power sums by brute force.

pub mod bernoulli;
pub mod counter;
pub mod direct;
mod error;
pub mod oracle;
pub mod polynomial;
pub mod rational;
pub mod recurrence;

pub use bernoulli::{
    bernoulli_numbers, bernoulli_polynomial, binomial, faulhaber_via_bernoulli, BernoulliTable,
    Convention,
};
pub use counter::{Arith, OpCounter};
pub use direct::{direct_coefficients, next_row, CoefficientRow};
pub use error::{Error, Result};
pub use oracle::{evaluate_row, power_sum_bruteforce};
pub use polynomial::Polynomial;
pub use rational::{Integer, Rational};
pub use recurrence::{lemma_coefficients, lemma_step};

/// Which route computes the coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Lemma,
    Bernoulli,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Lemma, Method::Bernoulli];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Lemma => "lemma",
            Method::Bernoulli => "bernoulli",
        }
    }

    pub fn coefficients(self, p: usize) -> Result<CoefficientRow> {
        match self {
            Method::Direct => Ok(direct_coefficients(p, None)),
            Method::Lemma => lemma_coefficients(p),
            Method::Bernoulli => Ok(faulhaber_via_bernoulli(p)),
        }
    }
}
