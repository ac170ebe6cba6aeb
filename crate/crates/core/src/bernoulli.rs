//! Bernoulli numbers and polynomials, and the power-sum formula built on them.
//!
//! Numbers come from the recurrence `sum_{k=0}^{i} C(i+1, k) b_k = 0`, `b_0 = 1`,
//! which yields the `b_1 = -1/2` convention. The `b_1 = +1/2` convention
//! differs only at index 1 and is stored alongside.

use num_traits::{One, Zero};

use crate::direct::CoefficientRow;
use crate::error::{Error, Result};
use crate::oracle::power_sum_bruteforce;
use crate::polynomial::Polynomial;
use crate::rational::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    /// `b_1 = +1/2`
    #[default]
    Plus,
    /// `b_1 = -1/2`
    Minus,
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so division is exact
    (1..=k).fold(Integer::one(), |acc, i| {
        acc * Integer::from(n - k + i) / Integer::from(i)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    minus: Vec<Rational>,
    plus: Vec<Rational>,
}

impl BernoulliTable {
    pub fn limit(&self) -> usize {
        self.minus.len() - 1
    }

    pub fn minus(&self) -> &[Rational] {
        &self.minus
    }

    pub fn plus(&self) -> &[Rational] {
        &self.plus
    }

    pub fn values(&self, convention: Convention) -> &[Rational] {
        match convention {
            Convention::Plus => &self.plus,
            Convention::Minus => &self.minus,
        }
    }

    /// `B_i(t) = sum_k C(i,k) b_k t^(i-k)` with the minus convention.
    ///
    /// Panics if `i` exceeds the table limit.
    pub fn polynomial(&self, i: usize) -> Polynomial {
        assert!(
            i <= self.limit(),
            "table holds b_0..b_{}, need b_{i}",
            self.limit()
        );
        let mut cs = vec![Rational::zero(); i + 1];
        for (k, b) in self.minus[..=i].iter().enumerate() {
            cs[i - k] = b * Rational::from_integer(binomial(i as u64, k as u64));
        }
        Polynomial::new(cs)
    }
}

pub fn bernoulli_numbers(m: usize) -> BernoulliTable {
    let mut minus: Vec<Rational> = Vec::with_capacity(m + 1);
    minus.push(Rational::one());
    for i in 1..=m {
        let n = i as u64 + 1;
        let s: Rational = minus
            .iter()
            .enumerate()
            .map(|(k, b)| b * Rational::from_integer(binomial(n, k as u64)))
            .sum();
        minus.push(-(s * Rational::ratio(1, n)));
    }
    let mut plus = minus.clone();
    if m >= 1 {
        plus[1] = -&minus[1];
    }
    BernoulliTable { minus, plus }
}

/// Power-sum coefficients from `f_p(n) = 1/(p+1) sum_{i=0}^{p} C(p+1,i) b_i n^(p+1-i)`
/// with `b_1 = +1/2`.
pub fn faulhaber_via_bernoulli(p: usize) -> CoefficientRow {
    let table = bernoulli_numbers(p);
    let scale = Rational::ratio(1, p as u64 + 1);
    let mut cs = vec![Rational::zero(); p + 1];
    for (i, b) in table.plus.iter().enumerate() {
        let c = Rational::from_integer(binomial(p as u64 + 1, i as u64));
        // n^(p+1-i) sits at index p-i
        cs[p - i] = c * b * &scale;
    }
    CoefficientRow::new(cs).expect("row has p+1 entries")
}

pub fn bernoulli_polynomial(i: usize) -> Polynomial {
    bernoulli_numbers(i).polynomial(i)
}

/// `f_{p-1}(n) == (B_p(n+1) - B_p(0)) / p`, left side by brute force.
///
/// The relation fails at `p = 1`: the right side is then `n + 1`, which
/// counts a `0^0` term the power sum does not have. The check reports
/// that as `false` rather than hiding it.
pub fn check_identity_i(p: usize, n: u64) -> Result<bool> {
    if p == 0 {
        return Err(Error::Domain("identity I needs p >= 1".into()));
    }
    let lhs = Rational::from_integer(power_sum_bruteforce(p as u32 - 1, n)?);
    let b = bernoulli_polynomial(p);
    let rhs = (b.eval(&Rational::from((n + 1) as i64)) - b.eval(&Rational::zero()))
        * Rational::ratio(1, p as u64);
    Ok(lhs == rhs)
}

/// `integral_a^b B_i(t) dt == (B_{i+1}(b) - B_{i+1}(a)) / (i+1)`,
/// left side by symbolic integration.
pub fn check_identity_ii(i: usize, a: &Rational, b: &Rational) -> bool {
    let table = bernoulli_numbers(i + 1);
    let antiderivative = table.polynomial(i).integrate();
    let lhs = antiderivative.eval(b) - antiderivative.eval(a);
    let next = table.polynomial(i + 1);
    let rhs = (next.eval(b) - next.eval(a)) * Rational::ratio(1, i as u64 + 1);
    lhs == rhs
}

/// `B_i(n+1) - B_i(n) == i n^(i-1)` for `i > 1`.
pub fn check_identity_iii(i: usize, n: u64) -> Result<bool> {
    if i <= 1 {
        return Err(Error::Domain(format!("identity III needs i > 1, got {i}")));
    }
    let b = bernoulli_polynomial(i);
    let lhs = b.eval(&Rational::from((n + 1) as i64)) - b.eval(&Rational::from(n as i64));
    let rhs = Rational::from_integer(Integer::from(i) * Integer::from(n).pow(i as u32 - 1));
    Ok(lhs == rhs)
}
