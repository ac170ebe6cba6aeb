//! Definitional ground truth: power sums by direct summation, and exact
//! evaluation of coefficient rows.

use num_traits::Zero;

use crate::direct::CoefficientRow;
use crate::error::{Error, Result};
use crate::rational::{Integer, Rational};

/// `1^p + 2^p + ... + n^p` by big-integer exponentiation, for `n >= 1`.
pub fn power_sum_bruteforce(p: u32, n: u64) -> Result<Integer> {
    if n == 0 {
        return Err(Error::Domain("power sums are defined for n >= 1".into()));
    }
    Ok((1..=n).fold(Integer::zero(), |acc, k| acc + Integer::from(k).pow(p)))
}

/// `sum_j a_j n^j` by Horner's rule.
pub fn evaluate_row(row: &CoefficientRow, n: u64) -> Rational {
    let n = Rational::from_integer(n);
    let inner = row
        .coeffs()
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, a| acc * &n + a);
    inner * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct::direct_coefficients;

    #[test]
    fn bruteforce_examples() {
        assert_eq!(power_sum_bruteforce(3, 4).unwrap(), Integer::from(100));
        assert_eq!(power_sum_bruteforce(0, 7).unwrap(), Integer::from(7));
        assert_eq!(power_sum_bruteforce(2, 3).unwrap(), Integer::from(14));
        assert!(matches!(power_sum_bruteforce(2, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            evaluate_row(&direct_coefficients(2, None), 3),
            Rational::from(14)
        );
        assert_eq!(
            evaluate_row(&direct_coefficients(3, None), 4),
            Rational::from(100)
        );
        for p in 0..=30 {
            assert_eq!(
                evaluate_row(&direct_coefficients(p, None), 1),
                Rational::one()
            );
        }
    }

    #[test]
    fn horner_matches_term_by_term() {
        let row = direct_coefficients(9, None);
        for n in 1..=15u64 {
            let direct: Rational = row
                .coeffs()
                .iter()
                .enumerate()
                .map(|(k, a)| a * Rational::from_integer(Integer::from(n).pow(k as u32 + 1)))
                .sum();
            assert_eq!(evaluate_row(&row, n), direct);
        }
    }

    #[test]
    fn large_values_stay_exact() {
        let row = direct_coefficients(20, None);
        let v = evaluate_row(&row, 1000);
        assert!(v.is_integer());
        assert_eq!(
            v.to_integer().unwrap(),
            power_sum_bruteforce(20, 1000).unwrap()
        );
    }
}
