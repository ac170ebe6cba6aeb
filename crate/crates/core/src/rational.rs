//! Exact rational numbers in canonical form.
//!
//! Every [`Rational`] is stored reduced, with a strictly positive
//! denominator and zero as `0/1`, so structural equality is value equality.
//! The textual form is `num/den`, with the denominator omitted when it is 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` in canonical reduced form.
    pub fn new(num: impl Into<Integer>, den: impl Into<Integer>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<Integer>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `num/den` for machine integers; used for the `i/j` ratios.
    ///
    /// Panics if `den == 0`.
    pub fn ratio(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<Integer> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| -> Result<Integer> {
            t.trim().parse().map_err(|_| Error::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((n, d)) => {
                let den = parse_int(d)?;
                if den.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Rational::new(parse_int(n)?, den)
            }
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> std::iter::Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer as _;
    use proptest::prelude::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(Rational::new(4, 6).unwrap(), r("2/3"));
        let neg = Rational::new(3, -6).unwrap();
        assert_eq!(neg, r("-1/2"));
        assert_eq!(*neg.denom(), Integer::from(2));
        let z = Rational::new(0, 7).unwrap();
        assert_eq!(*z.numer(), Integer::from(0));
        assert_eq!(*z.denom(), Integer::from(1));
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn add_and_mul_examples() {
        assert_eq!(r("1/2") + r("1/3"), r("5/6"));
        assert_eq!(r("1/6") + r("1/2") + r("1/3"), Rational::one());
        assert_eq!(r("-7/9") + Rational::zero(), r("-7/9"));
        assert_eq!(r("2/3") * r("1/2"), r("1/3"));
        assert_eq!(r("-7/9") * Rational::one(), r("-7/9"));
        assert_eq!(r("3") * r("1/6"), r("1/2"));
    }

    #[test]
    fn text_form() {
        assert_eq!(r("-3/4").to_string(), "-3/4");
        assert_eq!(r("5").to_string(), "5");
        assert_eq!(r("10/2").to_string(), "5");
        assert_eq!(r("0/9").to_string(), "0");
        assert_eq!(r(" 2 / -4 ").to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.5".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1..=i64::MAX).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn is_canonical(x: &Rational) -> bool {
        x.denom() >= &Integer::from(1) && x.numer().gcd(x.denom()) == Integer::from(1)
    }

    proptest! {
        #[test]
        fn canonical_after_every_op(a in arb_rational(), b in arb_rational()) {
            for x in [&a + &b, &a - &b, &a * &b, -&a] {
                prop_assert!(is_canonical(&x));
                prop_assert_eq!(Rational::new(x.numer().clone(), x.denom().clone()).unwrap(), x);
            }
        }

        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + Rational::zero(), a.clone());
            prop_assert_eq!(&a * Rational::one(), a.clone());
            prop_assert_eq!(&a - &a, Rational::zero());
            if let Some(inv) = a.recip() {
                prop_assert_eq!(&a * inv, Rational::one());
            }
        }

        #[test]
        fn text_round_trip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
