//! Operation counting for rational arithmetic.
//!
//! Only additions, subtractions and multiplications on [`Rational`] values
//! are tallied. Loop counters and constant construction are not.

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounter {
    /// Additions and subtractions.
    pub additions: u64,
    pub multiplications: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Predicted additions for the direct algorithm at degree `p`: `p(p+1)/2 + p`.
    pub fn predicted_additions(p: u64) -> u64 {
        p * (p + 1) / 2 + p
    }

    /// Predicted multiplications for the direct algorithm at degree `p`: `p(p+1)/2`.
    pub fn predicted_multiplications(p: u64) -> u64 {
        p * (p + 1) / 2
    }

    pub fn matches_prediction(&self, p: u64) -> bool {
        self.additions == Self::predicted_additions(p)
            && self.multiplications == Self::predicted_multiplications(p)
    }
}

/// Arithmetic context with an optional [`OpCounter`] observer.
#[derive(Debug, Default)]
pub struct Arith<'a> {
    counter: Option<&'a mut OpCounter>,
}

impl<'a> Arith<'a> {
    pub fn uncounted() -> Self {
        Arith { counter: None }
    }

    pub fn counted(counter: &'a mut OpCounter) -> Self {
        Arith {
            counter: Some(counter),
        }
    }

    pub fn with(counter: Option<&'a mut OpCounter>) -> Self {
        Arith { counter }
    }

    pub fn add(&mut self, a: &Rational, b: &Rational) -> Rational {
        if let Some(c) = self.counter.as_deref_mut() {
            c.additions += 1;
        }
        a + b
    }

    pub fn sub(&mut self, a: &Rational, b: &Rational) -> Rational {
        if let Some(c) = self.counter.as_deref_mut() {
            c.additions += 1;
        }
        a - b
    }

    pub fn mul(&mut self, a: &Rational, b: &Rational) -> Rational {
        if let Some(c) = self.counter.as_deref_mut() {
            c.multiplications += 1;
        }
        a * b
    }
}
