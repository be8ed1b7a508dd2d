//! Exact ordered-field scalars.
//!
//! Two fields are supported: the rationals (backed by arbitrary-precision
//! integers) and the real quadratic extension generated by sqrt(2). The
//! latter is the smallest substrate on which an additive function can fail
//! to be linear over the reals, which is exactly what the non-measurable
//! valuation constructions need.

mod cauchy;
mod quad;
mod rational;

pub use cauchy::CauchyFunctional;
pub use quad::QuadScalar;
pub use rational::{parse_rational, rational_from_int, Rational};

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Error;

/// Which exact field a scalar type models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarMode {
    Rational,
    Quad,
}

impl ScalarMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ScalarMode::Rational => "rational",
            ScalarMode::Quad => "quad",
        }
    }
}

/// An exact, totally ordered field element.
///
/// Every scalar decomposes as `a + b*sqrt(2)` with rational `a`, `b`
/// (rationals have `b = 0`); [`Scalar::components`] exposes that
/// decomposition, which is the hook used by Cauchy functionals and by the
/// binary zeta functions that are additive in their second argument.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + PartialOrd
    + Ord
    + Hash
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    const MODE: ScalarMode;

    fn from_rational(q: Rational) -> Self;

    fn from_int(k: i64) -> Self {
        Self::from_rational(rational_from_int(k))
    }

    /// Exact sign: -1, 0 or +1.
    fn sign(&self) -> i8;

    fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    /// Rational coordinates `(a, b)` with `self = a + b*sqrt(2)`.
    fn components(&self) -> (Rational, Rational);

    /// `sqrt(2)` as a field element, when the field contains it.
    fn sqrt2() -> Option<Self>;

    /// Approximate value for reporting and float pipelines.
    fn to_f64(&self) -> f64;

    /// Parse an exact literal, e.g. `-3/4`.
    fn parse(text: &str) -> Result<Self, Error>;
}

/// `base^exp` by repeated multiplication; `exp = 0` gives one.
pub fn pow_u<S: Scalar>(base: &S, exp: u32) -> S {
    let mut acc = S::one();
    for _ in 0..exp {
        acc = acc * base.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_of_zero_exponent_is_one() {
        let q = Rational::new(3.into(), 7.into());
        assert_eq!(pow_u(&q, 0), Rational::one());
        assert_eq!(pow_u(&q, 3), q.clone() * q.clone() * q);
    }
}
