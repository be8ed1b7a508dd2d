use std::fmt;

use num_traits::{One, Zero};

use super::{Rational, Scalar};

/// Additive functional on the scalar field, `a + b*sqrt(2) -> alpha*a + beta*b`.
///
/// It satisfies `f(x + y) = f(x) + f(y)` exactly and is homogeneous over the
/// rationals. Over the rationals themselves (`b = 0`) this is just
/// multiplication by `alpha`; over the quadratic field an independent `beta`
/// makes the functional additive but not linear over the reals, e.g.
/// `alpha = 1, beta = 0` sends `sqrt(2)` to `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyFunctional {
    pub alpha: Rational,
    pub beta: Rational,
}

impl CauchyFunctional {
    pub fn new(alpha: Rational, beta: Rational) -> Self {
        CauchyFunctional { alpha, beta }
    }

    /// `s -> alpha * s` on rationals (and `a + b r2 -> alpha a + alpha b r2`
    /// would not be expressible here; the sqrt(2) coordinate gets `beta`).
    pub fn scaling(alpha: Rational) -> Self {
        CauchyFunctional::new(alpha, Rational::zero())
    }

    /// The identity on rationals: `alpha = 1, beta = 0`.
    pub fn id() -> Self {
        CauchyFunctional::scaling(Rational::one())
    }

    pub fn zero() -> Self {
        CauchyFunctional::scaling(Rational::zero())
    }

    /// Apply to a scalar; the result is embedded with zero sqrt(2) part.
    pub fn apply<S: Scalar>(&self, x: &S) -> S {
        let (a, b) = x.components();
        S::from_rational(self.alpha.clone() * a + self.beta.clone() * b)
    }

    pub fn apply_f64(&self, a: f64, b: f64) -> f64 {
        Scalar::to_f64(&self.alpha) * a + Scalar::to_f64(&self.beta) * b
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }
}

impl fmt::Display for CauchyFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi(a + b*r2) = {}*a + {}*b", self.alpha, self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadScalar;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn projection_to_rational_part() {
        let xi = CauchyFunctional::id();
        let x = QuadScalar::new(q(3, 1), q(-2, 1));
        assert_eq!(xi.apply(&x), QuadScalar::from(q(3, 1)));
    }

    #[test]
    fn additivity_on_a_pair() {
        let xi = CauchyFunctional::id();
        let x = QuadScalar::new(q(1, 1), q(1, 1));
        let y = QuadScalar::new(q(2, 1), q(-1, 1));
        let lhs = xi.apply(&x) + xi.apply(&y);
        assert_eq!(lhs, xi.apply(&(x + y)));
        assert_eq!(lhs, QuadScalar::from(q(3, 1)));
    }

    #[test]
    fn not_linear_over_the_reals() {
        let xi = CauchyFunctional::id();
        let r2 = QuadScalar::sqrt2_value();
        let at_r2 = xi.apply(&r2);
        let scaled = r2.clone() * xi.apply(&QuadScalar::from(q(1, 1)));
        assert_eq!(at_r2, QuadScalar::from(q(0, 1)));
        assert_ne!(at_r2, scaled);
    }

    #[test]
    fn rational_mode_is_plain_scaling() {
        let xi = CauchyFunctional::scaling(q(5, 3));
        let s = q(9, 10);
        assert_eq!(xi.apply(&s), q(3, 2));
    }
}
