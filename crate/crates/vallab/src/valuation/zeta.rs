use super::unary::UnaryFunction;
use crate::error::Error;
use crate::scalar::Scalar;

/// Binary weight `zeta(t, s)`, continuous in `t` and additive in `s`.
///
/// With `s = a + b*sqrt(2)` the value is `eta_a(t) * a + eta_b(t) * b`.
/// Additivity in `s`, the odd extension `zeta(t, -s) = -zeta(t, s)` and
/// `zeta(t, 0) = 0` all hold by construction. Over the rationals `b = 0`
/// throughout, so `eta_b` is inert and `zeta(t, s) = eta_a(t) * s`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaSpec<S: Scalar> {
    pub eta_a: UnaryFunction<S>,
    pub eta_b: UnaryFunction<S>,
}

impl<S: Scalar> ZetaSpec<S> {
    pub fn new(eta_a: UnaryFunction<S>, eta_b: UnaryFunction<S>) -> Self {
        ZetaSpec { eta_a, eta_b }
    }

    pub fn zero() -> Self {
        ZetaSpec::new(UnaryFunction::Zero, UnaryFunction::Zero)
    }

    /// `zeta(t, s) = eta(t) * s` as a real-linear function of `s`: on the
    /// quadratic field the sqrt(2) coordinate picks up the factor sqrt(2).
    pub fn eta_times_s(eta: UnaryFunction<S>) -> Self {
        let eta_b = match S::sqrt2() {
            Some(r2) => UnaryFunction::scaled(r2, eta.clone()),
            None => UnaryFunction::Zero,
        };
        ZetaSpec::new(eta, eta_b)
    }

    /// `zeta(t, s) = t * s`.
    pub fn product() -> Self {
        Self::eta_times_s(UnaryFunction::identity())
    }

    /// `zeta(t, a + b*sqrt(2)) = eta(t) * a`: additive in `s` but not
    /// real-linear, the witness that lives strictly beyond the measurable
    /// classification.
    pub fn rational_part(eta: UnaryFunction<S>) -> Self {
        ZetaSpec::new(eta, UnaryFunction::Zero)
    }

    /// Pointwise sum of two specs.
    pub fn sum(&self, other: &ZetaSpec<S>) -> Self {
        ZetaSpec::new(
            UnaryFunction::Sum(vec![self.eta_a.clone(), other.eta_a.clone()]),
            UnaryFunction::Sum(vec![self.eta_b.clone(), other.eta_b.clone()]),
        )
    }

    pub fn exactly_evaluable(&self) -> bool {
        self.eta_a.exactly_evaluable() && self.eta_b.exactly_evaluable()
    }

    pub fn eval(&self, t: &S, s: &S) -> Result<S, Error> {
        let (a, b) = s.components();
        let mut acc = S::zero();
        if a.sign() != 0 {
            acc = acc + self.eta_a.eval(t)? * S::from_rational(a);
        }
        if b.sign() != 0 {
            acc = acc + self.eta_b.eval(t)? * S::from_rational(b);
        }
        Ok(acc)
    }

    pub fn eval_f64(&self, t: f64, s: &S) -> f64 {
        let (a, b) = s.components();
        self.eta_a.eval_f64(t) * a.to_f64() + self.eta_b.eval_f64(t) * b.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{QuadScalar, Rational};
    use num_traits::{One, Zero};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn product_spec_multiplies() {
        let zeta = ZetaSpec::<Rational>::product();
        assert_eq!(zeta.eval(&q(3, 1), &q(1, 6)).unwrap(), q(1, 2));
        assert_eq!(zeta.eval(&q(3, 1), &q(0, 1)).unwrap(), q(0, 1));
    }

    #[test]
    fn additivity_and_odd_extension() {
        let zeta = ZetaSpec::<Rational>::eta_times_s(UnaryFunction::AbsPow(2));
        let t = q(-3, 2);
        let s1 = q(1, 3);
        let s2 = q(5, 7);
        let lhs = zeta.eval(&t, &(s1.clone() + s2.clone())).unwrap();
        let rhs = zeta.eval(&t, &s1).unwrap() + zeta.eval(&t, &s2).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(
            zeta.eval(&t, &-s1.clone()).unwrap(),
            -zeta.eval(&t, &s1).unwrap()
        );
    }

    #[test]
    fn product_spec_is_real_linear_on_quad_field() {
        let zeta = ZetaSpec::<QuadScalar>::product();
        let t = QuadScalar::one();
        let r2 = QuadScalar::sqrt2_value();
        // zeta(1, s) = s for the true product.
        assert_eq!(zeta.eval(&t, &r2).unwrap(), r2);
    }

    #[test]
    fn rational_part_spec_is_not_real_linear() {
        let zeta = ZetaSpec::<QuadScalar>::rational_part(UnaryFunction::identity());
        let one = QuadScalar::one();
        let r2 = QuadScalar::sqrt2_value();
        let at_r2 = zeta.eval(&one, &r2).unwrap();
        let linear = r2.clone() * zeta.eval(&one, &one).unwrap();
        assert_ne!(at_r2, linear);
        assert_eq!(at_r2, QuadScalar::zero());
        // Still additive in s.
        let s1 = QuadScalar::new(q(1, 2), q(3, 1));
        let s2 = QuadScalar::new(q(2, 5), q(-1, 4));
        assert_eq!(
            zeta.eval(&one, &(s1.clone() + s2.clone())).unwrap(),
            zeta.eval(&one, &s1).unwrap() + zeta.eval(&one, &s2).unwrap()
        );
    }
}
