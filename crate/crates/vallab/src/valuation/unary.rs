use crate::error::Error;
use crate::scalar::{pow_u, Scalar};

/// A continuous single-variable weight `eta`.
///
/// Integer-exponent variants evaluate exactly over the scalar field; the
/// float-exponent variants only have a double pipeline. `Table` interpolates
/// piecewise linearly between sample points (extrapolating the end segments),
/// which keeps table-backed specs continuous and exact at the nodes.
#[derive(Clone, Debug, PartialEq)]
pub enum UnaryFunction<S: Scalar> {
    Zero,
    /// Coefficients from the constant term up.
    Poly(Vec<S>),
    /// `|t|^p` for a nonnegative integer exponent.
    AbsPow(u32),
    /// `max(t, 0)^p`.
    PlusPow(u32),
    /// `max(-t, 0)^p`.
    MinusPow(u32),
    /// `|t|^p` for a real exponent; float pipeline only.
    AbsPowF(f64),
    PlusPowF(f64),
    MinusPowF(f64),
    /// Sample points `(t, eta(t))`, kept sorted by `t`.
    Table(Vec<(S, S)>),
    Scaled(S, Box<UnaryFunction<S>>),
    Sum(Vec<UnaryFunction<S>>),
}

impl<S: Scalar> UnaryFunction<S> {
    /// The identity `t -> t`.
    pub fn identity() -> Self {
        UnaryFunction::Poly(vec![S::zero(), S::one()])
    }

    pub fn constant(c: S) -> Self {
        UnaryFunction::Poly(vec![c])
    }

    pub fn table(mut points: Vec<(S, S)>) -> Self {
        points.sort_by(|a, b| a.0.cmp(&b.0));
        points.dedup_by(|a, b| a.0 == b.0);
        UnaryFunction::Table(points)
    }

    pub fn scaled(factor: S, inner: UnaryFunction<S>) -> Self {
        UnaryFunction::Scaled(factor, Box::new(inner))
    }

    /// True iff exact evaluation is available for every scalar argument.
    pub fn exactly_evaluable(&self) -> bool {
        match self {
            UnaryFunction::AbsPowF(_)
            | UnaryFunction::PlusPowF(_)
            | UnaryFunction::MinusPowF(_) => false,
            UnaryFunction::Scaled(_, inner) => inner.exactly_evaluable(),
            UnaryFunction::Sum(terms) => terms.iter().all(|t| t.exactly_evaluable()),
            _ => true,
        }
    }

    pub fn eval(&self, t: &S) -> Result<S, Error> {
        match self {
            UnaryFunction::Zero => Ok(S::zero()),
            UnaryFunction::Poly(coeffs) => {
                let mut acc = S::zero();
                for c in coeffs.iter().rev() {
                    acc = acc * t.clone() + c.clone();
                }
                Ok(acc)
            }
            UnaryFunction::AbsPow(p) => Ok(pow_u(&t.abs(), *p)),
            UnaryFunction::PlusPow(p) => Ok(if t.sign() > 0 {
                pow_u(t, *p)
            } else {
                S::zero()
            }),
            UnaryFunction::MinusPow(p) => Ok(if t.sign() < 0 {
                pow_u(&t.abs(), *p)
            } else {
                S::zero()
            }),
            UnaryFunction::AbsPowF(_)
            | UnaryFunction::PlusPowF(_)
            | UnaryFunction::MinusPowF(_) => Err(Error::NotExact),
            UnaryFunction::Table(points) => {
                if points.is_empty() {
                    return Ok(S::zero());
                }
                if points.len() == 1 {
                    return Ok(points[0].1.clone());
                }
                // Bracketing segment, or the end segment for extrapolation.
                let pos = points.partition_point(|(node, _)| node < t);
                if pos < points.len() && points[pos].0 == *t {
                    return Ok(points[pos].1.clone());
                }
                let hi = pos.clamp(1, points.len() - 1);
                let (t0, y0) = &points[hi - 1];
                let (t1, y1) = &points[hi];
                let slope = (y1.clone() - y0.clone()) / (t1.clone() - t0.clone());
                Ok(y0.clone() + slope * (t.clone() - t0.clone()))
            }
            UnaryFunction::Scaled(factor, inner) => Ok(factor.clone() * inner.eval(t)?),
            UnaryFunction::Sum(terms) => {
                let mut acc = S::zero();
                for term in terms {
                    acc = acc + term.eval(t)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        match self {
            UnaryFunction::Zero => 0.0,
            UnaryFunction::Poly(coeffs) => coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * t + c.to_f64()),
            UnaryFunction::AbsPow(p) => t.abs().powi(*p as i32),
            UnaryFunction::PlusPow(p) => {
                if t > 0.0 {
                    t.powi(*p as i32)
                } else {
                    0.0
                }
            }
            UnaryFunction::MinusPow(p) => {
                if t < 0.0 {
                    (-t).powi(*p as i32)
                } else {
                    0.0
                }
            }
            UnaryFunction::AbsPowF(p) => t.abs().powf(*p),
            UnaryFunction::PlusPowF(p) => {
                if t > 0.0 {
                    t.powf(*p)
                } else {
                    0.0
                }
            }
            UnaryFunction::MinusPowF(p) => {
                if t < 0.0 {
                    (-t).powf(*p)
                } else {
                    0.0
                }
            }
            UnaryFunction::Table(points) => {
                if points.is_empty() {
                    return 0.0;
                }
                if points.len() == 1 {
                    return points[0].1.to_f64();
                }
                let nodes: Vec<(f64, f64)> =
                    points.iter().map(|(a, b)| (a.to_f64(), b.to_f64())).collect();
                let pos = nodes.partition_point(|(node, _)| *node < t);
                let hi = pos.clamp(1, nodes.len() - 1);
                let (t0, y0) = nodes[hi - 1];
                let (t1, y1) = nodes[hi];
                y0 + (y1 - y0) / (t1 - t0) * (t - t0)
            }
            UnaryFunction::Scaled(factor, inner) => factor.to_f64() * inner.eval_f64(t),
            UnaryFunction::Sum(terms) => terms.iter().map(|f| f.eval_f64(t)).sum(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn polynomial_horner() {
        // 1 - 2t + t^2 at t = 3/2 -> 1/4.
        let f = UnaryFunction::Poly(vec![q(1, 1), q(-2, 1), q(1, 1)]);
        assert_eq!(f.eval(&q(3, 2)).unwrap(), q(1, 4));
    }

    #[test]
    fn power_split_reassembles_abs() {
        let abs = UnaryFunction::<Rational>::AbsPow(3);
        let plus = UnaryFunction::<Rational>::PlusPow(3);
        let minus = UnaryFunction::<Rational>::MinusPow(3);
        for t in [q(-5, 2), q(0, 1), q(7, 3)] {
            let sum = plus.eval(&t).unwrap() + minus.eval(&t).unwrap();
            assert_eq!(sum, abs.eval(&t).unwrap());
        }
    }

    #[test]
    fn table_interpolates_and_hits_nodes() {
        let f = UnaryFunction::table(vec![
            (q(0, 1), q(0, 1)),
            (q(1, 1), q(2, 1)),
            (q(2, 1), q(2, 1)),
        ]);
        assert_eq!(f.eval(&q(1, 1)).unwrap(), q(2, 1));
        assert_eq!(f.eval(&q(1, 2)).unwrap(), q(1, 1));
        assert_eq!(f.eval(&q(3, 2)).unwrap(), q(2, 1));
        // Linear extrapolation off the left end.
        assert_eq!(f.eval(&q(-1, 1)).unwrap(), q(-2, 1));
    }

    #[test]
    fn float_variants_are_not_exact() {
        let f = UnaryFunction::<Rational>::AbsPowF(0.5);
        assert!(!f.exactly_evaluable());
        assert!(f.eval(&q(4, 1)).is_err());
        assert!((f.eval_f64(4.0) - 2.0).abs() < 1e-12);
    }
}
