//! Independent test oracles.
//!
//! These deliberately avoid the production formulas they are used to check:
//! volumes come from plain simplicial decomposition determinants (never from
//! facet supports times areas), the projection value comes from an explicit
//! prism, and quadratic-field signs come from a high-precision rational
//! enclosure of sqrt(2).

use num_traits::{One, Zero};

use crate::error::Error;
use crate::geom::{triangulate_full, volume_full, Polytope, Vector};
use crate::scalar::{QuadScalar, Rational, Scalar};

/// Exact volume via simplicial decomposition: triangulate and add absolute
/// determinants. Zero below full dimension.
pub fn volume_by_triangulation<S: Scalar>(p: &Polytope<S>) -> S {
    if p.dim() < p.ambient_dim() as isize {
        return S::zero();
    }
    volume_full(p.vertices())
}

/// Number of simplices the oracle decomposition uses (diagnostic).
pub fn triangulation_size<S: Scalar>(p: &Polytope<S>) -> usize {
    if p.dim() < p.ambient_dim() as isize {
        return 0;
    }
    triangulate_full(p.vertices()).len()
}

/// The projection value computed from the prism `P|x^perp + [o, x]`:
/// `(2/n) * vol(prism)`. The projected points are rational whenever the
/// inputs are, because the projection divides by `|x|^2`, not `|x|`.
pub fn projection_by_prism<S: Scalar>(p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    if p.is_empty() {
        return Ok(S::zero());
    }
    let norm_sq = x.norm_sq();
    let mut pts: Vec<Vector<S>> = Vec::with_capacity(2 * p.vertices().len());
    for v in p.vertices() {
        let coeff = v.dot(x) / norm_sq.clone();
        let base = v.sub(&x.scale(&coeff));
        pts.push(base.add(x));
        pts.push(base);
    }
    let volume = volume_full(&pts);
    let n = S::from_int(p.ambient_dim() as i64);
    Ok(S::from_int(2) * volume / n)
}

/// Rational enclosure `lo < sqrt(2) < hi` with `hi - lo < 10^-digits`,
/// from Newton iteration on rationals.
pub fn sqrt2_enclosure(digits: u32) -> (Rational, Rational) {
    let two = Rational::from_int(2);
    let mut upper = Rational::new(3.into(), 2.into()); // above sqrt(2)
    let tol = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(digits));
    loop {
        // Newton from above stays above: x -> (x + 2/x) / 2.
        let next = (upper.clone() + two.clone() / upper.clone()) / two.clone();
        let lower = two.clone() / next.clone(); // below sqrt(2)
        if next.clone() - lower.clone() < tol {
            return (lower, next);
        }
        upper = next;
    }
}

/// Sign of `a + b*sqrt(2)` decided through the interval enclosure; `None`
/// when the enclosure is too coarse to decide (never happens for nonzero
/// values at 50 digits and desk-scale inputs, and exact zero is decided
/// directly).
pub fn quad_sign_by_enclosure(x: &QuadScalar, digits: u32) -> Option<i8> {
    let (a, b) = x.components();
    if b.is_zero() {
        return Some(Scalar::sign(&a));
    }
    if a.is_zero() {
        return Some(Scalar::sign(&b));
    }
    let (lo, hi) = sqrt2_enclosure(digits);
    let v1 = a.clone() + b.clone() * lo;
    let v2 = a + b * hi;
    let (s1, s2) = (Scalar::sign(&v1), Scalar::sign(&v2));
    if s1 == s2 {
        Some(s1)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measure::{projection_mixed, volume};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn triangulation_volume_matches_facet_volume() {
        let cube = Polytope::<Rational>::unit_cube(3).unwrap();
        assert_eq!(volume_by_triangulation(&cube), volume(&cube));
        let p = Polytope::<Rational>::hull(
            3,
            [
                Vector::from_ints(&[1, 1, 1]),
                Vector::from_ints(&[3, 1, 0]),
                Vector::from_ints(&[1, 4, 0]),
                Vector::from_ints(&[0, 0, 2]),
                Vector::from_ints(&[2, 2, 3]),
            ],
        )
        .unwrap();
        assert_eq!(volume_by_triangulation(&p), volume(&p));
    }

    #[test]
    fn prism_oracle_matches_facet_projection() {
        let p = Polytope::<Rational>::standard_simplex(3, 3, Rational::one()).unwrap();
        let x = Vector::from_ints(&[0, 0, 1]);
        assert_eq!(projection_by_prism(&p, &x).unwrap(), q(1, 3));
        let y = Vector::from_ints(&[1, -2, 3]);
        assert_eq!(
            projection_by_prism(&p, &y).unwrap(),
            projection_mixed(&p, &y).unwrap()
        );
    }

    #[test]
    fn sqrt2_enclosure_is_tight_and_ordered() {
        let (lo, hi) = sqrt2_enclosure(50);
        assert!(lo < hi);
        let two = Rational::from_int(2);
        assert!(lo.clone() * lo < two);
        assert!(hi.clone() * hi > two);
    }

    #[test]
    fn enclosure_sign_agrees_with_exact_sign() {
        let samples = [
            QuadScalar::new(q(3, 1), q(-2, 1)),
            QuadScalar::new(q(1, 1), q(-1, 1)),
            QuadScalar::new(q(-7, 5), q(1, 1)),
            QuadScalar::new(q(0, 1), q(0, 1)),
            QuadScalar::new(q(141421356, 100000000), q(-1, 1)),
        ];
        for x in samples {
            assert_eq!(quad_sign_by_enclosure(&x, 50), Some(Scalar::sign(&x)));
        }
    }
}
