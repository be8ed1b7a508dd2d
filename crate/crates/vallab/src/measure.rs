//! Discrete measures on facet normal directions, volume, and the mixed
//! projection value.
//!
//! All quantities come straight from the cached facet data. The cone-volume
//! measure is signed: a facet whose supporting hyperplane separates the
//! origin from the polytope contributes a negative cone. The surface area
//! side is exposed scale-free: each atom carries `area / |u|` at the
//! primitive normal `u`, so the true facet area is recoverable as
//! `weight * |u|` without ever forming a square root.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::geom::{Polytope, Vector};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MeasureKind {
    ConeVolume,
    NormalizedArea,
}

/// Finite signed measure concentrated on primitive normal directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscreteNormalMeasure<S: Scalar> {
    kind: MeasureKind,
    atoms: BTreeMap<Vector<S>, S>,
}

impl<S: Scalar> DiscreteNormalMeasure<S> {
    pub fn from_atoms(kind: MeasureKind, atoms: impl IntoIterator<Item = (Vector<S>, S)>) -> Self {
        let mut map: BTreeMap<Vector<S>, S> = BTreeMap::new();
        for (normal, weight) in atoms {
            let entry = map.entry(normal).or_insert_with(S::zero);
            *entry = entry.clone() + weight;
        }
        map.retain(|_, w| w.sign() != 0);
        DiscreteNormalMeasure { kind, atoms: map }
    }

    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn atoms(&self) -> impl Iterator<Item = (&Vector<S>, &S)> {
        self.atoms.iter()
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn weight(&self, normal: &Vector<S>) -> S {
        self.atoms.get(normal).cloned().unwrap_or_else(S::zero)
    }

    pub fn total(&self) -> S {
        self.atoms
            .values()
            .fold(S::zero(), |acc, w| acc + w.clone())
    }
}

/// Signed cone-volume measure: one atom per facet normal, weight equal to
/// the cone volume over that facet. Zero atoms (facets through the origin)
/// are dropped.
pub fn cone_volume_measure<S: Scalar>(p: &Polytope<S>) -> DiscreteNormalMeasure<S> {
    DiscreteNormalMeasure::from_atoms(
        MeasureKind::ConeVolume,
        p.facets()
            .iter()
            .map(|f| (f.normal.clone(), f.cone_volume.clone())),
    )
}

/// Surface-area-style measure with scale-free weights `area / |u|`.
pub fn normalized_area_measure<S: Scalar>(p: &Polytope<S>) -> DiscreteNormalMeasure<S> {
    DiscreteNormalMeasure::from_atoms(
        MeasureKind::NormalizedArea,
        p.facets()
            .iter()
            .map(|f| (f.normal.clone(), f.normalized_area.clone())),
    )
}

/// Facet normals whose affine hulls miss the origin (nonzero support).
pub fn normals_o<S: Scalar>(p: &Polytope<S>) -> BTreeSet<Vector<S>> {
    p.facets()
        .iter()
        .filter(|f| f.misses_origin())
        .map(|f| f.normal.clone())
        .collect()
}

/// Exact volume: the signed cone volumes over all facets sum to the volume
/// for full-dimensional polytopes and telescope to zero below that.
pub fn volume<S: Scalar>(p: &Polytope<S>) -> S {
    if p.dim() < p.ambient_dim() as isize {
        return S::zero();
    }
    p.facets()
        .iter()
        .fold(S::zero(), |acc, f| acc + f.cone_volume.clone())
}

/// Mixed projection value `V_1(P, [-x, x])`: the facet sum
/// `(1/n) * sum |x . u| * (a_u / |u|)`, which equals
/// `(2/n) * vol_(n-1)(P | x^perp) * |x|`.
pub fn projection_mixed<S: Scalar>(p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
    if x.is_zero() {
        return Err(Error::ZeroVector);
    }
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: x.dim(),
        });
    }
    let n = S::from_int(p.ambient_dim() as i64);
    let sum = p.facets().iter().fold(S::zero(), |acc, f| {
        acc + x.dot(&f.normal).abs() * f.normalized_area.clone()
    });
    Ok(sum / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{LinearMap, Polytope};
    use crate::scalar::Rational;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn t3() -> Polytope<Rational> {
        Polytope::standard_simplex(3, 3, Rational::one()).unwrap()
    }

    #[test]
    fn simplex_cone_volume_measure_is_a_single_atom() {
        let m = cone_volume_measure(&t3());
        assert_eq!(m.len(), 1);
        assert_eq!(m.weight(&Vector::from_ints(&[1, 1, 1])), q(1, 6));
        assert_eq!(m.total(), q(1, 6));
    }

    #[test]
    fn cube_cone_volume_measure() {
        let cube = Polytope::<Rational>::unit_cube(3).unwrap();
        let m = cone_volume_measure(&cube);
        assert_eq!(m.len(), 3);
        for axis in 0..3 {
            assert_eq!(m.weight(&Vector::unit(3, axis)), q(1, 3));
        }
        assert_eq!(m.total(), Rational::one());
    }

    #[test]
    fn shifted_cube_gets_a_negative_atom() {
        let cube = Polytope::<Rational>::unit_cube(3).unwrap();
        let shifted = cube.translate(&Vector::from_ints(&[1, 0, 0])).unwrap();
        let m = cone_volume_measure(&shifted);
        assert_eq!(m.weight(&Vector::from_ints(&[-1, 0, 0])), q(-1, 3));
        assert_eq!(m.total(), Rational::one());
    }

    #[test]
    fn normals_missing_origin() {
        assert_eq!(
            normals_o(&t3()).into_iter().collect::<Vec<_>>(),
            vec![Vector::<Rational>::from_ints(&[1, 1, 1])]
        );
        let cube = Polytope::<Rational>::unit_cube(3).unwrap();
        let expected: BTreeSet<_> = (0..3).map(|i| Vector::<Rational>::unit(3, i)).collect();
        assert_eq!(normals_o(&cube), expected);
        let tri = Polytope::<Rational>::hull(
            3,
            [
                Vector::zero(3),
                Vector::from_ints(&[1, 0, 0]),
                Vector::from_ints(&[0, 1, 0]),
            ],
        )
        .unwrap();
        assert!(normals_o(&tri).is_empty());
    }

    #[test]
    fn simplex_volumes() {
        assert_eq!(volume(&t3()), q(1, 6));
        let scaled = Polytope::standard_simplex(3, 3, Rational::from_int(2)).unwrap();
        assert_eq!(volume(&scaled), q(4, 3));
        let shear: LinearMap<Rational> = LinearMap::shear(3, 1, 0, Rational::one()).unwrap();
        assert_eq!(volume(&t3().apply_linear(&shear).unwrap()), q(1, 6));
    }

    #[test]
    fn projection_value_of_simplex() {
        let v = projection_mixed(&t3(), &Vector::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(v, q(1, 3));
    }

    #[test]
    fn projection_value_on_lower_dimensional_simplex() {
        // sT^(n-1) with s = 1, x = 2 e_3, n = 3: (2/3!) * 1 * 2 = 2/3.
        let t2 = Polytope::<Rational>::standard_simplex(3, 2, Rational::one()).unwrap();
        let v = projection_mixed(&t2, &Vector::from_ints(&[0, 0, 2])).unwrap();
        assert_eq!(v, q(2, 3));
    }

    #[test]
    fn projection_is_even_in_x() {
        let p = Polytope::<Rational>::hull(
            3,
            [
                Vector::from_ints(&[0, 0, 0]),
                Vector::from_ints(&[2, 0, 1]),
                Vector::from_ints(&[0, 3, -1]),
                Vector::from_ints(&[-1, 1, 2]),
            ],
        )
        .unwrap();
        let x = Vector::from_ints(&[1, -2, 3]);
        assert_eq!(
            projection_mixed(&p, &x).unwrap(),
            projection_mixed(&p, &x.neg()).unwrap()
        );
    }

    #[test]
    fn zero_direction_is_rejected() {
        assert_eq!(
            projection_mixed(&t3(), &Vector::zero(3)).unwrap_err(),
            Error::ZeroVector
        );
    }
}
