//! Brute-force exact hull machinery.
//!
//! Facets of a full-dimensional point set are found by testing every
//! affinely independent `d`-subset as a candidate supporting hyperplane and
//! keeping the ones with every point on one side. The cost is O(m^(d+1))
//! which is fine at desk scale (d <= 5, a few dozen points) and keeps the
//! whole pipeline exact.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use super::linalg::{canonical_direction, nullspace_direction, rank_of, row_reduce};
use super::vector::Vector;
use crate::scalar::Scalar;

/// A supporting hyperplane of a full-dimensional point set, oriented
/// outward, with every point index lying on it.
#[derive(Clone, Debug)]
pub(crate) struct RawFacet<S: Scalar> {
    pub normal: Vector<S>,
    pub support: S,
    pub members: Vec<usize>,
}

/// Rank of the difference set `{p_i - p_0}` plus its pivot coordinates.
pub(crate) fn affine_rank_and_pivots<S: Scalar>(pts: &[Vector<S>]) -> (usize, Vec<usize>) {
    if pts.len() <= 1 {
        return (0, Vec::new());
    }
    let dim = pts[0].dim();
    let base = &pts[0];
    let mut rows: Vec<Vec<S>> = pts[1..].iter().map(|p| p.sub(base).into_coords()).collect();
    row_reduce(&mut rows, dim)
}

fn orient_leading_positive<S: Scalar>(mut dir: Vec<S>) -> (Vec<S>, bool) {
    let lead = dir
        .iter()
        .find_map(|c| match c.sign() {
            0 => None,
            s => Some(s),
        })
        .expect("zero direction");
    if lead < 0 {
        for c in dir.iter_mut() {
            *c = -c.clone();
        }
        (dir, true)
    } else {
        (dir, false)
    }
}

/// Enumerate the facets of a full-dimensional point set in ambient
/// dimension `d = pts[0].dim()`. Requires affine rank `d`.
pub(crate) fn supporting_facets<S: Scalar>(pts: &[Vector<S>]) -> Vec<RawFacet<S>> {
    let dim = pts[0].dim();
    debug_assert!(dim >= 2, "facet enumeration needs ambient dimension >= 2");
    let mut facets: BTreeMap<(Vec<S>, S), RawFacet<S>> = BTreeMap::new();
    let mut seen: BTreeSet<(Vec<S>, S)> = BTreeSet::new();

    for subset in (0..pts.len()).combinations(dim) {
        let base = &pts[subset[0]];
        let rows: Vec<Vec<S>> = subset[1..]
            .iter()
            .map(|&i| pts[i].sub(base).into_coords())
            .collect();
        let Some(dir) = nullspace_direction(&rows, dim) else {
            continue; // affinely dependent subset
        };
        let dir = canonical_direction(dir);
        let (key_dir, _) = orient_leading_positive(dir);
        let key_vec = Vector::new(key_dir.clone());
        let key_support = key_vec.dot(base);
        let key = (key_dir, key_support.clone());
        if !seen.insert(key.clone()) {
            continue; // hyperplane already classified
        }

        let mut has_pos = false;
        let mut has_neg = false;
        for p in pts {
            match (key_vec.dot(p) - key_support.clone()).sign() {
                1 => has_pos = true,
                -1 => has_neg = true,
                _ => {}
            }
            if has_pos && has_neg {
                break;
            }
        }
        if has_pos && has_neg {
            continue; // not supporting
        }
        let (normal, support) = if has_pos {
            (key_vec.neg(), -key_support.clone())
        } else {
            (key_vec.clone(), key_support.clone())
        };
        let members: Vec<usize> = pts
            .iter()
            .enumerate()
            .filter(|(_, p)| (key_vec.dot(p) - key_support.clone()).sign() == 0)
            .map(|(i, _)| i)
            .collect();
        facets.insert(key, RawFacet { normal, support, members });
    }
    facets.into_values().collect()
}

/// Indices of the extreme points of a full-dimensional point set: exactly
/// the points whose incident facet normals span the ambient space.
pub(crate) fn extreme_indices_full<S: Scalar>(
    pts: &[Vector<S>],
    facets: &[RawFacet<S>],
) -> Vec<usize> {
    let dim = pts[0].dim();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); pts.len()];
    for (f_id, facet) in facets.iter().enumerate() {
        for &m in &facet.members {
            incident[m].push(f_id);
        }
    }
    (0..pts.len())
        .filter(|&i| {
            if incident[i].len() < dim {
                return false;
            }
            let rows: Vec<Vec<S>> = incident[i]
                .iter()
                .map(|&f| facets[f].normal.coords().to_vec())
                .collect();
            rank_of(rows, dim) == dim
        })
        .collect()
}

/// Triangulate a full-dimensional point set into simplices (index lists of
/// length `d + 1`). Uses a fan from the first point over the facets that do
/// not contain it, recursing through coordinate-dropping projections.
pub(crate) fn triangulate_full<S: Scalar>(pts: &[Vector<S>]) -> Vec<Vec<usize>> {
    let dim = pts[0].dim();
    if dim == 1 {
        let mut lo = 0;
        let mut hi = 0;
        for (i, p) in pts.iter().enumerate() {
            if p.get(0) < pts[lo].get(0) {
                lo = i;
            }
            if p.get(0) > pts[hi].get(0) {
                hi = i;
            }
        }
        return vec![vec![lo, hi]];
    }
    let facets = supporting_facets(pts);
    let apex = 0usize;
    let mut simplices = Vec::new();
    for facet in &facets {
        if facet.members.contains(&apex) {
            continue;
        }
        let axis = facet
            .normal
            .coords()
            .iter()
            .position(|c| c.sign() != 0)
            .expect("facet normal is nonzero");
        let proj: Vec<Vector<S>> = facet
            .members
            .iter()
            .map(|&i| pts[i].drop_coord(axis))
            .collect();
        for sub in triangulate_full(&proj) {
            let mut simplex = Vec::with_capacity(dim + 1);
            simplex.push(apex);
            simplex.extend(sub.into_iter().map(|k| facet.members[k]));
            simplices.push(simplex);
        }
    }
    simplices
}

/// Exact `d`-volume of the convex hull of points in ambient dimension `d`.
/// Returns zero when the affine rank is deficient.
pub(crate) fn volume_full<S: Scalar>(pts: &[Vector<S>]) -> S {
    if pts.is_empty() {
        return S::zero();
    }
    let dim = pts[0].dim();
    let (rank, _) = affine_rank_and_pivots(pts);
    if rank < dim {
        return S::zero();
    }
    if dim == 1 {
        let mut lo = pts[0].get(0).clone();
        let mut hi = lo.clone();
        for p in pts {
            if *p.get(0) < lo {
                lo = p.get(0).clone();
            }
            if *p.get(0) > hi {
                hi = p.get(0).clone();
            }
        }
        return hi - lo;
    }
    let simplices = triangulate_full(pts);
    let factorial: i64 = (1..=dim as i64).product();
    let mut total = S::zero();
    for simplex in simplices {
        let base = &pts[simplex[0]];
        let rows: Vec<Vec<S>> = simplex[1..]
            .iter()
            .map(|&i| pts[i].sub(base).into_coords())
            .collect();
        total = total + super::linalg::determinant(rows).abs();
    }
    total / S::from_int(factorial)
}

/// `vol_(d-1)(F) / |u|` for a facet with outward normal `u`, computed as the
/// projected volume divided by the dropped component: the square root of
/// `|u|^2` never appears.
pub(crate) fn area_over_norm<S: Scalar>(
    pts: &[Vector<S>],
    members: &[usize],
    normal: &Vector<S>,
) -> S {
    let axis = normal
        .coords()
        .iter()
        .position(|c| c.sign() != 0)
        .expect("facet normal is nonzero");
    let proj: Vec<Vector<S>> = members.iter().map(|&i| pts[i].drop_coord(axis)).collect();
    volume_full(&proj) / normal.get(axis).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn pt(coords: &[i64]) -> Vector<Rational> {
        Vector::from_ints(coords)
    }

    #[test]
    fn simplex_facets_in_three_dimensions() {
        let pts = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        let facets = supporting_facets(&pts);
        assert_eq!(facets.len(), 4);
        let outer = facets
            .iter()
            .find(|f| f.normal == pt(&[1, 1, 1]))
            .expect("facet opposite the origin");
        assert_eq!(outer.support, Rational::from_int(1));
        assert_eq!(outer.members, vec![1, 2, 3]);
    }

    #[test]
    fn interior_point_is_not_extreme() {
        let mut pts = vec![pt(&[0, 0, 0]), pt(&[4, 0, 0]), pt(&[0, 4, 0]), pt(&[0, 0, 4])];
        pts.push(pt(&[1, 1, 1])); // interior
        pts.push(pt(&[2, 0, 0])); // relative interior of an edge
        let facets = supporting_facets(&pts);
        let extreme = extreme_indices_full(&pts, &facets);
        assert_eq!(extreme, vec![0, 1, 2, 3]);
    }

    #[test]
    fn volume_of_simplex_and_cube() {
        let simplex = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        assert_eq!(volume_full(&simplex), Rational::new(1.into(), 6.into()));

        let mut cube = Vec::new();
        for mask in 0..8u8 {
            cube.push(pt(&[
                i64::from(mask & 1),
                i64::from((mask >> 1) & 1),
                i64::from((mask >> 2) & 1),
            ]));
        }
        assert_eq!(volume_full(&cube), Rational::from_int(1));
    }

    #[test]
    fn degenerate_set_has_zero_volume() {
        let flat = vec![pt(&[0, 0, 0]), pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[1, 1, 0])];
        assert_eq!(volume_full(&flat), Rational::from_int(0));
    }

    #[test]
    fn area_over_norm_of_diagonal_facet() {
        // Triangle e1, e2, e3 with normal (1,1,1): true area sqrt(3)/2, so
        // area over |u| = (sqrt(3)/2) / sqrt(3) = 1/2.
        let pts = vec![pt(&[1, 0, 0]), pt(&[0, 1, 0]), pt(&[0, 0, 1])];
        let normal = pt(&[1, 1, 1]);
        assert_eq!(
            area_over_norm(&pts, &[0, 1, 2], &normal),
            Rational::new(1.into(), 2.into())
        );
    }
}
