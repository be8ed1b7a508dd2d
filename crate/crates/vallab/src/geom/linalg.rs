//! Exact dense linear algebra over an ordered field: row reduction, ranks,
//! nullspace directions, determinants and canonical direction scaling.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{Rational, Scalar};

/// Reduce `rows` to reduced row echelon form in place.
/// Returns the rank and the pivot columns.
pub(crate) fn row_reduce<S: Scalar>(rows: &mut [Vec<S>], ncols: usize) -> (usize, Vec<usize>) {
    let mut rank = 0usize;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col].sign() != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col].clone();
        for entry in rows[rank].iter_mut() {
            *entry = entry.clone() / pivot.clone();
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col].sign() != 0 {
                let factor = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = factor.clone() * rows[rank][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    (rank, pivots)
}

pub(crate) fn rank_of<S: Scalar>(mut rows: Vec<Vec<S>>, ncols: usize) -> usize {
    row_reduce(&mut rows, ncols).0
}

/// Direction spanning the nullspace of an `(n-1)`-rank row set in `n`
/// columns. Returns `None` when the rank is not exactly `n - 1`.
pub(crate) fn nullspace_direction<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Option<Vec<S>> {
    let mut work: Vec<Vec<S>> = rows.to_vec();
    let (rank, pivots) = row_reduce(&mut work, ncols);
    if rank + 1 != ncols {
        return None;
    }
    let free_col = (0..ncols).find(|c| !pivots.contains(c))?;
    let mut dir = vec![S::zero(); ncols];
    dir[free_col] = S::one();
    for (row, &pivot_col) in pivots.iter().enumerate() {
        dir[pivot_col] = -work[row][free_col].clone();
    }
    Some(dir)
}

pub(crate) fn determinant<S: Scalar>(mut mat: Vec<Vec<S>>) -> S {
    let n = mat.len();
    let mut det = S::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| mat[r][col].sign() != 0) else {
            return S::zero();
        };
        if pivot_row != col {
            mat.swap(col, pivot_row);
            det = -det;
        }
        let pivot = mat[col][col].clone();
        det = det * pivot.clone();
        for r in (col + 1)..n {
            if mat[r][col].sign() != 0 {
                let factor = mat[r][col].clone() / pivot.clone();
                for c in col..n {
                    let delta = factor.clone() * mat[col][c].clone();
                    mat[r][c] = mat[r][c].clone() - delta;
                }
            }
        }
    }
    det
}

/// Canonical representative of a direction under positive scaling.
///
/// The first nonzero entry is scaled to absolute value one, then rational
/// denominators are cleared and the integer content divided out. Over the
/// rationals this yields exactly the primitive integer vector with the
/// original orientation; over the quadratic field it yields a denominator
/// free vector that is unique per direction (the leading entry pins the
/// sqrt(2) scale).
pub(crate) fn canonical_direction<S: Scalar>(mut v: Vec<S>) -> Vec<S> {
    let lead = v
        .iter()
        .position(|c| c.sign() != 0)
        .expect("cannot canonicalize the zero direction");
    let scale = v[lead].abs();
    for c in v.iter_mut() {
        *c = c.clone() / scale.clone();
    }
    // Clear denominators.
    let mut lcm = BigInt::one();
    for c in &v {
        let (a, b) = c.components();
        lcm = lcm.lcm(a.denom());
        lcm = lcm.lcm(b.denom());
    }
    if !lcm.is_one() {
        let factor = S::from_rational(Rational::from_integer(lcm));
        for c in v.iter_mut() {
            *c = c.clone() * factor.clone();
        }
    }
    // Divide by the integer content.
    let mut gcd = BigInt::zero();
    for c in &v {
        let (a, b) = c.components();
        gcd = gcd.gcd(&a.numer().abs());
        gcd = gcd.gcd(&b.numer().abs());
    }
    if !gcd.is_zero() && !gcd.is_one() {
        let factor = S::from_rational(Rational::from_integer(gcd));
        for c in v.iter_mut() {
            *c = c.clone() / factor.clone();
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::QuadScalar;

    fn qv(coords: &[(i64, i64)]) -> Vec<Rational> {
        coords
            .iter()
            .map(|&(n, d)| Rational::new(n.into(), d.into()))
            .collect()
    }

    #[test]
    fn rank_and_pivots() {
        let mut rows = vec![qv(&[(1, 1), (2, 1), (3, 1)]), qv(&[(2, 1), (4, 1), (6, 1)])];
        let (rank, pivots) = row_reduce(&mut rows, 3);
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn nullspace_of_two_planes() {
        let rows = vec![qv(&[(1, 1), (0, 1), (0, 1)]), qv(&[(0, 1), (1, 1), (0, 1)])];
        let dir = nullspace_direction(&rows, 3).unwrap();
        assert_eq!(dir, qv(&[(0, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn determinant_of_shear_is_one() {
        let mat = vec![
            qv(&[(1, 1), (3, 1), (0, 1)]),
            qv(&[(0, 1), (1, 1), (0, 1)]),
            qv(&[(0, 1), (0, 1), (1, 1)]),
        ];
        assert_eq!(determinant(mat), Rational::one());
    }

    #[test]
    fn canonical_direction_is_primitive_over_rationals() {
        let dir = canonical_direction(qv(&[(-4, 6), (0, 1), (2, 3)]));
        assert_eq!(dir, qv(&[(-1, 1), (0, 1), (1, 1)]));
        // A positive rescale lands on the same representative.
        let dir2 = canonical_direction(qv(&[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(dir, dir2);
        // Non-unit leading entries stay primitive: (4, 6) -> (2, 3).
        assert_eq!(canonical_direction(qv(&[(4, 1), (6, 1)])), qv(&[(2, 1), (3, 1)]));
    }

    #[test]
    fn canonical_direction_over_quad_field_kills_sqrt2_scale() {
        let r2 = QuadScalar::sqrt2_value();
        let one = QuadScalar::one();
        // (1, r2) and (r2, 2) are the same direction: the second is r2 times
        // the first.
        let a = canonical_direction(vec![one.clone(), r2.clone()]);
        let b = canonical_direction(vec![r2.clone(), QuadScalar::from_int(2)]);
        assert_eq!(a, b);
    }
}
