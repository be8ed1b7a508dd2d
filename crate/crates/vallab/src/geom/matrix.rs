use std::fmt;

use num_traits::Zero;

use super::linalg::determinant;
use super::vector::Vector;
use crate::error::Error;
use crate::scalar::Scalar;

/// Square linear map with a cached exact determinant.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap<S: Scalar> {
    rows: Vec<Vec<S>>,
    det: S,
}

impl<S: Scalar> LinearMap<S> {
    pub fn new(rows: Vec<Vec<S>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("linear map must be square"));
        }
        let det = determinant(rows.clone());
        Ok(LinearMap { rows, det })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&k| S::from_int(k)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        LinearMap { rows, det: S::one() }
    }

    /// Elementary shear: identity plus `value` in entry `(row, col)`.
    pub fn shear(n: usize, row: usize, col: usize, value: S) -> Result<Self, Error> {
        if row == col || row >= n || col >= n {
            return Err(Error::invalid("shear must be strictly off-diagonal"));
        }
        let mut m = Self::identity(n);
        m.rows[row][col] = value;
        Ok(m)
    }

    /// Map with the given columns (convenient for images of basis vectors).
    pub fn from_columns(cols: Vec<Vector<S>>) -> Result<Self, Error> {
        let n = cols.len();
        if cols.iter().any(|c| c.dim() != n) {
            return Err(Error::invalid("column dimensions must match"));
        }
        let rows = (0..n)
            .map(|i| (0..n).map(|j| cols[j].get(i).clone()).collect())
            .collect();
        Self::new(rows)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn det(&self) -> &S {
        &self.det
    }

    pub fn is_singular(&self) -> bool {
        self.det.is_zero()
    }

    pub fn is_unimodular(&self) -> bool {
        self.det == S::one()
    }

    pub fn entry(&self, row: usize, col: usize) -> &S {
        &self.rows[row][col]
    }

    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        debug_assert_eq!(v.dim(), self.dim());
        Vector::new(
            self.rows
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coords())
                        .fold(S::zero(), |acc, (m, x)| acc + m.clone() * x.clone())
                })
                .collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| (0..n).map(|j| self.rows[j][i].clone()).collect())
            .collect();
        LinearMap {
            rows,
            det: self.det.clone(),
        }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        debug_assert_eq!(n, other.dim());
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(S::zero(), |acc, k| {
                            acc + self.rows[i][k].clone() * other.rows[k][j].clone()
                        })
                    })
                    .collect()
            })
            .collect();
        LinearMap {
            rows,
            det: self.det.clone() * other.det.clone(),
        }
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, Error> {
        if self.is_singular() {
            return Err(Error::SingularMap);
        }
        let n = self.dim();
        let mut work: Vec<Vec<S>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut ext = row.clone();
                for j in 0..n {
                    ext.push(if i == j { S::one() } else { S::zero() });
                }
                ext
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| work[r][col].sign() != 0)
                .ok_or(Error::SingularMap)?;
            work.swap(col, pivot_row);
            let pivot = work[col][col].clone();
            for entry in work[col].iter_mut() {
                *entry = entry.clone() / pivot.clone();
            }
            for r in 0..n {
                if r != col && work[r][col].sign() != 0 {
                    let factor = work[r][col].clone();
                    for c in 0..2 * n {
                        let delta = factor.clone() * work[col][c].clone();
                        work[r][c] = work[r][c].clone() - delta;
                    }
                }
            }
        }
        let rows = work.into_iter().map(|row| row[n..].to_vec()).collect();
        Self::new(rows)
    }

    pub fn inverse_transpose(&self) -> Result<Self, Error> {
        Ok(self.inverse()?.transpose())
    }
}

impl<S: Scalar> fmt::Debug for LinearMap<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LinearMap det={} [", self.det)?;
        for row in &self.rows {
            write!(f, "  [")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn inverse_of_shear() {
        let m: LinearMap<Rational> =
            LinearMap::shear(3, 0, 1, Rational::from_int(2)).unwrap();
        assert!(m.is_unimodular());
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), LinearMap::identity(3));
        let v = Vector::from_ints(&[1, 1, 0]);
        assert_eq!(m.apply(&v), Vector::from_ints(&[3, 1, 0]));
    }

    #[test]
    fn singular_map_has_no_inverse() {
        let m: LinearMap<Rational> =
            LinearMap::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).unwrap();
        assert!(m.is_singular());
        assert_eq!(m.inverse().unwrap_err(), Error::SingularMap);
    }

    #[test]
    fn compose_multiplies_determinants() {
        let a: LinearMap<Rational> = LinearMap::from_ints(&[&[2, 0], &[0, 1]]).unwrap();
        let b: LinearMap<Rational> = LinearMap::from_ints(&[&[1, 1], &[0, 3]]).unwrap();
        assert_eq!(*a.compose(&b).det(), Rational::from_int(6));
    }
}
