use std::fmt;


use crate::scalar::Scalar;

/// Dense coordinate vector over an exact scalar field.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector<S: Scalar> {
    coords: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector::new(vec![S::zero(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[axis] = S::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector::new(coords.iter().map(|&k| S::from_int(k)).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }

    pub fn get(&self, i: usize) -> &S {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &Self) -> S {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Vector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, factor: &S) -> Self {
        Vector::new(self.coords.iter().map(|c| c.clone() * factor.clone()).collect())
    }

    pub fn neg(&self) -> Self {
        Vector::new(self.coords.iter().map(|c| -c.clone()).collect())
    }

    /// Drop coordinate `axis`, mapping into one dimension lower.
    pub fn drop_coord(&self, axis: usize) -> Self {
        let mut coords = Vec::with_capacity(self.dim() - 1);
        for (i, c) in self.coords.iter().enumerate() {
            if i != axis {
                coords.push(c.clone());
            }
        }
        Vector::new(coords)
    }

    /// Keep only the listed coordinates, in order.
    pub fn select_coords(&self, axes: &[usize]) -> Self {
        Vector::new(axes.iter().map(|&i| self.coords[i].clone()).collect())
    }

    pub fn norm_sq(&self) -> S {
        self.dot(self)
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64()).collect()
    }
}

impl<S: Scalar> fmt::Display for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<S: Scalar> fmt::Debug for Vector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn dot_and_scale() {
        let a: Vector<Rational> = Vector::from_ints(&[1, 2, 3]);
        let b: Vector<Rational> = Vector::from_ints(&[-1, 0, 2]);
        assert_eq!(a.dot(&b), Rational::from_int(5));
        assert_eq!(a.scale(&Rational::from_int(2)), Vector::from_ints(&[2, 4, 6]));
    }

    #[test]
    fn drop_and_select() {
        let a: Vector<Rational> = Vector::from_ints(&[5, 6, 7, 8]);
        assert_eq!(a.drop_coord(1), Vector::from_ints(&[5, 7, 8]));
        assert_eq!(a.select_coords(&[3, 0]), Vector::from_ints(&[8, 5]));
    }
}
