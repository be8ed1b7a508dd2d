//! Symmetric tensors of order `p` and the tensor-valued valuation built
//! from facet normals.
//!
//! A symmetric tensor is stored sparsely by sorted multi-index; multinomial
//! multiplicities are applied at contraction time, so accumulating the
//! `p`-fold symmetric power of a vector is a plain product of coordinates.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::Error;
use crate::geom::{LinearMap, Polytope, Vector};
use crate::scalar::{pow_u, CauchyFunctional, Scalar};
use crate::valuation::{normal_sum, ZetaSpec};

/// Sparse symmetric tensor: coefficients indexed by sorted multi-indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor<S: Scalar> {
    order: u32,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, S>,
}

fn multinomial(idx: &[usize]) -> i64 {
    let p = idx.len() as i64;
    let mut value: i64 = (1..=p).product();
    let mut run = 1i64;
    for w in idx.windows(2) {
        if w[0] == w[1] {
            run += 1;
            value /= run;
        } else {
            run = 1;
        }
    }
    value
}

impl<S: Scalar> SymTensor<S> {
    pub fn zero(dim: usize, order: u32) -> Self {
        SymTensor {
            order,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> S {
        debug_assert!(idx.windows(2).all(|w| w[0] <= w[1]));
        self.coeffs.get(idx).cloned().unwrap_or_else(S::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.coeffs.iter()
    }

    pub fn set_coeff(&mut self, mut idx: Vec<usize>, value: S) -> Result<(), Error> {
        if idx.len() != self.order as usize {
            return Err(Error::invalid("multi-index length must equal the order"));
        }
        if idx.iter().any(|&i| i >= self.dim) {
            return Err(Error::invalid("multi-index entry out of range"));
        }
        idx.sort_unstable();
        if value.sign() == 0 {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, value);
        }
        Ok(())
    }

    /// Accumulate `weight * w^(tensor p)`.
    pub fn add_scaled_power(&mut self, w: &Vector<S>, weight: &S) {
        debug_assert_eq!(w.dim(), self.dim);
        for idx in (0..self.dim).combinations_with_replacement(self.order as usize) {
            let mut value = weight.clone();
            for &i in &idx {
                value = value * w.get(i).clone();
            }
            if value.sign() == 0 {
                continue;
            }
            let entry = self.coeffs.entry(idx).or_insert_with(S::zero);
            *entry = entry.clone() + value;
        }
        self.coeffs.retain(|_, v| v.sign() != 0);
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim || self.order != other.order {
            return Err(Error::invalid("tensor shape mismatch"));
        }
        let mut out = self.clone();
        for (idx, v) in &other.coeffs {
            let entry = out.coeffs.entry(idx.clone()).or_insert_with(S::zero);
            *entry = entry.clone() + v.clone();
        }
        out.coeffs.retain(|_, v| v.sign() != 0);
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = self.clone();
        if factor.sign() == 0 {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v = v.clone() * factor.clone();
        }
        out
    }

    /// Multilinear evaluation at `(x, ..., x)`:
    /// `sum coeff(I) * multinomial(I) * prod x_i`.
    pub fn contract(&self, x: &Vector<S>) -> Result<S, Error> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.dim(),
            });
        }
        let mut acc = S::zero();
        for (idx, coeff) in &self.coeffs {
            let mut term = coeff.clone() * S::from_int(multinomial(idx));
            for &i in idx {
                term = term * x.get(i).clone();
            }
            acc = acc + term;
        }
        Ok(acc)
    }
}

/// The tensor valuation `sum over normals missing the origin of
/// (u / h_P(u))^p * xi(V_P(u))`, which contracts against `x^p` to the
/// corresponding scalar valuation.
pub fn m0p<S: Scalar>(
    p: &Polytope<S>,
    xi: &CauchyFunctional,
    order: u32,
) -> Result<SymTensor<S>, Error> {
    if order == 0 {
        return Err(Error::invalid("tensor order must be at least 1"));
    }
    let mut tensor = SymTensor::zero(p.ambient_dim(), order);
    for facet in p.facets() {
        if !facet.misses_origin() {
            continue;
        }
        let weight = xi.apply(&facet.cone_volume);
        if weight.sign() == 0 {
            continue;
        }
        let scaled = facet.normal.scale(&(S::one() / facet.support.clone()));
        tensor.add_scaled_power(&scaled, &weight);
    }
    Ok(tensor)
}

/// Push a tensor through `phi^(-t)`: the result contracts with `x^p` the
/// way the input contracts with `(phi^(-1) x)^p`. This is exactly how the
/// tensor valuation transforms under an invertible map of the polytope.
pub fn act_inverse_transpose<S: Scalar>(
    phi: &LinearMap<S>,
    tensor: &SymTensor<S>,
) -> Result<SymTensor<S>, Error> {
    if phi.dim() != tensor.dim {
        return Err(Error::DimensionMismatch {
            expected: tensor.dim,
            got: phi.dim(),
        });
    }
    let m = phi.inverse_transpose()?;
    let n = tensor.dim;
    let order = tensor.order as usize;
    let mut out = SymTensor::zero(n, tensor.order);
    for target in (0..n).combinations_with_replacement(order) {
        let mut value = S::zero();
        // Sum over all source tuples; the input coefficient is looked up at
        // the sorted tuple since the tensor is symmetric.
        for source in std::iter::repeat(0..n)
            .take(order)
            .multi_cartesian_product()
        {
            let mut sorted = source.clone();
            sorted.sort_unstable();
            let coeff = tensor.coeff(&sorted);
            if coeff.sign() == 0 {
                continue;
            }
            let mut term = coeff;
            for (slot, &src) in source.iter().enumerate() {
                term = term * m.entry(target[slot], src).clone();
            }
            value = value + term;
        }
        if value.sign() != 0 {
            out.coeffs.insert(target, value);
        }
    }
    Ok(out)
}

/// The scalar shadow of the tensor valuation: contraction against `x^p`
/// equals the zeta-style sum with `zeta(t, s) = t^p * xi(s)`.
pub fn contraction_reference<S: Scalar>(
    p: &Polytope<S>,
    xi: &CauchyFunctional,
    order: u32,
    x: &Vector<S>,
) -> Result<S, Error> {
    normal_sum(p, x, |t, v| Ok(pow_u(t, order) * xi.apply(v)))
}

/// `zeta(t, s) = t^p * xi(s)` as a spec, for cross-checking against
/// [`crate::valuation::pi_zeta`].
pub fn power_cauchy_zeta<S: Scalar>(order: u32, xi: &CauchyFunctional) -> ZetaSpec<S> {
    use crate::valuation::UnaryFunction;
    let tp = UnaryFunction::Sum(vec![
        UnaryFunction::PlusPow(order),
        UnaryFunction::scaled(
            if order % 2 == 0 { S::one() } else { -S::one() },
            UnaryFunction::MinusPow(order),
        ),
    ]);
    ZetaSpec::new(
        UnaryFunction::scaled(S::from_rational(xi.alpha.clone()), tp.clone()),
        UnaryFunction::scaled(S::from_rational(xi.beta.clone()), tp),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use crate::valuation::pi_zeta;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn t3() -> Polytope<Rational> {
        Polytope::standard_simplex(3, 3, Rational::one()).unwrap()
    }

    fn e(axis: usize) -> Vector<Rational> {
        Vector::unit(3, axis)
    }

    #[test]
    fn multinomial_counts_arrangements() {
        assert_eq!(multinomial(&[0, 1, 2]), 6);
        assert_eq!(multinomial(&[0, 0, 1]), 3);
        assert_eq!(multinomial(&[1, 1, 1]), 1);
        assert_eq!(multinomial(&[2]), 1);
    }

    #[test]
    fn first_order_tensor_of_the_simplex() {
        let t = m0p(&t3(), &CauchyFunctional::id(), 1).unwrap();
        for axis in 0..3 {
            assert_eq!(t.coeff(&[axis]), q(1, 6));
        }
        assert_eq!(t.contract(&e(2)).unwrap(), q(1, 6));
    }

    #[test]
    fn tensor_vanishes_without_normals_missing_origin() {
        let tri = Polytope::<Rational>::hull(3, [Vector::zero(3), e(0), e(1)]).unwrap();
        let t = m0p(&tri, &CauchyFunctional::id(), 2).unwrap();
        assert!(t.is_zero());
    }

    #[test]
    fn cube_second_order_contraction() {
        let cube = Polytope::<Rational>::unit_cube(3).unwrap();
        let t = m0p(&cube, &CauchyFunctional::id(), 2).unwrap();
        assert_eq!(t.contract(&e(2)).unwrap(), q(1, 3));
    }

    #[test]
    fn contraction_matches_simplex_value_for_small_orders() {
        for order in 1..=3u32 {
            let t = m0p(&t3(), &CauchyFunctional::id(), order).unwrap();
            assert_eq!(t.contract(&e(2)).unwrap(), q(1, 6));
        }
    }

    #[test]
    fn contraction_is_p_homogeneous() {
        let t = m0p(&t3(), &CauchyFunctional::id(), 3).unwrap();
        let x = Vector::from_ints(&[1, -2, 2]);
        let lam = q(3, 1);
        let base = t.contract(&x).unwrap();
        assert_eq!(
            t.contract(&x.scale(&lam)).unwrap(),
            lam.clone() * lam.clone() * lam * base
        );
    }

    #[test]
    fn identity_action_is_identity() {
        let t = m0p(&t3(), &CauchyFunctional::id(), 2).unwrap();
        let id = LinearMap::identity(3);
        assert_eq!(act_inverse_transpose(&id, &t).unwrap(), t);
    }

    #[test]
    fn tensor_contravariance_under_a_shear() {
        let phi: LinearMap<Rational> = LinearMap::shear(3, 1, 0, q(2, 1)).unwrap();
        for order in 1..=3u32 {
            let lhs = m0p(&t3().apply_linear(&phi).unwrap(), &CauchyFunctional::id(), order)
                .unwrap();
            let rhs =
                act_inverse_transpose(&phi, &m0p(&t3(), &CauchyFunctional::id(), order).unwrap())
                    .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn first_order_action_is_matrix_vector() {
        let phi: LinearMap<Rational> = LinearMap::shear(3, 0, 1, q(-3, 1)).unwrap();
        let t = m0p(&t3(), &CauchyFunctional::id(), 1).unwrap();
        let acted = act_inverse_transpose(&phi, &t).unwrap();
        let m = phi.inverse_transpose().unwrap();
        let v = Vector::new((0..3).map(|i| t.coeff(&[i])).collect());
        let expected = m.apply(&v);
        for i in 0..3 {
            assert_eq!(acted.coeff(&[i]), *expected.get(i));
        }
    }

    #[test]
    fn parity_under_negation() {
        let p = Polytope::<Rational>::hull(
            3,
            [
                Vector::zero(3),
                Vector::from_ints(&[2, 0, 0]),
                Vector::from_ints(&[0, 1, 0]),
                Vector::from_ints(&[1, 1, 2]),
            ],
        )
        .unwrap();
        let x = Vector::from_ints(&[1, 2, -1]);
        for order in 1..=3u32 {
            let t = m0p(&p, &CauchyFunctional::id(), order).unwrap();
            let lhs = t.contract(&x.neg()).unwrap();
            let sign = if order % 2 == 0 { q(1, 1) } else { q(-1, 1) };
            assert_eq!(lhs, sign * t.contract(&x).unwrap());
        }
    }

    #[test]
    fn contraction_agrees_with_zeta_sum() {
        let p = Polytope::<Rational>::hull(
            3,
            [
                Vector::from_ints(&[-1, 0, 0]),
                Vector::from_ints(&[2, 0, 0]),
                Vector::from_ints(&[0, 3, 0]),
                Vector::from_ints(&[0, 0, 2]),
                Vector::from_ints(&[1, 1, -1]),
            ],
        )
        .unwrap();
        let xi = CauchyFunctional::scaling(q(2, 3));
        let x = Vector::from_ints(&[1, -1, 2]);
        for order in 1..=3u32 {
            let t = m0p(&p, &xi, order).unwrap();
            let via_tensor = t.contract(&x).unwrap();
            let via_sum = contraction_reference(&p, &xi, order, &x).unwrap();
            let via_spec = pi_zeta(&p, &power_cauchy_zeta(order, &xi), &x).unwrap();
            assert_eq!(via_tensor, via_sum);
            assert_eq!(via_tensor, via_spec);
        }
    }
}
