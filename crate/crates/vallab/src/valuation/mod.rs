//! Function-valued valuations on polytopes.
//!
//! The central object is the facet sum
//!
//! ```text
//! Pi_zeta(P)(x) = sum over facet normals u with h_P(u) != 0 of
//!                 zeta( (x . u) / h_P(u), V_P(u) )
//! ```
//!
//! where `V_P(u)` is the signed cone volume of the facet. The binary
//! function `zeta` is continuous in its first argument and additive in its
//! second; it is realized here through the component decomposition
//! `s = a + b*sqrt(2)` as `zeta(t, s) = eta_a(t) * a + eta_b(t) * b`, which
//! is the fully general computably realizable instance on the fields in
//! use (a genuinely non-measurable choice on the reals would need a Hamel
//! basis). Both ratio and cone volume are invariant under positive scaling
//! of the normal, so primitive normals feed the formula directly.

mod unary;
mod zeta;

pub use unary::UnaryFunction;
pub use zeta::ZetaSpec;

use crate::error::Error;
use crate::geom::{OriginStatus, Polytope, Vector};
use crate::measure::{projection_mixed, volume};
use crate::scalar::{pow_u, CauchyFunctional, Scalar};

/// How to treat evaluation at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XPolicy {
    /// Reject `x = o` (codomain of functions on punctured space).
    Strict,
    /// Allow `x = o` whenever the eta variants are defined at the needed
    /// arguments (continuous-at-the-origin codomain).
    Lenient,
}

/// Which polytopes a valuation is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// All polytopes.
    All,
    /// Polytopes containing the origin.
    ContainsOrigin,
}

/// Sum `f(t_u, V_P(u))` over the facet normals missing the origin, with
/// `t_u = (x . u) / h_P(u)`. The workhorse behind every zeta-style
/// valuation; `f` need not be additive (negative controls use that).
pub fn normal_sum<S: Scalar>(
    p: &Polytope<S>,
    x: &Vector<S>,
    mut f: impl FnMut(&S, &S) -> Result<S, Error>,
) -> Result<S, Error> {
    if x.dim() != p.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: p.ambient_dim(),
            got: x.dim(),
        });
    }
    let mut acc = S::zero();
    for facet in p.facets() {
        if !facet.misses_origin() {
            continue;
        }
        let ratio = x.dot(&facet.normal) / facet.support.clone();
        acc = acc + f(&ratio, &facet.cone_volume)?;
    }
    Ok(acc)
}

pub fn pi_zeta_with_policy<S: Scalar>(
    p: &Polytope<S>,
    zeta: &ZetaSpec<S>,
    x: &Vector<S>,
    policy: XPolicy,
) -> Result<S, Error> {
    if policy == XPolicy::Strict && x.is_zero() {
        return Err(Error::OriginArgument);
    }
    normal_sum(p, x, |t, v| zeta.eval(t, v))
}

/// `Pi_zeta(P)(x)`, rejecting `x = o`.
pub fn pi_zeta<S: Scalar>(p: &Polytope<S>, zeta: &ZetaSpec<S>, x: &Vector<S>) -> Result<S, Error> {
    pi_zeta_with_policy(p, zeta, x, XPolicy::Strict)
}

/// `Pi~_zeta(P)(x) = Pi_zeta([P, o])(x)`.
pub fn pi_zeta_tilde<S: Scalar>(
    p: &Polytope<S>,
    zeta: &ZetaSpec<S>,
    x: &Vector<S>,
) -> Result<S, Error> {
    pi_zeta(&p.hull_with_origin(), zeta, x)
}

/// Float pipeline for eta variants with non-integer exponents.
pub fn pi_zeta_f64<S: Scalar>(p: &Polytope<S>, zeta: &ZetaSpec<S>, x: &Vector<S>) -> f64 {
    let xf = x.to_f64_vec();
    let mut acc = 0.0;
    for facet in p.facets() {
        if !facet.misses_origin() {
            continue;
        }
        let nf = facet.normal.to_f64_vec();
        let dot: f64 = xf.iter().zip(&nf).map(|(a, b)| a * b).sum();
        let t = dot / facet.support.to_f64();
        acc += zeta.eval_f64(t, &facet.cone_volume);
    }
    acc
}

/// Local Euler term `(-1)^(dim P)` when the origin is in the relative
/// interior, else zero (and zero on the empty polytope).
pub fn euler_local<S: Scalar>(p: &Polytope<S>) -> i64 {
    if p.is_empty() || p.origin_status() != OriginStatus::Interior {
        return 0;
    }
    if p.dim() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `V_0(o intersect P)`: one iff the polytope contains the origin.
pub fn euler_hit<S: Scalar>(p: &Polytope<S>) -> i64 {
    i64::from(!p.is_empty() && p.contains_origin())
}

/// Coefficients of the classified valuation forms.
///
/// The origin-domain form uses `zeta1`, `c_nm1`, `c0`, `c0_prime`; the
/// all-polytopes form additionally uses `zeta2` (applied to `[o, P]`),
/// `c_nm1_tilde` and `c0_tilde`.
#[derive(Clone, Debug)]
pub struct ClassificationData<S: Scalar> {
    pub zeta1: ZetaSpec<S>,
    pub zeta2: ZetaSpec<S>,
    pub c_nm1: S,
    pub c_nm1_tilde: S,
    pub c0: S,
    pub c0_prime: S,
    pub c0_tilde: S,
}

impl<S: Scalar> ClassificationData<S> {
    pub fn zero() -> Self {
        ClassificationData {
            zeta1: ZetaSpec::zero(),
            zeta2: ZetaSpec::zero(),
            c_nm1: S::zero(),
            c_nm1_tilde: S::zero(),
            c0: S::zero(),
            c0_prime: S::zero(),
            c0_tilde: S::zero(),
        }
    }

    pub fn with_zeta1(zeta1: ZetaSpec<S>) -> Self {
        ClassificationData {
            zeta1,
            ..Self::zero()
        }
    }
}

/// The general contravariant valuation on polytopes containing the origin:
/// `Pi_zeta1(P)(x) + c_nm1 V_1(P,[-x,x]) + c0 V_0(P) + c0' (-1)^dim V_0(o cap relint P)`.
pub fn classified_o<S: Scalar>(
    p: &Polytope<S>,
    data: &ClassificationData<S>,
    x: &Vector<S>,
) -> Result<S, Error> {
    if p.is_empty() || !p.contains_origin() {
        return Err(Error::OriginOutside);
    }
    let mut acc = pi_zeta(p, &data.zeta1, x)?;
    if data.c_nm1.sign() != 0 {
        acc = acc + data.c_nm1.clone() * projection_mixed(p, x)?;
    }
    acc = acc + data.c0.clone() * S::from_int(p.euler());
    acc = acc + data.c0_prime.clone() * S::from_int(euler_local(p));
    Ok(acc)
}

/// The general contravariant valuation on all polytopes: the origin-domain
/// terms plus `Pi_zeta2([o,P])`, `c~_nm1 V_1([o,P],[-x,x])` and
/// `c~_0 V_0(o cap P)`.
pub fn classified<S: Scalar>(
    p: &Polytope<S>,
    data: &ClassificationData<S>,
    x: &Vector<S>,
) -> Result<S, Error> {
    let hull_o = p.hull_with_origin();
    classified_with_hull(p, &hull_o, data, x)
}

/// Same as [`classified`] with the caller supplying `[o, P]`, so repeated
/// evaluations at many `x` reuse one hull.
pub fn classified_with_hull<S: Scalar>(
    p: &Polytope<S>,
    hull_o: &Polytope<S>,
    data: &ClassificationData<S>,
    x: &Vector<S>,
) -> Result<S, Error> {
    let mut acc = pi_zeta(p, &data.zeta1, x)?;
    acc = acc + pi_zeta(hull_o, &data.zeta2, x)?;
    if data.c_nm1.sign() != 0 && !p.is_empty() {
        acc = acc + data.c_nm1.clone() * projection_mixed(p, x)?;
    }
    if data.c_nm1_tilde.sign() != 0 {
        acc = acc + data.c_nm1_tilde.clone() * projection_mixed(hull_o, x)?;
    }
    acc = acc + data.c0.clone() * S::from_int(p.euler());
    acc = acc + data.c0_prime.clone() * S::from_int(euler_local(p));
    acc = acc + data.c0_tilde.clone() * S::from_int(euler_hit(p));
    Ok(acc)
}

/// Coefficients for the homogeneous valuation forms.
#[derive(Clone, Debug)]
pub struct HomogeneousData<S: Scalar> {
    pub xi1: CauchyFunctional,
    pub xi2: CauchyFunctional,
    pub xi3: CauchyFunctional,
    pub c0: S,
    pub c0_prime: S,
    pub c_nm1: S,
}

impl<S: Scalar> HomogeneousData<S> {
    pub fn zero() -> Self {
        HomogeneousData {
            xi1: CauchyFunctional::zero(),
            xi2: CauchyFunctional::zero(),
            xi3: CauchyFunctional::zero(),
            c0: S::zero(),
            c0_prime: S::zero(),
            c_nm1: S::zero(),
        }
    }
}

/// The `p`-homogeneous valuation forms on origin-containing polytopes, for
/// integer `p` (exact):
///
/// * `p = 0`: `xi3(V_n(P)) + c0 V_0(P) + c0' (-1)^dim V_0(o cap relint P)`,
/// * `p = 1`: plus-power and minus-power sums plus `c_nm1 V_1(P,[-x,x])`,
/// * `p >= 2`: the two power sums alone.
pub fn homogeneous<S: Scalar>(
    p: &Polytope<S>,
    power: u32,
    data: &HomogeneousData<S>,
    x: &Vector<S>,
) -> Result<S, Error> {
    if p.is_empty() || !p.contains_origin() {
        return Err(Error::OriginOutside);
    }
    if x.is_zero() {
        return Err(Error::OriginArgument);
    }
    if power == 0 {
        let mut acc = data.xi3.apply(&volume(p));
        acc = acc + data.c0.clone() * S::from_int(p.euler());
        acc = acc + data.c0_prime.clone() * S::from_int(euler_local(p));
        return Ok(acc);
    }
    let mut acc = normal_sum(p, x, |t, v| {
        let mut term = S::zero();
        match t.sign() {
            1 => term = term + pow_u(t, power) * data.xi1.apply(v),
            -1 => term = term + pow_u(&t.abs(), power) * data.xi2.apply(v),
            _ => {}
        }
        Ok(term)
    })?;
    if power == 1 && data.c_nm1.sign() != 0 {
        acc = acc + data.c_nm1.clone() * projection_mixed(p, x)?;
    }
    Ok(acc)
}

/// Float pipeline for real exponents `p > 0`, `p != 1`; relative accuracy
/// is limited by the double conversions (about 1e-9 at desk scale).
pub fn homogeneous_f64<S: Scalar>(
    p: &Polytope<S>,
    power: f64,
    data: &HomogeneousData<S>,
    x: &Vector<S>,
) -> Result<f64, Error> {
    if p.is_empty() || !p.contains_origin() {
        return Err(Error::OriginOutside);
    }
    if !(power > 0.0) {
        return Err(Error::invalid("float homogeneous form needs p > 0"));
    }
    let xf = x.to_f64_vec();
    let mut acc = 0.0;
    for facet in p.facets() {
        if !facet.misses_origin() {
            continue;
        }
        let nf = facet.normal.to_f64_vec();
        let dot: f64 = xf.iter().zip(&nf).map(|(a, b)| a * b).sum();
        let t = dot / facet.support.to_f64();
        let (a, b) = facet.cone_volume.components();
        let xi_v = |xi: &CauchyFunctional| xi.apply_f64(a.to_f64(), b.to_f64());
        if t > 0.0 {
            acc += t.powf(power) * xi_v(&data.xi1);
        } else if t < 0.0 {
            acc += (-t).powf(power) * xi_v(&data.xi2);
        }
    }
    if (power - 1.0).abs() < f64::EPSILON && data.c_nm1.sign() != 0 {
        acc += data.c_nm1.to_f64() * projection_mixed(p, x)?.to_f64();
    }
    Ok(acc)
}

/// A polytope valuation under test: the abstract `Z` fed to the harness.
pub trait Valuation<S: Scalar> {
    fn name(&self) -> &str;

    fn domain(&self) -> Domain {
        Domain::All
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error>;

    /// Evaluate at several arguments; composite valuations override this to
    /// share per-polytope work (like `[o, P]`).
    fn eval_many(&self, p: &Polytope<S>, xs: &[Vector<S>]) -> Result<Vec<S>, Error> {
        xs.iter().map(|x| self.eval(p, x)).collect()
    }
}

/// `Pi_zeta` as a black box.
pub struct PiZetaValuation<S: Scalar> {
    pub zeta: ZetaSpec<S>,
    label: String,
}

impl<S: Scalar> PiZetaValuation<S> {
    pub fn new(zeta: ZetaSpec<S>, label: impl Into<String>) -> Self {
        PiZetaValuation {
            zeta,
            label: label.into(),
        }
    }
}

impl<S: Scalar> Valuation<S> for PiZetaValuation<S> {
    fn name(&self) -> &str {
        &self.label
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        pi_zeta(p, &self.zeta, x)
    }
}

/// `Pi~_zeta` as a black box; one hull with the origin per polytope.
pub struct PiZetaTildeValuation<S: Scalar> {
    pub zeta: ZetaSpec<S>,
    label: String,
}

impl<S: Scalar> PiZetaTildeValuation<S> {
    pub fn new(zeta: ZetaSpec<S>, label: impl Into<String>) -> Self {
        PiZetaTildeValuation {
            zeta,
            label: label.into(),
        }
    }
}

impl<S: Scalar> Valuation<S> for PiZetaTildeValuation<S> {
    fn name(&self) -> &str {
        &self.label
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        pi_zeta_tilde(p, &self.zeta, x)
    }

    fn eval_many(&self, p: &Polytope<S>, xs: &[Vector<S>]) -> Result<Vec<S>, Error> {
        let hull_o = p.hull_with_origin();
        xs.iter().map(|x| pi_zeta(&hull_o, &self.zeta, x)).collect()
    }
}

/// The projection value `V_1(P, [-x, x])` as a black box.
pub struct ProjectionValuation;

impl<S: Scalar> Valuation<S> for ProjectionValuation {
    fn name(&self) -> &str {
        "projection"
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        projection_mixed(p, x)
    }
}

/// The classified origin-domain form as a black box.
pub struct ClassifiedOValuation<S: Scalar> {
    pub data: ClassificationData<S>,
}

impl<S: Scalar> Valuation<S> for ClassifiedOValuation<S> {
    fn name(&self) -> &str {
        "classified_o"
    }

    fn domain(&self) -> Domain {
        Domain::ContainsOrigin
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        classified_o(p, &self.data, x)
    }
}

/// The classified all-polytopes form as a black box.
pub struct ClassifiedValuation<S: Scalar> {
    pub data: ClassificationData<S>,
}

impl<S: Scalar> Valuation<S> for ClassifiedValuation<S> {
    fn name(&self) -> &str {
        "classified"
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        classified(p, &self.data, x)
    }

    fn eval_many(&self, p: &Polytope<S>, xs: &[Vector<S>]) -> Result<Vec<S>, Error> {
        let hull_o = p.hull_with_origin();
        xs.iter()
            .map(|x| classified_with_hull(p, &hull_o, &self.data, x))
            .collect()
    }
}

#[cfg(test)]
mod tests;
