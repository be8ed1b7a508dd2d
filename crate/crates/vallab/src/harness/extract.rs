//! Classification-data extraction from black-box valuations.
//!
//! The recipe probes the valuation on the standard simplices only: the
//! constant term comes from a segment, the local Euler coefficient from the
//! origin point, the projection coefficient from the slope along the top
//! lower-dimensional simplex, and the weight function from the full simplex
//! (with an off-axis argument supplying the value at ratio zero). Agreement
//! on the simplices propagates to every polytope in the domain, which the
//! round-trip comparison then verifies on random inputs, exactly.

use num_traits::{One, Zero};

use super::gen::{Generator, OriginPolicy};
use super::report::CheckReport;
use crate::error::Error;
use crate::geom::{Polytope, Vector};
use crate::measure::projection_mixed;
use crate::scalar::{Rational, Scalar};
use crate::valuation::{
    euler_local, ClassificationData, ClassifiedOValuation, Domain, UnaryFunction, Valuation,
    ZetaSpec,
};

/// Constants and sampled weight table recovered from a valuation on
/// origin-containing polytopes.
#[derive(Clone, Debug)]
pub struct OriginExtraction<S: Scalar> {
    pub n: usize,
    pub c0: S,
    pub c0_prime: S,
    pub c_nm1: S,
    /// `eta` sampled on the rational grid `-3, -11/4, ..., 3`.
    pub eta_table: Vec<(S, S)>,
}

fn factorial_scalar<S: Scalar>(n: usize) -> S {
    S::from_int((1..=n as i64).product())
}

fn axis_arg<S: Scalar>(n: usize, t: &S) -> Vector<S> {
    Vector::unit(n, n - 1).scale(t)
}

/// `eta(t)` recovered from the valuation through the full simplex: at a
/// nonzero ratio the probe argument is `t e_n`; at ratio zero it is
/// `e_1 - e_2`, which meets the only contributing facet orthogonally.
pub fn eta_query<S: Scalar>(
    z: &dyn Valuation<S>,
    simplex: &Polytope<S>,
    c0: &S,
    c_nm1: &S,
    t: &S,
) -> Result<S, Error> {
    let n = simplex.ambient_dim();
    let x = if t.sign() != 0 {
        axis_arg(n, t)
    } else {
        let mut coords = vec![S::zero(); n];
        coords[0] = S::one();
        coords[1] = -S::one();
        Vector::new(coords)
    };
    let raw = z.eval(simplex, &x)?;
    let projection = projection_mixed(simplex, &x)?;
    Ok(factorial_scalar::<S>(n) * (raw - c_nm1.clone() * projection - c0.clone()))
}

/// Extract the origin-domain classification data.
///
/// Fails with [`Error::NotClassifiable`] when the probed values are
/// incompatible with the classified form (non-additive slope or broken
/// scaling), reporting the offending probe.
pub fn extract_origin_form<S: Scalar>(
    z: &dyn Valuation<S>,
    n: usize,
) -> Result<OriginExtraction<S>, Error> {
    if n < 3 {
        return Err(Error::invalid("extraction needs ambient dimension >= 3"));
    }
    let e_n = Vector::<S>::unit(n, n - 1);
    let segment = Polytope::segment(Vector::zero(n), Vector::unit(n, 0))?;
    let origin_pt = Polytope::point(Vector::<S>::zero(n))?;
    let c0 = z.eval(&segment, &e_n)?;
    let c0_prime = z.eval(&origin_pt, &e_n)? - c0.clone();

    // Slope along the top lower-dimensional simplex isolates the projection
    // coefficient: Z(T^(n-1))(t e_n) - c0 = c_nm1 * 2 |t| / n!.
    let lower = Polytope::standard_simplex(n, n - 1, S::one())?;
    let slope = z.eval(&lower, &e_n)? - c0.clone();
    let factorial = factorial_scalar::<S>(n);
    let c_nm1 = slope.clone() * factorial.clone() / S::from_int(2);
    for t in [
        S::from_int(2),
        S::from_int(3),
        S::one() / S::from_int(2),
        -S::one(),
    ] {
        let measured = z.eval(&lower, &axis_arg(n, &t))? - c0.clone();
        if measured != slope.clone() * t.abs() {
            return Err(Error::NotClassifiable(format!(
                "lower-simplex slope is not homogeneous at t = {t}: got {measured}, want {}",
                slope.clone() * t.abs()
            )));
        }
    }

    let simplex = Polytope::standard_simplex(n, n, S::one())?;
    let mut eta_table = Vec::with_capacity(25);
    for k in -12i64..=12 {
        let t = S::from_rational(Rational::new(k.into(), 4.into()));
        eta_table.push((t.clone(), eta_query(z, &simplex, &c0, &c_nm1, &t)?));
    }

    // Scaling consistency: the doubled simplex must report the weight at
    // the halved ratio, scaled by 2^n (additivity of the weight in the cone
    // volume argument).
    let doubled = Polytope::standard_simplex(n, n, S::from_int(2))?;
    for t in [S::one(), S::from_int(3), -S::from_int(2)] {
        let x = axis_arg(n, &t);
        let raw = z.eval(&doubled, &x)?;
        let projection = projection_mixed(&doubled, &x)?;
        let measured = factorial.clone() * (raw - c_nm1.clone() * projection - c0.clone());
        let half = t.clone() / S::from_int(2);
        let expected =
            eta_query(z, &simplex, &c0, &c_nm1, &half)? * S::from_int(1 << n as i64);
        if measured != expected {
            return Err(Error::NotClassifiable(format!(
                "weight is not additive in the cone volume at t = {t}: got {measured}, want {expected}"
            )));
        }
    }

    Ok(OriginExtraction {
        n,
        c0,
        c0_prime,
        c_nm1,
        eta_table,
    })
}

impl<S: Scalar> OriginExtraction<S> {
    /// Classification data with the weight frozen as an interpolation
    /// table.
    pub fn to_classification_data(&self) -> ClassificationData<S> {
        let mut data = ClassificationData::zero();
        data.zeta1 = ZetaSpec::eta_times_s(UnaryFunction::table(self.eta_table.clone()));
        data.c_nm1 = self.c_nm1.clone();
        data.c0 = self.c0.clone();
        data.c0_prime = self.c0_prime.clone();
        data
    }
}

/// The rebuilt valuation: classified form with the weight served from the
/// extraction table and, off the grid, queried on demand from the source.
pub struct RebuiltOriginValuation<'a, S: Scalar> {
    source: &'a dyn Valuation<S>,
    extraction: OriginExtraction<S>,
    simplex: Polytope<S>,
}

impl<'a, S: Scalar> RebuiltOriginValuation<'a, S> {
    pub fn new(source: &'a dyn Valuation<S>, extraction: OriginExtraction<S>) -> Self {
        let simplex = Polytope::standard_simplex(extraction.n, extraction.n, S::one())
            .expect("extraction dimension is valid");
        RebuiltOriginValuation {
            source,
            extraction,
            simplex,
        }
    }

    pub fn extraction(&self) -> &OriginExtraction<S> {
        &self.extraction
    }

    fn eta(&self, t: &S) -> Result<S, Error> {
        if let Ok(hit) = self
            .extraction
            .eta_table
            .binary_search_by(|(node, _)| node.cmp(t))
        {
            return Ok(self.extraction.eta_table[hit].1.clone());
        }
        eta_query(
            self.source,
            &self.simplex,
            &self.extraction.c0,
            &self.extraction.c_nm1,
            t,
        )
    }
}

impl<S: Scalar> Valuation<S> for RebuiltOriginValuation<'_, S> {
    fn name(&self) -> &str {
        "rebuilt_classified_o"
    }

    fn domain(&self) -> Domain {
        Domain::ContainsOrigin
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        if p.is_empty() || !p.contains_origin() {
            return Err(Error::OriginOutside);
        }
        if x.is_zero() {
            return Err(Error::OriginArgument);
        }
        let mut acc = S::zero();
        for facet in p.facets() {
            if !facet.misses_origin() {
                continue;
            }
            let ratio = x.dot(&facet.normal) / facet.support.clone();
            acc = acc + self.eta(&ratio)? * facet.cone_volume.clone();
        }
        if self.extraction.c_nm1.sign() != 0 {
            acc = acc + self.extraction.c_nm1.clone() * projection_mixed(p, x)?;
        }
        acc = acc + self.extraction.c0.clone() * S::from_int(p.euler());
        acc = acc + self.extraction.c0_prime.clone() * S::from_int(euler_local(p));
        Ok(acc)
    }
}

/// `Z-check(T) := Z(facet of T opposite the origin)`, the auxiliary
/// valuation driving extraction on the full polytope domain; the origin
/// point maps to zero by definition.
pub struct FacetOppositeValuation<'a, S: Scalar> {
    pub inner: &'a dyn Valuation<S>,
}

impl<S: Scalar> Valuation<S> for FacetOppositeValuation<'_, S> {
    fn name(&self) -> &str {
        "facet_opposite"
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        if p.dim() <= 0 {
            return Ok(S::zero());
        }
        let verts: Vec<Vector<S>> = p
            .vertices()
            .iter()
            .filter(|v| !v.is_zero())
            .cloned()
            .collect();
        let opposite = Polytope::hull(p.ambient_dim(), verts)?;
        self.inner.eval(&opposite, x)
    }
}

/// Extraction on the full polytope domain: the origin-form data of `Z`
/// combined with the origin-form data of the facet-opposite auxiliary.
#[derive(Clone, Debug)]
pub struct FullExtraction<S: Scalar> {
    pub c0: S,
    pub c0_prime: S,
    pub c0_tilde: S,
    pub c_nm1: S,
    pub c_nm1_tilde: S,
    pub eta1_table: Vec<(S, S)>,
    pub eta2_table: Vec<(S, S)>,
    pub direct: OriginExtraction<S>,
    pub opposite: OriginExtraction<S>,
}

pub fn extract_full_form<S: Scalar>(
    z: &dyn Valuation<S>,
    n: usize,
) -> Result<FullExtraction<S>, Error> {
    if z.domain() != Domain::All {
        return Err(Error::invalid(
            "full-domain extraction needs a valuation on all polytopes",
        ));
    }
    let direct = extract_origin_form(z, n)?;
    let aux = FacetOppositeValuation { inner: z };
    let opposite = extract_origin_form(&aux, n)?;

    let c_nm1 = direct.c_nm1.clone() - opposite.c_nm1.clone();
    let combine = |k: usize| -> (S, S) {
        let (t, va) = direct.eta_table[k].clone();
        let vb = opposite.eta_table[k].1.clone();
        let swing = c_nm1.clone() * t.abs();
        (
            t.clone(),
            va - vb.clone() + swing.clone(),
        )
    };
    let mut eta1_table = Vec::with_capacity(direct.eta_table.len());
    let mut eta2_table = Vec::with_capacity(direct.eta_table.len());
    for k in 0..direct.eta_table.len() {
        let (t, v1) = combine(k);
        eta1_table.push((t.clone(), v1));
        let vb = opposite.eta_table[k].1.clone();
        eta2_table.push((t.clone(), vb - c_nm1.clone() * t.abs()));
    }

    Ok(FullExtraction {
        c0: opposite.c0.clone(),
        c0_prime: direct.c0_prime.clone(),
        c0_tilde: direct.c0.clone() - opposite.c0.clone(),
        c_nm1,
        c_nm1_tilde: opposite.c_nm1.clone(),
        eta1_table,
        eta2_table,
        direct,
        opposite,
    })
}

/// Rebuilt full-domain valuation with on-demand weights.
pub struct RebuiltFullValuation<'a, S: Scalar> {
    source: &'a dyn Valuation<S>,
    extraction: FullExtraction<S>,
    simplex: Polytope<S>,
}

impl<'a, S: Scalar> RebuiltFullValuation<'a, S> {
    pub fn new(source: &'a dyn Valuation<S>, extraction: FullExtraction<S>) -> Self {
        let n = extraction.direct.n;
        let simplex =
            Polytope::standard_simplex(n, n, S::one()).expect("extraction dimension is valid");
        RebuiltFullValuation {
            source,
            extraction,
            simplex,
        }
    }

    pub fn extraction(&self) -> &FullExtraction<S> {
        &self.extraction
    }

    fn eta_pair(&self, t: &S) -> Result<(S, S), Error> {
        let ex = &self.extraction;
        if let Ok(hit) = ex.eta1_table.binary_search_by(|(node, _)| node.cmp(t)) {
            return Ok((ex.eta1_table[hit].1.clone(), ex.eta2_table[hit].1.clone()));
        }
        let va = eta_query(
            self.source,
            &self.simplex,
            &ex.direct.c0,
            &ex.direct.c_nm1,
            t,
        )?;
        let aux = FacetOppositeValuation { inner: self.source };
        let vb = eta_query(&aux, &self.simplex, &ex.opposite.c0, &ex.opposite.c_nm1, t)?;
        let swing = ex.c_nm1.clone() * t.abs();
        Ok((va - vb.clone() + swing.clone(), vb - swing))
    }
}

impl<S: Scalar> Valuation<S> for RebuiltFullValuation<'_, S> {
    fn name(&self) -> &str {
        "rebuilt_classified"
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        if x.is_zero() {
            return Err(Error::OriginArgument);
        }
        let ex = &self.extraction;
        let hull_o = p.hull_with_origin();
        let mut acc = S::zero();
        for facet in p.facets() {
            if !facet.misses_origin() {
                continue;
            }
            let ratio = x.dot(&facet.normal) / facet.support.clone();
            acc = acc + self.eta_pair(&ratio)?.0 * facet.cone_volume.clone();
        }
        for facet in hull_o.facets() {
            if !facet.misses_origin() {
                continue;
            }
            let ratio = x.dot(&facet.normal) / facet.support.clone();
            acc = acc + self.eta_pair(&ratio)?.1 * facet.cone_volume.clone();
        }
        if ex.c_nm1.sign() != 0 && !p.is_empty() {
            acc = acc + ex.c_nm1.clone() * projection_mixed(p, x)?;
        }
        if ex.c_nm1_tilde.sign() != 0 {
            acc = acc + ex.c_nm1_tilde.clone() * projection_mixed(&hull_o, x)?;
        }
        acc = acc + ex.c0.clone() * S::from_int(p.euler());
        acc = acc + ex.c0_prime.clone() * S::from_int(euler_local(p));
        acc = acc
            + ex.c0_tilde.clone()
                * S::from_int(i64::from(!p.is_empty() && p.contains_origin()));
        Ok(acc)
    }
}

/// Parameter sets used by the extraction round-trip suite: weight, constant
/// term, local Euler coefficient, projection coefficient.
pub fn roundtrip_parameter_sets() -> Vec<(UnaryFunction<Rational>, Rational, Rational, Rational)> {
    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
    vec![
        (
            UnaryFunction::Poly(vec![q(0, 1), q(0, 1), q(1, 1)]),
            q(2, 1),
            q(-1, 1),
            q(5, 1),
        ),
        (UnaryFunction::identity(), q(0, 1), q(0, 1), q(0, 1)),
        (UnaryFunction::AbsPow(1), q(-1, 2), q(3, 1), q(-2, 3)),
        (
            UnaryFunction::Poly(vec![q(0, 1), q(-1, 1), q(0, 1), q(1, 1)]),
            q(1, 3),
            q(1, 4),
            q(0, 1),
        ),
        (UnaryFunction::PlusPow(1), q(-2, 1), q(0, 1), q(7, 2)),
    ]
}

/// Round trip: extract from classified instances, require the constants
/// exactly, and require the rebuilt valuation to agree with the source on
/// random origin-containing polytopes.
pub fn extraction_suite(n: usize, polytopes_per_set: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("extraction", seed);
    for (set_id, (eta, c0, c0_prime, c_nm1)) in roundtrip_parameter_sets().into_iter().enumerate()
    {
        let mut data = ClassificationData::<Rational>::zero();
        data.zeta1 = ZetaSpec::eta_times_s(eta.clone());
        data.c0 = c0.clone();
        data.c0_prime = c0_prime.clone();
        data.c_nm1 = c_nm1.clone();
        let z = ClassifiedOValuation { data };

        let extraction = match extract_origin_form(&z, n) {
            Ok(e) => e,
            Err(err) => {
                report.record_failure(
                    format!("set {set_id}: extraction failed"),
                    format!("{err}"),
                    "classifiable",
                );
                continue;
            }
        };
        report.record_trial();
        if extraction.c0 != c0 {
            report.record_failure(format!("set {set_id}: c0"), &extraction.c0, c0.clone());
        }
        if extraction.c0_prime != c0_prime {
            report.record_failure(
                format!("set {set_id}: c0_prime"),
                &extraction.c0_prime,
                c0_prime.clone(),
            );
        }
        if extraction.c_nm1 != c_nm1 {
            report.record_failure(
                format!("set {set_id}: c_nm1"),
                &extraction.c_nm1,
                c_nm1.clone(),
            );
        }
        for (t, v) in &extraction.eta_table {
            let expected = eta.eval(t).expect("exact eta");
            if *v != expected {
                report.record_failure(
                    format!("set {set_id}: eta({t})"),
                    v.clone(),
                    expected,
                );
            }
        }

        let rebuilt = RebuiltOriginValuation::new(&z, extraction);
        for trial in 0..polytopes_per_set {
            let mut gen =
                Generator::<Rational>::for_trial(seed, (set_id as u64) << 32 | trial, n);
            let p = gen.polytope(OriginPolicy::Contain);
            report.record_trial();
            for _ in 0..10 {
                let x = gen.direction();
                let lhs = rebuilt.eval(&p, &x);
                let rhs = z.eval(&p, &x);
                match (lhs, rhs) {
                    (Ok(a), Ok(b)) if a == b => {}
                    (Ok(a), Ok(b)) => {
                        report.record_failure(
                            format!("set {set_id}: rebuilt mismatch on {p:?} at x = {x}"),
                            a,
                            b,
                        );
                    }
                    (a, b) => {
                        report.record_failure(
                            format!("set {set_id}: eval error on {p:?} at x = {x}"),
                            format!("{a:?}"),
                            format!("{b:?}"),
                        );
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::suites::mixed_classification_data;
    use crate::valuation::ClassifiedValuation;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn recovers_the_reference_instance_exactly() {
        let mut data = ClassificationData::<Rational>::zero();
        data.zeta1 =
            ZetaSpec::eta_times_s(UnaryFunction::Poly(vec![q(0, 1), q(0, 1), q(1, 1)]));
        data.c0 = q(2, 1);
        data.c0_prime = q(-1, 1);
        data.c_nm1 = q(5, 1);
        let z = ClassifiedOValuation { data };
        let ex = extract_origin_form(&z, 3).unwrap();
        assert_eq!(ex.c0, q(2, 1));
        assert_eq!(ex.c0_prime, q(-1, 1));
        assert_eq!(ex.c_nm1, q(5, 1));
        // eta(t) = t^2 on the grid.
        for (t, v) in &ex.eta_table {
            assert_eq!(*v, t.clone() * t.clone());
        }
    }

    #[test]
    fn pure_zeta_instance_has_zero_constants() {
        let data = ClassificationData::<Rational>::with_zeta1(ZetaSpec::product());
        let z = ClassifiedOValuation { data };
        let ex = extract_origin_form(&z, 3).unwrap();
        assert!(ex.c0.is_zero());
        assert!(ex.c0_prime.is_zero());
        assert!(ex.c_nm1.is_zero());
        for (t, v) in &ex.eta_table {
            assert_eq!(v, t);
        }
    }

    #[test]
    fn non_classifiable_black_box_is_reported() {
        use crate::harness::suites::FnValuation;
        // Volume squared is not even a valuation; the scaling probe breaks.
        let z = FnValuation::<Rational>::new("vol^2", Domain::ContainsOrigin, |p, _| {
            let v = crate::measure::volume(p);
            Ok(v.clone() * v)
        });
        assert!(matches!(
            extract_origin_form(&z, 3),
            Err(Error::NotClassifiable(_))
        ));
    }

    #[test]
    fn full_domain_extraction_round_trips_on_mixed_data() {
        let data = mixed_classification_data::<Rational>();
        let z = ClassifiedValuation { data: data.clone() };
        let ex = extract_full_form(&z, 3).unwrap();
        assert_eq!(ex.c0, data.c0);
        assert_eq!(ex.c0_prime, data.c0_prime);
        assert_eq!(ex.c0_tilde, data.c0_tilde);
        assert_eq!(ex.c_nm1, data.c_nm1);
        assert_eq!(ex.c_nm1_tilde, data.c_nm1_tilde);

        let rebuilt = RebuiltFullValuation::new(&z, ex);
        for trial in 0..12u64 {
            let mut gen = Generator::<Rational>::for_trial(31, trial, 3);
            let p = gen.polytope(if trial % 2 == 0 {
                OriginPolicy::Free
            } else {
                OriginPolicy::Contain
            });
            for _ in 0..4 {
                let x = gen.direction();
                assert_eq!(rebuilt.eval(&p, &x).unwrap(), z.eval(&p, &x).unwrap());
            }
        }
    }

    #[test]
    fn extraction_suite_passes_at_small_scale() {
        let report = extraction_suite(3, 4, 9);
        assert!(report.passed(), "{report}");
    }
}
