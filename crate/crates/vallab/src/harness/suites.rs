//! Property suites: the valuation identity, contravariance, simplicity,
//! dissection identities, closed forms, limits, projection duality, tensor
//! laws, and the negative controls that prove the suites can fail.

use num_traits::{One, Zero};

use super::gen::{sub_seed, Generator, OriginPolicy};
use super::oracles::{projection_by_prism, volume_by_triangulation};
use super::report::{CheckReport, ControlOutcome, SuiteOutcome};
use crate::error::Error;
use crate::geom::{Hyperplane, LinearMap, Polytope, Vector};
use crate::measure::{projection_mixed, volume};
use crate::scalar::{pow_u, QuadScalar, Rational, Scalar, ScalarMode};
use crate::tensor::{act_inverse_transpose, m0p, power_cauchy_zeta};
use crate::valuation::{
    classified_o, normal_sum, pi_zeta, pi_zeta_f64, ClassificationData, ClassifiedValuation,
    Domain, PiZetaTildeValuation, PiZetaValuation, ProjectionValuation, UnaryFunction, Valuation,
    ZetaSpec,
};
use crate::CauchyFunctional;

/// A valuation defined by a closure, for ad-hoc black boxes and controls.
pub struct FnValuation<S: Scalar> {
    name: String,
    domain: Domain,
    #[allow(clippy::type_complexity)]
    f: Box<dyn Fn(&Polytope<S>, &Vector<S>) -> Result<S, Error> + Send + Sync>,
}

impl<S: Scalar> FnValuation<S> {
    pub fn new(
        name: impl Into<String>,
        domain: Domain,
        f: impl Fn(&Polytope<S>, &Vector<S>) -> Result<S, Error> + Send + Sync + 'static,
    ) -> Self {
        FnValuation {
            name: name.into(),
            domain,
            f: Box::new(f),
        }
    }
}

impl<S: Scalar> Valuation<S> for FnValuation<S> {
    fn name(&self) -> &str {
        &self.name
    }

    fn domain(&self) -> Domain {
        self.domain
    }

    fn eval(&self, p: &Polytope<S>, x: &Vector<S>) -> Result<S, Error> {
        (self.f)(p, x)
    }
}

/// One valuation-identity trial: cut `p` by `h` and compare
/// `Z(P^-) + Z(P^+)` against `Z(P) + Z(P cap H)` at each sample argument.
/// Domain violations skip the trial and are recorded.
pub fn check_valuation_instance<S: Scalar>(
    z: &dyn Valuation<S>,
    p: &Polytope<S>,
    h: &Hyperplane<S>,
    xs: &[Vector<S>],
    report: &mut CheckReport,
) {
    let pieces = match p.cut(h) {
        Ok(pieces) => pieces,
        Err(_) => {
            report.record_skip();
            return;
        }
    };
    if pieces.minus.is_empty() || pieces.plus.is_empty() {
        report.record_skip();
        return;
    }
    if z.domain() == Domain::ContainsOrigin {
        let all_contain = p.contains_origin()
            && pieces.minus.contains_origin()
            && pieces.plus.contains_origin()
            && (pieces.slice.is_empty() || pieces.slice.contains_origin());
        if !all_contain {
            report.record_skip();
            return;
        }
    }
    let evals = (|| -> Result<_, Error> {
        Ok((
            z.eval_many(&pieces.minus, xs)?,
            z.eval_many(&pieces.plus, xs)?,
            z.eval_many(p, xs)?,
            z.eval_many(&pieces.slice, xs)?,
        ))
    })();
    let (vm, vp, vw, vs) = match evals {
        Ok(t) => t,
        Err(_) => {
            report.record_skip();
            return;
        }
    };
    report.record_trial();
    for (i, x) in xs.iter().enumerate() {
        let lhs = vm[i].clone() + vp[i].clone();
        let rhs = vw[i].clone() + vs[i].clone();
        if lhs != rhs {
            report.record_failure(
                format!(
                    "Z = {}, P = {:?}, H = {{{} . x = {}}}, x = {}",
                    z.name(),
                    p,
                    h.normal,
                    h.offset,
                    x
                ),
                lhs,
                rhs,
            );
        }
    }
}

/// One contravariance trial: `Z(phi P)(x)` against `Z(P)(phi^-1 x)`.
pub fn check_contravariance_instance<S: Scalar>(
    z: &dyn Valuation<S>,
    p: &Polytope<S>,
    phi: &LinearMap<S>,
    xs: &[Vector<S>],
    report: &mut CheckReport,
) -> Result<(), Error> {
    if !phi.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let image = p.apply_linear(phi)?;
    let inv = phi.inverse()?;
    let pulled: Vec<Vector<S>> = xs.iter().map(|x| inv.apply(x)).collect();
    let lhs_all = match z.eval_many(&image, xs) {
        Ok(v) => v,
        Err(_) => {
            report.record_skip();
            return Ok(());
        }
    };
    let rhs_all = match z.eval_many(p, &pulled) {
        Ok(v) => v,
        Err(_) => {
            report.record_skip();
            return Ok(());
        }
    };
    report.record_trial();
    for (i, x) in xs.iter().enumerate() {
        if lhs_all[i] != rhs_all[i] {
            report.record_failure(
                format!("Z = {}, P = {:?}, phi = {:?}, x = {}", z.name(), p, phi, x),
                lhs_all[i].clone(),
                rhs_all[i].clone(),
            );
        }
    }
    Ok(())
}

fn sample_args<S: Scalar>(gen: &mut Generator<S>, count: usize) -> Vec<Vector<S>> {
    (0..count).map(|_| gen.direction()).collect()
}

/// Run the valuation identity over seeded random cut trials.
pub fn valuation_suite<S: Scalar>(
    z: &dyn Valuation<S>,
    n: usize,
    trials: u64,
    xs_per_trial: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new(format!("valuation[{}]", z.name()), seed);
    let origin_cuts = z.domain() == Domain::ContainsOrigin;
    for trial in 0..trials {
        let mut gen = Generator::<S>::for_trial(seed, trial, n);
        let policy = if origin_cuts {
            OriginPolicy::Contain
        } else if trial % 3 == 0 {
            OriginPolicy::Contain
        } else {
            OriginPolicy::Free
        };
        let p = gen.polytope(policy);
        let Some(h) = gen.cut_hyperplane(&p, origin_cuts) else {
            report.record_skip();
            continue;
        };
        let xs = sample_args(&mut gen, xs_per_trial);
        check_valuation_instance(z, &p, &h, &xs, &mut report);
    }
    report
}

/// Run the contravariance identity over seeded unimodular maps.
pub fn contravariance_suite<S: Scalar>(
    z: &dyn Valuation<S>,
    n: usize,
    trials: u64,
    xs_per_trial: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new(format!("contravariance[{}]", z.name()), seed);
    for trial in 0..trials {
        let mut gen = Generator::<S>::for_trial(seed, trial, n);
        let policy = if z.domain() == Domain::ContainsOrigin {
            OriginPolicy::Contain
        } else {
            OriginPolicy::Free
        };
        let p = gen.polytope(policy);
        let phi = gen.unimodular();
        let xs = sample_args(&mut gen, xs_per_trial);
        check_contravariance_instance(z, &p, &phi, &xs, &mut report)
            .expect("generated maps are unimodular");
    }
    report
}

/// Simplicity: the zeta sum vanishes identically on every polytope of
/// dimension below the ambient one, origin or not.
pub fn simplicity_suite<S: Scalar>(
    zeta: &ZetaSpec<S>,
    n: usize,
    count: u64,
    xs_per_trial: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new("simplicity", seed);
    for trial in 0..count {
        let mut gen = Generator::<S>::for_trial(seed, trial, n);
        let d = (trial % n as u64) as usize; // dims 0..n-1
        let with_origin = trial % 2 == 0;
        let simplex = gen.lower_simplex(d, with_origin);
        // Half the time, look at a sheared copy as well.
        let p = if trial % 4 < 2 {
            simplex
        } else {
            let phi = gen.unimodular();
            simplex.apply_linear(&phi).expect("unimodular is invertible")
        };
        report.record_trial();
        for x in sample_args(&mut gen, xs_per_trial) {
            match pi_zeta(&p, zeta, &x) {
                Ok(v) if v.is_zero() => {}
                Ok(v) => report.record_failure(
                    format!("P = {:?} (dim {}), x = {}", p, p.dim(), x),
                    v,
                    S::zero(),
                ),
                Err(_) => report.record_skip(),
            }
        }
    }
    report
}

/// Closed form on scaled standard simplices:
/// `Pi_zeta(s T^n)(t e_n) = zeta(t/s, s^n/n!)`.
pub fn closed_form_suite<S: Scalar>(
    zeta: &ZetaSpec<S>,
    n: usize,
    trials: u64,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new("k1", seed);
    let factorial: i64 = (1..=n as i64).product();
    for trial in 0..trials {
        let mut gen = Generator::<S>::for_trial(seed, trial, n);
        let s = S::from_rational(gen.positive_rational());
        let t = S::from_rational(gen.nonzero_rational());
        let p = Polytope::standard_simplex(n, n, s.clone()).expect("valid simplex");
        let x = Vector::unit(n, n - 1).scale(&t);
        let lhs = match pi_zeta(&p, zeta, &x) {
            Ok(v) => v,
            Err(_) => {
                report.record_skip();
                continue;
            }
        };
        let rhs = zeta
            .eval(
                &(t.clone() / s.clone()),
                &(pow_u(&s, n as u32) / S::from_int(factorial)),
            )
            .expect("exact zeta");
        report.record_trial();
        if lhs != rhs {
            report.record_failure(format!("s = {s}, t = {t}, n = {n}"), lhs, rhs);
        }
    }
    report
}

/// Dissection identities on simplices. For `2 <= d < n` the four-term
/// identity is evaluated geometrically with the classified valuation; for
/// `d = n` the scaled pieces are images under irrational dilations, so the
/// identity is checked through the exact closed form, where it reduces to
/// additivity of zeta in its second argument.
pub fn dissection_suite<S: Scalar>(
    data: &ClassificationData<S>,
    n: usize,
    trials: u64,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new("dissection", seed);
    let factorial: i64 = (1..=n as i64).product();
    for trial in 0..trials {
        let mut gen = Generator::<S>::for_trial(seed, trial, n);
        let d = 2 + (trial % (n as u64 - 1)) as usize; // 2..=n
        let s = S::from_rational(gen.positive_rational());
        let t = S::from_rational(gen.nonzero_rational());
        let lam = S::from_rational(gen.unit_interval_rational());
        report.record_trial();
        if d < n {
            let simplex = Polytope::standard_simplex(n, d, s.clone()).expect("simplex");
            let hat = hat_simplex(n, d, &s);
            let e_n = Vector::<S>::unit(n, n - 1);
            let at = |p: &Polytope<S>, c: &S| -> Result<S, Error> {
                classified_o(p, data, &e_n.scale(c))
            };
            let one_minus = S::one() - lam.clone();
            let run = || -> Result<(S, S), Error> {
                let lhs = at(&simplex, &t)? + at(&hat, &(lam.clone() * t.clone()))?;
                let rhs =
                    at(&simplex, &(lam.clone() * t.clone()))? + at(&simplex, &(one_minus * t.clone()))?;
                Ok((lhs, rhs))
            };
            match run() {
                Ok((lhs, rhs)) => {
                    if lhs != rhs {
                        report.record_failure(
                            format!("d = {d}, s = {s}, t = {t}, lambda = {lam}"),
                            lhs,
                            rhs,
                        );
                    }
                }
                Err(_) => report.record_skip(),
            }
        } else {
            // d = n: split the simplex volume through the closed form.
            let simplex = Polytope::standard_simplex(n, n, s.clone()).expect("simplex");
            let x = Vector::unit(n, n - 1).scale(&t);
            let lhs = match pi_zeta(&simplex, &data.zeta1, &x) {
                Ok(v) => v,
                Err(_) => {
                    report.record_skip();
                    continue;
                }
            };
            let vol = pow_u(&s, n as u32) / S::from_int(factorial);
            let ratio = t.clone() / s.clone();
            let rhs = data
                .zeta1
                .eval(&ratio, &(lam.clone() * vol.clone()))
                .expect("exact zeta")
                + data
                    .zeta1
                    .eval(&ratio, &((S::one() - lam.clone()) * vol))
                    .expect("exact zeta");
            if lhs != rhs {
                report.record_failure(
                    format!("d = {n}, s = {s}, t = {t}, lambda = {lam}"),
                    lhs,
                    rhs,
                );
            }
        }
    }
    report
}

/// `[o, e_1, e_3, ..., e_d]` scaled by `s`: the section simplex appearing
/// in the dissection identity.
pub fn hat_simplex<S: Scalar>(n: usize, d: usize, scale: &S) -> Polytope<S> {
    let mut pts = vec![Vector::zero(n)];
    pts.push(Vector::unit(n, 0).scale(scale));
    for axis in 2..d {
        pts.push(Vector::unit(n, axis).scale(scale));
    }
    Polytope::hull(n, pts).expect("valid hat simplex")
}

/// Two-sided limit toward `x1 = r` along `x1 e_1 - r e_2`: every sample
/// must match the closed form exactly (for exact zetas) and the sampled
/// values must approach the on-point value.
pub fn limit_suite<S: Scalar>(zeta: &ZetaSpec<S>, n: usize, steps: u32, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("j5", seed);
    let factorial: i64 = (1..=n as i64).product();
    let exact = zeta.exactly_evaluable();
    report.exact = exact;
    for (s_num, r_num) in [(1i64, 1i64), (2, 1), (1, 2), (3, 2)] {
        let s = S::from_int(s_num);
        let r = S::from_int(r_num) / S::from_int(2);
        let simplex = Polytope::standard_simplex(n, n, s.clone()).expect("simplex");
        let vol = pow_u(&s, n as u32) / S::from_int(factorial);
        let arg = |x1: &S| -> Vector<S> {
            let mut coords = vec![S::zero(); n];
            coords[0] = x1.clone();
            coords[1] = -r.clone();
            Vector::new(coords)
        };
        report.record_trial();
        if exact {
            let on_point = pi_zeta(&simplex, zeta, &arg(&r)).expect("exact");
            let expected_on_point = zeta.eval(&S::zero(), &vol).expect("exact zeta");
            if on_point != expected_on_point {
                report.record_failure(
                    format!("on-point s = {s}, r = {r}"),
                    on_point.clone(),
                    expected_on_point,
                );
            }
            let mut halver = S::one();
            let mut last_gap = f64::INFINITY;
            for step in 0..steps {
                halver = halver / S::from_int(2);
                for dir in [1i64, -1] {
                    let x1 = r.clone() + S::from_int(dir) * r.clone() * halver.clone();
                    let geometric = pi_zeta(&simplex, zeta, &arg(&x1)).expect("exact");
                    let closed = zeta
                        .eval(&((x1.clone() - r.clone()) / s.clone()), &vol)
                        .expect("exact zeta");
                    if geometric != closed {
                        report.record_failure(
                            format!("sample s = {s}, r = {r}, x1 = {x1}"),
                            geometric.clone(),
                            closed,
                        );
                    }
                    let gap = (geometric.to_f64() - on_point.to_f64()).abs();
                    if step + 1 == steps && gap > 1e-9 {
                        report.record_failure(
                            format!("no convergence: s = {s}, r = {r}, x1 = {x1}"),
                            format!("gap {gap:e}"),
                            "<= 1e-9",
                        );
                    }
                    if step + 1 == steps && gap > last_gap {
                        report.record_failure(
                            format!("gap grew: s = {s}, r = {r}, x1 = {x1}"),
                            format!("{gap:e}"),
                            format!("<= {last_gap:e}"),
                        );
                    }
                }
                let x1 = r.clone() + r.clone() * halver.clone();
                last_gap = (pi_zeta(&simplex, zeta, &arg(&x1)).expect("exact").to_f64()
                    - on_point.to_f64())
                .abs();
            }
        } else {
            // Float pipeline: tolerance comparisons.
            let sf = s.to_f64();
            let rf = r.to_f64();
            let volf = vol.to_f64();
            let on_point = pi_zeta_f64(&simplex, zeta, &arg(&r));
            let mut approach = f64::INFINITY;
            for step in 1..=steps.min(30) {
                let delta = rf / f64::powi(2.0, step as i32);
                for dir in [1.0f64, -1.0] {
                    let x1f = rf + dir * delta;
                    let x1 = S::from_rational(crate::scalar::Rational::new(
                        ((x1f * (1 << 20) as f64).round() as i64).into(),
                        (1i64 << 20).into(),
                    ));
                    let geometric = pi_zeta_f64(&simplex, zeta, &arg(&x1));
                    let closed = zeta.eval_f64((x1.to_f64() - rf) / sf, &vol);
                    if (geometric - closed).abs() > 1e-9 * (1.0 + closed.abs()) {
                        report.record_failure(
                            format!("float sample s = {s}, r = {r}, x1 = {x1}"),
                            format!("{geometric}"),
                            format!("{closed}"),
                        );
                    }
                    if step == steps.min(30) {
                        approach = (geometric - on_point).abs();
                    }
                }
            }
            let _ = volf;
            if approach > 1e-9 {
                report.record_failure(
                    format!("float limit s = {s}, r = {r}"),
                    format!("{approach:e}"),
                    "<= 1e-9",
                );
            }
        }
    }
    report
}

/// Facet-sum projection value against the independent prism oracle, plus
/// the closed form on lower-dimensional simplices.
pub fn projection_dual_suite(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("projection-dual", seed);
    let factorial: i64 = (1..=n as i64).product();
    for trial in 0..trials {
        let mut gen = Generator::<Rational>::for_trial(seed, trial, n);
        let p = gen.polytope(if trial % 2 == 0 {
            OriginPolicy::Contain
        } else {
            OriginPolicy::Free
        });
        let x = gen.direction();
        report.record_trial();
        let facet_sum = projection_mixed(&p, &x).expect("nonzero direction");
        let prism = projection_by_prism(&p, &x).expect("nonzero direction");
        if facet_sum != prism {
            report.record_failure(format!("P = {p:?}, x = {x}"), facet_sum, prism);
        }
        // Lower-dimensional closed form: (2/n!) s^(n-1) |t| on s T^(n-1).
        let s = gen.positive_rational();
        let t = gen.nonzero_rational();
        let simplex =
            Polytope::<Rational>::standard_simplex(n, n - 1, s.clone()).expect("simplex");
        let value = projection_mixed(&simplex, &Vector::unit(n, n - 1).scale(&t))
            .expect("nonzero direction");
        let expected = Rational::from_int(2) * pow_u(&s, n as u32 - 1)
            * crate::scalar::Scalar::abs(&t)
            / Rational::from_int(factorial);
        if value != expected {
            report.record_failure(format!("s = {s}, t = {t}"), value, expected);
        }
    }
    report
}

/// Tensor laws: contraction consistency with the zeta sum, contravariance
/// under unimodular maps, and parity under negation.
pub fn tensor_suite(n: usize, orders: &[u32], trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("tensor", seed);
    let xi = CauchyFunctional::id();
    for trial in 0..trials {
        let mut gen = Generator::<Rational>::for_trial(seed, trial, n);
        let p = gen.polytope(OriginPolicy::Contain);
        let phi = gen.unimodular();
        let x = gen.direction();
        report.record_trial();
        for &order in orders {
            let tensor = m0p(&p, &xi, order).expect("positive order");
            let via_tensor = tensor.contract(&x).expect("matching dimension");
            let via_sum = pi_zeta(&p, &power_cauchy_zeta::<Rational>(order, &xi), &x)
                .unwrap_or_else(|_| {
                    normal_sum(&p, &x, |t, v| Ok(pow_u(t, order) * xi.apply(v))).expect("sum")
                });
            if via_tensor != via_sum {
                report.record_failure(
                    format!("contraction p = {order}, P = {p:?}, x = {x}"),
                    via_tensor,
                    via_sum,
                );
            }
            let lhs = m0p(&p.apply_linear(&phi).expect("unimodular"), &xi, order)
                .expect("positive order");
            let rhs = act_inverse_transpose(&phi, &tensor).expect("invertible");
            if lhs != rhs {
                report.record_failure(
                    format!("contravariance p = {order}, P = {p:?}, phi = {phi:?}"),
                    format!("{lhs:?}"),
                    format!("{rhs:?}"),
                );
            }
            let parity_lhs = tensor.contract(&x.neg()).expect("dimension");
            let sign = if order % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            let parity_rhs = sign * tensor.contract(&x).expect("dimension");
            if parity_lhs != parity_rhs {
                report.record_failure(
                    format!("parity p = {order}, P = {p:?}, x = {x}"),
                    parity_lhs,
                    parity_rhs,
                );
            }
        }
    }
    report
}

/// Exactness checks of the kernel itself on random data: cone volumes sum
/// to the volume, cut pieces partition volume, both against the
/// triangulation oracle.
pub fn kernel_volume_suite(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("kernel-volume", seed);
    for trial in 0..trials {
        let mut gen = Generator::<Rational>::for_trial(seed, trial, n);
        let p = gen.polytope(OriginPolicy::Free);
        report.record_trial();
        let facet_volume = volume(&p);
        let oracle = volume_by_triangulation(&p);
        if facet_volume != oracle {
            report.record_failure(format!("P = {p:?}"), facet_volume.clone(), oracle);
        }
        let Some(h) = gen.cut_hyperplane(&p, false) else {
            report.record_skip();
            continue;
        };
        let pieces = p.cut(&h).expect("matching dimensions");
        let sum = volume(&pieces.minus) + volume(&pieces.plus);
        if sum != facet_volume {
            report.record_failure(
                format!("cut volume: P = {p:?}, H = {{{} . x = {}}}", h.normal, h.offset),
                sum,
                facet_volume,
            );
        }
    }
    report
}

/// The standard acceptance set of valuations: zeta sums (linear and
/// absolute powers), the origin-hull variant, the projection value, and the
/// fully mixed classified form.
pub fn standard_valuations<S: Scalar>() -> Vec<Box<dyn Valuation<S>>> {
    let mut zs: Vec<Box<dyn Valuation<S>>> = vec![Box::new(PiZetaValuation::new(
        ZetaSpec::product(),
        "pi_zeta[t*s]",
    ))];
    for p in 1..=3u32 {
        zs.push(Box::new(PiZetaValuation::new(
            ZetaSpec::eta_times_s(UnaryFunction::AbsPow(p)),
            format!("pi_zeta[|t|^{p}*s]"),
        )));
    }
    zs.push(Box::new(PiZetaTildeValuation::new(
        ZetaSpec::product(),
        "pi_zeta_tilde[t*s]",
    )));
    zs.push(Box::new(ProjectionValuation));
    zs.push(Box::new(ClassifiedValuation {
        data: mixed_classification_data(),
    }));
    zs
}

/// A classified form with every coefficient nonzero.
pub fn mixed_classification_data<S: Scalar>() -> ClassificationData<S> {
    ClassificationData {
        zeta1: ZetaSpec::product(),
        zeta2: ZetaSpec::eta_times_s(UnaryFunction::AbsPow(1)),
        c_nm1: S::from_int(2),
        c_nm1_tilde: -(S::one() / S::from_int(2)),
        c0: S::from_int(3),
        c0_prime: -S::one(),
        c0_tilde: S::from_int(5) / S::from_int(2),
    }
}

/// Negative control: a non-additive zeta (`s^2` in the second argument)
/// must break the valuation identity somewhere.
pub fn control_squared_s(n: usize, trials: u64, seed: u64) -> CheckReport {
    let z = FnValuation::<Rational>::new("control[zeta=s^2]", Domain::All, |p, x| {
        normal_sum(p, x, |_, v| Ok(v.clone() * v.clone()))
    });
    valuation_suite(&z, n, trials, 5, seed)
}

/// Negative control: the support function is covariant, not contravariant.
pub fn control_support_function(n: usize, trials: u64, seed: u64) -> CheckReport {
    let z = FnValuation::<Rational>::new("control[h_P]", Domain::All, |p, x| p.support(x));
    contravariance_suite(&z, n, trials, 5, seed)
}

/// The quadratic-field witness: with `zeta(t, a + b*sqrt(2)) = t * a` the
/// valuation, contravariance and simplicity suites all pass exactly, yet
/// `zeta(1, sqrt(2)*s0) != sqrt(2)*zeta(1, s0)`, so the construction is not
/// of the real-linear weighted form.
pub fn quad_gap_suite(
    cut_trials_n3: u64,
    cut_trials_n4: u64,
    map_trials: u64,
    simplicity_count: u64,
    seed: u64,
) -> CheckReport {
    let zeta = ZetaSpec::<QuadScalar>::rational_part(UnaryFunction::identity());
    let z = PiZetaValuation::new(zeta.clone(), "pi_zeta[quad t*a]");
    let mut report = CheckReport::new("quad-gap", seed);
    report.absorb(valuation_suite(&z, 3, cut_trials_n3, 5, seed));
    if cut_trials_n4 > 0 {
        report.absorb(valuation_suite(&z, 4, cut_trials_n4, 5, sub_seed(seed, 41)));
    }
    report.absorb(contravariance_suite(&z, 3, map_trials, 5, sub_seed(seed, 42)));
    report.absorb(simplicity_suite(&zeta, 3, simplicity_count, 5, sub_seed(seed, 43)));
    report.suite = "quad-gap".to_string();

    // The non-linearity witness itself.
    let one = QuadScalar::one();
    let r2 = QuadScalar::sqrt2_value();
    let at_r2 = zeta.eval(&one, &r2).expect("exact zeta");
    let linear = r2 * zeta.eval(&one, &one).expect("exact zeta");
    report.record_trial();
    if at_r2 == linear {
        report.record_failure("zeta(1, sqrt2) vs sqrt2 * zeta(1, 1)", at_r2, linear);
    }
    report
}

/// Configuration for a named suite run (the CLI surface).
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: String,
    pub trials: u64,
    pub seed: u64,
    pub dim: usize,
    pub scalar: ScalarMode,
    pub zeta: Option<String>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: "valuation".into(),
            trials: 100,
            seed: 0,
            dim: 3,
            scalar: ScalarMode::Rational,
            zeta: None,
        }
    }
}

/// A zeta selected by name, or the marker for the non-additive control.
enum NamedZeta<S: Scalar> {
    Spec(ZetaSpec<S>),
    SquaredS,
}

fn named_zeta<S: Scalar>(name: &str) -> Result<NamedZeta<S>, Error> {
    Ok(match name {
        "linear_t" => NamedZeta::Spec(ZetaSpec::product()),
        "abs_t" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::AbsPow(1))),
        "abs_t_sq" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::AbsPow(2))),
        "abs_t_cube" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::AbsPow(3))),
        "t_plus" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::PlusPow(1))),
        "t_minus" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::MinusPow(1))),
        "t_sq" => NamedZeta::Spec(ZetaSpec::eta_times_s(UnaryFunction::Poly(vec![
            S::zero(),
            S::zero(),
            S::one(),
        ]))),
        "rational_part_t" => NamedZeta::Spec(ZetaSpec::rational_part(UnaryFunction::identity())),
        "squared_s" => NamedZeta::SquaredS,
        other => {
            return Err(Error::invalid(format!(
                "unknown zeta `{other}` (try linear_t, abs_t, abs_t_sq, abs_t_cube, t_plus, t_minus, t_sq, rational_part_t, squared_s)"
            )))
        }
    })
}

fn zeta_under_test<S: Scalar>(cfg: &SuiteConfig) -> Result<NamedZeta<S>, Error> {
    match &cfg.zeta {
        Some(name) => named_zeta(name),
        None => Ok(NamedZeta::Spec(ZetaSpec::product())),
    }
}

/// Run a suite by its public name. Every suite also runs its negative
/// control where one exists, so a silently toothless suite is reported.
pub fn run_named_suite(cfg: &SuiteConfig) -> Result<SuiteOutcome, Error> {
    match cfg.scalar {
        ScalarMode::Rational => run_named_suite_typed::<Rational>(cfg),
        ScalarMode::Quad => run_named_suite_typed::<QuadScalar>(cfg),
    }
}

fn run_named_suite_typed<S: Scalar>(cfg: &SuiteConfig) -> Result<SuiteOutcome, Error> {
    let n = cfg.dim;
    if n < 2 {
        return Err(Error::AmbientTooSmall(n));
    }
    let outcome = match cfg.suite.as_str() {
        "valuation" => {
            let report = match zeta_under_test::<S>(cfg)? {
                NamedZeta::SquaredS => {
                    let z = FnValuation::<S>::new("pi_zeta[zeta=s^2]", Domain::All, |p, x| {
                        normal_sum(p, x, |_, v| Ok(v.clone() * v.clone()))
                    });
                    valuation_suite(&z, n, cfg.trials, 5, cfg.seed)
                }
                NamedZeta::Spec(zeta) if cfg.zeta.is_some() => {
                    let z = PiZetaValuation::new(zeta, "pi_zeta[custom]");
                    valuation_suite(&z, n, cfg.trials, 5, cfg.seed)
                }
                NamedZeta::Spec(_) => {
                    let mut report = CheckReport::new("valuation", cfg.seed);
                    for z in standard_valuations::<S>() {
                        report.absorb(valuation_suite(z.as_ref(), n, cfg.trials, 5, cfg.seed));
                    }
                    report.suite = "valuation".into();
                    report
                }
            };
            let control = control_squared_s(n, cfg.trials.min(40).max(10), cfg.seed);
            SuiteOutcome {
                report,
                control: Some(ControlOutcome::from_report("zeta=s^2", &control)),
            }
        }
        "contravariance" => {
            let mut report = CheckReport::new("contravariance", cfg.seed);
            match zeta_under_test::<S>(cfg)? {
                NamedZeta::SquaredS => {
                    return Err(Error::invalid(
                        "squared_s is a valuation-suite control; use --suite valuation",
                    ))
                }
                NamedZeta::Spec(zeta) if cfg.zeta.is_some() => {
                    let z = PiZetaValuation::new(zeta, "pi_zeta[custom]");
                    report.absorb(contravariance_suite(&z, n, cfg.trials, 5, cfg.seed));
                }
                NamedZeta::Spec(_) => {
                    for z in standard_valuations::<S>() {
                        report.absorb(contravariance_suite(z.as_ref(), n, cfg.trials, 5, cfg.seed));
                    }
                }
            }
            report.suite = "contravariance".into();
            let control = control_support_function(n, cfg.trials.min(40).max(10), cfg.seed);
            SuiteOutcome {
                report,
                control: Some(ControlOutcome::from_report("Z=h_P", &control)),
            }
        }
        "simplicity" => {
            let zeta = match zeta_under_test::<S>(cfg)? {
                NamedZeta::Spec(z) => z,
                NamedZeta::SquaredS => {
                    return Err(Error::invalid("squared_s has no simplicity run"))
                }
            };
            SuiteOutcome {
                report: simplicity_suite(&zeta, n, cfg.trials, 5, cfg.seed),
                control: None,
            }
        }
        "dissection" => {
            let data = mixed_origin_data::<S>(cfg)?;
            SuiteOutcome {
                report: dissection_suite(&data, n, cfg.trials, cfg.seed),
                control: None,
            }
        }
        "k1" => {
            let zeta = match zeta_under_test::<S>(cfg)? {
                NamedZeta::Spec(z) => z,
                NamedZeta::SquaredS => return Err(Error::invalid("squared_s has no closed form")),
            };
            SuiteOutcome {
                report: closed_form_suite(&zeta, n, cfg.trials, cfg.seed),
                control: None,
            }
        }
        "j5" => {
            let zeta = match zeta_under_test::<S>(cfg)? {
                NamedZeta::Spec(z) => z,
                NamedZeta::SquaredS => return Err(Error::invalid("squared_s has no limit form")),
            };
            SuiteOutcome {
                report: limit_suite(&zeta, n, 24, cfg.seed),
                control: None,
            }
        }
        "tensor" => {
            require_rational(cfg)?;
            SuiteOutcome {
                report: tensor_suite(n, &[1, 2, 3], cfg.trials, cfg.seed),
                control: None,
            }
        }
        "extraction" => {
            require_rational(cfg)?;
            SuiteOutcome {
                report: super::extract::extraction_suite(n, cfg.trials.min(20), cfg.seed),
                control: None,
            }
        }
        other => {
            return Err(Error::invalid(format!(
                "unknown suite `{other}` (valuation, contravariance, simplicity, dissection, k1, j5, tensor, extraction)"
            )))
        }
    };
    Ok(outcome)
}

fn require_rational(cfg: &SuiteConfig) -> Result<(), Error> {
    if cfg.scalar != ScalarMode::Rational {
        return Err(Error::invalid(format!(
            "suite `{}` runs in rational mode",
            cfg.suite
        )));
    }
    Ok(())
}

fn mixed_origin_data<S: Scalar>(cfg: &SuiteConfig) -> Result<ClassificationData<S>, Error> {
    let zeta1 = match zeta_under_test::<S>(cfg)? {
        NamedZeta::Spec(z) => z,
        NamedZeta::SquaredS => return Err(Error::invalid("squared_s has no dissection run")),
    };
    Ok(ClassificationData {
        zeta1,
        zeta2: ZetaSpec::zero(),
        c_nm1: S::from_int(2),
        c_nm1_tilde: S::zero(),
        c0: S::from_int(3),
        c0_prime: S::zero(),
        c0_tilde: S::zero(),
    })
}
