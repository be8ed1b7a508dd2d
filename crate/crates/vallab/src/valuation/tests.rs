use super::*;
use crate::geom::{Hyperplane, LinearMap, Polytope, Vector};
use crate::scalar::{QuadScalar, Rational};
use num_traits::{One, Zero};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn t_simplex(n: usize, d: usize, s: Rational) -> Polytope<Rational> {
    Polytope::standard_simplex(n, d, s).unwrap()
}

fn e(axis: usize) -> Vector<Rational> {
    Vector::unit(3, axis)
}

#[test]
fn simplex_closed_form_witness() {
    // Pi_zeta(s T^n)(t e_n) = zeta(t/s, s^n/n!), here 1/6 for the unit data.
    let zeta = ZetaSpec::product();
    let p = t_simplex(3, 3, Rational::one());
    assert_eq!(pi_zeta(&p, &zeta, &e(2)).unwrap(), q(1, 6));

    // Random-ish rational instances of the same closed form.
    for (sn, sd, tn, td) in [(2i64, 1i64, 3i64, 1i64), (1, 2, -5, 3), (7, 4, 1, 6)] {
        let s = q(sn, sd);
        let t = q(tn, td);
        let p = t_simplex(3, 3, s.clone());
        let lhs = pi_zeta(&p, &zeta, &Vector::new(vec![q(0, 1), q(0, 1), t.clone()])).unwrap();
        let expected = zeta
            .eval(&(t / s.clone()), &(s.clone() * s.clone() * s / q(6, 1)))
            .unwrap();
        assert_eq!(lhs, expected);
    }
}

#[test]
fn pi_zeta_vanishes_on_lower_dimensional_polytopes() {
    let zeta = ZetaSpec::eta_times_s(UnaryFunction::AbsPow(2));
    let tri = Polytope::<Rational>::hull(3, [Vector::zero(3), e(0), e(1)]).unwrap();
    for x in [e(0), e(2), Vector::from_ints(&[1, -2, 3])] {
        assert_eq!(pi_zeta(&tri, &zeta, &x).unwrap(), Rational::zero());
    }
    // Shifted off the origin the two-sided facets cancel through the odd
    // extension rather than through empty support.
    let lifted = tri.translate(&e(2)).unwrap();
    assert!(lifted.facets().iter().all(|f| f.misses_origin()));
    for x in [e(2), Vector::from_ints(&[2, 1, -1])] {
        assert_eq!(pi_zeta(&lifted, &zeta, &x).unwrap(), Rational::zero());
    }
}

#[test]
fn pi_zeta_on_the_cube() {
    let zeta = ZetaSpec::product();
    let cube = Polytope::<Rational>::unit_cube(3).unwrap();
    assert_eq!(pi_zeta(&cube, &zeta, &e(2)).unwrap(), q(1, 3));
}

#[test]
fn strict_mode_rejects_the_origin_argument() {
    let zeta = ZetaSpec::product();
    let p = t_simplex(3, 3, Rational::one());
    assert_eq!(
        pi_zeta(&p, &zeta, &Vector::zero(3)).unwrap_err(),
        Error::OriginArgument
    );
    assert_eq!(
        pi_zeta_with_policy(&p, &zeta, &Vector::zero(3), XPolicy::Lenient).unwrap(),
        Rational::zero()
    );
}

#[test]
fn tilde_matches_plain_when_origin_present() {
    let zeta = ZetaSpec::product();
    let p = t_simplex(3, 3, q(2, 1));
    let x = Vector::from_ints(&[1, 2, -1]);
    assert_eq!(
        pi_zeta_tilde(&p, &zeta, &x).unwrap(),
        pi_zeta(&p, &zeta, &x).unwrap()
    );
    // The triangle [e1, e2, e3] hulls with the origin to T^3.
    let tri = Polytope::<Rational>::basis_simplex(3, 3, Rational::one()).unwrap();
    assert_eq!(
        pi_zeta_tilde(&tri, &zeta, &x).unwrap(),
        pi_zeta(&t_simplex(3, 3, Rational::one()), &zeta, &x).unwrap()
    );
}

#[test]
fn tilde_is_a_valuation_under_a_cut() {
    let zeta = ZetaSpec::eta_times_s(UnaryFunction::AbsPow(1));
    let p = Polytope::<Rational>::hull(
        3,
        [
            Vector::from_ints(&[1, 1, 0]),
            Vector::from_ints(&[3, 1, 0]),
            Vector::from_ints(&[1, 3, 0]),
            Vector::from_ints(&[1, 1, 2]),
            Vector::from_ints(&[2, 2, 2]),
        ],
    )
    .unwrap();
    let h = Hyperplane::new(Vector::from_ints(&[1, -1, 1]), q(1, 2)).unwrap();
    let pieces = p.cut(&h).unwrap();
    for x in [e(0), Vector::from_ints(&[1, 1, 1]), Vector::from_ints(&[-2, 0, 3])] {
        let lhs = pi_zeta_tilde(&pieces.minus, &zeta, &x).unwrap()
            + pi_zeta_tilde(&pieces.plus, &zeta, &x).unwrap();
        let rhs =
            pi_zeta_tilde(&p, &zeta, &x).unwrap() + pi_zeta_tilde(&pieces.slice, &zeta, &x).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn euler_terms() {
    let origin = Polytope::<Rational>::point(Vector::zero(3)).unwrap();
    let segment = Polytope::segment(Vector::from_ints(&[-1, 0, 0]), e(0)).unwrap();
    let simplex = t_simplex(3, 3, Rational::one());
    assert_eq!(euler_local(&origin), 1);
    assert_eq!(euler_local(&segment), -1);
    assert_eq!(euler_local(&simplex), 0);
    assert_eq!(euler_hit(&origin), 1);
    assert_eq!(
        euler_hit(&simplex.translate(&e(0)).unwrap()),
        0
    );
    assert_eq!(euler_hit(&Polytope::<Rational>::unit_cube(3).unwrap()), 1);
    assert_eq!(euler_local(&Polytope::<Rational>::empty(3).unwrap()), 0);
}

#[test]
fn classified_origin_form_examples() {
    // Euler term only.
    let mut data = ClassificationData::<Rational>::zero();
    data.c0 = Rational::one();
    let cube = Polytope::<Rational>::unit_cube(3).unwrap();
    assert_eq!(classified_o(&cube, &data, &e(0)).unwrap(), Rational::one());

    // Pure product zeta on the standard simplex.
    let data = ClassificationData::with_zeta1(ZetaSpec::product());
    let p = t_simplex(3, 3, Rational::one());
    assert_eq!(classified_o(&p, &data, &e(2)).unwrap(), q(1, 6));

    // Pure projection term on a lower-dimensional simplex.
    let mut data = ClassificationData::<Rational>::zero();
    data.c_nm1 = Rational::one();
    let tri = t_simplex(3, 2, Rational::one());
    assert_eq!(
        classified_o(&tri, &data, &Vector::from_ints(&[0, 0, 2])).unwrap(),
        q(2, 3)
    );

    // Domain violation.
    let shifted = p.translate(&e(0)).unwrap();
    assert_eq!(
        classified_o(&shifted, &data, &e(2)).unwrap_err(),
        Error::OriginOutside
    );
}

#[test]
fn classified_full_form_examples() {
    // With zeta2 = 0 and the tilde constants zero it reduces to the origin
    // form on origin-containing polytopes.
    let mut data = ClassificationData::<Rational>::zero();
    data.zeta1 = ZetaSpec::product();
    data.c_nm1 = q(2, 1);
    data.c0 = q(-1, 3);
    data.c0_prime = q(5, 1);
    let p = t_simplex(3, 3, q(3, 2));
    let x = Vector::from_ints(&[1, -1, 2]);
    assert_eq!(
        classified(&p, &data, &x).unwrap(),
        classified_o(&p, &data, &x).unwrap()
    );

    // zeta2 sees the hull with the origin.
    let mut data = ClassificationData::<Rational>::zero();
    data.zeta2 = ZetaSpec::product();
    let shifted = t_simplex(3, 3, Rational::one()).translate(&e(0)).unwrap();
    assert_eq!(
        classified(&shifted, &data, &e(2)).unwrap(),
        pi_zeta(&shifted.hull_with_origin(), &ZetaSpec::product(), &e(2)).unwrap()
    );

    // The hit term alone vanishes on a polytope missing the origin.
    let mut data = ClassificationData::<Rational>::zero();
    data.c0_tilde = Rational::one();
    assert_eq!(classified(&shifted, &data, &e(2)).unwrap(), Rational::zero());
    // And the empty polytope evaluates to zero under every term.
    let empty = Polytope::<Rational>::empty(3).unwrap();
    assert_eq!(classified(&empty, &data, &e(2)).unwrap(), Rational::zero());
}

#[test]
fn homogeneous_forms() {
    let p = t_simplex(3, 3, Rational::one());
    // p = 0: the volume functional alone.
    let mut data = HomogeneousData::<Rational>::zero();
    data.xi3 = CauchyFunctional::id();
    assert_eq!(
        homogeneous(&p, 0, &data, &e(2)).unwrap(),
        q(1, 6)
    );

    // p = 2 with xi1 = xi2 = id: single contributing normal.
    let mut data = HomogeneousData::<Rational>::zero();
    data.xi1 = CauchyFunctional::id();
    data.xi2 = CauchyFunctional::id();
    assert_eq!(homogeneous(&p, 2, &data, &e(2)).unwrap(), q(1, 6));

    // Homogeneity of degree p in x when the projection constant is zero.
    let x = Vector::from_ints(&[2, -1, 1]);
    let lam = q(3, 1);
    let scaled = x.scale(&lam);
    let base = homogeneous(&p, 2, &data, &x).unwrap();
    assert_eq!(
        homogeneous(&p, 2, &data, &scaled).unwrap(),
        lam.clone() * lam * base
    );

    // Float pipeline agrees with the exact one for integer p.
    let exact = homogeneous(&p, 2, &data, &x).unwrap();
    let approx = homogeneous_f64(&p, 2.0, &data, &x).unwrap();
    assert!((exact.to_f64() - approx).abs() < 1e-12);
}

#[test]
fn linearity_in_zeta() {
    let z1 = ZetaSpec::product();
    let z2 = ZetaSpec::eta_times_s(UnaryFunction::AbsPow(2));
    let sum = z1.sum(&z2);
    let p = Polytope::<Rational>::hull(
        3,
        [
            Vector::zero(3),
            Vector::from_ints(&[2, 0, 1]),
            Vector::from_ints(&[0, 1, -1]),
            Vector::from_ints(&[1, 2, 1]),
        ],
    )
    .unwrap();
    let x = Vector::from_ints(&[1, 1, -2]);
    assert_eq!(
        pi_zeta(&p, &sum, &x).unwrap(),
        pi_zeta(&p, &z1, &x).unwrap() + pi_zeta(&p, &z2, &x).unwrap()
    );
}

#[test]
fn contravariance_of_pi_zeta_under_a_shear() {
    let zeta = ZetaSpec::eta_times_s(UnaryFunction::PlusPow(2));
    let phi: LinearMap<Rational> = LinearMap::shear(3, 0, 2, q(-2, 1)).unwrap();
    let p = Polytope::<Rational>::hull(
        3,
        [
            Vector::zero(3),
            Vector::from_ints(&[1, 0, 0]),
            Vector::from_ints(&[0, 2, 0]),
            Vector::from_ints(&[0, 0, 1]),
            Vector::from_ints(&[1, 1, 1]),
        ],
    )
    .unwrap();
    let image = p.apply_linear(&phi).unwrap();
    let inv = phi.inverse().unwrap();
    for x in [e(0), Vector::from_ints(&[1, -1, 2]), Vector::from_ints(&[3, 1, 1])] {
        assert_eq!(
            pi_zeta(&image, &zeta, &x).unwrap(),
            pi_zeta(&p, &zeta, &inv.apply(&x)).unwrap()
        );
    }
}

#[test]
fn off_axis_closed_form() {
    // Pi_zeta(s T^n)(x1 e1 - r e2) = zeta((x1 - r)/s, s^n/n!).
    let zeta = ZetaSpec::<Rational>::eta_times_s(UnaryFunction::Poly(vec![q(0, 1), q(1, 1), q(2, 1)]));
    for (s, x1, r) in [(q(1, 1), q(3, 2), q(1, 2)), (q(2, 1), q(1, 4), q(5, 4))] {
        let p = t_simplex(3, 3, s.clone());
        let x = Vector::new(vec![x1.clone(), -r.clone(), q(0, 1)]);
        let expected = zeta
            .eval(
                &((x1.clone() - r.clone()) / s.clone()),
                &(s.clone() * s.clone() * s.clone() / q(6, 1)),
            )
            .unwrap();
        assert_eq!(pi_zeta(&p, &zeta, &x).unwrap(), expected);
    }
}

#[test]
fn quad_mode_rational_part_zeta_keeps_identities() {
    type Q = QuadScalar;
    let zeta = ZetaSpec::<Q>::rational_part(UnaryFunction::identity());
    let r2 = Q::sqrt2_value();
    // A simplex with a sqrt(2)-flavored scale.
    let s = Q::one() + r2.clone();
    let p = Polytope::standard_simplex(3, 3, s.clone()).unwrap();
    let x = Vector::<Q>::from_ints(&[0, 0, 1]);
    let lhs = pi_zeta(&p, &zeta, &x).unwrap();
    let vol = s.clone() * s.clone() * s / Q::from_int(6);
    let expected = zeta.eval(&(Q::one() / (Q::one() + r2)), &vol).unwrap();
    assert_eq!(lhs, expected);
}
