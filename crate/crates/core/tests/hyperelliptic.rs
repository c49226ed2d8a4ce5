mod common;

use common::{dual, k, random_params, random_rational, xp};
use g2torus::algebra::{Degree, Field, QuadScalar, XPoly};
use g2torus::dual_torus::DualCurve;
use g2torus::hyperelliptic::{Genus2Curve, MumfordDivisor, ReducedClass};
use g2torus::CurveError;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn valid(curve: &Genus2Curve, d: &MumfordDivisor) -> bool {
    curve.validate_mumford(d.u(), d.v()).unwrap()
}

/// `lc(q) u0 u1 = f - v0^2` where `q = (f - v0^2) / u0` and `u1 = monic(q)`.
fn reduction_identity_holds(curve: &Genus2Curve, d0: &MumfordDivisor, d1: &MumfordDivisor) -> bool {
    let rest = curve.f() - &(d0.v() * d0.v());
    let q = rest.exact_div(d0.u()).unwrap();
    let lc = q.lc().unwrap().clone();
    (d0.u() * d1.u()).scale(&lc) == rest
}

fn group_laws(curve: &Genus2Curve, xi: &ReducedClass) {
    let id = ReducedClass::identity(&k());
    let two = curve.class_add(xi, xi).unwrap();
    let elems = [id.clone(), xi.clone(), two.clone()];
    for a in &elems {
        assert_eq!(&curve.class_add(a, &id).unwrap(), a);
        assert!(curve.class_add(a, &curve.class_neg(a)).unwrap().is_identity());
        for b in &elems {
            let ab = curve.class_add(a, b).unwrap();
            assert_eq!(ab, curve.class_add(b, a).unwrap());
            for c in &elems {
                let lhs = curve.class_add(&ab, c).unwrap();
                let rhs = curve.class_add(a, &curve.class_add(b, c).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
    assert_eq!(two, curve.class_neg(xi));
    assert!(curve.class_mul(xi, 3).unwrap().is_identity());
}

fn pipeline(d: &DualCurve) -> (Genus2Curve, MumfordDivisor, MumfordDivisor) {
    let seed = d.torsion_seed().unwrap();
    let d1 = seed.curve.reduce_deg4(&seed.seed).unwrap();
    (seed.curve, seed.seed, d1)
}

#[test]
fn reduce_example_one() {
    let (curve, d0, d1) = pipeline(&dual(1, 1));
    assert_eq!(d0.u(), &xp("x^4 + 6*t*x - 3"));
    assert_eq!(d1.u().degree(), Degree::Finite(2));
    assert!(d1.u().is_monic() && d1.v().degree() < d1.u().degree());
    assert!(valid(&curve, &d1));
    assert!(reduction_identity_holds(&curve, &d0, &d1));
    assert_eq!(curve.reduce(&d0).unwrap().rep(), &d1);
}

#[test]
fn reduce_example_two() {
    let (curve, d0, d1) = pipeline(&dual(0, 1));
    assert_eq!(d1.u(), &xp("x^2"));
    assert_eq!(d1.v(), &xp("3*s*t^2 - 3*s"));
    assert!(reduction_identity_holds(&curve, &d0, &d1));
}

#[test]
fn group_laws_on_the_examples() {
    for (a, b) in [(1, 1), (0, 1)] {
        let (curve, _, d1) = pipeline(&dual(a, b));
        let xi = curve.reduced_class(d1).unwrap();
        group_laws(&curve, &xi);
    }
}

#[test]
fn random_samples_keep_mumford_validity() {
    random_params(20).par_iter().for_each(|p| {
        let d = DualCurve::new(p.clone(), k());
        let (curve, d0, d1) = pipeline(&d);
        assert!(valid(&curve, &d0) && curve.is_semi_reduced(&d0).unwrap());
        let inv = curve.involution(&d0);
        assert!(valid(&curve, &inv));
        assert!(valid(&curve, &d1));
        assert!(reduction_identity_holds(&curve, &d0, &d1));
        let xi = curve.reduced_class(d1.clone()).unwrap();
        let sum = curve.compose(&d1, &d1).unwrap();
        assert!(valid(&curve, &sum));
        assert!(valid(&curve, curve.reduce(&sum).unwrap().rep()));
        assert!(curve.class_order_is_three(&xi).unwrap());
    });
}

#[test]
fn group_laws_on_random_samples() {
    random_params(1).iter().for_each(|p| {
        let (curve, _, d1) = pipeline(&DualCurve::new(p.clone(), k()));
        group_laws(&curve, &curve.reduced_class(d1).unwrap());
    });
}

#[test]
fn specialization_is_sound() {
    let (curve, _, d1) = pipeline(&dual(1, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(common::SAMPLE_SEED);
    let mut checked = 0;
    while checked < 10 {
        let t0 = k().rational(random_rational(&mut rng, 10));
        let (Some(u), Some(v), Some(f)) = (
            d1.u().specialize_t(&t0),
            d1.v().specialize_t(&t0),
            curve.f().specialize_t(&t0),
        ) else {
            continue;
        };
        assert!(u.is_monic() && u.degree() == Degree::Finite(2));
        assert!((&(&v * &v) - &f).rem(&u).unwrap().is_zero());
        checked += 1;
    }
    // irrational points of Q(sqrt 3) specialize too
    let t0: QuadScalar = Field::mul(&k().sqrt(), &k().int(2));
    let (u, v, f) = (
        d1.u().specialize_t(&t0).unwrap(),
        d1.v().specialize_t(&t0).unwrap(),
        curve.f().specialize_t(&t0).unwrap(),
    );
    assert!((&(&v * &v) - &f).rem(&u).unwrap().is_zero());
}

#[test]
fn error_contracts() {
    assert!(matches!(Genus2Curve::new(xp("x^5 + t")), Err(CurveError::NotSextic(_))));
    assert!(matches!(Genus2Curve::new(xp("(x^3 + t)^2")), Err(CurveError::SingularModel)));
    assert_eq!(
        MumfordDivisor::new(xp("2*x^2 + 1"), xp("x")),
        Err(CurveError::NonMonicU)
    );
    let (curve, d0, _) = pipeline(&dual(1, 1));
    assert!(matches!(
        curve.reduce_deg4(&MumfordDivisor::new(xp("x^2"), XPoly::zero(&k())).unwrap()),
        Err(CurveError::UnexpectedDegree { expected: 4, .. })
    ));
    let bad = MumfordDivisor::new(d0.u().clone(), d0.v() + &xp("1")).unwrap();
    assert!(!valid(&curve, &bad));
    assert_eq!(curve.is_semi_reduced(&bad), Err(CurveError::InvalidMumford));
}
