mod common;

use common::{dual, k, printed_discriminant, random_params, tp, xp};
use g2torus::algebra::{Degree, TPoly, XPoly};
use g2torus::dual_torus::{certify_seed_parts, DualCurve, EllipticParams, HomogPoly, DEFAULT_SPLIT_BUDGET};
use g2torus::DualError;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

fn samples() -> Vec<DualCurve> {
    let mut out: Vec<_> = random_params(20).into_iter().map(|p| DualCurve::new(p, k())).collect();
    out.push(dual(1, 1));
    out.push(dual(0, 1));
    out
}

#[test]
fn discriminant_matches_printed_display() {
    samples().par_iter().for_each(|d| {
        let de = d.discriminant().unwrap();
        assert_eq!(de, printed_discriminant(d.params()));
        assert!(de.degree() <= Degree::Finite(6));
        // the t^4 coefficient of D_E is the constant -27
        let t4 = de.coeffs()[0].num().coeff(4);
        assert_eq!(t4, k().int(-27));
    });
}

#[test]
fn discriminant_of_the_first_example() {
    let expect = xp("4*x^6 - 4*t*x^5 + x^4 - 4*t^3*x^3 + 36*t*x^3 - 30*t^2*x^2 - 18*x^2 + 24*t*x - 27*t^4 + 54*t^2 - 31");
    assert_eq!(dual(1, 1).discriminant().unwrap(), expect);
}

#[test]
fn quasi_torus_identities_hold() {
    samples().par_iter().for_each(|d| {
        let cert = d.quasi_torus_certificate().unwrap();
        assert!(cert.identity_holds);
        assert_eq!(cert.exponents, (3, 2, 6));
        assert!(cert.pairwise_coprime(), "{:?}", cert.coprimality);
        // dehomogenized identity
        let four = xp("4");
        let tw7 = xp("27");
        assert_eq!(cert.f, &(&four * &cert.g.pow(3)) + &(&tw7 * &(&cert.h * &cert.h)));
        assert_eq!(HomogPoly::homogenize(&cert.d_e, 6).unwrap(), cert.big_f);
    });
}

#[test]
fn torsion_seeds_are_certified() {
    samples().par_iter().for_each(|d| {
        let seed = d.torsion_seed().unwrap();
        assert!(seed.seed.u().is_monic());
        assert_eq!(seed.seed.u().degree(), Degree::Finite(4));
        assert!(seed.curve.is_semi_reduced(&seed.seed).unwrap());
        let cert = d.torsion_seed_certify().unwrap();
        assert!(cert.holds() && cert.cube_identity, "{:?}", cert.diagnostics);
    });
}

#[test]
fn perturbed_seed_is_rejected() {
    let d = dual(1, 1);
    let s = d.torsion_seed().unwrap();
    let h = &s.h + &xp("1");
    let cert = certify_seed_parts(s.curve.f(), &s.g, &h, s.seed.u(), s.seed.v()).unwrap();
    assert!(!cert.norm_identity && !cert.cube_identity && cert.mumford_identity);
    assert!(!cert.holds());
    let v = s.seed.v() + &xp("1");
    assert!(!certify_seed_parts(s.curve.f(), &s.g, &s.h, s.seed.u(), &v).unwrap().holds());
}

#[test]
fn input_contracts() {
    assert_eq!(EllipticParams::from_ints(-3, 2), Err(DualError::SingularCubic));
    let d5 = DualCurve::new(EllipticParams::from_ints(1, 1).unwrap(), g2torus::algebra::QuadField::new(5).unwrap());
    assert_eq!(d5.torsion_seed().unwrap_err(), DualError::WrongAmbientRadical(5));
    assert_eq!(
        dual(1, 1).fiber_cusps_count(&tp("(t - 1)^2"), DEFAULT_SPLIT_BUDGET),
        Err(DualError::NonSquarefreeModulus)
    );
}

#[test]
fn cusps_of_the_first_example() {
    let r = dual(1, 1).cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
    let octic = tp("27*t^8 + 216*t^6 + 756*t^4 - 324*t^2 - 676");
    assert_eq!(r.projection, octic.monic());
    assert!(r.projection.is_squarefree().unwrap());
    assert!(r.fibers.iter().all(|f| f.count == 1));
    assert!(r.infinity_cusp);
    assert_eq!(r.total_singular_points(), 9);
    assert!(r.admissible && r.witness.is_none());
}

#[test]
fn cusps_of_the_second_example() {
    let d = dual(0, 1);
    let r = d.cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
    assert_eq!(r.total_singular_points(), 9);
    assert!(!r.admissible);
    assert_eq!(r.witness, Some(tp("t^2 + 3")));
    let fc = d.fiber_cusps_count(&tp("t^2 + 3"), DEFAULT_SPLIT_BUDGET).unwrap();
    assert_eq!(fc.len(), 1);
    assert_eq!(fc[0].count, 3);
    // t^2 - 3 carries no singular point at all
    let fc = d.fiber_cusps_count(&tp("t^2 - 3"), DEFAULT_SPLIT_BUDGET).unwrap();
    assert!(fc.iter().all(|f| f.count == 0));
}

#[test]
fn random_samples_have_nine_singular_points() {
    random_params(20).par_iter().for_each(|p| {
        let r = DualCurve::new(p.clone(), k()).cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
        assert_eq!(r.total_singular_points(), 9, "{p:?}");
        assert!(r.infinity_cusp);
    });
}

// Numeric oracle: roots by Durand-Kerner in f64, singular points as common
// roots of F, F_x and F_t within a relative tolerance.

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap()
}

fn tpoly_f64(p: &TPoly) -> Vec<f64> {
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_rational());
            to_f64(c.rational_part())
        })
        .collect()
}

/// `c[j][i]` is the coefficient of `x^j t^i`.
fn bivariate_f64(p: &XPoly) -> Vec<Vec<f64>> {
    p.coeffs().iter().map(|c| tpoly_f64(c.num())).collect()
}

fn horner(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * z + a)
}

fn roots(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lc = c[n];
    let monic: Vec<_> = c.iter().map(|a| a / lc).collect();
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<_> = (0..n).map(|i| seed.powu(i as u32)).collect();
    for _ in 0..2000 {
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            let step = horner(&monic, z[i]) / den;
            z[i] -= step;
        }
    }
    z
}

fn eval2(c: &[Vec<f64>], t: Complex64, x: Complex64) -> (Complex64, f64) {
    let mut val = Complex64::new(0.0, 0.0);
    let mut scale = 0.0;
    for (j, row) in c.iter().enumerate() {
        for (i, a) in row.iter().enumerate() {
            let m = t.powu(i as u32) * x.powu(j as u32);
            val += m * a;
            scale += (m * a).norm();
        }
    }
    (val, scale.max(1.0))
}

/// Distinct singular points of `D_E = 0` over each complex root of `modulus`.
fn numeric_fiber_counts(d_e: &XPoly, modulus: &TPoly) -> Vec<usize> {
    let f = bivariate_f64(d_e);
    let fx = bivariate_f64(&d_e.derivative());
    let ft = bivariate_f64(&d_e.derivative_t());
    let m: Vec<_> = tpoly_f64(modulus).into_iter().map(|a| Complex64::new(a, 0.0)).collect();
    roots(&m)
        .into_iter()
        .map(|t| {
            let in_x: Vec<Complex64> = fx
                .iter()
                .map(|row| row.iter().enumerate().map(|(i, a)| t.powu(i as u32) * a).sum())
                .collect();
            let mut found: Vec<Complex64> = Vec::new();
            for x in roots(&in_x) {
                let small = |c: &[Vec<f64>]| {
                    let (v, s) = eval2(c, t, x);
                    v.norm() / s < 1e-7
                };
                if small(&f) && small(&ft) && found.iter().all(|y| (y - x).norm() > 1e-3) {
                    found.push(x);
                }
            }
            found.len()
        })
        .collect()
}

#[test]
fn numeric_oracle_agrees_on_fiber_counts() {
    let d = dual(1, 1);
    let de = d.discriminant().unwrap();
    let r = d.cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
    let counts = numeric_fiber_counts(&de, &r.projection);
    assert_eq!(counts, vec![1; 8]);

    let d = dual(0, 1);
    let de = d.discriminant().unwrap();
    assert_eq!(numeric_fiber_counts(&de, &tp("t^2 + 3")), vec![3, 3]);
    assert_eq!(numeric_fiber_counts(&de, &tp("t^2 - 1")), vec![1, 1]);
    assert_eq!(numeric_fiber_counts(&de, &tp("t^2 - 3")), vec![0, 0]);
}
