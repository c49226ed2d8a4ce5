mod common;

use common::{dual, k, random_params, tp};
use g2torus::dual_torus::{DualCurve, DEFAULT_SPLIT_BUDGET};
use g2torus::nagell_lutz::{infinity_meeting_fibers, nagell_lutz_report, order_check, reduced_torsion_divisor};
use rayon::prelude::*;

#[test]
fn verdicts_for_the_examples() {
    let v = nagell_lutz_report(&dual(1, 1), DEFAULT_SPLIT_BUDGET).unwrap();
    assert!(v.counterexample() && v.admissible_center);
    assert_eq!(v.meeting_fibers, tp("t^2 + 3"));
    let v = nagell_lutz_report(&dual(0, 1), DEFAULT_SPLIT_BUDGET).unwrap();
    assert!(!v.counterexample() && !v.admissible_center);
    assert_eq!(v.cusp_witness, Some(tp("t^2 + 3")));
}

#[test]
fn report_is_deterministic() {
    let a = nagell_lutz_report(&dual(1, 1), DEFAULT_SPLIT_BUDGET).unwrap();
    let b = nagell_lutz_report(&dual(1, 1), DEFAULT_SPLIT_BUDGET).unwrap();
    assert_eq!(a, b);
}

#[test]
fn meeting_fibers_come_from_reduction_denominators() {
    random_params(20).par_iter().for_each(|p| {
        let d = DualCurve::new(p.clone(), k());
        let seed = d.torsion_seed().unwrap();
        let (curve, d1) = reduced_torsion_divisor(&d).unwrap();
        let m = infinity_meeting_fibers(&d1);
        assert!(m.is_monic() && m.is_squarefree().unwrap());
        // poles of (u1, v1) can only come from lc((f - v0^2) / u0)
        let q = (curve.f() - &(seed.seed.v() * seed.seed.v())).exact_div(seed.seed.u()).unwrap();
        let lc = q.lc().unwrap().num().clone();
        assert!(m.divides(&lc.pow(4)).unwrap(), "{p:?}");
        // the quotient's leading coefficient for b != 0 is a multiple of t^2 + 3b
        let expected = tp(&format!("t^2 + 3*({})", p.b()));
        assert_eq!(m, expected, "{p:?}");
        assert!(order_check(&curve, &d1).unwrap().order_three);
    });
}
