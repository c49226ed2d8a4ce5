//! Singular points of the dual sextic and whether the center [0,1,0] is
//! admissible, for (a, b) = (1, 1) and (0, 1).

use g2torus::algebra::QuadField;
use g2torus::cli::parse::parse_tpoly;
use g2torus::dual_torus::{DualCurve, EllipticParams, DEFAULT_SPLIT_BUDGET};

pub fn run_example() -> String {
    let k = QuadField::new(3).expect("3 is squarefree");
    let mut out = String::new();
    for (a, b) in [(1, 1), (0, 1)] {
        let dual = DualCurve::new(EllipticParams::from_ints(a, b).expect("smooth cubic"), k);
        let r = dual.cusp_report(DEFAULT_SPLIT_BUDGET).expect("cusp analysis");
        out += &format!("(a, b) = ({a}, {b})\n  projection: {}\n", r.projection);
        for f in &r.fibers {
            out += &format!("  {} carries {} singular point(s) per root\n", f.modulus, f.count);
        }
        out += &format!(
            "  [1,0,0] singular: {}, total: {}, admissible: {}\n",
            r.infinity_cusp,
            r.total_singular_points(),
            r.admissible
        );
    }
    let dual = DualCurve::new(EllipticParams::from_ints(0, 1).expect("smooth cubic"), k);
    let m = parse_tpoly("t^2 + 3", k).expect("valid");
    let counts = dual.fiber_cusps_count(&m, DEFAULT_SPLIT_BUDGET).expect("squarefree modulus");
    out += &format!("fibers over t^2 + 3 for (0, 1): {:?}\n", counts.iter().map(|f| f.count).collect::<Vec<_>>());
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
