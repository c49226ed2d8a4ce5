#[path = "../examples/cantor_group_law.rs"]
mod cantor_group_law;
#[path = "../examples/cusps.rs"]
mod cusps;
#[path = "../examples/exact_algebra.rs"]
mod exact_algebra;
#[path = "../examples/nagell_lutz.rs"]
mod nagell_lutz;
#[path = "../examples/parse_and_serialize.rs"]
mod parse_and_serialize;
#[path = "../examples/quasi_torus.rs"]
mod quasi_torus;

#[test]
fn exact_algebra_example() {
    let out = exact_algebra::run_example();
    assert!(out.contains("(1 + s) * (1 - s) = -2"));
    assert!(out.contains("4t/(2t^2 + 6) = 2*t/(t^2 + 3)"));
}

#[test]
fn cantor_example() {
    let out = cantor_group_law::run_example();
    assert!(out.contains("order exactly three: true"));
}

#[test]
fn quasi_torus_example() {
    let out = quasi_torus::run_example();
    assert!(out.contains("Z^6 F_B = -4G^3 - 27H^2: true"));
    assert!(!out.contains("false"));
}

#[test]
fn cusps_example() {
    let out = cusps::run_example();
    assert!(out.contains("total: 9, admissible: true"));
    assert!(out.contains("t^2 + 3 carries 3 singular point(s) per root"));
}

#[test]
fn nagell_lutz_example() {
    let out = nagell_lutz::run_example();
    assert!(out.contains("counterexample witness at canonical representative: meeting fibers t^2 + 3; center admissible"));
    assert!(out.contains("no counterexample at canonical representative; center inadmissible"));
}

#[test]
fn parse_and_serialize_example() {
    let out = parse_and_serialize::run_example();
    assert!(out.contains("round trip identical: true"));
    assert!(out.contains("column 7"));
}
