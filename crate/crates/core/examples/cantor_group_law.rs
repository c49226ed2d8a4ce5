//! Cantor composition and reduction on y^2 = 4x^6 - 4t^3x^3 + 36tx^3 - 27t^4 + 54t^2 - 27.
//! The class of (x^2, 3s(t^2 - 1)) has order three.

use g2torus::algebra::QuadField;
use g2torus::cli::parse::parse_xpoly;
use g2torus::hyperelliptic::{Genus2Curve, MumfordDivisor};

pub fn run_example() -> String {
    let k = QuadField::new(3).expect("3 is squarefree");
    let x = |s: &str| parse_xpoly(s, k).expect("valid");
    let curve = Genus2Curve::new(x("-4*x^6 + 4*t^3*x^3 - 36*t*x^3 + 27*t^4 - 54*t^2 + 27")).expect("smooth sextic");

    let mut out = String::new();
    let d0 = MumfordDivisor::on_curve(&curve, x("x^4 + 6*t*x"), x("-2/3*s*t*x^3 - 3*s*t^2 + 3*s")).expect("valid pair");
    let d1 = curve.reduce_deg4(&d0).expect("reducible");
    out += &format!("reduce(u0, v0) = ({}, {})\n", d1.u(), d1.v());

    let xi = curve.reduced_class(d1).expect("reduced");
    let two = curve.class_add(&xi, &xi).expect("group law");
    let three = curve.class_add(&two, &xi).expect("group law");
    out += &format!("2 xi = ({}, {})\n", two.rep().u(), two.rep().v());
    out += &format!("2 xi = -xi: {}\n", two == curve.class_neg(&xi));
    out += &format!("3 xi is the identity: {}\n", three.is_identity());
    out += &format!("order exactly three: {}\n", curve.class_order_is_three(&xi).expect("group law"));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
