//! The field tower Q(sqrt 3)(t) and the polynomial primitives on top of it.

use g2torus::algebra::{Field, QuadField, RatFunc, XPoly};
use g2torus::cli::parse::{parse_tpoly, parse_xpoly};

pub fn run_example() -> String {
    let k = QuadField::new(3).expect("3 is squarefree");
    let mut out = String::new();

    // (1 + s)(1 - s) = -2
    let a = Field::add(&k.int(1), &k.sqrt());
    out += &format!("{a} * {} = {}\n", a.conjugate(), Field::mul(&a, &a.conjugate()));
    out += &format!("1/{a} = {}\n", a.inv().expect("nonzero"));

    // Eager cancellation: 4t/(2t^2 + 6) = 2t/(t^2 + 3)
    let t = |s: &str| parse_tpoly(s, k).expect("valid");
    let r = RatFunc::new(t("4*t"), t("2*t^2 + 6")).expect("nonzero denominator");
    out += &format!("4t/(2t^2 + 6) = {r}\n");

    // Division with remainder in x over Q(sqrt 3)(t)
    let x = |s: &str| parse_xpoly(s, k).expect("valid");
    let h = x("3*s*(-2/27*x^6 - 2/3*t*x^3 + 1/3*x^2 - t^2 + 1)");
    let u0 = x("x^4 + 6*t*x - 3");
    let (q, rem) = h.div_rem(&u0).expect("u0 != 0");
    out += &format!("sqrt(27) h mod u0 = {rem}\n");
    assert_eq!(&(&q * &u0) + &rem, h);

    // Discriminant of a depressed cubic through the resultant with its derivative
    let cubic: XPoly = x("x^3 + t*x + 1");
    out += &format!("disc(x^3 + t x + 1) = {}\n", cubic.discriminant_x().expect("nonzero"));

    let p = t("3*(t^2 + 3)^2*(t - 1)");
    out += &format!("squarefree part of {p} = {}\n", p.squarefree_part().expect("nonzero"));
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
