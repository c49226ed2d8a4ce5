//! Polynomial input, canonical text output and lossless JSON certificates.

use g2torus::algebra::QuadField;
use g2torus::cli::cert::{Certificate, JsonCertificate, ReducedCert};
use g2torus::cli::parse::{parse_poly, parse_xpoly};
use g2torus::hyperelliptic::{Genus2Curve, MumfordDivisor};

pub fn run_example() -> String {
    let k = QuadField::new(3).expect("3 is squarefree");
    let mut out = String::new();

    match parse_poly("x^2 + y", &['x', 't']) {
        Err(e) => out += &format!("rejected: {e}\n"),
        Ok(_) => unreachable!("y is not allowed"),
    }

    let x = |s: &str| parse_xpoly(s, k).expect("valid");
    let curve = Genus2Curve::new(x("-4*x^6 + 4*t^3*x^3 - 36*t*x^3 + 27*t^4 - 54*t^2 + 27")).expect("smooth");
    let input = MumfordDivisor::on_curve(&curve, x("x^4 + 6*t*x"), x("-2/3*s*t*x^3 - 3*s*t^2 + 3*s")).expect("valid");
    let reduced = curve.reduce_deg4(&input).expect("reducible");
    out += &format!("v1 = {}\n", reduced.v());

    let doc = JsonCertificate::new(
        k,
        Certificate::ReducedDivisor(ReducedCert {
            f: curve.f().clone(),
            input,
            reduced,
            order: None,
        }),
    );
    let json = doc.to_json();
    let back = JsonCertificate::from_json(&json).expect("own output parses");
    out += &format!("json bytes: {}, round trip identical: {}\n", json.len(), back.to_json() == json);
    out += &doc.to_text();
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
