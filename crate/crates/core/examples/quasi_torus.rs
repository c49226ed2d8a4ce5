//! The (2,3,6) quasi-torus decomposition Z^6 F_B = -4 G^3 - 27 H^2 of the
//! dual of y^2 = x^3 + x + 1, and the 3-torsion seed it induces.

use g2torus::algebra::QuadField;
use g2torus::dual_torus::{DualCurve, EllipticParams};

pub fn run_example() -> String {
    let k = QuadField::new(3).expect("3 is squarefree");
    let dual = DualCurve::new(EllipticParams::from_ints(1, 1).expect("smooth cubic"), k);
    let cert = dual.quasi_torus_certificate().expect("identity holds");

    let mut out = String::new();
    out += &format!("D_E = {}\n", cert.d_e);
    out += &format!("G = {}\nH = {}\n", cert.big_g, cert.big_h);
    out += &format!("Z^6 F_B = -4G^3 - 27H^2: {}\n", cert.identity_holds);
    for w in &cert.coprimality {
        out += &format!("{} and {} coprime: {}\n", w.pair.0, w.pair.1, w.certified);
    }

    let seed = dual.torsion_seed().expect("d = 3");
    out += &format!("u0 = {}\nv0 = {}\n", seed.seed.u(), seed.seed.v());
    let c = dual.torsion_seed_certify().expect("certificate");
    out += &format!(
        "f - 27h^2 = 4g^3: {}, = -(4/27)u0^3: {}, f = v0^2 mod u0: {}\n",
        c.norm_identity, c.cube_identity, c.mumford_identity
    );
    out
}

#[allow(dead_code)]
fn main() {
    print!("{}", run_example());
}
