#![allow(dead_code)]

use g2torus::algebra::{Field, QuadField, QuadScalar, RatFunc, TPoly, XPoly};
use g2torus::cli::parse::{parse_tpoly, parse_xpoly};
use g2torus::dual_torus::{DualCurve, EllipticParams};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SAMPLE_SEED: u64 = 20_240_917;

pub fn k() -> QuadField {
    QuadField::new(3).unwrap()
}

pub fn xp(s: &str) -> XPoly {
    parse_xpoly(s, k()).unwrap()
}

pub fn tp(s: &str) -> TPoly {
    parse_tpoly(s, k()).unwrap()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn dual(a: i64, b: i64) -> DualCurve {
    DualCurve::new(EllipticParams::from_ints(a, b).unwrap(), k())
}

/// Rational of height at most `h`: numerator in [-h, h], denominator in [1, h].
pub fn random_rational(rng: &mut impl Rng, h: i64) -> BigRational {
    rat(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

/// `n` random nonsingular parameter pairs with heights at most 10 and
/// `b != 0`, so that `deg f = 6` and the genus-2 model exists.
pub fn random_params(n: usize) -> Vec<EllipticParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut out = Vec::new();
    while out.len() < n {
        let a = random_rational(&mut rng, 10);
        let b = random_rational(&mut rng, 10);
        if b.is_zero() {
            continue;
        }
        if let Ok(p) = EllipticParams::new(a, b) {
            out.push(p);
        }
    }
    out
}

/// Direct expansion of the printed display, built term by term:
///
/// `-4at x^5 + 4b x^6 + a^2 x^4 - 4t^3 x^3 - 30a t^2 x^2 + 36b t x^3 + 24a^2 t x - 18ab x^2 - 27t^4 - 4a^3 + 54b t^2 - 27b^2`
pub fn printed_discriminant(p: &EllipticParams) -> XPoly {
    let field = k();
    let a = p.a().clone();
    let b = p.b().clone();
    let r = |n: i64| BigRational::from_integer(n.into());
    let terms: Vec<(BigRational, usize, usize)> = vec![
        (r(-4) * &a, 1, 5),
        (r(4) * &b, 0, 6),
        (&a * &a, 0, 4),
        (r(-4), 3, 3),
        (r(-30) * &a, 2, 2),
        (r(36) * &b, 1, 3),
        (r(24) * &a * &a, 1, 1),
        (r(-18) * &a * &b, 0, 2),
        (r(-27), 4, 0),
        (r(-4) * &a * &a * &a, 0, 0),
        (r(54) * &b, 2, 0),
        (r(-27) * &b * &b, 0, 0),
    ];
    let mut out = XPoly::zero(&field);
    for (c, tdeg, xdeg) in terms {
        out = &out + &XPoly::tx_monomial(field.rational(c), tdeg, xdeg);
    }
    out
}

pub fn scalar(field: &QuadField, a: i64, b: i64) -> QuadScalar {
    Field::add(&field.int(a), &Field::mul(&field.int(b), &field.sqrt()))
}

pub fn ratfunc(num: &str, den: &str) -> RatFunc {
    RatFunc::new(tp(num), tp(den)).unwrap()
}
