//! The dual curve of `E: v^2 = u^3 + a u + b` as a plane sextic.
//!
//! A line `y = t x'` style parametrization of tangents gives the cubic
//! `p(u) = u^3 - x^2 u^2 - (2tx - a) u - t^2 + b`, whose discriminant in `u`
//! is `D_E(t, x)`. It decomposes as `D_E = -4 g^3 - 27 h^2`, which after
//! homogenization is the (2,3,6) quasi-torus identity
//! `Z^6 F_B = -4 G^3 - 27 H^2`. The genus-2 curve `y^2 = f = -D_E` carries
//! the 3-torsion class seeded by `(u0, v0) = (-3g, 3 s h mod u0)` where
//! `s = sqrt(3)`.

mod cusps;
mod homog;

pub use cusps::{CuspReport, FiberCount, DEFAULT_SPLIT_BUDGET};
pub use homog::HomogPoly;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::sylvester::sylvester_resultant;
use crate::algebra::{Degree, Field, QuadField, QuadScalar, RatFunc, TPoly, XPoly};
use crate::error::DualError;
use crate::hyperelliptic::{Genus2Curve, MumfordDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EllipticParams {
    a: BigRational,
    b: BigRational,
}

impl EllipticParams {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self, DualError> {
        let four = BigRational::from_integer(4.into());
        let tw7 = BigRational::from_integer(27.into());
        if (four * &a * &a * &a + tw7 * &b * &b).is_zero() {
            return Err(DualError::SingularCubic);
        }
        Ok(EllipticParams { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self, DualError> {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }
}

/// Coefficients of the tangency cubic in `u`, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct TangencyCubic {
    pub coeffs: [XPoly; 4],
}

impl TangencyCubic {
    /// `disc_u p = -Res_u(p, p')` for the monic cubic.
    pub fn discriminant(&self) -> Result<XPoly, DualError> {
        let field = *self.coeffs[0].ctx();
        let c = &self.coeffs;
        let three = XPoly::constant(RatFunc::from_int(&field, 3));
        let two = XPoly::constant(RatFunc::from_int(&field, 2));
        let deriv = [c[1].clone(), &two * &c[2], &three * &c[3]];
        let res = sylvester_resultant(c, &deriv, &field)?;
        Ok(-res)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorusCertificate {
    pub params: EllipticParams,
    pub d_e: XPoly,
    pub g: XPoly,
    pub h: XPoly,
    pub f: XPoly,
    /// Homogenization of `D_E` (degree 6).
    pub big_f: HomogPoly,
    pub big_g: HomogPoly,
    pub big_h: HomogPoly,
    /// `(p, q, r)` in `F3^r F = c1 F1^p + c2 F2^q`, with `F3 = Z`.
    pub exponents: (u32, u32, u32),
    pub identity_holds: bool,
    /// Certificates for the pairs `(G, H)`, `(G, Z)`, `(H, Z)`.
    pub coprimality: Vec<CoprimeWitness>,
}

impl TorusCertificate {
    pub fn pairwise_coprime(&self) -> bool {
        self.coprimality.len() == 3 && self.coprimality.iter().all(|w| w.certified)
    }
}

/// Two forms restricted to the line through `p` and `q`. A nonzero
/// resultant of the restrictions (both of full degree) rules out a
/// common component, since every curve meets every line.
#[derive(Debug, Clone, PartialEq)]
pub struct CoprimeWitness {
    pub pair: (String, String),
    pub p: [i64; 3],
    pub q: [i64; 3],
    pub resultant: BigRational,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TorsionSeed {
    pub curve: Genus2Curve,
    pub seed: MumfordDivisor,
    pub g: XPoly,
    pub h: XPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedCertificate {
    /// `f - 27 h^2 = 4 g^3`.
    pub norm_identity: bool,
    /// `f - 27 h^2 = -(4/27) u0^3`.
    pub cube_identity: bool,
    /// `f = v0^2 mod u0`.
    pub mumford_identity: bool,
    pub diagnostics: Vec<String>,
}

impl SeedCertificate {
    /// The norm and Mumford identities; the cube identity is reported on its own.
    pub fn holds(&self) -> bool {
        self.norm_identity && self.mumford_identity
    }
}

/// Checks the three identities for arbitrary parts, so broken inputs can be fed in.
pub fn certify_seed_parts(f: &XPoly, g: &XPoly, h: &XPoly, u0: &XPoly, v0: &XPoly) -> Result<SeedCertificate, DualError> {
    let field = *f.ctx();
    let k = |n: i64| XPoly::constant(RatFunc::from_int(&field, n));
    let lhs = f - &(&k(27) * &(h * h));
    let norm_identity = lhs == &k(4) * &g.pow(3);
    let minus_four_27 = XPoly::constant(RatFunc::constant(field.frac(-4, 27)));
    let cube_identity = lhs == &minus_four_27 * &u0.pow(3);
    let mumford_identity = (f - &(v0 * v0)).rem(u0)?.is_zero();
    let mut diagnostics = Vec::new();
    if !norm_identity {
        diagnostics.push("f - 27h^2 != 4g^3".to_string());
    }
    if !cube_identity {
        diagnostics.push("f - 27h^2 != -(4/27)u0^3".to_string());
    }
    if !mumford_identity {
        diagnostics.push("f != v0^2 mod u0".to_string());
    }
    Ok(SeedCertificate {
        norm_identity,
        cube_identity,
        mumford_identity,
        diagnostics,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualCurve {
    params: EllipticParams,
    field: QuadField,
}

impl DualCurve {
    pub fn new(params: EllipticParams, field: QuadField) -> Self {
        DualCurve { params, field }
    }

    pub fn params(&self) -> &EllipticParams {
        &self.params
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    fn rat(&self, r: &BigRational) -> XPoly {
        XPoly::constant(RatFunc::constant(self.field.rational(r.clone())))
    }

    fn mono(&self, c: QuadScalar, tdeg: usize, xdeg: usize) -> XPoly {
        XPoly::tx_monomial(c, tdeg, xdeg)
    }

    pub fn tangency_cubic(&self) -> TangencyCubic {
        let k = &self.field;
        let c0 = &self.mono(k.int(-1), 2, 0) + &self.rat(&self.params.b);
        let c1 = &self.mono(k.int(-2), 1, 1) + &self.rat(&self.params.a);
        let c2 = self.mono(k.int(-1), 0, 2);
        let c3 = XPoly::one(k);
        TangencyCubic {
            coeffs: [c0, c1, c2, c3],
        }
    }

    pub fn discriminant(&self) -> Result<XPoly, DualError> {
        self.tangency_cubic().discriminant()
    }

    /// `g = -x^4/3 - 2tx + a` and `h = -(2/27)x^6 - (1/3)(2tx - a)x^2 - t^2 + b`,
    /// checked against `D_E = -4g^3 - 27h^2`.
    pub fn gh(&self) -> Result<(XPoly, XPoly), DualError> {
        let (g, h) = self.gh_unchecked();
        let d_e = self.discriminant()?;
        let k = |n: i64| XPoly::constant(RatFunc::from_int(&self.field, n));
        let rhs = &(&k(-4) * &g.pow(3)) - &(&k(27) * &(&h * &h));
        if rhs != d_e {
            return Err(DualError::IdentityFailure("D_E != -4g^3 - 27h^2".into()));
        }
        Ok((g, h))
    }

    fn gh_unchecked(&self) -> (XPoly, XPoly) {
        let k = &self.field;
        let a = self.rat(&self.params.a);
        let b = self.rat(&self.params.b);
        let g = &(&self.mono(k.frac(-1, 3), 0, 4) + &self.mono(k.int(-2), 1, 1)) + &a;
        let two_tx_minus_a = &self.mono(k.int(2), 1, 1) - &a;
        let third_x2 = self.mono(k.frac(-1, 3), 0, 2);
        let h = &(&(&self.mono(k.frac(-2, 27), 0, 6) + &(&third_x2 * &two_tx_minus_a)) + &self.mono(k.int(-1), 2, 0)) + &b;
        (g, h)
    }

    /// The genus-2 model `f = -D_E = 4g^3 + 27h^2`.
    pub fn curve_model(&self) -> Result<XPoly, DualError> {
        Ok(-self.discriminant()?)
    }

    pub fn homogeneous_gh(&self) -> (HomogPoly, HomogPoly) {
        let (t, x, z) = (HomogPoly::var_t(), HomogPoly::var_x(), HomogPoly::var_z());
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let a = &self.params.a;
        let b = &self.params.b;
        let x4 = x.pow(4);
        let txz2 = t.mul(&x).mul(&z.pow(2));
        let z4 = z.pow(4);
        let big_g = x4.scale(&r(-1, 3)).add(&txz2.scale(&r(-2, 1))).add(&z4.scale(a));
        let inner = txz2.scale(&r(2, 1)).sub(&z4.scale(a));
        let big_h = x
            .pow(6)
            .scale(&r(-2, 27))
            .sub(&inner.mul(&x.pow(2)).scale(&r(1, 3)))
            .sub(&t.pow(2).mul(&z4))
            .add(&z.pow(6).scale(b));
        (big_g, big_h)
    }

    pub fn quasi_torus_certificate(&self) -> Result<TorusCertificate, DualError> {
        let d_e = self.discriminant()?;
        let (g, h) = self.gh()?;
        let big_f = HomogPoly::homogenize(&d_e, 6)?;
        let (big_g, big_h) = self.homogeneous_gh();
        let r = |n: i64| BigRational::from_integer(n.into());
        let lhs = HomogPoly::var_z().pow(6).mul(&big_f);
        let rhs = big_g.pow(3).scale(&r(-4)).sub(&big_h.pow(2).scale(&r(27)));
        let identity_holds = lhs == rhs;
        if !identity_holds {
            return Err(DualError::IdentityFailure("Z^6 F_B != -4G^3 - 27H^2".into()));
        }
        if big_g.dehomogenize(self.field) != g || big_h.dehomogenize(self.field) != h {
            return Err(DualError::IdentityFailure("G, H do not dehomogenize to g, h".into()));
        }
        let z = HomogPoly::var_z();
        let coprimality = vec![
            coprime_witness(("G", &big_g), ("H", &big_h), self.field),
            coprime_witness(("G", &big_g), ("Z", &z), self.field),
            coprime_witness(("H", &big_h), ("Z", &z), self.field),
        ];
        Ok(TorusCertificate {
            params: self.params.clone(),
            f: -d_e.clone(),
            d_e,
            g,
            h,
            big_f,
            big_g,
            big_h,
            exponents: (3, 2, 6),
            identity_holds,
            coprimality,
        })
    }

    fn require_sqrt3(&self) -> Result<(), DualError> {
        if self.field.disc() != 3 {
            return Err(DualError::WrongAmbientRadical(self.field.disc()));
        }
        Ok(())
    }

    /// `u0 = -3g`, `v0 = 3 s h mod u0` on `y^2 = 4g^3 + 27h^2`.
    pub fn torsion_seed(&self) -> Result<TorsionSeed, DualError> {
        self.require_sqrt3()?;
        let (g, h) = self.gh()?;
        let f = self.curve_model()?;
        let curve = Genus2Curve::new(f)?;
        let u0 = g.scale(&RatFunc::from_int(&self.field, -3));
        let sqrt27 = Field::mul(&self.field.int(3), &self.field.sqrt());
        let v0 = h.scale(&RatFunc::constant(sqrt27)).rem(&u0)?;
        let seed = MumfordDivisor::on_curve(&curve, u0, v0)?;
        if !curve.is_semi_reduced(&seed)? {
            return Err(DualError::IdentityFailure("torsion seed is not semi-reduced".into()));
        }
        Ok(TorsionSeed { curve, seed, g, h })
    }

    pub fn torsion_seed_certify(&self) -> Result<SeedCertificate, DualError> {
        let s = self.torsion_seed()?;
        certify_seed_parts(s.curve.f(), &s.g, &s.h, s.seed.u(), s.seed.v())
    }

    pub fn cusp_report(&self, split_budget: usize) -> Result<CuspReport, DualError> {
        cusps::cusp_report(&self.discriminant()?, split_budget)
    }

    /// Distinct singular points of the affine sextic above each factor of
    /// the dynamic-evaluation split of `modulus`.
    pub fn fiber_cusps_count(&self, modulus: &TPoly, split_budget: usize) -> Result<Vec<FiberCount>, DualError> {
        cusps::fiber_counts(&self.discriminant()?, modulus, split_budget)
    }
}

const COPRIME_TRIES: usize = 32;
const COPRIME_SEED: u64 = 0x005e_ed06;

fn restrict(form: &HomogPoly, p: &[i64; 3], q: &[i64; 3], field: QuadField) -> TPoly {
    let line = |i: usize| TPoly::new(field, vec![field.int(q[i]), field.int(p[i])]);
    form.substitute(&line(0), &line(1), &line(2))
}

/// Restricts both forms to seeded random lines `lambda*p + q` until the
/// restricted resultant is nonzero with both restrictions of full degree.
fn coprime_witness(a: (&str, &HomogPoly), b: (&str, &HomogPoly), field: QuadField) -> CoprimeWitness {
    let mut rng = ChaCha8Rng::seed_from_u64(COPRIME_SEED);
    let pair = (a.0.to_string(), b.0.to_string());
    let mut last = None;
    for _ in 0..COPRIME_TRIES {
        let mut pt = || [rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(-9..=9)];
        let (p, q) = (pt(), pt());
        let (ra, rb) = (restrict(a.1, &p, &q, field), restrict(b.1, &p, &q, field));
        let full = ra.degree() == Degree::Finite(a.1.degree() as usize) && rb.degree() == Degree::Finite(b.1.degree() as usize);
        if !full {
            continue;
        }
        let res = ra.resultant(&rb).expect("nonzero restrictions");
        let res = res.rational_part().clone();
        let certified = !res.is_zero();
        last = Some(CoprimeWitness {
            pair: pair.clone(),
            p,
            q,
            resultant: res,
            certified,
        });
        if certified {
            break;
        }
    }
    last.unwrap_or(CoprimeWitness {
        pair,
        p: [0; 3],
        q: [0; 3],
        resultant: BigRational::zero(),
        certified: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse_xpoly;

    fn k() -> QuadField {
        QuadField::new(3).unwrap()
    }

    fn dual(a: i64, b: i64) -> DualCurve {
        DualCurve::new(EllipticParams::from_ints(a, b).unwrap(), k())
    }

    fn xp(s: &str) -> XPoly {
        parse_xpoly(s, k()).unwrap()
    }

    #[test]
    fn singular_cubic_rejected() {
        assert_eq!(EllipticParams::from_ints(0, 0), Err(DualError::SingularCubic));
        assert_eq!(EllipticParams::from_ints(-3, 2), Err(DualError::SingularCubic));
    }

    #[test]
    fn tangency_cubic_coefficients() {
        let c = dual(1, 1).tangency_cubic();
        assert_eq!(c.coeffs[0], xp("-t^2 + 1"));
        assert_eq!(c.coeffs[1], xp("-(2*t*x - 1)"));
        assert_eq!(c.coeffs[2], xp("-x^2"));
        assert_eq!(c.coeffs[3], xp("1"));
        let c = dual(0, 1).tangency_cubic();
        assert_eq!(c.coeffs[1], xp("-2*t*x"));
    }

    #[test]
    fn depressed_cubic_discriminant() {
        // u^3 + p u + q with p = t, q = 1: -4t^3 - 27
        let c = TangencyCubic {
            coeffs: [xp("1"), xp("t"), xp("0"), xp("1")],
        };
        assert_eq!(c.discriminant().unwrap(), xp("-4*t^3 - 27"));
    }

    #[test]
    fn example_discriminants() {
        assert_eq!(
            dual(1, 1).discriminant().unwrap(),
            xp("4*x^6 - 4*t*x^5 + x^4 - (4*t^3 - 36*t)*x^3 - (30*t^2 + 18)*x^2 + 24*t*x - 27*t^4 + 54*t^2 - 31")
        );
        assert_eq!(
            dual(0, 1).discriminant().unwrap(),
            xp("4*x^6 - 4*t^3*x^3 + 36*t*x^3 - 27*t^4 + 54*t^2 - 27")
        );
    }

    #[test]
    fn gh_examples() {
        let (g, h) = dual(1, 1).gh().unwrap();
        assert_eq!(g, xp("-1/3*x^4 - 2*t*x + 1"));
        assert_eq!(h, xp("-2/27*x^6 - 2/3*t*x^3 + 1/3*x^2 - t^2 + 1"));
        let (g, h) = dual(0, 1).gh().unwrap();
        assert_eq!(g, xp("-1/3*x^4 - 2*t*x"));
        assert_eq!(h, xp("-2/27*x^6 - 2/3*t*x^3 - t^2 + 1"));
    }

    #[test]
    fn quasi_torus_example() {
        let c = dual(1, 1).quasi_torus_certificate().unwrap();
        assert!(c.identity_holds);
        assert!(c.pairwise_coprime());
        assert_eq!((c.big_g.degree(), c.big_h.degree()), (4, 6));
        assert_eq!(c.big_f.dehomogenize(k()), c.d_e);
        assert_eq!(c.exponents, (3, 2, 6));
    }

    #[test]
    fn seeds() {
        let s = dual(1, 1).torsion_seed().unwrap();
        assert_eq!(s.seed.u(), &xp("x^4 + 6*t*x - 3"));
        // -(2/s) t x^3 + (1/s) x^2 with 1/s = s/3
        assert_eq!(s.seed.v(), &xp("-2/3*s*t*x^3 + 1/3*s*x^2 - 3*s*t^2 + 3*s"));
        let s = dual(0, 1).torsion_seed().unwrap();
        assert_eq!(s.seed.u(), &xp("x^4 + 6*t*x"));
        assert_eq!(s.seed.v(), &xp("-2/3*s*t*x^3 - 3*s*t^2 + 3*s"));
    }

    #[test]
    fn seed_needs_sqrt3() {
        let d = DualCurve::new(EllipticParams::from_ints(1, 1).unwrap(), QuadField::new(5).unwrap());
        assert_eq!(d.torsion_seed().unwrap_err(), DualError::WrongAmbientRadical(5));
    }

    #[test]
    fn certificate_and_perturbation() {
        let d = dual(1, 1);
        let c = d.torsion_seed_certify().unwrap();
        assert!(c.holds() && c.cube_identity, "{c:?}");
        let s = d.torsion_seed().unwrap();
        let h1 = &s.h + &xp("1");
        let bad = certify_seed_parts(s.curve.f(), &s.g, &h1, s.seed.u(), s.seed.v()).unwrap();
        assert!(!bad.norm_identity && !bad.holds());
        assert!(bad.diagnostics[0].contains("4g^3"));
    }

    #[test]
    fn cusps_example_one() {
        let r = dual(1, 1).cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
        let octic = crate::cli::parse::parse_tpoly("27*t^8 + 216*t^6 + 756*t^4 - 324*t^2 - 676", k()).unwrap();
        assert_eq!(r.projection, octic.monic());
        assert_eq!(r.multiplicities, vec![(octic.monic(), 3)]);
        assert!(r.infinity_cusp);
        assert_eq!(r.infinity_points, 1);
        assert!(r.fibers.iter().all(|f| f.count == 1), "{:?}", r.fibers);
        assert!(r.admissible && r.witness.is_none());
        assert_eq!(r.total_singular_points(), 9);
    }

    #[test]
    fn cusps_example_two() {
        let d = dual(0, 1);
        let r = d.cusp_report(DEFAULT_SPLIT_BUDGET).unwrap();
        let t2p3 = crate::cli::parse::parse_tpoly("t^2 + 3", k()).unwrap();
        assert!(!r.admissible);
        assert_eq!(r.witness, Some(t2p3.clone()));
        assert_eq!(r.total_singular_points(), 9);
        let fc = d.fiber_cusps_count(&t2p3, DEFAULT_SPLIT_BUDGET).unwrap();
        assert_eq!(fc, vec![FiberCount { modulus: t2p3, count: 3 }]);
        let tm1 = crate::cli::parse::parse_tpoly("t - 1", k()).unwrap();
        assert_eq!(d.fiber_cusps_count(&tm1, DEFAULT_SPLIT_BUDGET).unwrap()[0].count, 1);
        let t2m3 = crate::cli::parse::parse_tpoly("t^2 - 3", k()).unwrap();
        let lit = d.fiber_cusps_count(&t2m3, DEFAULT_SPLIT_BUDGET).unwrap();
        assert!(lit.iter().all(|f| f.count == 0), "{lit:?}");
    }
}
