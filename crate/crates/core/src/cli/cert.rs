//! Certificates emitted by the CLI, in text and in versioned JSON.
//!
//! JSON scalars are dense: every element of Q(sqrt d) is the 4-tuple
//! `[num, den, radical_num, radical_den]` of decimal strings, polynomials
//! are coefficient lists lowest degree first. Readable `text` fields sit
//! next to the tables; they are recomputed on output and ignored on input.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{QuadField, QuadScalar, RatFunc, TPoly, XPoly};
use crate::dual_torus::{
    CoprimeWitness, CuspReport, EllipticParams, FiberCount, HomogPoly, SeedCertificate, TangencyCubic,
    TorusCertificate,
};
use crate::hyperelliptic::MumfordDivisor;
use crate::nagell_lutz::{NagellLutzVerdict, OrderCheck};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0:?}")]
    Version(String),
    #[error("unknown certificate kind {0:?}")]
    Kind(String),
    #[error("invalid value in certificate: {0}")]
    Value(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualCurveCert {
    pub params: EllipticParams,
    pub cubic: TangencyCubic,
    pub d_e: XPoly,
    pub f: XPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedCert {
    pub params: EllipticParams,
    pub f: XPoly,
    pub g: XPoly,
    pub h: XPoly,
    pub seed: MumfordDivisor,
    pub certificate: SeedCertificate,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedCert {
    pub f: XPoly,
    pub input: MumfordDivisor,
    pub reduced: MumfordDivisor,
    pub order: Option<OrderCheck>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuspsCert {
    pub params: EllipticParams,
    pub report: CuspReport,
    pub modulus_counts: Option<Vec<FiberCount>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    DualCurve(DualCurveCert),
    QuasiTorus(TorusCertificate),
    TorsionSeed(SeedCert),
    ReducedDivisor(ReducedCert),
    NagellLutz(NagellLutzVerdict),
    Cusps(CuspsCert),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::DualCurve(_) => "dual_curve",
            Certificate::QuasiTorus(_) => "quasi_torus",
            Certificate::TorsionSeed(_) => "torsion_seed",
            Certificate::ReducedDivisor(_) => "reduced_divisor",
            Certificate::NagellLutz(_) => "nagell_lutz",
            Certificate::Cusps(_) => "cusps",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JsonCertificate {
    pub field: QuadField,
    pub body: Certificate,
}

// ---- wire format ----

type WScalar = [String; 4];
type WRational = [String; 2];

#[derive(Serialize, Deserialize)]
struct WRatFunc {
    num: Vec<WScalar>,
    den: Vec<WScalar>,
}

#[derive(Serialize, Deserialize)]
struct WX {
    text: String,
    coeffs: Vec<WRatFunc>,
}

#[derive(Serialize, Deserialize)]
struct WT {
    text: String,
    coeffs: Vec<WScalar>,
}

#[derive(Serialize, Deserialize)]
struct WTerm {
    t: u32,
    x: u32,
    z: u32,
    c: WScalar,
}

#[derive(Serialize, Deserialize)]
struct WHomog {
    text: String,
    degree: u32,
    terms: Vec<WTerm>,
}

#[derive(Serialize, Deserialize)]
struct WParams {
    a: WRational,
    b: WRational,
}

#[derive(Serialize, Deserialize)]
struct WMumford {
    u: WX,
    v: WX,
}

#[derive(Serialize, Deserialize)]
struct WDualCurve {
    params: WParams,
    tangency_cubic: Vec<WX>,
    d_e: WX,
    f: WX,
}

#[derive(Serialize, Deserialize)]
struct WCoprime {
    pair: [String; 2],
    p: [i64; 3],
    q: [i64; 3],
    resultant: WRational,
    certified: bool,
}

#[derive(Serialize, Deserialize)]
struct WQuasiTorus {
    params: WParams,
    d_e: WX,
    g: WX,
    h: WX,
    f: WX,
    big_f: WHomog,
    big_g: WHomog,
    big_h: WHomog,
    exponents: [u32; 3],
    identity_holds: bool,
    pairwise_coprime: bool,
    coprimality: Vec<WCoprime>,
}

#[derive(Serialize, Deserialize)]
struct WSeedCertificate {
    holds: bool,
    norm_identity: bool,
    cube_identity: bool,
    mumford_identity: bool,
    diagnostics: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct WTorsionSeed {
    params: WParams,
    f: WX,
    g: WX,
    h: WX,
    seed: WMumford,
    certificate: WSeedCertificate,
}

#[derive(Serialize, Deserialize)]
struct WOrder {
    order_three: bool,
    double_is_negation: bool,
    triple_is_identity: bool,
}

#[derive(Serialize, Deserialize)]
struct WReduced {
    f: WX,
    input: WMumford,
    reduced: WMumford,
    order: Option<WOrder>,
}

#[derive(Serialize, Deserialize)]
struct WNagellLutz {
    params: WParams,
    verdict: String,
    counterexample: bool,
    reduced: WMumford,
    order_three: bool,
    meeting_fibers: WT,
    u_pole_fibers: WT,
    v_only_pole_fibers: WT,
    admissible_center: bool,
    cusp_witness: Option<WT>,
}

#[derive(Serialize, Deserialize)]
struct WFactor {
    factor: WT,
    multiplicity: usize,
}

#[derive(Serialize, Deserialize)]
struct WFiber {
    modulus: WT,
    count: usize,
}

#[derive(Serialize, Deserialize)]
struct WCusps {
    params: WParams,
    projection: WT,
    multiplicities: Vec<WFactor>,
    fibers: Vec<WFiber>,
    infinity_cusp: bool,
    infinity_points: usize,
    total_singular_points: usize,
    admissible: bool,
    witness: Option<WT>,
    modulus_counts: Option<Vec<WFiber>>,
}

#[derive(Serialize, Deserialize)]
struct Envelope<P> {
    schema_version: String,
    kind: String,
    disc: i64,
    payload: P,
}

#[derive(Deserialize)]
struct Head {
    schema_version: String,
    kind: String,
    disc: i64,
}

// ---- domain -> wire ----

fn w_rational(r: &BigRational) -> WRational {
    [r.numer().to_string(), r.denom().to_string()]
}

fn w_scalar(q: &QuadScalar) -> WScalar {
    let [a, b] = w_rational(q.rational_part());
    let [c, d] = w_rational(q.radical_part());
    [a, b, c, d]
}

fn w_t(p: &TPoly) -> WT {
    WT {
        text: p.to_string(),
        coeffs: p.coeffs().iter().map(w_scalar).collect(),
    }
}

fn w_x(p: &XPoly) -> WX {
    WX {
        text: p.to_string(),
        coeffs: p
            .coeffs()
            .iter()
            .map(|c| WRatFunc {
                num: c.num().coeffs().iter().map(w_scalar).collect(),
                den: c.den().coeffs().iter().map(w_scalar).collect(),
            })
            .collect(),
    }
}

fn w_homog(p: &HomogPoly) -> WHomog {
    WHomog {
        text: p.to_string(),
        degree: p.degree(),
        terms: p
            .terms()
            .map(|(t, x, z, c)| {
                let [a, b] = w_rational(c);
                WTerm {
                    t,
                    x,
                    z,
                    c: [a, b, "0".into(), "1".into()],
                }
            })
            .collect(),
    }
}

fn w_params(p: &EllipticParams) -> WParams {
    WParams {
        a: w_rational(p.a()),
        b: w_rational(p.b()),
    }
}

fn w_mumford(d: &MumfordDivisor) -> WMumford {
    WMumford { u: w_x(d.u()), v: w_x(d.v()) }
}

fn w_fiber(f: &FiberCount) -> WFiber {
    WFiber {
        modulus: w_t(&f.modulus),
        count: f.count,
    }
}

// ---- wire -> domain ----

struct Reader {
    field: QuadField,
}

fn bad(msg: impl Into<String>) -> CertError {
    CertError::Value(msg.into())
}

impl Reader {
    fn rational(&self, r: &WRational) -> Result<BigRational, CertError> {
        let n = BigInt::from_str(&r[0]).map_err(|_| bad(format!("not an integer: {}", r[0])))?;
        let d = BigInt::from_str(&r[1]).map_err(|_| bad(format!("not an integer: {}", r[1])))?;
        if d == BigInt::from(0) {
            return Err(bad("zero denominator"));
        }
        Ok(BigRational::new(n, d))
    }

    fn scalar(&self, s: &WScalar) -> Result<QuadScalar, CertError> {
        let a = self.rational(&[s[0].clone(), s[1].clone()])?;
        let b = self.rational(&[s[2].clone(), s[3].clone()])?;
        Ok(QuadScalar::new(self.field, a, b))
    }

    fn tcoeffs(&self, c: &[WScalar]) -> Result<TPoly, CertError> {
        let v = c.iter().map(|s| self.scalar(s)).collect::<Result<Vec<_>, _>>()?;
        Ok(TPoly::new(self.field, v))
    }

    fn t(&self, p: &WT) -> Result<TPoly, CertError> {
        self.tcoeffs(&p.coeffs)
    }

    fn x(&self, p: &WX) -> Result<XPoly, CertError> {
        let mut coeffs = Vec::with_capacity(p.coeffs.len());
        for c in &p.coeffs {
            let num = self.tcoeffs(&c.num)?;
            let den = self.tcoeffs(&c.den)?;
            coeffs.push(RatFunc::new(num, den).map_err(|e| bad(e.to_string()))?);
        }
        Ok(XPoly::new(self.field, coeffs))
    }

    fn homog(&self, p: &WHomog) -> Result<HomogPoly, CertError> {
        let mut out = HomogPoly::zero(p.degree);
        for term in &p.terms {
            if term.t + term.x + term.z != p.degree {
                return Err(bad("term degree does not match the form"));
            }
            let c = self.scalar(&term.c)?;
            if !c.is_rational() {
                return Err(bad("homogeneous forms have rational coefficients"));
            }
            out = out.add(&HomogPoly::monomial(c.rational_part().clone(), term.t, term.x, term.z));
        }
        Ok(out)
    }

    fn params(&self, p: &WParams) -> Result<EllipticParams, CertError> {
        EllipticParams::new(self.rational(&p.a)?, self.rational(&p.b)?).map_err(|e| bad(e.to_string()))
    }

    fn mumford(&self, d: &WMumford) -> Result<MumfordDivisor, CertError> {
        MumfordDivisor::new(self.x(&d.u)?, self.x(&d.v)?).map_err(|e| bad(e.to_string()))
    }

    fn fiber(&self, f: &WFiber) -> Result<FiberCount, CertError> {
        Ok(FiberCount {
            modulus: self.t(&f.modulus)?,
            count: f.count,
        })
    }

    fn fibers(&self, fs: &[WFiber]) -> Result<Vec<FiberCount>, CertError> {
        fs.iter().map(|f| self.fiber(f)).collect()
    }
}

impl JsonCertificate {
    pub fn new(field: QuadField, body: Certificate) -> Self {
        JsonCertificate { field, body }
    }

    fn envelope<P: Serialize>(&self, payload: P) -> Envelope<P> {
        Envelope {
            schema_version: SCHEMA_VERSION.into(),
            kind: self.body.kind().into(),
            disc: self.field.disc(),
            payload,
        }
    }

    fn render(&self, pretty: bool) -> serde_json::Result<String> {
        fn emit<P: Serialize>(e: &Envelope<P>, pretty: bool) -> serde_json::Result<String> {
            if pretty {
                serde_json::to_string_pretty(e)
            } else {
                serde_json::to_string(e)
            }
        }
        match &self.body {
            Certificate::DualCurve(c) => emit(
                &self.envelope(WDualCurve {
                    params: w_params(&c.params),
                    tangency_cubic: c.cubic.coeffs.iter().map(w_x).collect(),
                    d_e: w_x(&c.d_e),
                    f: w_x(&c.f),
                }),
                pretty,
            ),
            Certificate::QuasiTorus(c) => emit(
                &self.envelope(WQuasiTorus {
                    params: w_params(&c.params),
                    d_e: w_x(&c.d_e),
                    g: w_x(&c.g),
                    h: w_x(&c.h),
                    f: w_x(&c.f),
                    big_f: w_homog(&c.big_f),
                    big_g: w_homog(&c.big_g),
                    big_h: w_homog(&c.big_h),
                    exponents: [c.exponents.0, c.exponents.1, c.exponents.2],
                    identity_holds: c.identity_holds,
                    pairwise_coprime: c.pairwise_coprime(),
                    coprimality: c
                        .coprimality
                        .iter()
                        .map(|w| WCoprime {
                            pair: [w.pair.0.clone(), w.pair.1.clone()],
                            p: w.p,
                            q: w.q,
                            resultant: w_rational(&w.resultant),
                            certified: w.certified,
                        })
                        .collect(),
                }),
                pretty,
            ),
            Certificate::TorsionSeed(c) => emit(
                &self.envelope(WTorsionSeed {
                    params: w_params(&c.params),
                    f: w_x(&c.f),
                    g: w_x(&c.g),
                    h: w_x(&c.h),
                    seed: w_mumford(&c.seed),
                    certificate: WSeedCertificate {
                        holds: c.certificate.holds(),
                        norm_identity: c.certificate.norm_identity,
                        cube_identity: c.certificate.cube_identity,
                        mumford_identity: c.certificate.mumford_identity,
                        diagnostics: c.certificate.diagnostics.clone(),
                    },
                }),
                pretty,
            ),
            Certificate::ReducedDivisor(c) => emit(
                &self.envelope(WReduced {
                    f: w_x(&c.f),
                    input: w_mumford(&c.input),
                    reduced: w_mumford(&c.reduced),
                    order: c.order.as_ref().map(|o| WOrder {
                        order_three: o.order_three,
                        double_is_negation: o.double_is_negation,
                        triple_is_identity: o.triple_is_identity,
                    }),
                }),
                pretty,
            ),
            Certificate::NagellLutz(v) => emit(
                &self.envelope(WNagellLutz {
                    params: w_params(&v.params),
                    verdict: v.summary(),
                    counterexample: v.counterexample(),
                    reduced: w_mumford(&v.reduced),
                    order_three: v.order_three,
                    meeting_fibers: w_t(&v.meeting_fibers),
                    u_pole_fibers: w_t(&v.u_pole_fibers),
                    v_only_pole_fibers: w_t(&v.v_only_pole_fibers),
                    admissible_center: v.admissible_center,
                    cusp_witness: v.cusp_witness.as_ref().map(w_t),
                }),
                pretty,
            ),
            Certificate::Cusps(c) => {
                let r = &c.report;
                emit(
                    &self.envelope(WCusps {
                        params: w_params(&c.params),
                        projection: w_t(&r.projection),
                        multiplicities: r
                            .multiplicities
                            .iter()
                            .map(|(p, m)| WFactor {
                                factor: w_t(p),
                                multiplicity: *m,
                            })
                            .collect(),
                        fibers: r.fibers.iter().map(w_fiber).collect(),
                        infinity_cusp: r.infinity_cusp,
                        infinity_points: r.infinity_points,
                        total_singular_points: r.total_singular_points(),
                        admissible: r.admissible,
                        witness: r.witness.as_ref().map(w_t),
                        modulus_counts: c.modulus_counts.as_ref().map(|v| v.iter().map(w_fiber).collect()),
                    }),
                    pretty,
                )
            }
        }
    }

    /// Single-line JSON.
    pub fn to_json(&self) -> String {
        self.render(false).expect("certificates always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        self.render(true).expect("certificates always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CertError> {
        let head: Head = serde_json::from_str(text)?;
        if head.schema_version != SCHEMA_VERSION {
            return Err(CertError::Version(head.schema_version));
        }
        let field = QuadField::new(head.disc).map_err(|e| bad(e.to_string()))?;
        let r = Reader { field };
        fn payload<P: for<'de> Deserialize<'de>>(text: &str) -> Result<P, CertError> {
            Ok(serde_json::from_str::<Envelope<P>>(text)?.payload)
        }
        let body = match head.kind.as_str() {
            "dual_curve" => {
                let p: WDualCurve = payload(text)?;
                let cubic: Vec<XPoly> = p.tangency_cubic.iter().map(|c| r.x(c)).collect::<Result<_, _>>()?;
                let coeffs: [XPoly; 4] = cubic.try_into().map_err(|_| bad("tangency cubic needs 4 coefficients"))?;
                Certificate::DualCurve(DualCurveCert {
                    params: r.params(&p.params)?,
                    cubic: TangencyCubic { coeffs },
                    d_e: r.x(&p.d_e)?,
                    f: r.x(&p.f)?,
                })
            }
            "quasi_torus" => {
                let p: WQuasiTorus = payload(text)?;
                let mut coprimality = Vec::new();
                for w in &p.coprimality {
                    coprimality.push(CoprimeWitness {
                        pair: (w.pair[0].clone(), w.pair[1].clone()),
                        p: w.p,
                        q: w.q,
                        resultant: r.rational(&w.resultant)?,
                        certified: w.certified,
                    });
                }
                Certificate::QuasiTorus(TorusCertificate {
                    params: r.params(&p.params)?,
                    d_e: r.x(&p.d_e)?,
                    g: r.x(&p.g)?,
                    h: r.x(&p.h)?,
                    f: r.x(&p.f)?,
                    big_f: r.homog(&p.big_f)?,
                    big_g: r.homog(&p.big_g)?,
                    big_h: r.homog(&p.big_h)?,
                    exponents: (p.exponents[0], p.exponents[1], p.exponents[2]),
                    identity_holds: p.identity_holds,
                    coprimality,
                })
            }
            "torsion_seed" => {
                let p: WTorsionSeed = payload(text)?;
                Certificate::TorsionSeed(SeedCert {
                    params: r.params(&p.params)?,
                    f: r.x(&p.f)?,
                    g: r.x(&p.g)?,
                    h: r.x(&p.h)?,
                    seed: r.mumford(&p.seed)?,
                    certificate: SeedCertificate {
                        norm_identity: p.certificate.norm_identity,
                        cube_identity: p.certificate.cube_identity,
                        mumford_identity: p.certificate.mumford_identity,
                        diagnostics: p.certificate.diagnostics,
                    },
                })
            }
            "reduced_divisor" => {
                let p: WReduced = payload(text)?;
                Certificate::ReducedDivisor(ReducedCert {
                    f: r.x(&p.f)?,
                    input: r.mumford(&p.input)?,
                    reduced: r.mumford(&p.reduced)?,
                    order: p.order.map(|o| OrderCheck {
                        order_three: o.order_three,
                        double_is_negation: o.double_is_negation,
                        triple_is_identity: o.triple_is_identity,
                    }),
                })
            }
            "nagell_lutz" => {
                let p: WNagellLutz = payload(text)?;
                Certificate::NagellLutz(NagellLutzVerdict {
                    params: r.params(&p.params)?,
                    reduced: r.mumford(&p.reduced)?,
                    order_three: p.order_three,
                    meeting_fibers: r.t(&p.meeting_fibers)?,
                    u_pole_fibers: r.t(&p.u_pole_fibers)?,
                    v_only_pole_fibers: r.t(&p.v_only_pole_fibers)?,
                    admissible_center: p.admissible_center,
                    cusp_witness: p.cusp_witness.as_ref().map(|w| r.t(w)).transpose()?,
                })
            }
            "cusps" => {
                let p: WCusps = payload(text)?;
                let mut multiplicities = Vec::new();
                for f in &p.multiplicities {
                    multiplicities.push((r.t(&f.factor)?, f.multiplicity));
                }
                Certificate::Cusps(CuspsCert {
                    params: r.params(&p.params)?,
                    report: CuspReport {
                        projection: r.t(&p.projection)?,
                        multiplicities,
                        fibers: r.fibers(&p.fibers)?,
                        infinity_cusp: p.infinity_cusp,
                        infinity_points: p.infinity_points,
                        admissible: p.admissible,
                        witness: p.witness.as_ref().map(|w| r.t(w)).transpose()?,
                    },
                    modulus_counts: p.modulus_counts.as_deref().map(|f| r.fibers(f)).transpose()?,
                })
            }
            other => return Err(CertError::Kind(other.into())),
        };
        Ok(JsonCertificate { field, body })
    }

    /// Line-oriented text with a `s = sqrt(d)` header.
    pub fn to_text(&self) -> String {
        let mut out = vec![format!("s = sqrt({})", self.field.disc()), format!("kind: {}", self.body.kind())];
        let mut kv = |k: &str, v: String| out.push(format!("{k}: {v}"));
        let params = |p: &EllipticParams| format!("a = {}, b = {}", p.a(), p.b());
        match &self.body {
            Certificate::DualCurve(c) => {
                kv("params", params(&c.params));
                for (i, q) in c.cubic.coeffs.iter().enumerate() {
                    kv(&format!("p[u^{i}]"), q.to_string());
                }
                kv("D_E", c.d_e.to_string());
                kv("f", c.f.to_string());
            }
            Certificate::QuasiTorus(c) => {
                kv("params", params(&c.params));
                kv("D_E", c.d_e.to_string());
                kv("g", c.g.to_string());
                kv("h", c.h.to_string());
                kv("F_B", c.big_f.to_string());
                kv("G", c.big_g.to_string());
                kv("H", c.big_h.to_string());
                kv("identity", "Z^6*F_B = -4*G^3 - 27*H^2".into());
                kv("identity_holds", c.identity_holds.to_string());
                kv("exponents", format!("(p, q, r) = ({}, {}, {})", c.exponents.0, c.exponents.1, c.exponents.2));
                for w in &c.coprimality {
                    kv(
                        &format!("coprime({}, {})", w.pair.0, w.pair.1),
                        format!("{} (line {:?} + lambda*{:?}, resultant {})", w.certified, w.q, w.p, w.resultant),
                    );
                }
            }
            Certificate::TorsionSeed(c) => {
                kv("params", params(&c.params));
                kv("f", c.f.to_string());
                kv("g", c.g.to_string());
                kv("h", c.h.to_string());
                kv("u0", c.seed.u().to_string());
                kv("v0", c.seed.v().to_string());
                kv("f - 27h^2 = 4g^3", c.certificate.norm_identity.to_string());
                kv("f - 27h^2 = -(4/27)u0^3", c.certificate.cube_identity.to_string());
                kv("f = v0^2 mod u0", c.certificate.mumford_identity.to_string());
                kv("certified", c.certificate.holds().to_string());
            }
            Certificate::ReducedDivisor(c) => {
                kv("f", c.f.to_string());
                kv("u0", c.input.u().to_string());
                kv("v0", c.input.v().to_string());
                kv("u1", c.reduced.u().to_string());
                kv("v1", c.reduced.v().to_string());
                if let Some(o) = &c.order {
                    kv("order_three", o.order_three.to_string());
                    kv("2*xi = -xi", o.double_is_negation.to_string());
                    kv("3*xi = 0", o.triple_is_identity.to_string());
                }
            }
            Certificate::NagellLutz(v) => {
                kv("params", params(&v.params));
                kv("u1", v.reduced.u().to_string());
                kv("v1", v.reduced.v().to_string());
                kv("order_three", v.order_three.to_string());
                kv("meeting_fibers", v.meeting_fibers.to_string());
                kv("u_pole_fibers", v.u_pole_fibers.to_string());
                kv("v_only_pole_fibers", v.v_only_pole_fibers.to_string());
                kv("admissible_center", v.admissible_center.to_string());
                if let Some(w) = &v.cusp_witness {
                    kv("cusp_witness", w.to_string());
                }
                kv("verdict", v.summary());
            }
            Certificate::Cusps(c) => {
                let r = &c.report;
                kv("params", params(&c.params));
                kv("projection", r.projection.to_string());
                for (p, m) in &r.multiplicities {
                    kv("resultant gcd factor", format!("({p})^{m}"));
                }
                for f in &r.fibers {
                    kv("fiber", format!("{} -> {} singular point(s) per root", f.modulus, f.count));
                }
                kv("infinity_cusp [1,0,0]", r.infinity_cusp.to_string());
                kv("singular points on Z = 0", r.infinity_points.to_string());
                kv("total singular points", r.total_singular_points().to_string());
                kv("admissible", r.admissible.to_string());
                if let Some(w) = &r.witness {
                    kv("witness", w.to_string());
                }
                if let Some(mc) = &c.modulus_counts {
                    for f in mc {
                        kv("modulus fiber", format!("{} -> {}", f.modulus, f.count));
                    }
                }
            }
        }
        let mut s = out.join("\n");
        s.push('\n');
        s
    }
}
