//! The `g2torus` command line.
//!
//! Exit codes: 0 on success, 2 when an input violates a precondition
//! (with a JSON error object on stderr), 1 when an internal identity or
//! invariant check fails.

pub mod cert;
pub mod parse;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::QuadField;
use crate::dual_torus::{DualCurve, EllipticParams, DEFAULT_SPLIT_BUDGET};
use crate::error::{AlgebraError, CurveError, DualError};
use crate::hyperelliptic::{Genus2Curve, MumfordDivisor};
use crate::nagell_lutz::{nagell_lutz_report, order_check, reduced_torsion_divisor};
use cert::{Certificate, CuspsCert, DualCurveCert, JsonCertificate, ReducedCert, SeedCert};
use parse::{parse_tpoly, parse_xpoly, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "g2torus", version, about = "Dual cubics, quasi-torus sextics and 3-torsion on genus-2 curves")]
struct Cli {
    /// Squarefree d > 1; `s` denotes sqrt(d). Only `reduce --curve` accepts d != 3.
    #[arg(long, global = true, default_value_t = 3, allow_hyphen_values = true)]
    disc: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the certificate here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Run once per line `A B` of this file, in parallel, output in line order.
    #[arg(long, global = true)]
    batch: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Args)]
struct Ab {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
}

#[derive(Debug, Clone, Subcommand)]
enum Cmd {
    /// Tangency cubic, D_E and the curve model f = -D_E.
    DualCurve(Ab),
    /// The (2,3,6) quasi-torus certificate.
    QuasiTorus(Ab),
    /// The 3-torsion seed (u0, v0) and its principality certificate.
    TorsionSeed(Ab),
    /// Reduce a Mumford pair, either given explicitly or the seed of (a, b).
    Reduce {
        #[command(flatten)]
        ab: Ab,
        #[arg(long, allow_hyphen_values = true)]
        curve: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u0: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v0: Option<String>,
    },
    /// Order-three check of the reduced seed via the group law.
    TorsionCheck(Ab),
    /// Singular points of the sextic and admissibility of [0,1,0].
    Cusps {
        #[command(flatten)]
        ab: Ab,
        /// Also count singular points above the roots of this polynomial in t.
        #[arg(long, allow_hyphen_values = true)]
        modulus: Option<String>,
        #[arg(long, default_value_t = DEFAULT_SPLIT_BUDGET)]
        split_budget: usize,
    },
    /// The end-to-end verdict.
    NagellLutz {
        #[command(flatten)]
        ab: Ab,
        #[arg(long, default_value_t = DEFAULT_SPLIT_BUDGET)]
        split_budget: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Parse(String, ParseError),
    Dual(DualError),
    Io(String),
}

impl From<DualError> for CliError {
    fn from(e: DualError) -> Self {
        CliError::Dual(e)
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        CliError::Dual(e.into())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Dual(e.into())
    }
}

fn curve_error_name(e: &CurveError) -> &'static str {
    match e {
        CurveError::NotSextic(_) => "NotSextic",
        CurveError::SingularModel => "SingularModel",
        CurveError::NonMonicU => "NonMonicU",
        CurveError::InvalidMumford => "InvalidMumford",
        CurveError::InfinityLeadingTerm => "InfinityLeadingTerm",
        CurveError::NonExactDivision => "NonExactDivision",
        CurveError::UnexpectedDegree { .. } => "UnexpectedDegree",
        CurveError::UnsupportedOddDegree(_) => "UnsupportedOddDegree",
        CurveError::InvariantViolation(_) => "InvariantViolation",
        CurveError::Algebra(a) => algebra_error_name(a),
    }
}

fn algebra_error_name(e: &AlgebraError) -> &'static str {
    match e {
        AlgebraError::ZeroDenominator => "ZeroDenominator",
        AlgebraError::ZeroDivisor => "ZeroDivisor",
        AlgebraError::BothZero => "BothZero",
        AlgebraError::ZeroInput => "ZeroInput",
        AlgebraError::NonExactDivision => "NonExactDivision",
        AlgebraError::BadDiscriminant(_) => "BadDiscriminant",
    }
}

impl CliError {
    fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Io(_) => "Io",
            CliError::Parse(_, ParseError::Syntax { .. }) | CliError::Parse(_, ParseError::NotUnivariate) => "SyntaxError",
            CliError::Parse(_, ParseError::UnknownVariable { .. }) => "UnknownVariable",
            CliError::Parse(_, ParseError::NegativeExponent { .. }) => "NegativeExponent",
            CliError::Dual(e) => match e {
                DualError::SingularCubic => "SingularCubic",
                DualError::IdentityFailure(_) => "IdentityFailure",
                DualError::WrongAmbientRadical(_) => "WrongAmbientRadical",
                DualError::NonSquarefreeModulus => "NonSquarefreeModulus",
                DualError::AdmissibilityUndecided(_) => "AdmissibilityUndecided",
                DualError::NonRationalCoefficient => "NonRationalCoefficient",
                DualError::Curve(c) => curve_error_name(c),
                DualError::Algebra(a) => algebra_error_name(a),
            },
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m.clone(),
            CliError::Parse(flag, e) => format!("{flag}: {e}"),
            CliError::Dual(e) => e.to_string(),
        }
    }

    fn exit_code(&self) -> i32 {
        match self {
            CliError::Dual(e) if e.is_internal() => 1,
            CliError::Io(_) => 1,
            _ => 2,
        }
    }

    fn to_json(&self, line: Option<usize>) -> String {
        let mut v = json!({ "error": self.name(), "message": self.message() });
        if let CliError::Parse(_, ParseError::Syntax { column, .. } | ParseError::UnknownVariable { column, .. } | ParseError::NegativeExponent { column }) = self {
            v["column"] = json!(column);
        }
        if let Some(n) = line {
            v["line"] = json!(n);
        }
        v.to_string()
    }
}

fn rational(flag: &str, text: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(text.trim()).map_err(|_| CliError::Usage(format!("--{flag}: expected a rational like 3 or -2/7, got {text:?}")))
}

fn params(a: &str, b: &str) -> Result<EllipticParams, CliError> {
    Ok(EllipticParams::new(rational("a", a)?, rational("b", b)?)?)
}

fn dual_pipeline(field: QuadField, p: EllipticParams) -> Result<DualCurve, CliError> {
    if field.disc() != 3 {
        return Err(DualError::WrongAmbientRadical(field.disc()).into());
    }
    Ok(DualCurve::new(p, field))
}

impl Cmd {
    fn ab(&self) -> &Ab {
        match self {
            Cmd::DualCurve(ab) | Cmd::QuasiTorus(ab) | Cmd::TorsionSeed(ab) | Cmd::TorsionCheck(ab) => ab,
            Cmd::Reduce { ab, .. } | Cmd::Cusps { ab, .. } | Cmd::NagellLutz { ab, .. } => ab,
        }
    }

    /// Runs the subcommand for one `(a, b)` pair (ignored by `reduce --curve`).
    fn execute(&self, field: QuadField, ab: Option<(&str, &str)>) -> Result<Certificate, CliError> {
        if let Cmd::Reduce {
            curve: Some(curve),
            u0,
            v0,
            ..
        } = self
        {
            let (Some(u0), Some(v0)) = (u0, v0) else {
                return Err(CliError::Usage("reduce --curve needs --u0 and --v0".into()));
            };
            return reduce_explicit(field, curve, u0, v0);
        }
        let (a, b) = ab.ok_or_else(|| CliError::Usage("--a and --b are required".into()))?;
        let dual = dual_pipeline(field, params(a, b)?)?;
        let p = dual.params().clone();
        Ok(match self {
            Cmd::DualCurve(_) => {
                let d_e = dual.discriminant()?;
                Certificate::DualCurve(DualCurveCert {
                    params: p,
                    cubic: dual.tangency_cubic(),
                    f: -d_e.clone(),
                    d_e,
                })
            }
            Cmd::QuasiTorus(_) => Certificate::QuasiTorus(dual.quasi_torus_certificate()?),
            Cmd::TorsionSeed(_) => {
                let s = dual.torsion_seed()?;
                let certificate = dual.torsion_seed_certify()?;
                Certificate::TorsionSeed(SeedCert {
                    params: p,
                    f: s.curve.f().clone(),
                    g: s.g,
                    h: s.h,
                    seed: s.seed,
                    certificate,
                })
            }
            Cmd::Reduce { .. } | Cmd::TorsionCheck(_) => {
                let s = dual.torsion_seed()?;
                let (curve, reduced) = reduced_torsion_divisor(&dual)?;
                let order = match self {
                    Cmd::TorsionCheck(_) => Some(order_check(&curve, &reduced)?),
                    _ => None,
                };
                Certificate::ReducedDivisor(ReducedCert {
                    f: curve.f().clone(),
                    input: s.seed,
                    reduced,
                    order,
                })
            }
            Cmd::Cusps {
                modulus, split_budget, ..
            } => {
                let report = dual.cusp_report(*split_budget)?;
                let modulus_counts = match modulus {
                    Some(m) => {
                        let m = parse_tpoly(m, field).map_err(|e| CliError::Parse("--modulus".into(), e))?;
                        Some(dual.fiber_cusps_count(&m, *split_budget)?)
                    }
                    None => None,
                };
                Certificate::Cusps(CuspsCert {
                    params: p,
                    report,
                    modulus_counts,
                })
            }
            Cmd::NagellLutz { split_budget, .. } => Certificate::NagellLutz(nagell_lutz_report(&dual, *split_budget)?),
        })
    }
}

fn reduce_explicit(field: QuadField, curve: &str, u0: &str, v0: &str) -> Result<Certificate, CliError> {
    let px = |flag: &str, s: &str| parse_xpoly(s, field).map_err(|e| CliError::Parse(flag.into(), e));
    let f = px("--curve", curve)?;
    let (u, v) = (px("--u0", u0)?, px("--v0", v0)?);
    let curve = Genus2Curve::new(f)?;
    if !u.is_monic() {
        return Err(CurveError::NonMonicU.into());
    }
    if !curve.validate_mumford(&u, &v)? {
        return Err(CurveError::InvalidMumford.into());
    }
    let input = MumfordDivisor::new(u, v)?;
    if !curve.is_semi_reduced(&input)? {
        return Err(CurveError::InvalidMumford.into());
    }
    let reduced = curve.reduce(&input)?.into_rep();
    Ok(Certificate::ReducedDivisor(ReducedCert {
        f: curve.f().clone(),
        input,
        reduced,
        order: None,
    }))
}

fn render(doc: &JsonCertificate, format: Format, compact: bool) -> String {
    match (format, compact) {
        (Format::Json, true) => doc.to_json() + "\n",
        (Format::Json, false) => doc.to_json_pretty() + "\n",
        (Format::Text, _) => doc.to_text(),
    }
}

fn batch_lines(path: &PathBuf) -> Result<Vec<(usize, String, String)>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(CliError::Usage(format!("batch line {}: expected `A B`", i + 1)));
        };
        out.push((i + 1, a.to_string(), b.to_string()));
    }
    Ok(out)
}

/// Parses `argv` (program name first), runs, and returns the exit code.
pub fn run_with<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let err = CliError::Usage(e.to_string().trim().to_string());
            let _ = writeln!(stderr, "{}", err.to_json(None));
            return 2;
        }
    };
    let field = match QuadField::new(cli.disc) {
        Ok(f) => f,
        Err(e) => {
            let _ = writeln!(stderr, "{}", CliError::from(e).to_json(None));
            return 2;
        }
    };

    let mut body = String::new();
    let mut code = 0;
    if let Some(path) = &cli.batch {
        let lines = match batch_lines(path) {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(stderr, "{}", e.to_json(None));
                return e.exit_code();
            }
        };
        let results: Vec<_> = lines
            .par_iter()
            .map(|(n, a, b)| (*n, cli.cmd.execute(field, Some((a, b)))))
            .collect();
        for (n, r) in results {
            match r {
                Ok(c) => body.push_str(&render(&JsonCertificate::new(field, c), cli.format, true)),
                Err(e) => {
                    let _ = writeln!(stderr, "{}", e.to_json(Some(n)));
                    code = match (code, e.exit_code()) {
                        (1, _) | (_, 1) => 1,
                        (_, c) => c,
                    };
                }
            }
        }
    } else {
        let ab = cli.cmd.ab();
        let pair = match (&ab.a, &ab.b) {
            (Some(a), Some(b)) => Some((a.as_str(), b.as_str())),
            _ => None,
        };
        match cli.cmd.execute(field, pair) {
            Ok(c) => body = render(&JsonCertificate::new(field, c), cli.format, false),
            Err(e) => {
                let _ = writeln!(stderr, "{}", e.to_json(None));
                return e.exit_code();
            }
        }
    }

    let written = match &cli.out {
        Some(path) => fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(m) = written {
        let _ = writeln!(stderr, "{}", CliError::Io(m).to_json(None));
        return 1;
    }
    code
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}
