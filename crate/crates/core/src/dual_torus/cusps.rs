//! Singular points of the sextic `F(T, X, Z) = 0` and the lines through
//! the center `z_o = [0, 1, 0]`.
//!
//! Lines through `z_o` are `T = c Z` and the line at infinity `Z = 0`. An
//! affine line `T = c` carries the singular points of the fiber of `D_E`
//! over `t = c`, which are counted without factoring: the gcd of `F`, `F_x`
//! and `F_t` is computed in `K[T]/(m)` for a squarefree `m`, splitting `m`
//! whenever a leading coefficient turns out to be a zero divisor.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::homog::HomogPoly;
use crate::algebra::{Field, QuadScalar, TPoly, XPoly};
use crate::error::DualError;

/// How many modulus splits one call may perform before giving up.
pub const DEFAULT_SPLIT_BUDGET: usize = 256;

/// Number of distinct singular points above the roots of `modulus`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiberCount {
    pub modulus: TPoly,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CuspReport {
    /// Monic squarefree part of `gcd(Res_X(F, F_X), Res_X(F, F_T))`.
    pub projection: TPoly,
    /// Squarefree decomposition of that gcd before normalization.
    pub multiplicities: Vec<(TPoly, usize)>,
    pub fibers: Vec<FiberCount>,
    /// Whether `[1, 0, 0]` is singular.
    pub infinity_cusp: bool,
    /// Singular points on `Z = 0`, `[1, 0, 0]` included.
    pub infinity_points: usize,
    pub admissible: bool,
    /// Product of the fiber moduli carrying more than one singular point.
    pub witness: Option<TPoly>,
}

impl CuspReport {
    pub fn total_singular_points(&self) -> usize {
        let affine: usize = self
            .fibers
            .iter()
            .map(|f| f.count * f.modulus.degree().finite().unwrap_or(0))
            .sum();
        affine + self.infinity_points
    }
}

fn t_coeffs(p: &XPoly) -> Vec<TPoly> {
    p.coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_polynomial(), "sextic has polynomial coefficients");
            c.num().clone()
        })
        .collect()
}

pub(super) fn cusp_report(d_e: &XPoly, budget: usize) -> Result<CuspReport, DualError> {
    let field = *d_e.ctx();
    let f_x = d_e.derivative();
    let f_t = d_e.derivative_t();
    let r1 = d_e.resultant_x(&f_x)?;
    let r2 = d_e.resultant_x(&f_t)?;
    let raw = r1.num().gcd(r2.num())?;
    let projection = raw.squarefree_part()?;
    let multiplicities = raw.squarefree_decomposition()?;
    let fibers = if projection.is_constant() {
        Vec::new()
    } else {
        fiber_counts(d_e, &projection, budget)?
    };

    let big_f = HomogPoly::homogenize(d_e, 6)?;
    let (infinity_cusp, infinity_points) = scan_line_at_infinity(&big_f, field)?;

    let mut witness = TPoly::one(&field);
    let mut multi = false;
    for fc in &fibers {
        if fc.count > 1 {
            witness = &witness * &fc.modulus;
            multi = true;
        }
    }
    let admissible = !multi && infinity_points <= 1;
    Ok(CuspReport {
        projection,
        multiplicities,
        fibers,
        infinity_cusp,
        infinity_points,
        admissible,
        witness: multi.then_some(witness),
    })
}

/// Returns whether `[1,0,0]` is singular and the number of singular points on `Z = 0`.
fn scan_line_at_infinity(big_f: &HomogPoly, field: crate::algebra::QuadField) -> Result<(bool, usize), DualError> {
    let forms = [
        big_f.clone(),
        big_f.partial_t(),
        big_f.partial_x(),
        big_f.partial_z(),
    ];
    let (one, zero) = (BigRational::one(), BigRational::zero());
    let at_t = forms.iter().all(|p| p.eval([&one, &zero, &zero]).is_zero());

    // Remaining points are [T : 1 : 0].
    let t = TPoly::var(&field);
    let c = |n: i64| TPoly::constant(field.int(n));
    let mut g = TPoly::zero(&field);
    for p in &forms {
        let r = p.substitute(&t, &c(1), &c(0));
        if !r.is_zero() {
            g = if g.is_zero() { r.monic() } else { g.gcd(&r)? };
        }
    }
    if g.is_zero() {
        return Err(DualError::IdentityFailure("line at infinity lies in the singular locus".into()));
    }
    let rest = g.squarefree_part()?.degree().finite().unwrap_or(0);
    Ok((at_t, rest + usize::from(at_t)))
}

/// Per-factor counts of distinct singular points of `D_E` above the roots of `modulus`.
pub(super) fn fiber_counts(d_e: &XPoly, modulus: &TPoly, budget: usize) -> Result<Vec<FiberCount>, DualError> {
    if modulus.is_zero() || !modulus.is_squarefree()? {
        return Err(DualError::NonSquarefreeModulus);
    }
    if modulus.is_constant() {
        return Ok(Vec::new());
    }
    let m = modulus.monic();
    let f = t_coeffs(d_e);
    let f_x = t_coeffs(&d_e.derivative());
    let f_t = t_coeffs(&d_e.derivative_t());
    let mut splits = Splitter { budget, used: 0 };

    let mut out = Vec::new();
    for (m1, g1) in splits.gcd(m, f, f_x)? {
        for (m2, g2) in splits.gcd(m1, g1, f_t.clone())? {
            if g2.is_empty() {
                return Err(DualError::IdentityFailure("sextic vanishes on a whole fiber".into()));
            }
            let dg2 = derivative(&g2);
            for (m3, g3) in splits.gcd(m2, g2.clone(), dg2)? {
                let reduced = reduce(&g2, &m3);
                let count = reduced.len() - g3.len();
                out.push(FiberCount { modulus: m3, count });
            }
        }
    }
    out.sort_by_key(|fc| (fc.modulus.degree().finite(), fc.modulus.to_string()));
    Ok(out)
}

/// Polynomials in `x` over `K[T]/(m)` are coefficient vectors, low first,
/// with no trailing zeros once reduced.
type ModPoly = Vec<TPoly>;

fn reduce(p: &[TPoly], m: &TPoly) -> ModPoly {
    let mut out: ModPoly = p.iter().map(|c| c.rem(m).expect("nonzero modulus")).collect();
    while out.last().is_some_and(TPoly::is_zero) {
        out.pop();
    }
    out
}

fn derivative(p: &[TPoly]) -> ModPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c.scale(&QuadScalar::from_int(c.ctx(), i as i64)))
        .collect()
}

enum Monic {
    Unit(ModPoly),
    Split(TPoly),
}

struct Splitter {
    budget: usize,
    used: usize,
}

impl Splitter {
    /// Monic gcd of `a` and `b` on every branch of a split of `m`.
    fn gcd(&mut self, m: TPoly, a: ModPoly, b: ModPoly) -> Result<Vec<(TPoly, ModPoly)>, DualError> {
        let mut out = Vec::new();
        let mut stack = vec![(m, a, b)];
        while let Some((m, a, b)) = stack.pop() {
            let (a, b) = (reduce(&a, &m), reduce(&b, &m));
            if b.is_empty() {
                if a.is_empty() {
                    out.push((m, a));
                    continue;
                }
                match make_monic(&a, &m)? {
                    Monic::Unit(a) => out.push((m, a)),
                    Monic::Split(g) => self.split(&mut stack, m, g, a, b)?,
                }
                continue;
            }
            match make_monic(&b, &m)? {
                Monic::Unit(bm) => {
                    let r = rem_monic(&a, &bm, &m);
                    stack.push((m, bm, r));
                }
                Monic::Split(g) => self.split(&mut stack, m, g, a, b)?,
            }
        }
        Ok(out)
    }

    fn split(
        &mut self,
        stack: &mut Vec<(TPoly, ModPoly, ModPoly)>,
        m: TPoly,
        g: TPoly,
        a: ModPoly,
        b: ModPoly,
    ) -> Result<(), DualError> {
        self.used += 1;
        if self.used > self.budget {
            return Err(DualError::AdmissibilityUndecided(self.budget));
        }
        let other = m.exact_div(&g)?.monic();
        stack.push((other, a.clone(), b.clone()));
        stack.push((g, a, b));
        Ok(())
    }
}

/// Inverts the leading coefficient mod `m`, or returns the factor of `m`
/// on which it vanishes.
fn make_monic(p: &[TPoly], m: &TPoly) -> Result<Monic, DualError> {
    let lc = p.last().expect("nonempty");
    let g = lc.gcd(m)?;
    if !g.is_constant() {
        return Ok(Monic::Split(g));
    }
    let (_, s, _) = lc.xgcd(m)?;
    Ok(Monic::Unit(p.iter().map(|c| (c * &s).rem(m).expect("nonzero")).collect()))
}

/// Remainder of `a` by the monic `b` over `K[T]/(m)`.
fn rem_monic(a: &[TPoly], b: &[TPoly], m: &TPoly) -> ModPoly {
    let mut r = reduce(a, m);
    let db = b.len() - 1;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r.last().expect("nonempty").clone();
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = (&r[shift + i] - &(&c * bc)).rem(m).expect("nonzero");
        }
        r = reduce(&r, m);
    }
    r
}
