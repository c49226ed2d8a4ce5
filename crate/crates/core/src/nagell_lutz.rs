//! Does the horizontal divisor of the reduced 3-torsion representative
//! avoid the sections at infinity?
//!
//! The seed `(u0, v0)` reduces to `(u1, v1)` with `deg u1 = 2`. Its two
//! points run off to `x = infinity` exactly over the poles (in `t`) of the
//! Mumford coefficients, so the meeting locus is the radical of their
//! denominators.

use crate::algebra::{Degree, TPoly, XPoly};
use crate::dual_torus::{DualCurve, EllipticParams};
use crate::error::{CurveError, DualError};
use crate::hyperelliptic::{Genus2Curve, MumfordDivisor};

#[derive(Debug, Clone, PartialEq)]
pub struct NagellLutzVerdict {
    pub params: EllipticParams,
    pub reduced: MumfordDivisor,
    pub order_three: bool,
    /// Monic radical of the poles of `u1` and `v1`; `1` when there are none.
    pub meeting_fibers: TPoly,
    /// Poles of the `u1` coefficients alone.
    pub u_pole_fibers: TPoly,
    /// Poles of `v1` not shared with `u1`. Reported apart, see crate docs.
    pub v_only_pole_fibers: TPoly,
    pub admissible_center: bool,
    /// Fibers carrying several cusps, when the center is inadmissible.
    pub cusp_witness: Option<TPoly>,
}

impl NagellLutzVerdict {
    /// A 3-torsion class whose canonical representative meets `O+ u O-`.
    pub fn counterexample(&self) -> bool {
        self.order_three && !self.meeting_fibers.is_one()
    }

    pub fn summary(&self) -> String {
        let center = if self.admissible_center {
            "center admissible"
        } else {
            "center inadmissible"
        };
        if self.counterexample() {
            format!(
                "counterexample witness at canonical representative: meeting fibers {}; {center}",
                self.meeting_fibers
            )
        } else {
            format!("no counterexample at canonical representative; {center}")
        }
    }
}

/// The group-law check that `xi` has order exactly three.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderCheck {
    pub order_three: bool,
    pub double_is_negation: bool,
    pub triple_is_identity: bool,
}

pub fn order_check(curve: &Genus2Curve, d: &MumfordDivisor) -> Result<OrderCheck, CurveError> {
    let xi = curve.reduced_class(d.clone())?;
    let double = curve.class_mul(&xi, 2)?;
    Ok(OrderCheck {
        order_three: curve.class_order_is_three(&xi)?,
        double_is_negation: double == curve.class_neg(&xi),
        triple_is_identity: curve.class_mul(&xi, 3)?.is_identity(),
    })
}

/// The seed reduced once: `(u1, v1)` with `deg u1 = 2`.
pub fn reduced_torsion_divisor(dual: &DualCurve) -> Result<(Genus2Curve, MumfordDivisor), DualError> {
    let seed = dual.torsion_seed()?;
    let d1 = seed.curve.reduce_deg4(&seed.seed)?;
    if d1.u().degree() != Degree::Finite(2) {
        return Err(CurveError::InvariantViolation(format!("reduced torsion divisor has deg u = {}", d1.u().degree())).into());
    }
    Ok((seed.curve, d1))
}

fn pole_radical(polys: &[&XPoly]) -> TPoly {
    let field = *polys[0].ctx();
    let mut acc = TPoly::one(&field);
    for p in polys {
        let d = p.denominator_lcm();
        let g = acc.gcd(&d).expect("nonzero");
        acc = &acc * &d.exact_div(&g).expect("divides");
    }
    acc.squarefree_part().expect("nonzero")
}

/// Monic radical of the lcm of all coefficient denominators of `u` and `v`.
pub fn infinity_meeting_fibers(d1: &MumfordDivisor) -> TPoly {
    pole_radical(&[d1.u(), d1.v()])
}

pub fn nagell_lutz_report(dual: &DualCurve, split_budget: usize) -> Result<NagellLutzVerdict, DualError> {
    let (curve, reduced) = reduced_torsion_divisor(dual)?;
    let xi = curve.reduced_class(reduced.clone())?;
    let order_three = curve.class_order_is_three(&xi)?;
    let meeting_fibers = infinity_meeting_fibers(&reduced);
    let u_pole_fibers = pole_radical(&[reduced.u()]);
    let v_only_pole_fibers = meeting_fibers.exact_div(&u_pole_fibers).map_err(DualError::from)?.monic();
    let cusps = dual.cusp_report(split_budget)?;
    Ok(NagellLutzVerdict {
        params: dual.params().clone(),
        reduced,
        order_three,
        meeting_fibers,
        u_pole_fibers,
        v_only_pole_fibers,
        admissible_center: cusps.admissible,
        cusp_witness: cusps.witness,
    })
}
