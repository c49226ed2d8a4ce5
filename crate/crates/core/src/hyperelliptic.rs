//! Genus-2 curves `y^2 = f(x)` with `deg f = 6` over K = Q(sqrt d)(t), and
//! arithmetic on their divisor classes through Mumford pairs.
//!
//! A class is represented by `div[u, v] - (deg u / 2) * (inf+ + inf-)` for
//! an even-degree semi-reduced affine divisor. The identity is `(1, 0)`.
//! Representatives involving points at infinity cannot be expressed here;
//! whenever a computation would need one, it fails with
//! [`CurveError::InfinityLeadingTerm`] instead of guessing.
//!
//! The square roots `a+`, `a-` of the leading coefficient are never
//! formed: the condition `lt(v) = a± x^3` is tested as
//! `deg v = 3 && lc(v)^2 = a0`.

use crate::algebra::{Degree, Field, RatFunc, XPoly};
use crate::error::CurveError;

#[derive(Debug, Clone, PartialEq)]
pub struct Genus2Curve {
    f: XPoly,
    a0: RatFunc,
}

impl Genus2Curve {
    /// Checks `deg f = 6` and that the generic fiber is smooth.
    pub fn new(f: XPoly) -> Result<Self, CurveError> {
        if f.degree() != Degree::Finite(6) {
            return Err(CurveError::NotSextic(f.degree().to_string()));
        }
        if f.discriminant_x()?.is_zero() {
            return Err(CurveError::SingularModel);
        }
        let a0 = f.lc().expect("degree 6").clone();
        Ok(Genus2Curve { f, a0 })
    }

    #[cfg(test)]
    pub(crate) fn unchecked(f: XPoly) -> Self {
        let a0 = f.lc().expect("nonzero").clone();
        Genus2Curve { f, a0 }
    }

    pub fn f(&self) -> &XPoly {
        &self.f
    }

    pub fn a0(&self) -> &RatFunc {
        &self.a0
    }

    /// `deg v < deg u` and `u | v^2 - f`.
    pub fn validate_mumford(&self, u: &XPoly, v: &XPoly) -> Result<bool, CurveError> {
        if !u.is_monic() {
            return Err(CurveError::NonMonicU);
        }
        if v.degree() >= u.degree() {
            return Ok(false);
        }
        Ok((&(v * v) - &self.f).rem(u)?.is_zero())
    }

    /// A repeated root of `u` must not be a Weierstrass point, i.e.
    /// `gcd(u / radical(u), v) = 1`.
    pub fn is_semi_reduced(&self, d: &MumfordDivisor) -> Result<bool, CurveError> {
        if !self.validate_mumford(&d.u, &d.v)? {
            return Err(CurveError::InvalidMumford);
        }
        let repeated = d.u.exact_div(&d.u.squarefree_part()?)?;
        if repeated.is_constant() {
            return Ok(true);
        }
        Ok(repeated.gcd(&d.v)?.is_constant())
    }

    /// `deg v = 3` with `lc(v) = ±sqrt(a0)`: the function `y - v` then has
    /// unequal pole orders at the two points at infinity.
    fn unbalanced_at_infinity(&self, v: &XPoly) -> bool {
        v.degree() == Degree::Finite(3) && {
            let lc = v.lc().expect("degree 3");
            Field::mul(lc, lc) == self.a0
        }
    }

    /// One reduction step: `u' = monic((f - v^2) / u)`, `v' = -v mod u'`.
    fn reduction_step(&self, d: &MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        if self.unbalanced_at_infinity(&d.v) {
            return Err(CurveError::InfinityLeadingTerm);
        }
        let quotient = (&self.f - &(&d.v * &d.v))
            .exact_div(&d.u)
            .map_err(|_| CurveError::NonExactDivision)?;
        let u = quotient.monic();
        let v = (-&d.v).rem(&u)?;
        Ok(MumfordDivisor { u, v })
    }

    /// Reduces a degree-4 semi-reduced divisor `d0` to the degree-2 divisor
    /// `d1` with `d0 - d1 ~ inf+ + inf-`.
    pub fn reduce_deg4(&self, d0: &MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        if d0.u.degree() != Degree::Finite(4) {
            return Err(CurveError::UnexpectedDegree {
                expected: 4,
                found: d0.u.degree().to_string(),
            });
        }
        let d1 = self.reduction_step(d0)?;
        if d1.u.degree() != Degree::Finite(2) {
            return Err(CurveError::InvariantViolation(format!(
                "reduction of a quartic gave deg u = {}",
                d1.u.degree()
            )));
        }
        self.check(&d1, "reduce_deg4")?;
        Ok(d1)
    }

    /// Hyperelliptic involution `(u, v) -> (u, -v mod u)`.
    pub fn involution(&self, d: &MumfordDivisor) -> MumfordDivisor {
        d.involution()
    }

    /// Cantor composition: a semi-reduced divisor in the class of the sum.
    pub fn compose(&self, d1: &MumfordDivisor, d2: &MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        for d in [d1, d2] {
            if !self.is_semi_reduced(d)? {
                return Err(CurveError::InvalidMumford);
            }
        }
        let (e, e1, e2) = d1.u.xgcd(&d2.u)?;
        let (g, c1, c2) = e.xgcd(&(&d1.v + &d2.v))?;
        let s1 = &c1 * &e1;
        let s2 = &c1 * &e2;
        let s3 = c2;
        let u = (&d1.u * &d2.u).exact_div(&(&g * &g))?;
        let lifted = &(&(&s1 * &d1.u) * &d2.v) + &(&(&s2 * &d2.u) * &d1.v);
        let lifted = &lifted + &(&s3 * &(&(&d1.v * &d2.v) + &self.f));
        let v = lifted.exact_div(&g)?.rem(&u)?;
        let out = MumfordDivisor { u, v };
        self.check(&out, "compose")?;
        Ok(out)
    }

    /// Strips pairs `P + sigma(P)` at Weierstrass points, each of which is
    /// equivalent to `inf+ + inf-` and so drops out of the class.
    fn strip_weierstrass_pairs(&self, mut d: MumfordDivisor) -> Result<MumfordDivisor, CurveError> {
        loop {
            let repeated = d.u.exact_div(&d.u.squarefree_part()?)?;
            let w = repeated.gcd(&d.v)?;
            if w.is_constant() {
                return Ok(d);
            }
            let u = d.u.exact_div(&(&w * &w))?;
            let v = d.v.rem(&u)?;
            d = MumfordDivisor { u, v };
        }
    }

    /// Reduces an even-degree semi-reduced divisor to the canonical
    /// representative of its class.
    pub fn reduce(&self, d: &MumfordDivisor) -> Result<ReducedClass, CurveError> {
        let mut cur = d.clone();
        loop {
            let n = cur.u.degree().finite().ok_or(CurveError::NonMonicU)?;
            if n % 2 == 1 {
                return Err(CurveError::UnsupportedOddDegree(n));
            }
            if n <= 2 {
                break;
            }
            cur = self.reduction_step(&cur)?;
        }
        let cur = self.strip_weierstrass_pairs(cur)?;
        self.check(&cur, "reduce")?;
        Ok(ReducedClass { rep: cur })
    }

    pub fn class_add(&self, a: &ReducedClass, b: &ReducedClass) -> Result<ReducedClass, CurveError> {
        self.reduce(&self.compose(&a.rep, &b.rep)?)
    }

    pub fn class_neg(&self, a: &ReducedClass) -> ReducedClass {
        ReducedClass {
            rep: a.rep.involution(),
        }
    }

    pub fn class_mul(&self, a: &ReducedClass, n: u32) -> Result<ReducedClass, CurveError> {
        let mut acc = ReducedClass::identity(a.rep.u.ctx());
        for _ in 0..n {
            acc = self.class_add(&acc, a)?;
        }
        Ok(acc)
    }

    /// True iff `xi` is not the identity and `xi + (xi + xi)` is.
    pub fn class_order_is_three(&self, xi: &ReducedClass) -> Result<bool, CurveError> {
        if xi.is_identity() {
            return Ok(false);
        }
        let twice = self.class_add(xi, xi)?;
        Ok(self.class_add(xi, &twice)?.is_identity())
    }

    /// Wraps a divisor already known to be reduced.
    pub fn reduced_class(&self, d: MumfordDivisor) -> Result<ReducedClass, CurveError> {
        if d.u.degree() > Degree::Finite(2) || !self.is_semi_reduced(&d)? {
            return Err(CurveError::InvalidMumford);
        }
        if d.u.degree() == Degree::Finite(1) {
            return Err(CurveError::UnsupportedOddDegree(1));
        }
        Ok(ReducedClass { rep: d })
    }

    fn check(&self, d: &MumfordDivisor, stage: &str) -> Result<(), CurveError> {
        if self.validate_mumford(&d.u, &d.v)? {
            Ok(())
        } else {
            Err(CurveError::InvariantViolation(format!(
                "{stage} produced an invalid Mumford pair"
            )))
        }
    }
}

/// Mumford pair `(u, v)`: `u` monic, `deg v < deg u`, `u | v^2 - f`.
#[derive(Debug, Clone, PartialEq)]
pub struct MumfordDivisor {
    u: XPoly,
    v: XPoly,
}

impl MumfordDivisor {
    /// Builds the pair without checking it against a curve.
    pub fn new(u: XPoly, v: XPoly) -> Result<Self, CurveError> {
        if !u.is_monic() {
            return Err(CurveError::NonMonicU);
        }
        Ok(MumfordDivisor { u, v })
    }

    /// Builds the pair after checking it against `curve`.
    pub fn on_curve(curve: &Genus2Curve, u: XPoly, v: XPoly) -> Result<Self, CurveError> {
        if !curve.validate_mumford(&u, &v)? {
            return Err(CurveError::InvalidMumford);
        }
        Ok(MumfordDivisor { u, v })
    }

    pub fn empty(field: &crate::algebra::QuadField) -> Self {
        MumfordDivisor {
            u: XPoly::one(field),
            v: XPoly::zero(field),
        }
    }

    pub fn u(&self) -> &XPoly {
        &self.u
    }

    pub fn v(&self) -> &XPoly {
        &self.v
    }

    pub fn degree(&self) -> usize {
        self.u.degree().finite().unwrap_or(0)
    }

    pub fn involution(&self) -> Self {
        let v = (-&self.v).rem(&self.u).expect("u is monic");
        MumfordDivisor { u: self.u.clone(), v }
    }
}

/// Canonical representative of a divisor class (deg u <= 2).
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedClass {
    rep: MumfordDivisor,
}

impl ReducedClass {
    pub fn identity(field: &crate::algebra::QuadField) -> Self {
        ReducedClass {
            rep: MumfordDivisor::empty(field),
        }
    }

    pub fn rep(&self) -> &MumfordDivisor {
        &self.rep
    }

    pub fn into_rep(self) -> MumfordDivisor {
        self.rep
    }

    pub fn is_identity(&self) -> bool {
        self.rep.u.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuadField;
    use crate::cli::parse::parse_xpoly;

    fn k() -> QuadField {
        QuadField::new(3).unwrap()
    }

    fn xp(s: &str) -> XPoly {
        parse_xpoly(s, k()).unwrap()
    }

    fn ex51() -> Genus2Curve {
        Genus2Curve::new(xp(
            "-4*x^6 + 4*t*x^5 - x^4 + (4*t^3 - 36*t)*x^3 + (30*t^2 + 18)*x^2 - 24*t*x + 27*t^4 - 54*t^2 + 31",
        ))
        .unwrap()
    }

    fn ex52() -> Genus2Curve {
        Genus2Curve::new(xp("-4*x^6 + 4*t^3*x^3 - 36*t*x^3 + 27*t^4 - 54*t^2 + 27")).unwrap()
    }

    #[test]
    fn rejects_non_sextic() {
        assert!(matches!(
            Genus2Curve::new(xp("x^5 + t")),
            Err(CurveError::NotSextic(_))
        ));
        assert_eq!(
            Genus2Curve::new(xp("(x^3 + t)^2")),
            Err(CurveError::SingularModel)
        );
    }

    #[test]
    fn validate_examples() {
        let c = ex51();
        let u0 = xp("x^4 + 6*t*x - 3");
        let v0 = xp("-2/3*s*t*x^3 + 1/3*s*x^2 - 3*s*t^2 + 3*s");
        assert!(c.validate_mumford(&u0, &v0).unwrap());
        assert!(c.validate_mumford(&xp("1"), &xp("0")).unwrap());
        // f(0) = 27t^4 - 54t^2 + 31 is nonzero, so x^2 cannot divide x^2 - f
        assert!(!c.validate_mumford(&xp("x^2"), &xp("x")).unwrap());
        assert_eq!(c.validate_mumford(&xp("2*x"), &xp("0")), Err(CurveError::NonMonicU));
    }

    #[test]
    fn semi_reduced_examples() {
        let c = ex52();
        let xi = MumfordDivisor::new(xp("x^2"), xp("3*s*t^2 - 3*s")).unwrap();
        assert!(c.is_semi_reduced(&xi).unwrap());

        // x^2 | f forces a singular model, so skip the smoothness check
        let w = Genus2Curve::unchecked(xp("x^6 + t*x^3 + x^2"));
        let d = MumfordDivisor::new(xp("x^2"), xp("0")).unwrap();
        assert!(w.validate_mumford(d.u(), d.v()).unwrap());
        assert!(!w.is_semi_reduced(&d).unwrap());

        let c1 = ex51();
        let d0 = MumfordDivisor::new(
            xp("x^4 + 6*t*x - 3"),
            xp("-2/3*s*t*x^3 + 1/3*s*x^2 - 3*s*t^2 + 3*s"),
        )
        .unwrap();
        assert!(c1.is_semi_reduced(&d0).unwrap());
        let bad = MumfordDivisor::new(xp("x^2"), xp("x")).unwrap();
        assert_eq!(c1.is_semi_reduced(&bad), Err(CurveError::InvalidMumford));
    }

    #[test]
    fn reduce_deg4_example_two() {
        let c = ex52();
        let d0 = MumfordDivisor::new(xp("x^4 + 6*t*x"), xp("-2/3*s*t*x^3 - 3*s*t^2 + 3*s")).unwrap();
        let d1 = c.reduce_deg4(&d0).unwrap();
        assert_eq!(d1.u(), &xp("x^2"));
        assert_eq!(d1.v(), &xp("3*s*t^2 - 3*s"));
    }

    #[test]
    fn reduce_deg4_rejects_infinity_leading_term() {
        // a0 = 1 and lc(v)^2 = 1; the guard fires before the division
        let c = Genus2Curve::new(xp("x^6 + t*x + 1")).unwrap();
        let d0 = MumfordDivisor::new(xp("x^4"), xp("x^3")).unwrap();
        assert_eq!(c.reduce_deg4(&d0), Err(CurveError::InfinityLeadingTerm));
    }

    #[test]
    fn reduce_deg4_wrong_degree() {
        let c = ex52();
        let d = MumfordDivisor::new(xp("x^2"), xp("3*s*t^2 - 3*s")).unwrap();
        assert!(matches!(c.reduce_deg4(&d), Err(CurveError::UnexpectedDegree { .. })));
    }

    #[test]
    fn involution_examples() {
        let xi = MumfordDivisor::new(xp("x^2"), xp("3*s*t^2 - 3*s")).unwrap();
        assert_eq!(xi.involution().v(), &xp("-3*s*t^2 + 3*s"));
        assert_eq!(xi.involution().involution(), xi);
        let w = MumfordDivisor::new(xp("x^2 + t"), xp("0")).unwrap();
        assert_eq!(w.involution(), w);
    }

    #[test]
    fn identity_and_inverse() {
        let c = ex52();
        let xi = c
            .reduced_class(MumfordDivisor::new(xp("x^2"), xp("3*s*t^2 - 3*s")).unwrap())
            .unwrap();
        let id = ReducedClass::identity(&k());
        assert_eq!(c.compose(xi.rep(), id.rep()).unwrap(), xi.rep().clone());
        assert!(c.class_add(&xi, &c.class_neg(&xi)).unwrap().is_identity());
    }

    #[test]
    fn doubling_is_negation_for_three_torsion() {
        let c = ex52();
        let xi = c
            .reduced_class(MumfordDivisor::new(xp("x^2"), xp("3*s*t^2 - 3*s")).unwrap())
            .unwrap();
        let twice = c.class_add(&xi, &xi).unwrap();
        assert_eq!(twice.rep().u(), &xp("x^2"));
        assert_eq!(twice.rep().v(), &xp("-3*s*t^2 + 3*s"));
        assert!(c.class_order_is_three(&xi).unwrap());
        assert!(!c.class_order_is_three(&ReducedClass::identity(&k())).unwrap());
    }

    #[test]
    fn odd_degree_rejected() {
        let c = ex52();
        // x - 0 with v = f(0) root? f(0) = 27(t^2-1)^2 so v = 3s(t^2-1) works
        let d = MumfordDivisor::new(xp("x"), xp("3*s*t^2 - 3*s")).unwrap();
        assert!(c.validate_mumford(d.u(), d.v()).unwrap());
        assert_eq!(c.reduce(&d), Err(CurveError::UnsupportedOddDegree(1)));
    }
}
