//! Dense univariate polynomials over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::Field;
use crate::error::AlgebraError;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::Finite(n) => Some(n),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(n) => write!(f, "{n}"),
        }
    }
}

/// Coefficients are stored low degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct Poly<F: Field> {
    ctx: F::Ctx,
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(ctx: F::Ctx, mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { ctx, coeffs }
    }

    pub fn zero(ctx: &F::Ctx) -> Self {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &F::Ctx) -> Self {
        Self::constant(F::one(ctx))
    }

    pub fn constant(c: F) -> Self {
        Poly::new(c.ctx(), vec![c])
    }

    /// `c * var^n`.
    pub fn monomial(c: F, n: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![F::zero(&ctx); n];
        coeffs.push(c);
        Poly::new(ctx, coeffs)
    }

    /// The variable itself.
    pub fn var(ctx: &F::Ctx) -> Self {
        Self::monomial(F::one(ctx), 1)
    }

    pub fn ctx(&self) -> &F::Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| F::zero(&self.ctx))
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as `usize`, treating zero as degree 0. Only for loop bounds.
    fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        Poly::new(self.ctx.clone(), self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.ctx);
        }
        self.map_coeffs(|a| a.mul(c))
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn eval(&self, at: &F) -> F {
        let mut acc = F::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&F::from_int(&self.ctx, i as i64)))
            .collect();
        Poly::new(self.ctx.clone(), coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `other` for the variable.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = Poly::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q * b + r` with `deg r < deg b`.
    pub fn div_rem(&self, b: &Self) -> Result<(Self, Self), AlgebraError> {
        let blc_inv = b
            .lc()
            .ok_or(AlgebraError::ZeroDivisor)?
            .inv()
            .expect("nonzero leading coefficient");
        let bdeg = b.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= bdeg {
            return Ok((Poly::zero(&self.ctx), self.clone()));
        }
        let mut q = vec![F::zero(&self.ctx); r.len() - bdeg];
        for k in (0..q.len()).rev() {
            let c = r[k + bdeg].mul(&blc_inv);
            if !c.is_zero() {
                for (j, bc) in b.coeffs.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&c.mul(bc));
                }
            }
            q[k] = c;
        }
        r.truncate(bdeg);
        Ok((Poly::new(self.ctx.clone(), q), Poly::new(self.ctx.clone(), r)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self, AlgebraError> {
        self.div_rem(b).map(|(_, r)| r)
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, b: &Self) -> Result<Self, AlgebraError> {
        let (q, r) = self.div_rem(b)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(AlgebraError::NonExactDivision)
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool, AlgebraError> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Returns `(g, s, t)` with `g = s*self + t*other` and `g` monic.
    pub fn xgcd(&self, other: &Self) -> Result<(Self, Self, Self), AlgebraError> {
        if self.is_zero() && other.is_zero() {
            return Err(AlgebraError::BothZero);
        }
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(ctx), Poly::zero(ctx));
        let (mut t0, mut t1) = (Poly::zero(ctx), Poly::one(ctx));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.lc().expect("nonzero gcd").inv().expect("nonzero");
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    /// Resultant by the Euclidean remainder sequence.
    ///
    /// Agrees with the Sylvester determinant (see [`super::sylvester`]).
    pub fn resultant(&self, other: &Self) -> Result<F, AlgebraError> {
        if self.is_zero() || other.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let ctx = self.ctx.clone();
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = F::one(&ctx);
        loop {
            let m = a.len() - 1;
            let n = b.len() - 1;
            if n == 0 {
                return Ok(acc.mul(&b.coeffs[0].pow(m as u64)));
            }
            if m == 0 {
                return Ok(acc.mul(&a.coeffs[0].pow(n as u64)));
            }
            let r = a.rem(&b)?;
            if r.is_zero() {
                return Ok(F::zero(&ctx));
            }
            let k = r.len() - 1;
            // Res(a,b) = (-1)^(mn) lc(b)^(m-k) Res(b, a mod b)
            let mut factor = b.lc().expect("nonzero").pow((m - k) as u64);
            if (m * n) % 2 == 1 {
                factor = factor.neg();
            }
            acc = acc.mul(&factor);
            a = b;
            b = r;
        }
    }

    /// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`, so that the monic depressed
    /// cubic `u^3 + p u + q` has discriminant `-4p^3 - 27q^2`.
    pub fn discriminant(&self) -> Result<F, AlgebraError> {
        let n = self.degree().finite().ok_or(AlgebraError::ZeroInput)?;
        if n == 0 {
            return Ok(F::one(&self.ctx));
        }
        let res = self.resultant(&self.derivative())?;
        let lc = self.lc().expect("nonzero");
        let d = res.div(lc).expect("nonzero");
        Ok(if (n * (n - 1) / 2) % 2 == 1 { d.neg() } else { d })
    }

    /// Monic generator of the radical, `p / gcd(p, p')` made monic.
    pub fn squarefree_part(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.exact_div(&g)?.monic())
    }

    pub fn is_squarefree(&self) -> Result<bool, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        Ok(self.gcd(&self.derivative())?.is_constant())
    }

    /// Yun's squarefree decomposition: monic pairwise coprime squarefree
    /// factors `a_i` with `self = lc * prod a_i^i`. Factors equal to one are
    /// omitted.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let mut out = Vec::new();
        if self.is_constant() {
            return Ok(out);
        }
        let p = self.monic();
        let dp = p.derivative();
        let a0 = p.gcd(&dp)?;
        let mut b = p.exact_div(&a0)?;
        let mut c = dp.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            if !a.is_one() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let n = self.len().max(rhs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Poly::new(self.ctx.clone(), coeffs)
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.map_coeffs(|c| c.neg())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![F::zero(&self.ctx); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.ctx.clone(), out)
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<F: Field> Neg for Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{QuadField, QuadScalar};

    fn k() -> QuadField {
        QuadField::new(3).unwrap()
    }

    fn q(coeffs: &[i64]) -> Poly<QuadScalar> {
        Poly::new(k(), coeffs.iter().map(|&c| k().int(c)).collect())
    }

    #[test]
    fn zero_degree_is_marker() {
        assert_eq!(q(&[]).degree(), Degree::NegInfinity);
        assert_eq!(q(&[0, 0]).degree(), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn divmod_trivial() {
        let (qq, r) = q(&[0, 0, 1]).div_rem(&q(&[0, 1])).unwrap();
        assert_eq!(qq, q(&[0, 1]));
        assert!(r.is_zero());
        let (qq, r) = q(&[1, 0, 0, 1]).div_rem(&q(&[1, 1])).unwrap();
        assert_eq!(qq, q(&[1, -1, 1]));
        assert!(r.is_zero());
        assert_eq!(q(&[1]).div_rem(&q(&[])), Err(AlgebraError::ZeroDivisor));
    }

    #[test]
    fn gcd_trivial() {
        assert_eq!(q(&[-1, 0, 1]).gcd(&q(&[-1, 1])).unwrap(), q(&[-1, 1]));
        assert_eq!(q(&[0, 0, 1]).gcd(&q(&[1, 1])).unwrap(), q(&[1]));
        assert_eq!(q(&[]).gcd(&q(&[])), Err(AlgebraError::BothZero));
    }

    #[test]
    fn xgcd_bezout() {
        let a = q(&[6, -5, 1]);
        let b = q(&[-3, 1, 1]);
        let (g, s, t) = a.xgcd(&b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn resultant_product_formula() {
        // Res(x - 2, x - 7) = 2 - 7
        assert_eq!(q(&[-2, 1]).resultant(&q(&[-7, 1])).unwrap(), k().int(-5));
        assert_eq!(q(&[]).resultant(&q(&[1])), Err(AlgebraError::ZeroInput));
    }

    #[test]
    fn depressed_cubic_discriminant() {
        // u^3 + 2u + 5: -4*8 - 27*25
        let d = q(&[5, 2, 0, 1]).discriminant().unwrap();
        assert_eq!(d, k().int(-4 * 8 - 27 * 25));
    }

    #[test]
    fn squarefree_trivial() {
        // (t-1)^2 (t+2) = t^3 - 3t + 2
        let p = q(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part().unwrap(), q(&[-2, 1, 1]));
        let dec = p.squarefree_decomposition().unwrap();
        assert_eq!(dec, vec![(q(&[2, 1]), 1), (q(&[-1, 1]), 2)]);
        assert_eq!(q(&[]).squarefree_part(), Err(AlgebraError::ZeroInput));
    }
}
