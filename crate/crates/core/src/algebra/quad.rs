use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use crate::error::AlgebraError;

/// The quadratic field Q(sqrt(d)) for a squarefree integer d > 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadField {
    disc: i64,
}

impl QuadField {
    pub fn new(disc: i64) -> Result<Self, AlgebraError> {
        if disc <= 1 || !is_squarefree(disc) {
            return Err(AlgebraError::BadDiscriminant(disc));
        }
        Ok(QuadField { disc })
    }

    pub fn disc(&self) -> i64 {
        self.disc
    }

    pub fn rational(&self, r: BigRational) -> QuadScalar {
        QuadScalar::new(*self, r, BigRational::zero())
    }

    pub fn int(&self, n: i64) -> QuadScalar {
        self.rational(BigRational::from_integer(n.into()))
    }

    pub fn frac(&self, num: i64, den: i64) -> QuadScalar {
        self.rational(BigRational::new(num.into(), den.into()))
    }

    /// The generator `s` with `s^2 = d`.
    pub fn sqrt(&self) -> QuadScalar {
        QuadScalar::new(*self, BigRational::zero(), BigRational::one())
    }
}

fn is_squarefree(n: i64) -> bool {
    let mut n = n.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        if n.is_multiple_of(p) {
            n /= p;
        }
        p += 1;
    }
    true
}

/// `rational_part + radical_part * sqrt(d)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    field: QuadField,
    rational_part: BigRational,
    radical_part: BigRational,
}

impl QuadScalar {
    pub fn new(field: QuadField, rational_part: BigRational, radical_part: BigRational) -> Self {
        QuadScalar {
            field,
            rational_part,
            radical_part,
        }
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational_part
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical_part
    }

    pub fn is_rational(&self) -> bool {
        self.radical_part.is_zero()
    }

    /// a^2 - d b^2.
    pub fn norm(&self) -> BigRational {
        let d = BigRational::from_integer(BigInt::from(self.field.disc));
        &self.rational_part * &self.rational_part - d * &self.radical_part * &self.radical_part
    }

    pub fn conjugate(&self) -> Self {
        QuadScalar::new(self.field, self.rational_part.clone(), -&self.radical_part)
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.field, other.field,
            "mixing scalars from different radical fields"
        );
    }
}

impl Field for QuadScalar {
    type Ctx = QuadField;

    fn ctx(&self) -> QuadField {
        self.field
    }
    fn zero(ctx: &QuadField) -> Self {
        ctx.int(0)
    }
    fn one(ctx: &QuadField) -> Self {
        ctx.int(1)
    }
    fn from_int(ctx: &QuadField, n: i64) -> Self {
        ctx.int(n)
    }
    fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.radical_part.is_zero()
    }
    fn is_one(&self) -> bool {
        self.rational_part.is_one() && self.radical_part.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        QuadScalar::new(
            self.field,
            &self.rational_part + &rhs.rational_part,
            &self.radical_part + &rhs.radical_part,
        )
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        QuadScalar::new(
            self.field,
            &self.rational_part - &rhs.rational_part,
            &self.radical_part - &rhs.radical_part,
        )
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        let d = BigRational::from_integer(BigInt::from(self.field.disc));
        let re = &self.rational_part * &rhs.rational_part
            + d * &self.radical_part * &rhs.radical_part;
        let im = &self.rational_part * &rhs.radical_part + &self.radical_part * &rhs.rational_part;
        QuadScalar::new(self.field, re, im)
    }
    fn neg(&self) -> Self {
        QuadScalar::new(self.field, -&self.rational_part, -&self.radical_part)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        // nonzero because d is not a rational square
        let n = self.norm();
        Some(QuadScalar::new(
            self.field,
            &self.rational_part / &n,
            -&self.radical_part / &n,
        ))
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl $tr<&$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                Field::$m(self, rhs)
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                Field::$m(&self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(QuadScalar, Add, add);
forward_binop!(QuadScalar, Sub, sub);
forward_binop!(QuadScalar, Mul, mul);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        Field::neg(&self)
    }
}

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        Field::neg(self)
    }
}

/// Prints `a`, `b*s` or `(a + b*s)`; rationals as `p/q`.
impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.rational_part;
        let b = &self.radical_part;
        match (a.is_zero(), b.is_zero()) {
            (_, true) => write!(f, "{a}"),
            (true, false) if b.is_one() => write!(f, "s"),
            (true, false) if (-b).is_one() => write!(f, "-s"),
            (true, false) => write!(f, "{b}*s"),
            (false, false) => {
                let sign = if b.is_negative() { '-' } else { '+' };
                let mag = b.abs();
                if mag.is_one() {
                    write!(f, "({a} {sign} s)")
                } else {
                    write!(f, "({a} {sign} {mag}*s)")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_squarefree() {
        assert!(QuadField::new(3).is_ok());
        assert!(QuadField::new(12).is_err());
        assert!(QuadField::new(1).is_err());
        assert!(QuadField::new(-3).is_err());
    }

    #[test]
    fn sqrt_squares_to_disc() {
        let k = QuadField::new(3).unwrap();
        let s = k.sqrt();
        assert_eq!(&s * &s, k.int(3));
        // 1/sqrt(3) = sqrt(3)/3
        assert_eq!(s.inv().unwrap(), &k.frac(1, 3) * &s);
    }

    #[test]
    fn inverse_of_mixed_element() {
        let k = QuadField::new(3).unwrap();
        let z = &k.int(2) + &(&k.frac(-5, 7) * &k.sqrt());
        assert!((&z * &z.inv().unwrap()).is_one());
    }

    #[test]
    #[should_panic(expected = "different radical fields")]
    fn mixing_fields_panics() {
        let a = QuadField::new(3).unwrap().sqrt();
        let b = QuadField::new(5).unwrap().sqrt();
        let _ = &a + &b;
    }

    #[test]
    fn display_forms() {
        let k = QuadField::new(3).unwrap();
        assert_eq!(k.frac(-2, 3).to_string(), "-2/3");
        assert_eq!((&k.int(3) * &k.sqrt()).to_string(), "3*s");
        assert_eq!((&k.int(1) - &k.sqrt()).to_string(), "(1 - s)");
    }
}
