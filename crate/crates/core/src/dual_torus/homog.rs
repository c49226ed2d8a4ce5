//! Dense homogeneous polynomials in `T, X, Z` with rational coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Field, QuadField, TPoly, XPoly};
use crate::error::DualError;

/// Coefficient of `T^i X^j Z^(n-i-j)` is stored at `offset(i) + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogPoly {
    degree: u32,
    coeffs: Vec<BigRational>,
}

fn offset(n: u32, i: u32) -> usize {
    (i * (n + 1) - i * i.saturating_sub(1) / 2) as usize
}

impl HomogPoly {
    pub fn zero(degree: u32) -> Self {
        let len = ((degree + 1) * (degree + 2) / 2) as usize;
        HomogPoly {
            degree,
            coeffs: vec![BigRational::zero(); len],
        }
    }

    /// `c * T^i X^j Z^k`.
    pub fn monomial(c: BigRational, i: u32, j: u32, k: u32) -> Self {
        let mut p = Self::zero(i + j + k);
        p.set(i, j, c);
        p
    }

    pub fn var_t() -> Self {
        Self::monomial(BigRational::one(), 1, 0, 0)
    }

    pub fn var_x() -> Self {
        Self::monomial(BigRational::one(), 0, 1, 0)
    }

    pub fn var_z() -> Self {
        Self::monomial(BigRational::one(), 0, 0, 1)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficient of `T^i X^j Z^(n-i-j)`.
    pub fn get(&self, i: u32, j: u32) -> &BigRational {
        &self.coeffs[offset(self.degree, i) + j as usize]
    }

    fn set(&mut self, i: u32, j: u32, c: BigRational) {
        let at = offset(self.degree, i) + j as usize;
        self.coeffs[at] = c;
    }

    /// `(i, j, k, coefficient)` for every monomial of the degree, zeros included.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &BigRational)> + '_ {
        let n = self.degree;
        (0..=n).flat_map(move |i| (0..=n - i).map(move |j| (i, j, n - i - j, self.get(i, j))))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        HomogPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        HomogPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&-BigRational::one()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.degree + rhs.degree);
        for (i, j, _, a) in self.terms() {
            if a.is_zero() {
                continue;
            }
            for (p, q, _, b) in rhs.terms() {
                if b.is_zero() {
                    continue;
                }
                let c = out.get(i + p, j + q) + a * b;
                out.set(i + p, j + q, c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(BigRational::one(), 0, 0, 0);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn partial(&self, var: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(self.degree - 1);
        for (i, j, k, c) in self.terms() {
            let e = [i, j, k][var];
            if e == 0 || c.is_zero() {
                continue;
            }
            let (ni, nj) = match var {
                0 => (i - 1, j),
                1 => (i, j - 1),
                _ => (i, j),
            };
            out.set(ni, nj, c * BigRational::from_integer(e.into()));
        }
        out
    }

    pub fn partial_t(&self) -> Self {
        self.partial(0)
    }

    pub fn partial_x(&self) -> Self {
        self.partial(1)
    }

    pub fn partial_z(&self) -> Self {
        self.partial(2)
    }

    /// Homogenizes a polynomial in `t, x` with rational coefficients to
    /// the given total degree.
    pub fn homogenize(p: &XPoly, degree: u32) -> Result<Self, DualError> {
        let mut out = Self::zero(degree);
        for (j, c) in p.coeffs().iter().enumerate() {
            if !c.is_polynomial() {
                return Err(DualError::NonRationalCoefficient);
            }
            for (i, q) in c.num().coeffs().iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                if !q.is_rational() || (i + j) as u32 > degree {
                    return Err(DualError::NonRationalCoefficient);
                }
                out.set(i as u32, j as u32, q.rational_part().clone());
            }
        }
        Ok(out)
    }

    /// Sets `Z = 1`.
    pub fn dehomogenize(&self, field: QuadField) -> XPoly {
        let mut out = XPoly::zero(&field);
        for (i, j, _, c) in self.terms() {
            if !c.is_zero() {
                out = &out + &XPoly::tx_monomial(field.rational(c.clone()), i as usize, j as usize);
            }
        }
        out
    }

    /// Substitutes univariate polynomials (in a common parameter) for `T, X, Z`.
    pub fn substitute(&self, t: &TPoly, x: &TPoly, z: &TPoly) -> TPoly {
        let field = *t.ctx();
        let mut out = TPoly::zero(&field);
        for (i, j, k, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let term = &(&t.pow(i) * &x.pow(j)) * &z.pow(k);
            out = &out + &term.scale(&field.rational(c.clone()));
        }
        out
    }

    pub fn eval(&self, point: [&BigRational; 3]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, j, k, c) in self.terms() {
            if !c.is_zero() {
                acc += c * pow(point[0], i) * pow(point[1], j) * pow(point[2], k);
            }
        }
        acc
    }
}

fn pow(b: &BigRational, e: u32) -> BigRational {
    num_traits::pow(b.clone(), e as usize)
}

/// Terms in decreasing X, then decreasing T.
impl fmt::Display for HomogPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self.terms().filter(|t| !t.3.is_zero()).collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.1, t.0)));
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, j, k, c)) in terms.into_iter().enumerate() {
            let mono: Vec<String> = [("T", i), ("X", j), ("Z", k)]
                .iter()
                .filter(|(_, e)| *e > 0)
                .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            let mono = mono.join("*");
            let neg = c.is_negative();
            let mag = c.abs();
            f.write_str(match (n == 0, neg) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            })?;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
