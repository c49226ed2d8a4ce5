//! Canonical text rendering: terms in decreasing x, then decreasing t;
//! the radical is printed as `s`.

use std::fmt;

use num_traits::Signed;

use super::field::Field;
use super::poly::Poly;
use super::quad::QuadScalar;
use super::ratfunc::{RatFunc, TPoly, XPoly};

fn sign_split(c: &QuadScalar) -> (bool, QuadScalar) {
    let negative = if c.is_rational() {
        c.rational_part().is_negative()
    } else if num_traits::Zero::is_zero(c.rational_part()) {
        c.radical_part().is_negative()
    } else {
        false
    };
    if negative {
        (true, Field::neg(c))
    } else {
        (false, c.clone())
    }
}

fn push_term(out: &mut String, c: &QuadScalar, mono: &str) {
    let (neg, mag) = sign_split(c);
    let first = out.is_empty();
    out.push_str(match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    });
    if mono.is_empty() {
        out.push_str(&mag.to_string());
    } else if mag.is_one() {
        out.push_str(mono);
    } else {
        out.push_str(&format!("{mag}*{mono}"));
    }
}

fn power(var: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn join_mono(a: String, b: String) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b,
        (_, true) => a,
        _ => format!("{a}*{b}"),
    }
}

/// A univariate polynomial with scalar coefficients in the named variable.
pub fn univariate(p: &Poly<QuadScalar>, var: &str) -> String {
    let mut out = String::new();
    for (e, c) in p.coeffs().iter().enumerate().rev() {
        if !c.is_zero() {
            push_term(&mut out, c, &power(var, e));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Expanded bivariate numerator: coefficient list in x of polynomials in t.
fn bivariate(rows: &[TPoly]) -> String {
    let mut out = String::new();
    for (xe, row) in rows.iter().enumerate().rev() {
        for (te, c) in row.coeffs().iter().enumerate().rev() {
            if !c.is_zero() {
                push_term(&mut out, c, &join_mono(power("t", te), power("x", xe)));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn wrap(s: &str) -> String {
    if s.contains(' ') || s.starts_with('-') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

impl fmt::Display for Poly<QuadScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&univariate(self, "t"))
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "{}/{}", wrap(&self.num().to_string()), wrap(&self.den().to_string()))
        }
    }
}

/// Written over the monic lcm of the coefficient denominators, `N(t,x)/D(t)`.
impl fmt::Display for Poly<RatFunc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.denominator_lcm();
        let rows: Vec<TPoly> = self
            .coeffs()
            .iter()
            .map(|c| &c.num().clone() * &den.exact_div(c.den()).expect("lcm"))
            .collect();
        let num = bivariate(&rows);
        if den.is_one() {
            f.write_str(&num)
        } else {
            write!(f, "{}/{}", wrap(&num), wrap(&den.to_string()))
        }
    }
}

/// Convenience for callers holding an `XPoly`.
pub fn xpoly(p: &XPoly) -> String {
    p.to_string()
}
