//! Polynomial expressions in `t`, `x` and the radical `s` (with `s^2 = d`).
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 't' | 'x' | 's' | '(' expr ')'
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{QuadField, RatFunc, TPoly, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown variable '{name}' at column {column}")]
    UnknownVariable { column: usize, name: char },
    #[error("negative exponent at column {column}")]
    NegativeExponent { column: usize },
    #[error("expression mentions x where a polynomial in t is required")]
    NotUnivariate,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PolyExpr {
    Num(BigRational),
    Var(char),
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().expect("ascii digits")), col));
        } else if c.is_alphabetic() {
            if chars.get(i + 1).is_some_and(|n| n.is_alphanumeric()) {
                return Err(ParseError::Syntax {
                    column: col,
                    message: "variables are single letters; write products with '*'".into(),
                });
            }
            out.push((Tok::Ident(c), col));
            i += 1;
        } else if "+-*^/()".contains(c) {
            out.push((Tok::Op(c), col));
            i += 1;
        } else {
            return Err(ParseError::Syntax {
                column: col,
                message: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    allowed: &'a [char],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            column: self.col(),
            message: message.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat('*') {
            lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<PolyExpr, ParseError> {
        if self.eat('-') {
            return Ok(PolyExpr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e = u32::try_from(n).or_else(|_| self.err("exponent too large"))?;
                Ok(PolyExpr::Pow(Box::new(base), e))
            }
            Some(Tok::Op('-')) => Err(ParseError::NegativeExponent { column: col }),
            _ => self.err("exponent must be a nonnegative integer literal"),
        }
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(PolyExpr::Num(BigRational::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.err("zero denominator"),
                        _ => self.err("only integer literals may follow '/'"),
                    }
                } else {
                    Ok(PolyExpr::Num(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(c)) => {
                if !self.allowed.contains(&c) {
                    return Err(ParseError::UnknownVariable { column: col, name: c });
                }
                self.pos += 1;
                Ok(PolyExpr::Var(c))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            None => self.err("unexpected end of input"),
            Some(_) => self.err("expected a number, a variable or '('"),
        }
    }
}

/// Parses `text`, rejecting variables outside `allowed_vars`.
pub fn parse_poly(text: &str, allowed_vars: &[char]) -> Result<PolyExpr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end_col: text.chars().count() + 1,
        allowed: allowed_vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl PolyExpr {
    pub fn mentions(&self, v: char) -> bool {
        match self {
            PolyExpr::Num(_) => false,
            PolyExpr::Var(c) => *c == v,
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.mentions(v),
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) => {
                a.mentions(v) || b.mentions(v)
            }
        }
    }

    /// Evaluates to a polynomial in x with coefficients polynomial in t.
    pub fn to_xpoly(&self, field: QuadField) -> XPoly {
        match self {
            PolyExpr::Num(r) => XPoly::constant(RatFunc::constant(field.rational(r.clone()))),
            PolyExpr::Var('x') => XPoly::var(&field),
            PolyExpr::Var('t') => XPoly::constant(RatFunc::t(&field)),
            PolyExpr::Var('s') => XPoly::constant(RatFunc::constant(field.sqrt())),
            PolyExpr::Var(c) => unreachable!("parser admitted variable {c}"),
            PolyExpr::Neg(a) => -&a.to_xpoly(field),
            PolyExpr::Add(a, b) => &a.to_xpoly(field) + &b.to_xpoly(field),
            PolyExpr::Sub(a, b) => &a.to_xpoly(field) - &b.to_xpoly(field),
            PolyExpr::Mul(a, b) => &a.to_xpoly(field) * &b.to_xpoly(field),
            PolyExpr::Pow(a, e) => a.to_xpoly(field).pow(*e),
        }
    }

    pub fn to_tpoly(&self, field: QuadField) -> Result<TPoly, ParseError> {
        if self.mentions('x') {
            return Err(ParseError::NotUnivariate);
        }
        let x = self.to_xpoly(field);
        Ok(x.coeff(0).num().clone())
    }
}

/// Parses and evaluates in one step, allowing `t`, `x` and `s`.
pub fn parse_xpoly(text: &str, field: QuadField) -> Result<XPoly, ParseError> {
    parse_poly(text, &['t', 'x', 's']).map(|e| e.to_xpoly(field))
}

pub fn parse_tpoly(text: &str, field: QuadField) -> Result<TPoly, ParseError> {
    parse_poly(text, &['t', 's'])?.to_tpoly(field)
}
