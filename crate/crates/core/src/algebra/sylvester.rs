//! Resultants as Sylvester determinants, computed fraction-free.
//!
//! This is the second route to a resultant. It works when the coefficients
//! live in a polynomial ring (no field available), e.g. a cubic in `u`
//! whose coefficients are polynomials in `t` and `x`.

use super::field::Field;
use super::poly::Poly;
use crate::error::AlgebraError;

/// Sylvester matrix of `a` and `b`, given as coefficient lists (low degree
/// first) in an outer variable, with nonzero leading entries.
pub fn sylvester_matrix<F: Field>(a: &[Poly<F>], b: &[Poly<F>], ctx: &F::Ctx) -> Vec<Vec<Poly<F>>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (shift, src, count) in [(0, a, n), (0, b, m)] {
        for i in 0..count {
            let mut row = vec![Poly::zero(ctx); size];
            for (j, c) in src.iter().rev().enumerate() {
                row[shift + i + j] = c.clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Bareiss fraction-free determinant over `F[var]`.
pub fn bareiss_determinant<F: Field>(mut m: Vec<Vec<Poly<F>>>, ctx: &F::Ctx) -> Result<Poly<F>, AlgebraError> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly::one(ctx));
    }
    let mut negate = false;
    let mut prev = Poly::one(ctx);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(Poly::zero(ctx)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `Res_u(a, b)` for polynomials in `u` with coefficients in `F[var]`.
pub fn sylvester_resultant<F: Field>(a: &[Poly<F>], b: &[Poly<F>], ctx: &F::Ctx) -> Result<Poly<F>, AlgebraError> {
    let trim = |p: &[Poly<F>]| -> Vec<Poly<F>> {
        let mut v = p.to_vec();
        while v.last().is_some_and(Poly::is_zero) {
            v.pop();
        }
        v
    };
    let (a, b) = (trim(a), trim(b));
    if a.is_empty() || b.is_empty() {
        return Err(AlgebraError::ZeroInput);
    }
    bareiss_determinant(sylvester_matrix(&a, &b, ctx), ctx)
}
