//! Exact arithmetic for Q -> Q(sqrt d) -> Q(sqrt d)(t) and polynomials in x
//! over that tower.

mod field;
mod poly;
mod quad;
mod ratfunc;
pub mod sylvester;
pub mod text;

pub use field::Field;
pub use poly::{Degree, Poly};
pub use quad::{QuadField, QuadScalar};
pub use ratfunc::{normalize, RatFunc, TPoly, XPoly};

pub use num_bigint::BigInt;
pub use num_rational::BigRational as Rational;
