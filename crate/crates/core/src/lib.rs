//! Exact genus-2 divisor-class arithmetic over Q(sqrt d)(t), and the
//! (2,3,6) quasi-torus decomposition of the dual curve of a plane cubic.
//!
//! The pipeline: an elliptic curve `v^2 = u^3 + a u + b` gives a
//! 9-cuspidal sextic `D_E(t, x) = -4 g^3 - 27 h^2`, a genus-2 curve
//! `y^2 = f = 4 g^3 + 27 h^2`, and a 3-torsion divisor class seeded by
//! `(u0, v0) = (-3g, sqrt(27) h mod u0)`. Reducing it and looking at the
//! poles of its Mumford coefficients shows where the horizontal divisor
//! meets the sections at infinity.

pub mod algebra;
pub mod error;

pub use error::{AlgebraError, CurveError, DualError};
pub mod cli;
pub mod dual_torus;
pub mod hyperelliptic;
pub mod nagell_lutz;
