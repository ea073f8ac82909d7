//! Scalar numerics: exact rationals, the `(a, b)` parameter pair, and the
//! quadratic extension ring hosting the Binet roots.

mod params;
mod quad;
pub(crate) mod rational;

pub use params::Params;
pub use quad::{alpha, beta, QuadCtx, QuadExt};
pub use rational::Rational;
