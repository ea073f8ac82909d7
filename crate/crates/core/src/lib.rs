//! Exact arithmetic for bi-periodic Fibonacci numbers and their 2x2 matrix
//! sequence.
//!
//! The scalar sequence starts `q_0 = 0, q_1 = 1` and alternates multipliers:
//! `q_n = a q_{n-1} + q_{n-2}` for even `n`, `q_n = b q_{n-1} + q_{n-2}` for
//! odd `n`, with nonzero rational `a` and `b`. The matrix sequence follows
//! the same recurrence from `F_0 = I` and `F_1 = [[b, b/a], [1, 0]]` and has
//! `q_n` sitting in its `(2,1)` entry.
//!
//! Everything is computed over arbitrary-precision rationals, so the
//! independent evaluation routes (recurrence, closed form, Binet formula
//! over Q[sqrt(D)], generating-function expansion) must agree exactly, with
//! no tolerances. The [`verify`] module turns that agreement into
//! machine-checkable reports; `a = b = 1` recovers the Fibonacci numbers,
//! `a = b = 2` the Pell numbers, and `a = b = k` the k-Fibonacci family.

pub mod error;
pub mod matrixseq;
pub mod numerics;
pub mod sequence;
pub mod series;
pub mod summation;
pub mod verify;

pub use error::{Error, Result};
pub use matrixseq::Mat2;
pub use numerics::{Params, QuadCtx, QuadExt, Rational};
