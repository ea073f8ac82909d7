//! The scalar bi-periodic Fibonacci sequence `q_n`.
//!
//! Seeds are `q_{-1} = q_1 = 1` and `q_0 = 0`; after that each step
//! multiplies the previous term by `a` (even index) or `b` (odd index) and
//! adds the term before it. Indices below -1 are not defined and are
//! rejected.
//!
//! Three evaluation routes are provided: the defining recurrence, an
//! O(log n) companion-matrix power over the parity classes, and extraction
//! from the matrix Binet formula. All three agree exactly on every input.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrixseq::f_binet;
use crate::numerics::rational::bigint_pow;
use crate::numerics::{Params, Rational};

/// Parity indicator `n - 2*floor(n/2)`, i.e. `n mod 2` in `{0, 1}` with the
/// floor convention for negative `n` (so `epsilon(-1) = 1`).
pub fn epsilon(n: i64) -> u8 {
    n.rem_euclid(2) as u8
}

pub(crate) fn check_min_index(n: i64, min: i64) -> Result<()> {
    if n < min {
        Err(Error::IndexOutOfRange { index: n, min })
    } else {
        Ok(())
    }
}

/// Infinite iterator over `q_0, q_1, q_2, ...` by the defining recurrence.
pub struct QIter<'a> {
    params: &'a Params,
    prev: Rational,
    curr: Rational,
    next_index: i64,
}

impl Iterator for QIter<'_> {
    type Item = Rational;

    fn next(&mut self) -> Option<Rational> {
        let out = self.curr.clone();
        let mult = if self.next_index % 2 == 0 {
            self.params.a()
        } else {
            self.params.b()
        };
        let next = &(mult * &self.curr) + &self.prev;
        self.prev = std::mem::replace(&mut self.curr, next);
        self.next_index += 1;
        Some(out)
    }
}

/// Iterates the sequence from `q_0` upward.
pub fn q_iter(p: &Params) -> QIter<'_> {
    QIter {
        params: p,
        prev: Rational::one(), // q_{-1}
        curr: Rational::zero(),
        next_index: 1,
    }
}

/// `(q_{n-1}, q_n, q_{n+1})` in one linear pass; `n >= 0`.
pub(crate) fn q_window(p: &Params, n: i64) -> (Rational, Rational, Rational) {
    debug_assert!(n >= 0);
    let mut it = q_iter(p);
    if n == 0 {
        let q0 = it.next().expect("infinite");
        let q1 = it.next().expect("infinite");
        (Rational::one(), q0, q1)
    } else {
        let mut it = it.skip(n as usize - 1);
        let a = it.next().expect("infinite");
        let b = it.next().expect("infinite");
        let c = it.next().expect("infinite");
        (a, b, c)
    }
}

/// `q_n` by direct linear iteration of the defining recurrence.
pub fn q_recurrence(p: &Params, n: i64) -> Result<Rational> {
    check_min_index(n, -1)?;
    if n == -1 {
        return Ok(Rational::one());
    }
    Ok(q_iter(p).nth(n as usize).expect("infinite"))
}

/// Top row of the `m`-th power of `[[u, -v], [v, 0]]` over plain big
/// integers. Working without denominators keeps the squaring loop free of
/// per-step gcd reduction; one rational reduction happens at the end of
/// [`q_fast`].
fn scaled_companion_pow(u: &BigInt, v: &BigInt, m: u64) -> (BigInt, BigInt) {
    let mul = |x: &[BigInt; 4], y: &[BigInt; 4]| -> [BigInt; 4] {
        [
            &x[0] * &y[0] + &x[1] * &y[2],
            &x[0] * &y[1] + &x[1] * &y[3],
            &x[2] * &y[0] + &x[3] * &y[2],
            &x[2] * &y[1] + &x[3] * &y[3],
        ]
    };
    let mut acc = [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()];
    let mut sq = [u.clone(), -v, v.clone(), BigInt::zero()];
    let mut e = m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &sq);
        }
        e >>= 1;
        if e > 0 {
            sq = mul(&sq, &sq);
        }
    }
    let [top_left, top_right, _, _] = acc;
    (top_left, top_right)
}

/// `q_n` in O(log n) ring operations.
///
/// Both parity classes of the sequence satisfy the order-2 recurrence
/// `x_{j+1} = (ab + 2) x_j - x_{j-1}`, so `q_n` is read off a binary power
/// of the companion matrix of `X^2 - (ab+2)X + 1` applied to the class
/// seeds: `(q_0, q_2)` for even `n`, `(q_1, q_3)` for odd `n`. With
/// `ab + 2 = u/v` in lowest terms the companion power is computed as an
/// integer matrix power divided by `v^m`.
pub fn q_fast(p: &Params, n: i64) -> Result<Rational> {
    check_min_index(n, -1)?;
    match n {
        -1 | 1 => return Ok(Rational::one()),
        0 => return Ok(Rational::zero()),
        _ => {}
    }
    let (x0, x1) = if n % 2 == 0 {
        (Rational::zero(), p.a().clone())
    } else {
        (Rational::one(), p.ab() + Rational::one())
    };
    let coeff = p.ab() + Rational::from(2);
    let m = (n / 2) as u64 - 1; // class index is n/2 >= 1 here
    let (c11, c12) = scaled_companion_pow(coeff.numer(), coeff.denom(), m);
    let numerator = &(&Rational::from(c11) * &x1) + &(&Rational::from(c12) * &x0);
    let scale = Rational::new(BigInt::one(), bigint_pow(coeff.denom(), m))?;
    Ok(&numerator * &scale)
}

/// `q_n` read from the Binet-evaluated matrix (its `(2,1)` entry).
///
/// Requires a nonzero discriminant; the square-root component of the
/// underlying matrix is checked to vanish exactly.
pub fn q_binet(p: &Params, n: i64) -> Result<Rational> {
    check_min_index(n, 0)?;
    Ok(f_binet(p, n)?.e21)
}
