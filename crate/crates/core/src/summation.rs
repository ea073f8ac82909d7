//! Finite summation identities for the matrix sequence: the plain partial
//! sum and the weighted sum `sum_{k<=n} F_k x^{-k}`, each with a direct
//! evaluation and a closed form that must agree exactly.
//!
//! The closed form of the weighted sum is derived by multiplying the partial
//! sum (in `t = 1/x`) by the quartic `1 - (ab+2)t^2 + t^4` and telescoping
//! with `F_{k+4} = (ab+2) F_{k+2} - F_k`; the boundary terms that survive
//! are the ones evaluated here. See the repository README for the one place
//! where this derivation corrects a commonly printed exponent.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrixseq::{f_initial, f_iter, Mat2};
use crate::numerics::{Params, Rational};
use crate::sequence::{check_min_index, epsilon};

/// Result carrier pairing a directly computed sum with its closed form.
///
/// Serializes as `{"n": int, "direct": Mat2, "closed": Mat2, "matches": bool}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumReport {
    pub n: i64,
    pub direct: Mat2,
    pub closed: Mat2,
    pub matches: bool,
}

impl SumReport {
    fn new(n: i64, direct: Mat2, closed: Mat2) -> Self {
        let matches = direct == closed;
        Self {
            n,
            direct,
            closed,
            matches,
        }
    }
}

/// `F_0 + ... + F_{n-1}` by direct accumulation; `n >= 1`.
pub fn partial_sum_direct(p: &Params, n: i64) -> Result<Mat2> {
    check_min_index(n, 1)?;
    let mut acc = Mat2::zero();
    for f in f_iter(p).take(n as usize) {
        acc = &acc + &f;
    }
    Ok(acc)
}

/// The closed form of the plain partial sum:
/// `(a^eps b^{1-eps} F_n + a^{1-eps} b^eps F_{n-1} - a F_1 + ab F_0 - b F_0) / ab`
/// with `eps = eps(n)`.
pub(crate) fn partial_closed_from_pair(p: &Params, n: i64, f_prev: &Mat2, f_n: &Mat2) -> Mat2 {
    let (w_n, w_prev) = if epsilon(n) == 1 {
        (p.a(), p.b())
    } else {
        (p.b(), p.a())
    };
    let (f0, f1) = f_initial(p);
    let tail = &(&f_n.scale(w_n) + &f_prev.scale(w_prev)) - &f1.scale(p.a());
    let constants = f0.scale(&(p.ab() - p.b()));
    let ab_inv = p.ab().recip().expect("ab is nonzero");
    (&tail + &constants).scale(&ab_inv)
}

/// `F_0 + ... + F_{n-1}` by the closed form; `n >= 1`.
pub fn partial_sum_closed(p: &Params, n: i64) -> Result<Mat2> {
    check_min_index(n, 1)?;
    let mut it = f_iter(p).skip(n as usize - 1);
    let f_prev = it.next().expect("infinite");
    let f_n = it.next().expect("infinite");
    Ok(partial_closed_from_pair(p, n, &f_prev, &f_n))
}

/// Runs both plain-sum routes and reports whether they agree.
pub fn partial_sum_report(p: &Params, n: i64) -> Result<SumReport> {
    Ok(SumReport::new(
        n,
        partial_sum_direct(p, n)?,
        partial_sum_closed(p, n)?,
    ))
}

/// The quartic `1 - (ab+2)x^2 + x^4` evaluated at `x`.
pub(crate) fn quartic_at(p: &Params, x: &Rational) -> Rational {
    let x2 = x * x;
    &(&Rational::one() - &(&(p.ab() + Rational::from(2)) * &x2)) + &(&x2 * &x2)
}

/// `sum_{k=0}^{n} F_k x^{-k}` by direct accumulation; `n >= 0`, `x != 0`.
pub fn weighted_sum_direct(p: &Params, n: i64, x: &Rational) -> Result<Mat2> {
    if x.is_zero() {
        return Err(Error::ZeroEvaluationPoint);
    }
    check_min_index(n, 0)?;
    let t = x.recip().expect("x is nonzero");
    let mut weight = Rational::one();
    let mut acc = Mat2::zero();
    for (k, f) in f_iter(p).take(n as usize + 1).enumerate() {
        if k > 0 {
            weight = &weight * &t;
        }
        acc = &acc + &f.scale(&weight);
    }
    Ok(acc)
}

/// The weighted closed form given the window `[F_{n-1}, F_n, F_{n+1}, F_{n+2}]`
/// and the precomputed weight `x^{-n}`:
///
/// ```text
/// ( F_{n-1}/x^{n-1} + F_n/x^n - F_{n+1}/x^{n-3} - F_{n+2}/x^{n-2}
///   + x^4 F_0 + x^3 F_1 - x^2 [(ab+1) F_0 - a F_1] - x (F_1 - b F_0) )
/// / (1 - (ab+2)x^2 + x^4)
/// ```
///
/// The four tail terms are `x^{-n} (x F_{n-1} + F_n - x^3 F_{n+1} - x^2 F_{n+2})`.
pub(crate) fn weighted_closed_from_window(
    p: &Params,
    x: &Rational,
    inv_x_pow_n: &Rational,
    window: &[Mat2; 4],
) -> Result<Mat2> {
    let quartic = quartic_at(p, x);
    if quartic.is_zero() {
        return Err(Error::SingularDenominator(x.to_string()));
    }
    let [f_prev, f_n, f_next, f_next2] = window;
    let x2 = x * x;
    let x3 = &x2 * x;
    let x4 = &x3 * x;

    let tail = &(&f_prev.scale(x) + f_n) - &(&f_next.scale(&x3) + &f_next2.scale(&x2));
    let (f0, f1) = f_initial(p);
    let head = &(&f0.scale(&x4) + &f1.scale(&x3))
        - &(&(&f0.scale(&(p.ab() + Rational::one())) - &f1.scale(p.a())).scale(&x2)
            + &(&f1 - &f0.scale(p.b())).scale(x));
    let numerator = &tail.scale(inv_x_pow_n) + &head;
    Ok(numerator.scale(&quartic.recip().expect("quartic is nonzero")))
}

/// `sum_{k=0}^{n} F_k x^{-k}` by the closed form; `n >= 2`, `x != 0`, and the
/// quartic must not vanish at `x`.
pub fn weighted_sum_closed(p: &Params, n: i64, x: &Rational) -> Result<Mat2> {
    if x.is_zero() {
        return Err(Error::ZeroEvaluationPoint);
    }
    check_min_index(n, 2)?;
    let mut it = f_iter(p).skip(n as usize - 1);
    let window = [(); 4].map(|()| it.next().expect("infinite"));
    let inv_x_pow_n = x.recip().expect("x is nonzero").pow(n);
    weighted_closed_from_window(p, x, &inv_x_pow_n, &window)
}

/// Runs both weighted-sum routes and reports whether they agree.
pub fn weighted_sum_report(p: &Params, n: i64, x: &Rational) -> Result<SumReport> {
    Ok(SumReport::new(
        n,
        weighted_sum_direct(p, n, x)?,
        weighted_sum_closed(p, n, x)?,
    ))
}
