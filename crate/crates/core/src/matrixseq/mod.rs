//! The bi-periodic Fibonacci matrix sequence `F_n(a, b)`.
//!
//! `F_0` is the identity and `F_1 = [[b, b/a], [1, 0]]` (the classical
//! Fibonacci Q-matrix when `a = b = 1`); later terms follow the same
//! alternating recurrence as the scalar sequence. Besides the defining
//! recurrence this module evaluates the closed form built from scalar
//! sequence values, the determinant and Cassini identities it implies, and
//! the Binet formula over the quadratic ring Q[sqrt(D)].

mod mat2;

pub use mat2::Mat2;

use crate::error::{Error, Result};
use crate::numerics::{alpha, beta, Params, QuadCtx, QuadExt, Rational};
use crate::sequence::{check_min_index, epsilon, q_window};

/// The initial pair `(F_0, F_1) = (identity, [[b, b/a], [1, 0]])`.
pub fn f_initial(p: &Params) -> (Mat2, Mat2) {
    let f1 = Mat2::new(
        p.b().clone(),
        p.b_over_a(),
        Rational::one(),
        Rational::zero(),
    );
    (Mat2::identity(), f1)
}

/// Infinite iterator over `F_0, F_1, F_2, ...` by the defining recurrence.
pub struct FIter<'a> {
    params: &'a Params,
    curr: Mat2,
    next: Mat2,
    next_index: i64,
}

impl Iterator for FIter<'_> {
    type Item = Mat2;

    fn next(&mut self) -> Option<Mat2> {
        let out = self.curr.clone();
        let mult = if self.next_index % 2 == 0 {
            self.params.a()
        } else {
            self.params.b()
        };
        let upcoming = &self.next.scale(mult) + &self.curr;
        self.curr = std::mem::replace(&mut self.next, upcoming);
        self.next_index += 1;
        Some(out)
    }
}

/// Iterates the matrix sequence from `F_0` upward.
pub fn f_iter(p: &Params) -> FIter<'_> {
    let (f0, f1) = f_initial(p);
    FIter {
        params: p,
        curr: f0,
        next: f1,
        next_index: 2,
    }
}

/// `F_n` by direct iteration of the defining recurrence; `n >= 0`.
pub fn f_recurrence(p: &Params, n: i64) -> Result<Mat2> {
    check_min_index(n, 0)?;
    Ok(f_iter(p).nth(n as usize).expect("infinite"))
}

/// Builds the closed-form matrix
/// `[[(b/a)^eps(n) q_{n+1}, (b/a) q_n], [q_n, (b/a)^eps(n) q_{n-1}]]`
/// from three consecutive scalar values.
pub(crate) fn closed_from_window(
    p: &Params,
    n: i64,
    q_prev: &Rational,
    q_n: &Rational,
    q_next: &Rational,
) -> Mat2 {
    let ratio = p.b_over_a();
    let diag = if epsilon(n) == 1 {
        ratio.clone()
    } else {
        Rational::one()
    };
    Mat2::new(&diag * q_next, &ratio * q_n, q_n.clone(), &diag * q_prev)
}

/// `F_n` via the closed form over scalar sequence values; `n >= 0`.
pub fn f_closed(p: &Params, n: i64) -> Result<Mat2> {
    check_min_index(n, 0)?;
    let (q_prev, q_n, q_next) = q_window(p, n);
    Ok(closed_from_window(p, n, &q_prev, &q_n, &q_next))
}

/// Determinant of `F_n`, evaluated from the recurrence route.
///
/// The identity it satisfies is `det(F_n) = (-b/a)^eps(n)`: `-b/a` for odd
/// `n`, `1` for even `n` (trivially including `n = 0`).
pub fn f_det(p: &Params, n: i64) -> Result<Rational> {
    Ok(f_recurrence(p, n)?.det())
}

/// Both sides of the Cassini identity from three consecutive scalar values:
/// left `a^{1-eps} b^{eps} q_{n+1} q_{n-1} - a^{eps} b^{1-eps} q_n^2`,
/// right `a (-1)^n`.
pub(crate) fn cassini_from_window(
    p: &Params,
    n: i64,
    q_prev: &Rational,
    q_n: &Rational,
    q_next: &Rational,
) -> (Rational, Rational) {
    let (outer, inner) = if epsilon(n) == 1 {
        (p.b(), p.a())
    } else {
        (p.a(), p.b())
    };
    let lhs = &(outer * &(q_next * q_prev)) - &(inner * &(q_n * q_n));
    let rhs = if n % 2 == 0 { p.a().clone() } else { -p.a() };
    (lhs, rhs)
}

/// The Cassini identity's two sides, computed independently; `n >= 1`.
///
/// The contract is `lhs = rhs = a(-1)^n`; callers compare the components.
pub fn cassini_check(p: &Params, n: i64) -> Result<(Rational, Rational)> {
    check_min_index(n, 1)?;
    let (q_prev, q_n, q_next) = q_window(p, n);
    Ok(cassini_from_window(p, n, &q_prev, &q_n, &q_next))
}

/// The per-index coefficient matrices of the Binet formula.
///
/// For index `n` with `e = eps(n)` and `k = floor(n/2)`:
///
/// * `a1 = [F_1 - b F_0]` (odd `n`) or `[a F_1 - F_0 - ab F_0]` (even `n`),
///   divided by `(ab)^k (alpha - beta)`;
/// * `b1 = b^e F_0 / ((ab)^{k+1} (alpha - beta))`.
///
/// The parity exponent selects between the two bracket matrices; it is not
/// a matrix power. Entries live in Q[sqrt(D)] because of the division by
/// `alpha - beta = sqrt(D)`.
pub struct BinetCoefficients {
    pub a1: [[QuadExt; 2]; 2],
    pub b1: [[QuadExt; 2]; 2],
}

impl BinetCoefficients {
    /// Computes the coefficients for index `n`; the discriminant must be
    /// nonzero since both denominators carry `alpha - beta`.
    pub fn new(p: &Params, n: i64) -> Result<Self> {
        check_min_index(n, 0)?;
        if p.is_degenerate() {
            return Err(Error::DegenerateDiscriminant);
        }
        let ctx = QuadCtx::for_params(p);
        let (f0, f1) = f_initial(p);
        let half_count = (n as u64) / 2;
        let ab_k = p.ab().pow(half_count as i64);

        let bracket = if epsilon(n) == 1 {
            &f1 - &f0.scale(p.b())
        } else {
            &(&f1.scale(p.a()) - &f0) - &f0.scale(p.ab())
        };
        // (ab)^k (alpha - beta) = 0 + (ab)^k sqrt(D); its norm is
        // -D (ab)^{2k}, nonzero whenever D is.
        let denom_a = QuadExt::new(Rational::zero(), ab_k.clone());
        let denom_b = QuadExt::new(Rational::zero(), &ab_k * p.ab());
        let inv_a = ctx.inv(&denom_a)?;
        let inv_b = ctx.inv(&denom_b)?;

        let b_scale = if epsilon(n) == 1 {
            p.b().clone()
        } else {
            Rational::one()
        };
        let quad_entry = |m: &Mat2, row: usize, col: usize, scale: &Rational, inv: &QuadExt| {
            ctx.mul(&QuadExt::from_rational(m.entries()[row][col] * scale), inv)
        };

        let one = Rational::one();
        let a1 = [0, 1].map(|r| [0, 1].map(|c| quad_entry(&bracket, r, c, &one, &inv_a)));
        let b1 = [0, 1].map(|r| [0, 1].map(|c| quad_entry(&f0, r, c, &b_scale, &inv_b)));
        Ok(Self { a1, b1 })
    }
}

/// `F_n` by the Binet formula
/// `A_1 (alpha^n - beta^n) + B_1 (alpha^{2 floor(n/2) + 2} - beta^{2 floor(n/2) + 2})`,
/// evaluated exactly in Q[sqrt(D)].
///
/// Every entry of the result must come out rational; a nonzero sqrt(D)
/// component is reported as [`Error::InternalIrrationalResidue`] and means a
/// bug in this crate. The degenerate case `ab = -4` (where the two roots
/// coincide) is rejected up front.
pub fn f_binet(p: &Params, n: i64) -> Result<Mat2> {
    let coeffs = BinetCoefficients::new(p, n)?;
    let ctx = QuadCtx::for_params(p);
    let (al, be) = (alpha(p), beta(p));
    let exp = n as u64;
    let even_exp = 2 * (exp / 2) + 2;
    let diff_n = &ctx.pow(&al, exp) - &ctx.pow(&be, exp);
    let diff_even = &ctx.pow(&al, even_exp) - &ctx.pow(&be, even_exp);

    let mut entries = Vec::with_capacity(4);
    for (a1_row, b1_row) in coeffs.a1.iter().zip(&coeffs.b1) {
        for (a1, b1) in a1_row.iter().zip(b1_row) {
            let value = &ctx.mul(a1, &diff_n) + &ctx.mul(b1, &diff_even);
            entries.push(
                value
                    .into_rational()
                    .ok_or(Error::InternalIrrationalResidue)?,
            );
        }
    }
    let [e11, e12, e21, e22]: [Rational; 4] = entries.try_into().expect("four entries");
    Ok(Mat2::new(e11, e12, e21, e22))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::q_recurrence;

    fn params(a: i64, b: i64) -> Params {
        Params::from_ints(a, b).unwrap()
    }

    fn frac_params(an: i64, ad: i64, bn: i64, bd: i64) -> Params {
        Params::new(Rational::frac(an, ad), Rational::frac(bn, bd)).unwrap()
    }

    #[test]
    fn initial_matrices() {
        let (f0, f1) = f_initial(&params(2, 3));
        assert_eq!(f0, Mat2::identity());
        assert_eq!(
            f1,
            Mat2::new(3.into(), Rational::frac(3, 2), 1.into(), 0.into())
        );
        // a = b = 1 gives the classical Q-matrix
        let (_, q) = f_initial(&params(1, 1));
        assert_eq!(q, Mat2::new(1.into(), 1.into(), 1.into(), 0.into()));
    }

    #[test]
    fn recurrence_matches_hand_expansion() {
        let p = params(2, 3);
        let ab_plus_1 = p.ab() + Rational::one();
        let f2 = f_recurrence(&p, 2).unwrap();
        assert_eq!(
            f2,
            Mat2::new(
                ab_plus_1.clone(),
                p.b().clone(),
                p.a().clone(),
                Rational::one()
            )
        );
        // F_3 = [[a b^2 + 2b, b^2 + b/a], [ab + 1, b]]
        let f3 = f_recurrence(&p, 3).unwrap();
        assert_eq!(
            f3,
            Mat2::new(24.into(), Rational::frac(21, 2), ab_plus_1, p.b().clone())
        );
        assert_eq!(f_recurrence(&p, 0).unwrap(), Mat2::identity());
        assert!(matches!(
            f_recurrence(&p, -1),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_bases_and_fixed_point() {
        let p = params(2, 3);
        assert_eq!(f_closed(&p, 0).unwrap(), Mat2::identity());
        assert_eq!(f_closed(&p, 1).unwrap(), f_initial(&p).1);
        assert_eq!(
            f_closed(&p, 4).unwrap(),
            Mat2::new(55.into(), 24.into(), 16.into(), 7.into())
        );
    }

    #[test]
    fn closed_form_equals_recurrence() {
        for p in [params(1, 1), params(2, 3), frac_params(-3, 2, 5, 7)] {
            for (n, by_rec) in f_iter(&p).take(65).enumerate() {
                assert_eq!(f_closed(&p, n as i64).unwrap(), by_rec, "n = {n}");
            }
        }
    }

    #[test]
    fn determinant_alternates() {
        let p = params(2, 3);
        let minus_b_over_a = -p.b_over_a();
        assert_eq!(f_det(&p, 0).unwrap(), Rational::one());
        assert_eq!(f_det(&p, 1).unwrap(), minus_b_over_a);
        assert_eq!(f_det(&p, 2).unwrap(), Rational::one());
        for p in [params(1, 1), frac_params(5, 4, -2, 3)] {
            let minus_ratio = -p.b_over_a();
            for (n, f) in f_iter(&p).take(65).enumerate() {
                let expected = if n % 2 == 1 {
                    minus_ratio.clone()
                } else {
                    Rational::one()
                };
                assert_eq!(f.det(), expected, "n = {n}");
            }
        }
    }

    #[test]
    fn closed_form_determinant_consistency() {
        // (b/a)^{2 eps} q_{n+1} q_{n-1} - (b/a) q_n^2 = (-b/a)^{eps}
        let p = frac_params(2, 1, -7, 3);
        let minus_ratio = -p.b_over_a();
        for n in 0..=64 {
            let det = f_closed(&p, n).unwrap().det();
            let expected = if n % 2 == 1 {
                minus_ratio.clone()
            } else {
                Rational::one()
            };
            assert_eq!(det, expected, "n = {n}");
        }
    }

    #[test]
    fn cassini_identity() {
        let p = params(2, 3);
        let (lhs, rhs) = cassini_check(&p, 1).unwrap();
        assert_eq!(lhs, -p.a());
        assert_eq!(rhs, -p.a());
        let (lhs, rhs) = cassini_check(&p, 2).unwrap();
        assert_eq!(lhs, p.a().clone());
        assert_eq!(rhs, p.a().clone());
        // Fibonacci: q_6 q_4 - q_5^2 = 8*3 - 25 = -1
        let fib = params(1, 1);
        let (lhs, rhs) = cassini_check(&fib, 5).unwrap();
        assert_eq!(lhs, Rational::from(-1));
        assert_eq!(rhs, Rational::from(-1));
        assert!(matches!(
            cassini_check(&p, 0),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn cassini_sweep() {
        for p in [params(1, 1), params(2, 3), frac_params(1, 2, -5, 3)] {
            for n in 1..=64 {
                let (lhs, rhs) = cassini_check(&p, n).unwrap();
                assert_eq!(lhs, rhs, "n = {n}");
            }
        }
    }

    #[test]
    fn binet_reproduces_the_initial_matrices() {
        let p = params(2, 3);
        assert_eq!(f_binet(&p, 0).unwrap(), Mat2::identity());
        assert_eq!(f_binet(&p, 1).unwrap(), f_initial(&p).1);
    }

    #[test]
    fn binet_equals_recurrence_including_awkward_discriminants() {
        // (1, -1): negative discriminant; (1, 1/2): D = 9/4 is a perfect
        // square, so the quadratic ring has zero divisors.
        let cases = [
            params(1, 1),
            params(2, 3),
            params(1, -1),
            frac_params(1, 1, 1, 2),
        ];
        for p in cases {
            for (n, by_rec) in f_iter(&p).take(65).enumerate() {
                assert_eq!(f_binet(&p, n as i64).unwrap(), by_rec, "n = {n}");
            }
        }
    }

    #[test]
    fn binet_rejects_degenerate_discriminant() {
        for p in [params(2, -2), params(-1, 4)] {
            assert!(p.is_degenerate());
            assert_eq!(f_binet(&p, 6), Err(Error::DegenerateDiscriminant));
            assert!(BinetCoefficients::new(&p, 6).is_err());
        }
    }

    #[test]
    fn telescoped_matrix_recurrence() {
        // F_{n+2} = (ab + 2) F_n - F_{n-2}
        for p in [params(2, 3), frac_params(-1, 2, 3, 1)] {
            let fs: Vec<Mat2> = f_iter(&p).take(503).collect();
            let coeff = p.ab() + Rational::from(2);
            for n in 2..=500usize {
                assert_eq!(fs[n + 2], &fs[n].scale(&coeff) - &fs[n - 2], "n = {n}");
            }
        }
    }

    #[test]
    fn scalar_values_embed_in_the_matrix() {
        let p = params(2, 3);
        for n in 0..=32 {
            assert_eq!(
                f_recurrence(&p, n).unwrap().e21,
                q_recurrence(&p, n).unwrap(),
                "n = {n}"
            );
        }
    }
}
