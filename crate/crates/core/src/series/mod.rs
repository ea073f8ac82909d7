//! Generating functions for the matrix sequence.
//!
//! The whole sequence is packed into a matrix of rational functions over the
//! shared quartic denominator `1 - (ab+2)x^2 + x^4`; expanding that object as
//! a power series recovers `F_0, F_1, ...` exactly. The reciprocal-power sum
//! `sum_k F_k x^{-k}` has its own printed form, which is verified by
//! substituting `x = 1/t` and expanding in `t`.
//!
//! Rational functions are kept exactly as constructed; no common-factor
//! reduction is performed, so tests can compare against the printed shapes.

mod poly;

pub use poly::Poly;

use crate::error::{Error, Result};
use crate::matrixseq::Mat2;
use crate::numerics::{Params, Rational};

/// A 2x2 matrix of polynomial numerators over one scalar polynomial
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatRatFunc {
    num: [[Poly; 2]; 2],
    den: Poly,
}

impl MatRatFunc {
    /// Panics if the denominator is the zero polynomial.
    pub fn new(num: [[Poly; 2]; 2], den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator polynomial");
        Self { num, den }
    }

    pub fn numerator(&self) -> &[[Poly; 2]; 2] {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    /// Substitutes `x = 1/t` and clears denominators, yielding the same
    /// function as a rational function in `t`: with `d` the largest degree
    /// in sight, every polynomial `p(x)` becomes `t^d p(1/t)`.
    fn reciprocal_substitution(&self) -> Self {
        let num_degree = self
            .num
            .iter()
            .flatten()
            .filter_map(Poly::degree)
            .max()
            .unwrap_or(0);
        let d = num_degree.max(self.den.degree().unwrap_or(0));
        let num = [0, 1].map(|r| [0, 1].map(|c| self.num[r][c].reversed_to(d)));
        Self::new(num, self.den.reversed_to(d))
    }
}

/// Truncated power series with matrix coefficients: `sum_{i<order} C_i t^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrunc {
    coeffs: Vec<Mat2>,
}

impl SeriesTrunc {
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coefficients(&self) -> &[Mat2] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &Mat2 {
        &self.coeffs[i]
    }
}

/// The generating function `sum_i F_i x^i` as printed:
///
/// ```text
/// 1 / (1 - (ab+2)x^2 + x^4) * [ 1 + bx - x^2            (b/a)x + bx^2 - (b/a)x^3 ]
///                             [ x + ax^2 - x^3          1 - (ab+1)x^2 + bx^3     ]
/// ```
pub fn gf_matrix(p: &Params) -> MatRatFunc {
    let (a, b) = (p.a().clone(), p.b().clone());
    let ratio = p.b_over_a();
    let one = Rational::one();
    let e11 = Poly::new(vec![one.clone(), b.clone(), Rational::from(-1)]);
    let e12 = Poly::new(vec![Rational::zero(), ratio.clone(), b.clone(), -&ratio]);
    let e21 = Poly::new(vec![Rational::zero(), one.clone(), a, Rational::from(-1)]);
    let e22 = Poly::new(vec![one, Rational::zero(), -(p.ab() + Rational::one()), b]);
    MatRatFunc::new([[e11, e12], [e21, e22]], denominator_quartic(p))
}

/// The shared denominator `1 - (ab+2)x^2 + x^4`.
pub fn denominator_quartic(p: &Params) -> Poly {
    Poly::new(vec![
        Rational::one(),
        Rational::zero(),
        -(p.ab() + Rational::from(2)),
        Rational::zero(),
        Rational::one(),
    ])
}

/// Maclaurin coefficients `C_0 .. C_{order-1}` of a matrix rational
/// function, by exact long division; the denominator needs a nonzero
/// constant term.
pub fn expand(rf: &MatRatFunc, order: usize) -> Result<SeriesTrunc> {
    let d0 = rf.den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NonUnitDenominator);
    }
    let d0_inv = d0.recip().expect("nonzero constant term");
    let den_degree = rf.den.degree().unwrap_or(0);
    let mut coeffs: Vec<Mat2> = Vec::with_capacity(order);
    for i in 0..order {
        let mut num_i = Mat2::new(
            rf.num[0][0].coeff(i),
            rf.num[0][1].coeff(i),
            rf.num[1][0].coeff(i),
            rf.num[1][1].coeff(i),
        );
        for j in 1..=den_degree.min(i) {
            let dj = rf.den.coeff(j);
            if dj.is_zero() {
                continue;
            }
            num_i = &num_i - &coeffs[i - j].scale(&dj);
        }
        coeffs.push(num_i.scale(&d0_inv));
    }
    Ok(SeriesTrunc { coeffs })
}

/// The reciprocal-power sum `sum_k F_k x^{-k}` as printed:
///
/// ```text
/// x / (1 - (ab+2)x^2 + x^4) * [ x^3 + bx^2 - x          (b/a)x^2 + bx - (b/a) ]
///                             [ x^2 + ax - 1            x^3 - (ab+1)x + b     ]
/// ```
///
/// then rewritten in `t = 1/x`, so that its Maclaurin expansion in `t` has
/// `F_k` as the coefficient of `t^k`.
pub fn reciprocal_gf(p: &Params) -> MatRatFunc {
    let (a, b) = (p.a().clone(), p.b().clone());
    let ratio = p.b_over_a();
    let one = Rational::one();
    let e11 = Poly::new(vec![
        Rational::zero(),
        Rational::from(-1),
        b.clone(),
        one.clone(),
    ]);
    let e12 = Poly::new(vec![-&ratio, b.clone(), ratio]);
    let e21 = Poly::new(vec![Rational::from(-1), a, one.clone()]);
    let e22 = Poly::new(vec![b, -(p.ab() + Rational::one()), Rational::zero(), one]);
    let x = Poly::monomial(Rational::one(), 1);
    let num = [[&x * &e11, &x * &e12], [&x * &e21, &x * &e22]];
    MatRatFunc::new(num, denominator_quartic(p)).reciprocal_substitution()
}
