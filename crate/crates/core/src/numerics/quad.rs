//! The quadratic extension ring Q[sqrt(D)].
//!
//! Elements are pairs `x + y*sqrt(D)` with rational `x`, `y`. The
//! discriminant `D` is not stored per element; it belongs to the [`QuadCtx`]
//! that performs any operation needing it (multiplication, norms, inverses,
//! powers). Values produced under different contexts must not be combined:
//! nothing here coerces between discriminants, so keeping one context per
//! `Params` is the caller's contract.
//!
//! When `D` is a perfect rational square the ring has zero divisors, so
//! inversion is guarded by a norm check instead of assuming a field.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::numerics::{Params, Rational};

/// An element `x + y*sqrt(D)` of the quadratic ring for some ambient `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    rat: Rational,
    irr: Rational,
}

impl QuadExt {
    pub fn new(rat: Rational, irr: Rational) -> Self {
        Self { rat, irr }
    }

    pub fn from_rational(rat: Rational) -> Self {
        Self::new(rat, Rational::zero())
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The element `sqrt(D)` itself, i.e. `0 + 1*sqrt(D)`.
    pub fn sqrt_disc() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Coefficient of 1.
    pub fn rat(&self) -> &Rational {
        &self.rat
    }

    /// Coefficient of `sqrt(D)`.
    pub fn irr(&self) -> &Rational {
        &self.irr
    }

    /// `x - y*sqrt(D)`; a ring homomorphism for every ambient `D`.
    pub fn conjugate(&self) -> Self {
        Self::new(self.rat.clone(), -&self.irr)
    }

    /// An element equals a plain rational exactly when its `sqrt(D)`
    /// coefficient is zero.
    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    /// The rational value of this element, if it has one.
    pub fn into_rational(self) -> Option<Rational> {
        self.irr.is_zero().then_some(self.rat)
    }
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.rat + &rhs.rat, &self.irr + &rhs.irr)
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.rat - &rhs.rat, &self.irr - &rhs.irr)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.rat, -&self.irr)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(D)", self.rat, self.irr)
    }
}

/// Evaluation context carrying the ambient discriminant `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadCtx {
    disc: Rational,
}

impl QuadCtx {
    pub fn new(disc: Rational) -> Self {
        Self { disc }
    }

    pub fn for_params(p: &Params) -> Self {
        Self::new(p.disc().clone())
    }

    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    /// Ring product: `(x1 + y1 s)(x2 + y2 s) = (x1 x2 + D y1 y2) + (x1 y2 + x2 y1) s`.
    pub fn mul(&self, lhs: &QuadExt, rhs: &QuadExt) -> QuadExt {
        let rat = &(&lhs.rat * &rhs.rat) + &(&self.disc * &(&lhs.irr * &rhs.irr));
        let irr = &(&lhs.rat * &rhs.irr) + &(&lhs.irr * &rhs.rat);
        QuadExt::new(rat, irr)
    }

    /// Exact `n`-th power by binary exponentiation; `pow(x, 0) = 1`.
    pub fn pow(&self, x: &QuadExt, n: u64) -> QuadExt {
        let mut acc = QuadExt::one();
        let mut sq = x.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.mul(&sq, &sq);
            }
        }
        acc
    }

    /// The field norm `x^2 - D y^2`; multiplicative, zero exactly on
    /// non-invertible elements.
    pub fn norm(&self, x: &QuadExt) -> Rational {
        &(&x.rat * &x.rat) - &(&self.disc * &(&x.irr * &x.irr))
    }

    /// Multiplicative inverse `conj(x) / norm(x)`.
    pub fn inv(&self, x: &QuadExt) -> Result<QuadExt> {
        let n = self.norm(x);
        if n.is_zero() {
            return Err(Error::NonInvertible);
        }
        let n_inv = n.recip().expect("norm is nonzero");
        Ok(QuadExt::new(&x.rat * &n_inv, -&(&x.irr * &n_inv)))
    }

    /// Exact quotient; fails when `rhs` has zero norm.
    pub fn div(&self, lhs: &QuadExt, rhs: &QuadExt) -> Result<QuadExt> {
        Ok(self.mul(lhs, &self.inv(rhs)?))
    }
}

/// The larger characteristic root `alpha = (ab + sqrt(D)) / 2` as an element
/// of the quadratic ring for `p`'s discriminant.
pub fn alpha(p: &Params) -> QuadExt {
    let half = Rational::frac(1, 2);
    QuadExt::new(p.ab() * &half, half)
}

/// The conjugate root `beta = (ab - sqrt(D)) / 2`.
pub fn beta(p: &Params) -> QuadExt {
    alpha(p).conjugate()
}
