//! Arbitrary-precision exact rational numbers.
//!
//! [`Rational`] wraps `num_rational::BigRational` and keeps every value in
//! canonical form: positive denominator, numerator and denominator coprime.
//! Arithmetic is exact. Division by zero is reported (checked entry points)
//! or panics (the `/` operator), never absorbed into a sentinel value.
//!
//! The text format is `p` or `p/q` with an optional leading sign; the same
//! format is used wherever a rational appears in JSON.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number in canonical (reduced) form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

/// Exact `base^e` by binary exponentiation.
pub(crate) fn bigint_pow(base: &BigInt, mut e: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut sq = base.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = &acc * &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    acc
}

// The underlying bignum gcd has no fast path for small operands, so a
// reduction against a denominator of 1 costs a full scan of the other
// operand. Integer-valued rationals are everywhere in this crate (whole
// sequences, when the parameters are integers), so the arithmetic below
// special-cases them: those results are canonical by construction and
// need no gcd at all.

fn add_reduced(lhs: &BigRational, rhs: &BigRational) -> BigRational {
    if rhs.denom().is_one() {
        if lhs.denom().is_one() {
            return BigRational::new_raw(lhs.numer() + rhs.numer(), BigInt::one());
        }
        // p/q + m = (p + m q)/q, coprime because gcd(p, q) = 1
        return BigRational::new_raw(lhs.numer() + rhs.numer() * lhs.denom(), lhs.denom().clone());
    }
    if lhs.denom().is_one() {
        return BigRational::new_raw(rhs.numer() + lhs.numer() * rhs.denom(), rhs.denom().clone());
    }
    lhs + rhs
}

fn sub_reduced(lhs: &BigRational, rhs: &BigRational) -> BigRational {
    if rhs.denom().is_one() {
        if lhs.denom().is_one() {
            return BigRational::new_raw(lhs.numer() - rhs.numer(), BigInt::one());
        }
        return BigRational::new_raw(lhs.numer() - rhs.numer() * lhs.denom(), lhs.denom().clone());
    }
    if lhs.denom().is_one() {
        return BigRational::new_raw(lhs.numer() * rhs.denom() - rhs.numer(), rhs.denom().clone());
    }
    lhs - rhs
}

fn is_unit(n: &BigInt) -> bool {
    n.is_one() || (-n).is_one()
}

fn mul_reduced(lhs: &BigRational, rhs: &BigRational) -> BigRational {
    if lhs.denom().is_one() && rhs.denom().is_one() {
        return BigRational::new_raw(lhs.numer() * rhs.numer(), BigInt::one());
    }
    // multiplying by +-1 or by +-m/1 with m sharing no factor check is the
    // delegated path; the unit cases keep canonical form trivially
    if rhs.denom().is_one() && is_unit(rhs.numer()) {
        return BigRational::new_raw(lhs.numer() * rhs.numer(), lhs.denom().clone());
    }
    if lhs.denom().is_one() && is_unit(lhs.numer()) {
        return BigRational::new_raw(lhs.numer() * rhs.numer(), rhs.denom().clone());
    }
    lhs * rhs
}

impl Rational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self(BigRational::one())
    }

    /// Builds `numer/denom` in canonical form.
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (numer, denom) = if denom.is_negative() {
            (-numer, -denom)
        } else {
            (numer, denom)
        };
        if denom.is_one() || is_unit(&numer) || numer.is_zero() {
            let denom = if numer.is_zero() {
                BigInt::one()
            } else {
                denom
            };
            return Ok(Self(BigRational::new_raw(numer, denom)));
        }
        Ok(Self(BigRational::new(numer, denom)))
    }

    /// Convenience constructor for small literal fractions.
    ///
    /// Panics if `denom` is zero; use [`Rational::new`] for fallible input.
    pub fn frac(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self(BigRational::new(numer.into(), denom.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse; zero has none.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(&self.0 / &rhs.0))
    }

    /// Exact integer power by binary exponentiation; numerator and
    /// denominator are powered separately (powers of coprime integers stay
    /// coprime, so no reduction is needed).
    ///
    /// Panics if `self` is zero and `exp` is negative.
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Self::one();
        }
        let base = if exp < 0 {
            assert!(!self.is_zero(), "zero has no negative powers");
            self.0.recip()
        } else {
            self.0.clone()
        };
        let e = exp.unsigned_abs();
        Self(BigRational::new_raw(
            bigint_pow(base.numer(), e),
            bigint_pow(base.denom(), e),
        ))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Self(BigRational::from_integer(n))
    }
}

macro_rules! impl_binop {
    ($imp:ident, $method:ident, $helper:ident) => {
        impl $imp<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($helper(&self.0, &rhs.0))
            }
        }
        impl $imp<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
        impl $imp<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $imp<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_reduced);
impl_binop!(Sub, sub, sub_reduced);
impl_binop!(Mul, mul, mul_reduced);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div<Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self / &rhs
    }
}

impl Div<&Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        &self / rhs
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let err = || Error::ParseRational(s.to_string());
        match text.split_once('/') {
            Some((n, d)) => {
                let numer = BigInt::from_str(n.trim()).map_err(|_| err())?;
                let denom = BigInt::from_str(d.trim()).map_err(|_| err())?;
                if denom.is_zero() {
                    return Err(err());
                }
                Ok(Self(BigRational::new(numer, denom)))
            }
            None => {
                let numer = BigInt::from_str(text).map_err(|_| err())?;
                Ok(Self(BigRational::from_integer(numer)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}
