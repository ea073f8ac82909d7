//! Exact 2x2 matrices over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::numerics::Rational;

/// A 2x2 matrix with rational entries.
///
/// Serializes as `{"e11": "p/q", "e12": "p/q", "e21": "p/q", "e22": "p/q"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2 {
    pub e11: Rational,
    pub e12: Rational,
    pub e21: Rational,
    pub e22: Rational,
}

impl Mat2 {
    pub fn new(e11: Rational, e12: Rational, e21: Rational, e22: Rational) -> Self {
        Self { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        Self::new(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
        )
    }

    pub fn zero() -> Self {
        Self::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    pub fn det(&self) -> Rational {
        &(&self.e11 * &self.e22) - &(&self.e12 * &self.e21)
    }

    /// Entrywise product with a scalar.
    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.e11 * k, &self.e12 * k, &self.e21 * k, &self.e22 * k)
    }

    /// Row-major view of the entries.
    pub fn entries(&self) -> [[&Rational; 2]; 2] {
        [[&self.e11, &self.e12], [&self.e21, &self.e22]]
    }

    pub fn from_entries(e: [[Rational; 2]; 2]) -> Self {
        let [[e11, e12], [e21, e22]] = e;
        Self::new(e11, e12, e21, e22)
    }

    /// Exact matrix power by binary exponentiation; `pow(0)` is the identity.
    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Self::identity();
        let mut sq = self.clone();
        let mut e = n;
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
}

impl Add<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn add(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e11 + &rhs.e11,
            &self.e12 + &rhs.e12,
            &self.e21 + &rhs.e21,
            &self.e22 + &rhs.e22,
        )
    }
}

impl Sub<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.e11 - &rhs.e11,
            &self.e12 - &rhs.e12,
            &self.e21 - &rhs.e21,
            &self.e22 - &rhs.e22,
        )
    }
}

impl Neg for &Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        Mat2::new(-&self.e11, -&self.e12, -&self.e21, -&self.e22)
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &(&self.e11 * &rhs.e11) + &(&self.e12 * &rhs.e21),
            &(&self.e11 * &rhs.e12) + &(&self.e12 * &rhs.e22),
            &(&self.e21 * &rhs.e11) + &(&self.e22 * &rhs.e21),
            &(&self.e21 * &rhs.e12) + &(&self.e22 * &rhs.e22),
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}
