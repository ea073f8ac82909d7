//! The `(a, b)` parameter pair and its derived constants.

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// The nonzero rational pair `(a, b)` driving the alternating recurrence,
/// with the cached product `ab` and discriminant `D = ab(ab + 4)`.
///
/// `D` is what the Binet roots differ by: `alpha - beta = sqrt(D)`. It is a
/// property of the pair, so quadratic-ring values derived from one `Params`
/// must not be combined with values derived from another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Params {
    a: Rational,
    b: Rational,
    ab: Rational,
    disc: Rational,
}

impl Params {
    /// Builds the pair; both entries must be nonzero.
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroParameter("a"));
        }
        if b.is_zero() {
            return Err(Error::ZeroParameter("b"));
        }
        let ab = &a * &b;
        let disc = &ab * (&ab + Rational::from(4));
        Ok(Self { a, b, ab, disc })
    }

    /// Convenience constructor from integer parameters.
    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(a.into(), b.into())
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The cached product `ab`.
    pub fn ab(&self) -> &Rational {
        &self.ab
    }

    /// The discriminant `D = a^2 b^2 + 4ab = ab(ab + 4)`.
    pub fn disc(&self) -> &Rational {
        &self.disc
    }

    /// The ratio `b/a`; exact since `a` is nonzero.
    pub fn b_over_a(&self) -> Rational {
        &self.b / &self.a
    }

    /// True when `ab = -4`, i.e. `D = 0` and the Binet roots coincide.
    pub fn is_degenerate(&self) -> bool {
        self.disc.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn caches_product_and_discriminant() {
        let p = Params::from_ints(1, 1).unwrap();
        assert_eq!(p.ab(), &Rational::one());
        assert_eq!(p.disc(), &Rational::from(5));
    }

    #[test]
    fn rejects_zero_parameters() {
        assert_eq!(
            Params::new(Rational::zero(), Rational::from(3)),
            Err(Error::ZeroParameter("a"))
        );
        assert_eq!(
            Params::new(Rational::from(3), Rational::zero()),
            Err(Error::ZeroParameter("b"))
        );
    }

    #[test]
    fn fractional_parameters() {
        let p = Params::new(Rational::one(), Rational::frac(1, 2)).unwrap();
        assert_eq!(p.ab(), &Rational::frac(1, 2));
        assert_eq!(p.disc(), &Rational::frac(9, 4));
    }

    #[test]
    fn degenerate_pair() {
        let p = Params::from_ints(2, -2).unwrap();
        assert!(p.is_degenerate());
        assert!(!Params::from_ints(1, -1).unwrap().is_degenerate());
    }

    proptest! {
        #[test]
        fn disc_matches_definition(
            an in prop_oneof![-9i64..-1, 1i64..9],
            ad in 1i64..9,
            bn in prop_oneof![-9i64..-1, 1i64..9],
            bd in 1i64..9,
        ) {
            let a = Rational::frac(an, ad);
            let b = Rational::frac(bn, bd);
            let p = Params::new(a.clone(), b.clone()).unwrap();
            let ab = &a * &b;
            prop_assert_eq!(p.disc().clone(), &(&ab * &ab) + &(Rational::from(4) * &ab));
        }
    }
}
