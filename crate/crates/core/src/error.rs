//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything a caller can anticipate going wrong in this crate.
///
/// Contract violations that indicate a caller bug (dividing a `Rational`
/// by zero through the `/` operator, raising zero to a negative power)
/// panic instead of returning one of these variants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Sequence parameters must be nonzero.
    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),

    /// An index below the smallest one an operation supports.
    #[error("index {index} out of range (minimum {min})")]
    IndexOutOfRange { index: i64, min: i64 },

    /// Rational division by zero via a checked entry point.
    #[error("division by zero")]
    DivisionByZero,

    /// Inversion of a quadratic-ring element whose norm is zero.
    #[error("quadratic element has zero norm and no inverse")]
    NonInvertible,

    /// `ab = -4` makes the two characteristic roots coincide, so the Binet
    /// route has nothing to divide by.
    #[error("degenerate discriminant (ab = -4): the Binet roots coincide")]
    DegenerateDiscriminant,

    /// A Binet evaluation left a nonzero sqrt(D) component where a rational
    /// value was required. Indicates a bug in this crate, not bad input.
    #[error("internal error: irrational residue in a Binet evaluation")]
    InternalIrrationalResidue,

    /// Power-series expansion needs a denominator with a nonzero constant
    /// term.
    #[error("series denominator has zero constant term")]
    NonUnitDenominator,

    /// Weighted sums evaluate negative powers of x, so x must be nonzero.
    #[error("evaluation point x must be nonzero")]
    ZeroEvaluationPoint,

    /// The quartic 1 - (ab+2)x^2 + x^4 vanishes at the evaluation point.
    #[error("denominator 1 - (ab+2)x^2 + x^4 vanishes at x = {0}")]
    SingularDenominator(String),

    /// Text that does not parse as `p` or `p/q`.
    #[error("cannot parse `{0}` as a rational (expected `p` or `p/q`)")]
    ParseRational(String),
}
