use std::fmt;

/// Errors produced by the exact-arithmetic kernel and the identity constructors.
///
/// Everything in this crate is exact, so an error is never a numerical
/// artifact: `NotDivisible` or `OddHalfPower` coming out of an identity
/// constructor means the identity itself failed on the given input, and the
/// enclosing check must treat it as a hard failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational was requested with denominator zero.
    ZeroDenominator,
    /// An index argument was below the smallest value the operation is
    /// defined for.
    OutOfDomain {
        op: &'static str,
        min: u32,
        got: u32,
    },
    /// Exact division by `z^power` failed: the coefficient of `z^index` is
    /// nonzero for some `index < power`.
    NotDivisible { power: usize, index: usize },
    /// After applying the expectation functional, a term with an odd power of
    /// `u = sqrt(z)` survived, so the result is not a polynomial in `z`.
    OddHalfPower { power: u32 },
    /// A Lassalle residual was requested for a row that needs more
    /// precomputed `A_n` values than the supplied sequence contains.
    InsufficientLassalle { needed: usize, have: usize },
    /// A rational string did not parse as `p` or `p/q`.
    ParseRational(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator must be nonzero"),
            Error::OutOfDomain { op, min, got } => {
                write!(f, "{op} requires an argument >= {min}, got {got}")
            }
            Error::NotDivisible { power, index } => write!(
                f,
                "polynomial is not divisible by z^{power}: coefficient of z^{index} is nonzero"
            ),
            Error::OddHalfPower { power } => write!(
                f,
                "expectation left a term with odd power u^{power} of u = sqrt(z)"
            ),
            Error::InsufficientLassalle { needed, have } => write!(
                f,
                "residual needs the first {needed} Lassalle numbers, only {have} supplied"
            ),
            Error::ParseRational(s) => write!(f, "cannot parse {s:?} as a rational"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
