use core::fmt;

/// Errors raised by the exact-arithmetic and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `divexact` was asked to divide by a non-divisor.
    NotDivisible,
    /// Division by the zero polynomial or zero series.
    DivisionByZero,
    /// Generator list with gcd != 1; the complement would be infinite.
    NotNumerical,
    /// `make_semigroup` received an empty generator list.
    EmptyGenerators,
    /// Series truncation order too short for the requested normal form.
    TruncationTooShort,
    /// Curve description with negative geometric genus.
    InvalidCurveSpec,
    /// The series is not a finite integer combination of `(q/(1-q)^2)^{1-h}`.
    DecompositionFailure,
    /// The Severi linear system left a nonzero residual.
    InversionFailure,
    /// Malformed input to a domain operation.
    InvalidInput(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisible => write!(f, "polynomial division left a nonzero remainder"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotNumerical => write!(f, "gcd of generators is not 1"),
            Error::EmptyGenerators => write!(f, "empty generator list"),
            Error::TruncationTooShort => write!(f, "truncation order too short"),
            Error::InvalidCurveSpec => write!(f, "geometric genus would be negative"),
            Error::DecompositionFailure => write!(f, "series does not admit an integer BPS decomposition"),
            Error::InversionFailure => write!(f, "Severi system has a nonzero residual"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
