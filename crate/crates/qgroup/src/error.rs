use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// `N` must be odd and at least 3.
    BadRoot(u32),
    DivisionByZero,
    /// Operands built over different roots of unity.
    FieldMismatch { left: u32, right: u32 },
    DimensionMismatch { expected: usize, found: usize },
    /// A check failed; the message names the identity and the offending input.
    CheckFailed(String),
    Unsupported(String),
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadRoot(n) => write!(f, "N must be an odd integer >= 3, got {n}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch { left, right } => {
                write!(f, "operands over different roots of unity (N={left} and N={right})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::CheckFailed(msg) => write!(f, "check failed: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
