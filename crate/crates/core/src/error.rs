use std::fmt;

/// Error type shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter was outside its documented range.
    InvalidParameter(String),
    /// Two objects that must live over the same variable set (or vertex set) do not.
    DimensionMismatch { expected: usize, found: usize },
    /// A documented precondition was violated.
    Precondition(String),
    /// An index was out of range.
    IndexOutOfRange { index: usize, len: usize },
    /// Text input could not be parsed.
    Parse(String),
    /// An operation restricted to squarefree monomial ideals received a non-squarefree one.
    NotSquarefree,
    /// An operation restricted to pure simplicial complexes received a non-pure one.
    NotPure,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::Precondition(msg) => write!(f, "precondition violation: {msg}"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (len {len})")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotSquarefree => write!(f, "ideal is not squarefree"),
            Error::NotPure => write!(f, "complex is not pure"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
