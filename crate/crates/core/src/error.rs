use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Each variant maps to a stable machine-readable [`Error::kind`] string and a
/// numeric [`Error::code`]; both are part of the CLI error JSON and the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operation requires a nonzero vector")]
    ZeroVector,
    #[error("operation requires a nonzero matrix")]
    ZeroMatrix,
    #[error("configuration is not pointed: the kernel meets the nonnegative orthant")]
    NotPointed,
    #[error("vector is not an element of the Graver basis")]
    NotInGraver,
    #[error("configuration has a free bouquet (columns {0:?})")]
    FreeBouquetPresent(Vec<usize>),
    #[error("configuration is not simple")]
    NotSimple,
    #[error("configuration has free vectors (columns {0:?})")]
    FreeVectorPresent(Vec<usize>),
    #[error("too few columns: need at least {required}, found {found}")]
    TooFewColumns { required: usize, found: usize },
    #[error("parameters are not strictly increasing at position {0}")]
    NonIncreasing(usize),
    #[error("c-vector {0} does not have full support")]
    FullSupportViolated(usize),
    #[error("entries have gcd {gcd}, expected 1 (vector {index})")]
    GcdNotOne { index: usize, gcd: String },
    #[error("c-vector {0} must have a positive first component")]
    FirstComponentNotPositive(usize),
    #[error("lambda-vector {0} does not satisfy lambda . c = 1")]
    BezoutMismatch(usize),
    #[error("index set invalid: {0}")]
    InvalidIndexSet(String),
    #[error("malformed matrix header: {0}")]
    MalformedHeader(String),
    #[error("entry count mismatch: header declares {expected}, found {found}")]
    EntryCountMismatch { expected: usize, found: usize },
    #[error("non-integer token {0:?}")]
    NonIntegerToken(String),
    #[error("value does not fit in a 64-bit integer")]
    Overflow,
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::ZeroVector => "ZeroVector",
            Error::ZeroMatrix => "ZeroMatrix",
            Error::NotPointed => "NotPointed",
            Error::NotInGraver => "NotInGraver",
            Error::FreeBouquetPresent(_) => "FreeBouquetPresent",
            Error::NotSimple => "NotSimple",
            Error::FreeVectorPresent(_) => "FreeVectorPresent",
            Error::TooFewColumns { .. } => "TooFewColumns",
            Error::NonIncreasing(_) => "NonIncreasing",
            Error::FullSupportViolated(_) => "FullSupportViolated",
            Error::GcdNotOne { .. } => "GcdNotOne",
            Error::FirstComponentNotPositive(_) => "FirstComponentNotPositive",
            Error::BezoutMismatch(_) => "BezoutMismatch",
            Error::InvalidIndexSet(_) => "InvalidIndexSet",
            Error::MalformedHeader(_) => "MalformedHeader",
            Error::EntryCountMismatch { .. } => "EntryCountMismatch",
            Error::NonIntegerToken(_) => "NonIntegerToken",
            Error::Overflow => "Overflow",
            Error::Io(_) => "Io",
        }
    }

    /// Stable numeric code, also used as the process exit status (offset by
    /// the CLI) and as the C ABI status value.
    pub fn code(&self) -> i32 {
        match self {
            Error::LengthMismatch { .. } => 10,
            Error::ShapeMismatch(_) => 11,
            Error::ZeroVector => 12,
            Error::ZeroMatrix => 13,
            Error::NotPointed => 20,
            Error::NotInGraver => 21,
            Error::FreeBouquetPresent(_) => 22,
            Error::NotSimple => 23,
            Error::FreeVectorPresent(_) => 24,
            Error::TooFewColumns { .. } => 30,
            Error::NonIncreasing(_) => 31,
            Error::FullSupportViolated(_) => 40,
            Error::GcdNotOne { .. } => 41,
            Error::FirstComponentNotPositive(_) => 42,
            Error::BezoutMismatch(_) => 43,
            Error::InvalidIndexSet(_) => 44,
            Error::MalformedHeader(_) => 50,
            Error::EntryCountMismatch { .. } => 51,
            Error::NonIntegerToken(_) => 52,
            Error::Overflow => 60,
            Error::Io(_) => 70,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
