use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    InexactDivision,
    #[error("field context mismatch")]
    ContextMismatch,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("bad place: {0}")]
    BadPlace(String),
    #[error("polynomial is not separable")]
    NotSeparable,
    #[error("linearly dependent lattice basis")]
    DependentBasis,
    #[error("prime mismatch between F_p subspaces")]
    PrimeMismatch,
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("index {index} out of range (only {count} available)")]
    IndexOutOfRange { index: u64, count: u64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precision too low: {0}")]
    PrecisionTooLow(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that indicate a bug or a violated precondition inside
    /// the library rather than bad user input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
