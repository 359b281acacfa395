use thiserror::Error;

/// Errors produced across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a bijection of {{1..{n}}}: {images:?}")]
    NotABijection { n: usize, images: Vec<usize> },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("exponent vector {0:?} lies outside the staircase")]
    ExponentOutOfStaircase(Vec<u32>),

    #[error("non-integral triangular solve: {0}")]
    NonIntegralSolve(String),

    #[error("polynomial is not expandable in the Schubert basis of S_{0}")]
    NotExpandable(usize),

    #[error("field mismatch: (p={0}, n={1}) vs (p={2}, n={3})")]
    FieldMismatch(u32, usize, u32, usize),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("reference flags are not in general position: {0}")]
    NotGeneric(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
