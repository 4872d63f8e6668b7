use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vertex pair ({u}, {v}) out of range for n = {n}")]
    PairOutOfRange { u: usize, v: usize, n: usize },

    #[error("negative entry {value} at pair ({u}, {v})")]
    NegativeEntry { u: usize, v: usize, value: i64 },

    #[error("bracket walk must have even length >= 4, got {0}")]
    OddWalk(usize),

    #[error("bracket walk repeats vertex {vertex} at consecutive positions {position} and {next}")]
    RepeatedVertex {
        vertex: usize,
        position: usize,
        next: usize,
    },

    #[error("resource guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("move set is empty")]
    EmptyMoveSet,

    #[error("fiber is empty")]
    EmptyFiber,

    #[error("sample {index} is not an element of the fiber")]
    SampleOutsideFiber { index: usize },

    #[error("vector is not a monomial walk for the given coloring")]
    NotMonomialWalk,

    #[error("coloring is not non-decreasing")]
    NotNonDecreasing,

    #[error("invalid chain configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Short stable identifier, used by the command line for machine-parsable reasons.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidColoring(_) => "invalid-coloring",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::PairOutOfRange { .. } => "pair-out-of-range",
            Error::NegativeEntry { .. } => "negative-entry",
            Error::OddWalk(_) => "odd-walk",
            Error::RepeatedVertex { .. } => "repeated-vertex",
            Error::GuardExceeded(_) => "guard-exceeded",
            Error::EmptyMoveSet => "empty-move-set",
            Error::EmptyFiber => "empty-fiber",
            Error::SampleOutsideFiber { .. } => "sample-outside-fiber",
            Error::NotMonomialWalk => "not-monomial-walk",
            Error::NotNonDecreasing => "not-non-decreasing",
            Error::InvalidConfig(_) => "invalid-config",
            Error::Parse { .. } => "parse",
        }
    }
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
