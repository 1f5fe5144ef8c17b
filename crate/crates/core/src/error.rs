use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type `{0}`: {1}")]
    InvalidCartanType(String, String),

    #[error("invalid grading: {0}")]
    InvalidGrading(String),

    #[error("cannot parse grading spec `{0}`: {1}")]
    Parse(String, String),

    #[error("{0}")]
    Usage(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a root: {0:?}")]
    NotARoot(Vec<i32>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("slice Delta({0}) is empty")]
    EmptySlice(i32),

    #[error("not a lower ideal: {0}")]
    NotAnIdeal(String),

    #[error("not an antichain: {0}")]
    NotAnAntichain(String),

    #[error("not an upper ideal of the root poset: {0}")]
    NotAnUpperIdeal(String),

    #[error("set is not bi-convex: {0}")]
    NotBiconvex(String),

    #[error("element is not a minimal coset representative: {0}")]
    NotInW0(String),

    #[error("rank bound exceeded: {0}")]
    RankBound(String),

    #[error("regular point lies on hyperplane of root {0:?}")]
    NotRegular(Vec<i32>),

    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
