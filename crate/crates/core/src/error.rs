use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: rows must be nonnegative and weakly decreasing")]
    InvalidPartition(Vec<i64>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("expected a {expected} half-infinite weight, got {found}")]
    WrongKind {
        expected: &'static str,
        found: String,
    },

    #[error("weights of ranks {0} and {1} cannot be combined")]
    RankMismatch(usize, usize),

    #[error("k = {k} is outside 1..={n}")]
    RankExceeded { k: usize, n: usize },

    #[error("{0} is not a simple raising generator of the diagonal blocks")]
    NotRaising(String),

    #[error("polynomial is not symmetric in its {0} variables")]
    NotSymmetric(usize),

    #[error("symmetric polynomial has a negative Schur coefficient on {0}")]
    NotSchurPositive(String),

    #[error("index {index} escapes band [{lo}, {hi}]; use a truncation of at least {suggested}")]
    BandEscape {
        index: i32,
        lo: i32,
        hi: i32,
        suggested: i32,
    },

    #[error("rank N = {n} is below the required minimum {min}")]
    RankTooSmall { n: usize, min: usize },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
