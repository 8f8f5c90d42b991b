use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZeckError {
    #[error("invalid digit {found:?} in {input:?}: only '0' and '1' are allowed")]
    InvalidDigit { input: String, found: char },

    #[error("{input:?} contains \"11\" and is not a Zeckendorf word")]
    AdjacentOnes { input: String },

    #[error("range index n = {n} must be at least 2")]
    RangeIndex { n: usize },

    #[error("{value} is outside Ψ_{n} = {{0, …, F_{n} - 1}}")]
    OutOfRange { value: BigUint, n: usize },

    #[error("value {value} appears in more than one branch of an occurrence set")]
    OverlappingBranches { value: BigInt },

    #[error("branch {branch} is not strictly increasing")]
    NotIncreasing { branch: String },

    #[error("occurrence set has no branches")]
    EmptyOccurrenceSet,

    #[error("cannot parse Wythoff word {input:?}: {reason}")]
    WordSyntax { input: String, reason: String },

    #[error("digit block must be non-empty")]
    EmptyBlock,

    #[error("occurrence coding needs a block of length ≥ 2 starting with 0 and level ≥ 3, got {block:?} at level {level}")]
    CodingPrecondition { block: String, level: usize },

    #[error("tree depth {depth} exceeds the limit {limit}")]
    TreeTooDeep { depth: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, ZeckError>;
