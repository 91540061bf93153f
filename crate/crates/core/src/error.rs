use thiserror::Error;

/// Errors produced by semigroup construction, parsing and analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table must be square with at least one row")]
    NotSquare,
    #[error("entry at row {a}, column {b} is out of range")]
    OutOfRangeEntry { a: usize, b: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("empty word")]
    EmptyWord,
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("ambient order mismatch: expected {expected}, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("partition is not a congruence: witness ({a},{b},{c})")]
    NotACongruence { a: usize, b: usize, c: usize },
    #[error("order {order} exceeds the configured bound {bound}")]
    OrderTooLarge { order: usize, bound: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
