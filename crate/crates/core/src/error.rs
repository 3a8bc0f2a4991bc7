use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("invalid field parameters: {0}")]
    InvalidParams(String),

    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(u64, u64),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("partition {0} is not row {1}-regular")]
    NotRowRegular(String, u32),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("missing leaf value for block {0} in degree {1}")]
    MissingLeaf(usize, u32),

    #[error("parse error: {0}")]
    Parse(String),
}
