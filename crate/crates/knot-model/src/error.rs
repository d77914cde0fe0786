use algebra_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("relator trivial after reduction")]
    TrivialRelator,
    #[error("abelianization is not onto Z: {0}")]
    NotSurjective(String),
    #[error("unsupported presentation: {0}")]
    Unsupported(String),
    #[error("record not found: {0}")]
    RecordNotFound(String),
    #[error("invalid record `{name}`: {msg}")]
    InvalidRecord { name: String, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, KnotError>;
