use algebra_core::AlgebraError;
use knot_model::KnotError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharVarError {
    #[error("{0}")]
    Knot(#[from] KnotError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("trace is not symmetric in the eigenvalue: residue {0}")]
    Asymmetric(String),
    #[error("unsupported presentation shape: {0}")]
    Unsupported(String),
    #[error("relator imposes no curve")]
    NoCurve,
    #[error("word `{0}` is not peripheral")]
    NotPeripheral(String),
    #[error("all tested pairs vanish: reducible type")]
    ReducibleType,
    #[error("pinned polynomial mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T> = std::result::Result<T, CharVarError>;
