use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("minimal polynomial is not irreducible over Q: {0}")]
    ReducibleMinpoly(String),
    #[error("insufficient precision: need terms up to order {required}")]
    InsufficientPrecision { required: i64 },
    #[error("zero determinant within truncation")]
    ZeroDeterminant,
    #[error("variable `{0}` absent from both operands")]
    MissingVariable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
