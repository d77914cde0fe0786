use algebra_core::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("curve polynomial must be squarefree and nonconstant in x, y: {0}")]
    BadCurve(String),
    #[error("unsupported field tower: coordinates need a root of {0} over an existing extension")]
    FieldTower(String),
    #[error("point {0} is not on the curve")]
    NotOnCurve(String),
    #[error("insufficient precision: need order at least {0}")]
    InsufficientPrecision(i64),
    #[error("δ parity violation at {point}: μ = {mu}, r = {r}")]
    DeltaParity { point: String, mu: i64, r: usize },
    #[error("negative genus {0}: a singularity was missed or the curve is reducible")]
    NegativeGenus(i64),
    #[error("non-isolated singularity at {0}")]
    NonIsolated(String),
    #[error("ramification at the singular point {0} is not supported")]
    SingularRamification(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, CurveError>;
