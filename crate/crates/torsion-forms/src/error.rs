use algebra_core::AlgebraError;
use character_variety::CharVarError;
use curve_geometry::error::CurveError;
use knot_model::KnotError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TorsionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    CharVar(#[from] CharVarError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("τ_μ is missing from the record")]
    MissingTau,
    #[error("Z_μ − Z_μ⁻¹ vanishes on the curve: central restriction")]
    Central,
    #[error("insufficient precision: need order at least {0}")]
    InsufficientPrecision(i64),
    #[error("place {0} is not on the curve of the form")]
    NotOnCurve(String),
    #[error("divisor degree {degree} differs from 2g(Y) − 2 = {expected}")]
    DegreeMismatch { degree: i64, expected: i64 },
    #[error("bad sample point: {0}")]
    BadPoint(String),
    #[error("finite support not certified: {0}")]
    Uncertified(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl TorsionError {
    /// Whether the error reports a broken invariant rather than a failed
    /// computation.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(
            self,
            TorsionError::DegreeMismatch { .. }
                | TorsionError::Invariant(_)
                | TorsionError::Curve(CurveError::Invariant(_))
                | TorsionError::Curve(CurveError::DeltaParity { .. })
                | TorsionError::CharVar(CharVarError::Mismatch(_))
        )
    }
}

pub type Result<T> = std::result::Result<T, TorsionError>;
