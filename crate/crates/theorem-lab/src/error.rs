use algebra_core::AlgebraError;
use character_variety::CharVarError;
use curve_geometry::error::CurveError;
use knot_model::KnotError;
use thiserror::Error;
use torsion_forms::TorsionError;

#[derive(Debug, Error)]
pub enum LabError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Knot(#[from] KnotError),
    #[error(transparent)]
    CharVar(#[from] CharVarError),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Torsion(#[from] TorsionError),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("insufficient truncation: {0}")]
    Truncation(String),
    #[error("{context}: {source}")]
    Context { context: String, source: Box<LabError> },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl LabError {
    pub fn is_invariant_violation(&self) -> bool {
        match self {
            LabError::Invariant(_) => true,
            LabError::Torsion(e) => e.is_invariant_violation(),
            LabError::Curve(CurveError::Invariant(_) | CurveError::DeltaParity { .. }) => true,
            LabError::CharVar(CharVarError::Mismatch(_)) => true,
            LabError::Context { source, .. } => source.is_invariant_violation(),
            _ => false,
        }
    }

    pub fn context(self, what: impl Into<String>) -> LabError {
        LabError::Context { context: what.into(), source: Box::new(self) }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;
