use algebra_core::AlgebraError;
use character_variety::CharVarError;
use curve_geometry::error::CurveError;
use knot_model::KnotError;
use theorem_lab::LabError;
use thiserror::Error;
use torsion_forms::TorsionError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lab(#[from] LabError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 1 for a broken invariant, 2 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lab(e) if e.is_invariant_violation() => 1,
            _ => 2,
        }
    }
}

macro_rules! via_lab {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Lab(LabError::from(e))
            }
        })*
    };
}

via_lab!(AlgebraError, KnotError, CharVarError, CurveError, TorsionError);

pub type Result<T> = std::result::Result<T, CliError>;
