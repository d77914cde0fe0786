//! Checks of the two vanishing theorems for the torsion form: predicted
//! orders at finite places and the bound at ideal places.

pub mod error;
pub mod finite;
pub mod ideal;
pub mod report;

pub use error::{LabError, Result};
pub use finite::{
    branch_torsion_length, monomial_singularity_length, reducible_point_prediction, FinitePointPrediction, Hypotheses,
    PointKind,
};
pub use ideal::{ideal_bound_check, BoundStatus, IdealPointCheck};
pub use report::{full_report, report_for, TheoremReport};
