//! SL2 character varieties of two-generator knot groups: the tautological
//! representation, trace functions, the defining polynomial and the
//! augmented double cover.

pub mod augmented;
pub mod error;
pub mod rep;
pub mod symmetrize;
pub mod trace;
pub mod variety;

pub use augmented::{eigenvalue_function, AugmentedCurve, FfElem};
pub use error::{CharVarError, Result};
pub use rep::{build_taut_rep, TautRep};
pub use trace::{trace_of_word, trace_reduce, TraceFunction};
pub use variety::{defining_polynomial, irreducibility_witness, Component, ComponentKind, PlaneCurveData};
