//! The Reidemeister torsion of a knot exterior as a rational differential on
//! the augmented character curve: assembly, orders at places, divisors, and
//! an independent pointwise evaluation through the twisted chain complex.

pub mod certificate;
pub mod divisor;
pub mod error;
pub mod form;
pub mod twisted;
pub mod valuation;

pub use divisor::{divisor, divisor_from_order, Divisor, DivisorEntry};
pub use error::{Result, TorsionError};
pub use form::{assemble_torsion_form, TorsionForm};
pub use certificate::{certify_finite_support, UnitCertificate};
pub use twisted::{cayley_torsion, CayleyEvaluation, torsion_via_cayley, SamplePoint, TwistedComplex};
pub use valuation::valuation_at_place;
