//! Two-generator one-relator knot groups: words, presentations, Fox
//! calculus, Alexander polynomials and the knot record database.

pub mod alexander;
pub mod error;
pub mod fox;
pub mod presentation;
pub mod record;
pub mod word;

pub use alexander::{alexander_polynomial, alexander_root_order, kth_alexander_polynomial};
pub use error::{KnotError, Result};
pub use fox::{fox_derivative, GroupRingElement};
pub use presentation::{parse_presentation, parse_word, GroupPresentation};
pub use record::{Database, KnotRecord, Surface, TauOrientation, Template, TermList};
pub use word::Word;
