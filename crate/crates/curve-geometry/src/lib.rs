pub mod error;
pub mod field;
pub mod puiseux;
pub mod curve;
pub mod singular;
pub mod places;
pub mod cover;
