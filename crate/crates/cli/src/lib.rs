//! The `torvar` command-line front end: subcommands, exact rendering and
//! the golden-value table.

pub mod commands;
pub mod error;
pub mod goldens;
pub mod render;

pub use commands::{Output, Settings};
pub use error::{CliError, Result};
pub use goldens::{GoldenRow, CRITERIA};
