//! Command-line front end: Cayley table files, JSON recipes, congruence
//! reports, harness checks and the fuzz suites.

pub mod cayley;
pub mod commands;
pub mod error;
pub mod recipe;

pub use error::{CliError, Result};
