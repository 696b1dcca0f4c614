//! Executable versions of the generating-set constructions for right
//! congruences on monoids, each checked against a brute-force oracle.
//!
//! Every check returns a [`ConstructionReport`]. The registry in
//! [`registry`] maps check names and `key=value` parameters to the checks.

pub mod error;
pub mod ops;
pub mod params;
pub mod random;
pub mod registry;
pub mod report;
pub mod support;

pub use error::{HarnessError, Result};
pub use report::{ConstructionReport, Failure};
