//! Finite and computable monoids, right acts and finitely generated right
//! congruences.

pub mod act;
pub mod bounded;
pub mod computable;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod green;
pub mod monoid;
pub mod oracle;
pub mod partition;
pub mod subact;

pub use act::FiniteRightAct;
pub use congruence::{ActCongruence, HSequenceWitness, Pair, Step};
pub use error::{Error, Result};
pub use monoid::{ElementId, FiniteMonoid};
pub use partition::Partition;
pub use subact::Subact;
