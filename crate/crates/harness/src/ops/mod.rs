//! One module per construction check.

pub mod act_transfer;
pub mod annihilator;
pub mod brandt;
pub mod brandt_zero;
pub mod ebr;
pub mod fuzz;
pub mod identity;
pub mod jclass;
pub mod product;
pub mod rees;
pub mod retraction;
pub mod tilde;
pub mod zero;

use coact_core::{FiniteMonoid, Pair};

use crate::error::{HarnessError, Result};

pub(crate) fn check_element(m: &FiniteMonoid, x: usize, what: &str) -> Result<()> {
    if x >= m.size() {
        return Err(HarnessError::param(
            what,
            format!("index {x} outside a monoid of order {}", m.size()),
        ));
    }
    Ok(())
}

pub(crate) fn check_pairs(m: &FiniteMonoid, pairs: &[Pair], what: &str) -> Result<()> {
    for &(x, y) in pairs {
        check_element(m, x, what)?;
        check_element(m, y, what)?;
    }
    Ok(())
}
