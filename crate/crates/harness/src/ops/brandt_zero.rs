//! The ρ-closure of the zero ideal of a Brandt monoid under one pair.

use coact_core::congruence::congruence_closure;
use coact_core::constructions::BrandtMonoid;
use coact_core::oracle::bfs_closure;
use coact_core::subact::rho_closure;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Subact};
use serde_json::json;

use super::check_element;
use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "prop35_brandt_zero_closure";
pub const ANCHOR: &str =
    "for ρ = ⟨((i,g,i), 1)⟩ on B(G; I)¹: (0S)ρ = {0} ∪ ⋃_{j≠i} R_j and 1 ∉ (0S)ρ, \
since (j,h,j) = 1·(j,h,j) ρ (i,g,i)·(j,h,j) = 0";

/// `i` is a 0-based row index, `g` an element of the group.
pub fn prop35_brandt_zero_closure(
    group: &FiniteMonoid,
    n: usize,
    i: usize,
    g: ElementId,
) -> Result<ConstructionReport> {
    if group.units().len() != group.size() {
        return Err(HarnessError::Precondition(
            "the base monoid is not a group".into(),
        ));
    }
    check_element(group, g, "g")?;
    if i >= n {
        return Err(HarnessError::param(
            "i",
            format!("row {} outside 1..={n}", i + 1),
        ));
    }
    let b = BrandtMonoid::new(group, n, true)?;
    let s = b.monoid();
    let act = FiniteRightAct::regular(s);
    let gen = (b.triple(i, g, i), b.one());
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "G of order {}, |I| = {n}, i = {}, g = {}",
            group.size(),
            i + 1,
            group.label(g)
        ),
    );
    let cong = congruence_closure(&act, &[gen])?;
    let rho = cong.partition();
    let zero_closure = rho_closure(&act, &Subact::generated(&act, &[b.zero()]), rho);
    let mut j_set: Vec<ElementId> = (0..n)
        .filter(|&j| j != i)
        .flat_map(|j| b.row_class(j))
        .chain([b.zero()])
        .collect();
    j_set.sort_unstable();
    report.require(
        zero_closure.elements() == j_set,
        "(0S)ρ = {0} ∪ ⋃_{j≠i} R_j",
        subact_mismatch(&act, &zero_closure, &Subact::from_set(&act, &j_set)?),
    );
    report.require(
        !zero_closure.contains(b.one()),
        "1 ∉ (0S)ρ",
        s.label(b.one()),
    );
    let oracle = bfs_closure(&act, &[gen]);
    report.require(
        &oracle == rho,
        "closure agrees with the breadth-first oracle",
        partition_mismatch(&act, rho, &oracle),
    );

    let mut witnesses = Vec::new();
    for j in (0..n).filter(|&j| j != i) {
        for h in group.elements() {
            let jhj = b.triple(j, h, j);
            let via = s.mul(b.triple(i, g, i), jhj);
            report.require(via == b.zero(), "(i,g,i)·(j,h,j) = 0", [s.label(jhj)]);
            let w = cong.witness(jhj, b.zero());
            let ok = w
                .as_ref()
                .is_some_and(|w| w.replay(&act, &[gen], jhj, b.zero()));
            report.require(ok, "(j,h,j) ρ 0 has a replaying witness", [s.label(jhj)]);
            if h == group.identity() {
                if let Some(w) = w {
                    witnesses.push(json!({
                        "element": s.label(jhj),
                        "chain": labels(&act, &w.chain(&act, &[gen], jhj).unwrap_or_default()),
                    }));
                }
            }
        }
    }
    report.artifact("generator", [s.label(gen.0), s.label(gen.1)]);
    report.artifact("zero_closure", labels(&act, zero_closure.elements()));
    report.artifact("witnesses", witnesses);
    report.bound_relative = true;
    report.note(
        "the closure fails to be finitely generated only for infinite I; \
         a finite instance checks the shape of the closure",
    );
    Ok(report.finish())
}
