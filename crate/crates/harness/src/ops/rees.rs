//! Right ideals of a Rees matrix monoid over a group.

use std::collections::BTreeSet;

use coact_core::constructions::{ReesMatrixMonoid, SandwichMatrix};
use coact_core::oracle::all_subacts;
use coact_core::subact::{ideal_quotient, minimal_generating_set, rho_closure};
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Subact};
use serde_json::json;

use crate::error::{HarnessError, Result};
use crate::random::{random_pairs, rng};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "prop34_rees_check";
pub const ANCHOR: &str =
    "every proper right ideal of M(G; I, Λ; P)¹ is a union of row classes R_j; \
(aS, b) is S when a = 1 or a, b lie in one row class, aS when b = 1, and empty otherwise";

const SUBACT_CAP: usize = 1 << 16;

pub fn prop34_rees_check(
    group: &FiniteMonoid,
    sandwich: SandwichMatrix,
    samples: usize,
    seed: u64,
) -> Result<ConstructionReport> {
    if group.units().len() != group.size() {
        return Err(HarnessError::Precondition(
            "the base monoid is not a group".into(),
        ));
    }
    let (ni, nl) = (sandwich.cols(), sandwich.rows());
    let rees = ReesMatrixMonoid::new(group, sandwich, false, true)?;
    let s = rees.monoid();
    let act = FiniteRightAct::regular(s);
    let one = s.identity();
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|G| = {}, |I| = {ni}, |Λ| = {nl}, |S| = {}",
            group.size(),
            s.size()
        ),
    );
    let rows: Vec<Vec<ElementId>> = (0..ni).map(|i| rees.row_class(i)).collect();
    let row_of = |x: ElementId| (0..ni).find(|&i| rows[i].binary_search(&x).is_ok());

    let ideals = all_subacts(&act, SUBACT_CAP)
        .ok_or_else(|| HarnessError::Precondition("too many right ideals to enumerate".into()))?;
    let whole: Vec<ElementId> = s.elements().collect();
    let mut shapes = Vec::new();
    for ideal in ideals.iter().filter(|i| **i != whole) {
        let js: BTreeSet<usize> = ideal.iter().filter_map(|&x| row_of(x)).collect();
        let mut union: Vec<ElementId> = js.iter().flat_map(|&j| rows[j].clone()).collect();
        union.sort_unstable();
        report.require(
            union == *ideal,
            "a proper right ideal is a union of row classes",
            elem_labels(s, ideal),
        );
        shapes.push(js.iter().map(|j| j + 1).collect::<Vec<_>>());
    }
    report.require(
        shapes.len() == 1 << ni,
        "every union of row classes is a right ideal",
        json!({ "found": shapes.len(), "expected": 1usize << ni }),
    );

    let mut case_counts = [0usize; 4];
    for a in s.elements() {
        let a_s = Subact::generated(&act, &[a]);
        for b in s.elements() {
            let (case, expected): (usize, Vec<ElementId>) = if a == one {
                (0, whole.clone())
            } else if b == one {
                (1, a_s.elements().to_vec())
            } else if row_of(a) == row_of(b) {
                (2, whole.clone())
            } else {
                (3, Vec::new())
            };
            case_counts[case] += 1;
            let got = ideal_quotient(&act, &a_s, b)?;
            report.require(
                got.elements() == expected,
                "(aS, b) matches its case",
                json!({ "a": s.label(a), "b": s.label(b), "case": case }),
            );
        }
    }

    let mut r = rng(seed, 34);
    let mut sampled = Vec::new();
    for _ in 0..samples {
        let pairs = random_pairs(&mut r, s.size(), 1, 2);
        let rho = closure(s, &pairs);
        let closed: Vec<Subact> = s
            .elements()
            .map(|a| rho_closure(&act, &Subact::generated(&act, &[a]), &rho))
            .collect();
        let mut gens = 0;
        for (a, c) in closed.iter().enumerate() {
            report.require(
                ideals.binary_search(&c.elements().to_vec()).is_ok(),
                "(aS)ρ is a right ideal of the classified shape",
                json!({ "pairs": elem_pair_labels(s, &pairs), "a": s.label(a) }),
            );
            gens = gens.max(minimal_generating_set(&act, c).len());
            for d in &closed {
                let meet = c.intersection(d);
                report.require(
                    ideals.binary_search(&meet.elements().to_vec()).is_ok(),
                    "intersections of the closed ideals are right ideals",
                    json!({ "pairs": elem_pair_labels(s, &pairs) }),
                );
            }
        }
        sampled.push(json!({
            "pairs": elem_pair_labels(s, &pairs),
            "max_generators": gens,
        }));
    }

    report.artifact(
        "row_classes",
        rows.iter().map(|r| elem_labels(s, r)).collect::<Vec<_>>(),
    );
    report.artifact("proper_right_ideals_as_row_sets", shapes);
    report.artifact(
        "quotient_case_counts",
        json!({ "a=1": case_counts[0], "b=1": case_counts[1], "same_row": case_counts[2], "different_rows": case_counts[3] }),
    );
    report.artifact("sampled_congruences", sampled);
    report.note(
        "on a finite instance only the right-ideal classification is checked; \
         the equivalence with finiteness of I is outside what a finite instance can show",
    );
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::z2;

    #[test]
    fn z2_two_by_two() {
        let g = z2();
        let p = SandwichMatrix::constant(2, 2, g.identity()).unwrap();
        let r = prop34_rees_check(&g, p, 4, 1).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(
            r.artifacts["proper_right_ideals_as_row_sets"],
            json!([[], [1], [1, 2], [2]])
        );
    }

    #[test]
    fn rejects_non_groups() {
        let m = coact_core::monoid::builtin::u2();
        let p = SandwichMatrix::constant(1, 1, m.identity()).unwrap();
        assert!(prop34_rees_check(&m, p, 0, 0).is_err());
    }
}
