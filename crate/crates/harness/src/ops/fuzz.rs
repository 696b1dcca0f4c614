//! Randomised instance-wise checks of implications that hold for every
//! finite monoid.

use coact_core::congruence::congruence_closure;
use coact_core::green::{green, tilde_relations, unitary_status};
use coact_core::oracle::bfs_closure;
use coact_core::subact::srcep_check;
use coact_core::{ElementId, FiniteMonoid};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::random::{random_act, random_monoid, random_pairs, rng};
use crate::report::ConstructionReport;
use crate::support::elem_labels;

pub const NAME: &str = "fuzz_implications";
pub const ANCHOR: &str =
    "weakly left unitary subsemigroups with identity have SRCEP; a J-class that is a monoid \
is weakly left and right unitary; ~R_E = R and ~L_E = L for regular S with E = E(S)";
pub const ORACLE_NAME: &str = "oracle_equivalence";
pub const ORACLE_ANCHOR: &str = "a ⟨H⟩ b iff a = b or there is an H-sequence from a to b";

/// Subsets of carriers up to this size are enumerated exhaustively.
const EXHAUSTIVE_SUBSETS: usize = 10;

/// Per-instance seeds derived from the run seed.
pub fn instance_seeds(seed: u64, count: usize) -> Vec<u64> {
    let mut r = rng(seed, 10);
    (0..count).map(|_| r.gen()).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub seed: u64,
    pub size: usize,
    pub property: String,
    pub witness: Value,
}

#[derive(Debug, Default, Clone, Serialize)]
pub struct InstanceTally {
    pub subsemigroups: usize,
    pub weakly_left_unitary: usize,
    pub monoid_j_classes: usize,
    pub regular: bool,
}

fn subsets(m: &FiniteMonoid) -> Vec<Vec<ElementId>> {
    let n = m.size();
    if n <= EXHAUSTIVE_SUBSETS {
        return (1u32..1 << n)
            .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
            .collect();
    }
    let g = green(m);
    let mut out: Vec<Vec<ElementId>> = Vec::new();
    for e in m.idempotents() {
        let mut ese: Vec<ElementId> = m.elements().map(|s| m.mul(m.mul(e, s), e)).collect();
        ese.sort_unstable();
        ese.dedup();
        out.push(ese);
        out.push(g.h.class(e));
    }
    out.extend(g.j.classes());
    out.sort();
    out.dedup();
    out
}

fn check_instance(
    seed: u64,
    max_size: usize,
    inject_fault: bool,
) -> (InstanceTally, Vec<Counterexample>) {
    let m = random_monoid(seed, max_size);
    let mut tally = InstanceTally::default();
    let mut found = Vec::new();
    let mut push = |property: &str, witness: Value| {
        found.push(Counterexample {
            seed,
            size: m.size(),
            property: property.into(),
            witness,
        })
    };
    for t in subsets(&m) {
        if !m.is_subsemigroup(&t) || m.identity_of(&t).is_none() {
            continue;
        }
        tally.subsemigroups += 1;
        let status = unitary_status(&m, &t).expect("checked above");
        if inject_fault {
            if let coact_core::green::Verdict::Fails { a, b } = status.left_unitary {
                if status.weakly_left_unitary.holds() {
                    push(
                        "weakly left unitary implies left unitary",
                        json!({ "T": elem_labels(&m, &t), "a": m.label(a), "b": m.label(b) }),
                    );
                }
            }
        }
        if !status.weakly_left_unitary.holds() {
            continue;
        }
        tally.weakly_left_unitary += 1;
        let mut pair_sets: Vec<Vec<(ElementId, ElementId)>> = vec![Vec::new()];
        for (i, &a) in t.iter().enumerate() {
            for &b in &t[i + 1..] {
                pair_sets.push(vec![(a, b)]);
            }
        }
        for pairs in pair_sets {
            let c = srcep_check(&m, &t, &pairs).expect("t is a submonoid");
            if !c.holds() {
                push(
                    "weakly left unitary implies SRCEP",
                    json!({
                        "T": elem_labels(&m, &t),
                        "pairs": pairs.iter().map(|&(a, b)| [m.label(a), m.label(b)]).collect::<Vec<_>>(),
                        "restriction_witness": c.restriction_witness.map(|(a, b)| [m.label(a), m.label(b)]),
                        "class_witness": c.class_witness.map(|(a, b)| [m.label(a), m.label(b)]),
                    }),
                );
            }
        }
    }
    let g = green(&m);
    for j in g.j.classes() {
        if !m.is_subsemigroup(&j) || m.identity_of(&j).is_none() {
            continue;
        }
        tally.monoid_j_classes += 1;
        let status = unitary_status(&m, &j).expect("checked above");
        if !status.weakly_left_unitary.holds() || !status.weakly_right_unitary.holds() {
            push(
                "a monoid J-class is weakly left and right unitary",
                json!({ "J": elem_labels(&m, &j) }),
            );
        }
    }
    if m.is_regular() {
        tally.regular = true;
        let tilde = tilde_relations(&m, &m.idempotents()).expect("idempotents index the monoid");
        if tilde.r != g.r || tilde.l != g.l {
            push(
                "~R_E = R and ~L_E = L for regular S with E = E(S)",
                json!({ "r_equal": tilde.r == g.r, "l_equal": tilde.l == g.l }),
            );
        }
    }
    (tally, found)
}

/// Least counterexample by size and then by position in the run.
fn minimal(found: &[Counterexample]) -> Option<&Counterexample> {
    found.iter().min_by_key(|c| c.size)
}

/// `count` random monoids of order at most `max_size`. With `inject_fault`
/// the false implication "weakly left unitary ⇒ left unitary" is checked
/// too, so the run reports counterexamples.
pub fn fuzz_implications(
    seed: u64,
    count: usize,
    max_size: usize,
    inject_fault: bool,
) -> ConstructionReport {
    let seeds = instance_seeds(seed, count);
    let results: Vec<(InstanceTally, Vec<Counterexample>)> = seeds
        .par_iter()
        .map(|&s| check_instance(s, max_size, inject_fault))
        .collect();
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!("seed {seed}, {count} monoids of order at most {max_size}"),
    );
    let found: Vec<Counterexample> = results
        .iter()
        .flat_map(|(_, f)| f.iter().cloned())
        .collect();
    if let Some(c) = minimal(&found) {
        report.fail(format!("minimal counterexample: {}", c.property), c);
    }
    let sum = |f: fn(&InstanceTally) -> usize| results.iter().map(|(t, _)| f(t)).sum::<usize>();
    report.artifact("instances", count);
    report.artifact("subsemigroups_with_identity", sum(|t| t.subsemigroups));
    report.artifact("weakly_left_unitary", sum(|t| t.weakly_left_unitary));
    report.artifact("monoid_j_classes", sum(|t| t.monoid_j_classes));
    report.artifact("regular_monoids", sum(|t| t.regular as usize));
    report.artifact("counterexamples", found.len());
    report.artifact("inject_fault", inject_fault);
    report.finish()
}

/// Union-find closure against breadth-first search on random acts.
pub fn oracle_equivalence(
    seed: u64,
    count: usize,
    max_monoid: usize,
    max_act: usize,
    max_pairs: usize,
) -> ConstructionReport {
    let seeds = instance_seeds(seed, count);
    let failures: Vec<Option<Value>> = seeds
        .par_iter()
        .map(|&s| {
            let act = random_act(s, max_monoid, max_act);
            let mut r = rng(s, 3);
            let pairs = random_pairs(&mut r, act.size(), 0, max_pairs);
            let uf = congruence_closure(&act, &pairs).expect("pairs index the act");
            let bfs = bfs_closure(&act, &pairs);
            (uf.partition() != &bfs).then(|| {
                json!({
                    "seed": s,
                    "act_size": act.size(),
                    "pairs": pairs,
                })
            })
        })
        .collect();
    let mut report = ConstructionReport::new(
        ORACLE_NAME,
        ORACLE_ANCHOR,
        format!(
            "seed {seed}, {count} acts, |S| ≤ {max_monoid}, |A| ≤ {max_act}, |H| ≤ {max_pairs}"
        ),
    );
    for w in failures.into_iter().flatten() {
        report.fail("union-find and breadth-first closures differ", w);
    }
    report.artifact("instances", count);
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean() {
        let r = fuzz_implications(1, 20, 6, false);
        assert!(r.verified, "{:?}", r.failures);
    }

    #[test]
    fn injected_fault_is_reported() {
        let r = fuzz_implications(1, 40, 7, true);
        assert!(!r.verified);
        assert_eq!(r.failures.len(), 1);
    }

    #[test]
    fn zero_count_is_empty() {
        let r = fuzz_implications(1, 0, 7, false);
        assert!(r.verified);
        assert_eq!(r.artifacts["instances"], 0);
    }

    #[test]
    fn oracle_small() {
        assert!(oracle_equivalence(3, 20, 8, 12, 4).verified);
    }
}
