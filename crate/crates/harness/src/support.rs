//! Small helpers shared by the checks.

use coact_core::congruence::congruence_closure;
use coact_core::oracle::bfs_closure;
use coact_core::subact::minimal_generating_set;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Partition, Subact};
use serde_json::{json, Value};

/// `⟨pairs⟩` on the regular act of `m`, by union-find.
pub fn closure(m: &FiniteMonoid, pairs: &[Pair]) -> Partition {
    congruence_closure(&FiniteRightAct::regular(m), pairs)
        .expect("pairs index the monoid")
        .into_partition()
}

/// `⟨pairs⟩` on the regular act of `m`, by breadth-first search.
pub fn oracle_closure(m: &FiniteMonoid, pairs: &[Pair]) -> Partition {
    bfs_closure(&FiniteRightAct::regular(m), pairs)
}

pub fn labels(act: &FiniteRightAct, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| act.label(x).to_string()).collect()
}

pub fn elem_labels(m: &FiniteMonoid, xs: &[ElementId]) -> Vec<String> {
    xs.iter().map(|&x| m.label(x).to_string()).collect()
}

pub fn pair_labels(act: &FiniteRightAct, pairs: &[Pair]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|&(x, y)| [act.label(x).to_string(), act.label(y).to_string()])
        .collect()
}

pub fn elem_pair_labels(m: &FiniteMonoid, pairs: &[Pair]) -> Vec<[String; 2]> {
    pairs
        .iter()
        .map(|&(x, y)| [m.label(x).to_string(), m.label(y).to_string()])
        .collect()
}

pub fn classes_json(act: &FiniteRightAct, p: &Partition) -> Value {
    Value::Array(p.classes().iter().map(|c| json!(labels(act, c))).collect())
}

/// First pair related by exactly one of `p`, `q`.
pub fn partition_difference(p: &Partition, q: &Partition) -> Option<(usize, usize)> {
    let n = p.len();
    for x in 0..n {
        for y in x + 1..n {
            if p.related(x, y) != q.related(x, y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Describes the first disagreement between two partitions of `act`.
pub fn partition_mismatch(act: &FiniteRightAct, got: &Partition, want: &Partition) -> Value {
    match partition_difference(got, want) {
        Some((x, y)) => json!({
            "pair": [act.label(x), act.label(y)],
            "constructed": got.related(x, y),
            "target": want.related(x, y),
        }),
        None => Value::Null,
    }
}

/// `(aρ)S ∩ (bρ)S` inside `A/ρ`, together with the quotient act.
pub fn class_intersection(
    act: &FiniteRightAct,
    rho: &Partition,
    a: usize,
    b: usize,
) -> (FiniteRightAct, Subact) {
    let q = act.quotient(rho).expect("ρ is a congruence");
    let sa = Subact::generated(&q, &[rho.class_of(a)]);
    let sb = Subact::generated(&q, &[rho.class_of(b)]);
    let inter = sa.intersection(&sb);
    (q, inter)
}

/// Least-index idempotents `e₁, …` with `I = ⋃ eₖS` for a right ideal `I`
/// of a regular monoid: one per maximal principal right ideal inside `I`.
/// `None` if some generator has no idempotent in its ℛ-class.
pub fn idempotent_generators(m: &FiniteMonoid, ideal: &[ElementId]) -> Option<Vec<ElementId>> {
    let act = FiniteRightAct::regular(m);
    let sub = Subact::from_set(&act, ideal).ok()?;
    let mut out = Vec::new();
    for g in minimal_generating_set(&act, &sub) {
        let e = m
            .elements()
            .find(|&e| m.is_idempotent(e) && m.mul(e, g) == g && r_related(m, e, g))?;
        out.push(e);
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// `xS = yS`.
pub fn r_related(m: &FiniteMonoid, x: ElementId, y: ElementId) -> bool {
    m.right_ideal(x) == m.right_ideal(y)
}

/// Least `t` with `pred(t)`.
pub fn least(m: &FiniteMonoid, pred: impl Fn(ElementId) -> bool) -> Option<ElementId> {
    m.elements().find(|&t| pred(t))
}

/// Generated subact of `gens` compared to `target`; the first stray element
/// on failure.
pub fn subact_mismatch(act: &FiniteRightAct, got: &Subact, want: &Subact) -> Value {
    let extra: Vec<_> = got
        .elements()
        .iter()
        .filter(|&&x| !want.contains(x))
        .map(|&x| act.label(x).to_string())
        .collect();
    let missing: Vec<_> = want
        .elements()
        .iter()
        .filter(|&&x| !got.contains(x))
        .map(|&x| act.label(x).to_string())
        .collect();
    json!({ "extra": extra, "missing": missing })
}
