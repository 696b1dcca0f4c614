//! Conditions on the relations ~R_E, ~H_E and the generating sets they
//! transfer to a monoid subsemigroup.

use std::collections::BTreeMap;

use coact_core::computable::{BruckReilly, ComputableMonoid, Element};
use coact_core::congruence::{ann_of_class, congruence_generating_set};
use coact_core::constructions::Endomorphism;
use coact_core::green::{right_compatibility_failure, tilde_relations};
use coact_core::oracle::ann_scan;
use coact_core::subact::minimal_generating_set;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Subact};
use serde_json::json;

use super::check_element;
use crate::error::Result;
use crate::random::{random_pairs, rng};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "prop49_conditions_check";
pub const ANCHOR: &str = "(a) e ∈ E; (b) ~H_E is a right congruence; (c) M is the ~H_E-class of e; \
(d) e ~R_E u ~H_E v implies u = u(pq), v = v(pq) with up, vp ∈ M. Then \
K' = {(e·u·p, e·v·p) : (u, v) ∈ K, e ~R_E eu ~H_E ev} generates ann(aρ) when K generates ann(aρ^S), \
and T = {(c·p_c)ρ : c ∈ C, c ~R_E e} generates (aρ)M ∩ (bρ)M";

pub const BR_NAME: &str = "prop49_bruck_reilly";
pub const BR_ANCHOR: &str = "conditions (a) to (d) for E = idempotents, e = (0,1,0) and \
M = {(0,g,0)} in BR(M, θ), checked inside a ball";

/// Least `(p, q)` with `u = upq`, `v = vpq` and `up, vp ∈ M`.
fn pq_search(
    s: &FiniteMonoid,
    in_m: &[bool],
    u: ElementId,
    v: ElementId,
) -> Option<(ElementId, ElementId)> {
    s.elements()
        .filter(|&p| in_m[s.mul(u, p)] && in_m[s.mul(v, p)])
        .find_map(|p| {
            s.elements()
                .find(|&q| {
                    let pq = s.mul(p, q);
                    s.mul(u, pq) == u && s.mul(v, pq) == v
                })
                .map(|q| (p, q))
        })
}

/// `m_set = None` takes M to be the ~H_E-class of `e`.
pub fn prop49_conditions_check(
    s: &FiniteMonoid,
    e: ElementId,
    e_set: &[ElementId],
    m_set: Option<&[ElementId]>,
    samples: usize,
    seed: u64,
) -> Result<ConstructionReport> {
    check_element(s, e, "e")?;
    let tilde = tilde_relations(s, e_set)?;
    let m_elems: Vec<ElementId> = match m_set {
        Some(m) => {
            for &x in m {
                check_element(s, x, "M")?;
            }
            let mut v = m.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        }
        None => tilde.h.class(e),
    };
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|S| = {}, e = {}, E = {:?}, M = {:?}",
            s.size(),
            s.label(e),
            elem_labels(s, &tilde.idempotents),
            elem_labels(s, &m_elems)
        ),
    );
    let in_m = s.mask(&m_elems);
    report.require(
        s.is_subsemigroup(&m_elems) && s.identity_of(&m_elems) == Some(e),
        "M is a subsemigroup with identity e",
        elem_labels(s, &m_elems),
    );
    report.require(tilde.idempotents.contains(&e), "(a) e ∈ E", s.label(e));
    let b_fail = right_compatibility_failure(s, &tilde.h);
    report.require(
        b_fail.is_none(),
        "(b) ~H_E is a right congruence",
        b_fail.map(|(x, y, t)| [s.label(x), s.label(y), s.label(t)]),
    );
    report.require(
        tilde.h.class(e) == m_elems,
        "(c) M is the ~H_E-class of e",
        elem_labels(s, &tilde.h.class(e)),
    );
    let mut choices: BTreeMap<(ElementId, ElementId), (ElementId, ElementId)> = BTreeMap::new();
    for u in s.elements().filter(|&u| tilde.r.related(e, u)) {
        for v in s.elements().filter(|&v| tilde.h.related(u, v)) {
            match pq_search(s, &in_m, u, v) {
                Some(pq) => {
                    choices.insert((u, v), pq);
                }
                None => report.fail("(d) p, q exist", [s.label(u), s.label(v)]),
            }
        }
    }
    report.artifact(
        "pq_choices",
        choices
            .iter()
            .map(|(&(u, v), &(p, q))| json!({ "u": s.label(u), "v": s.label(v), "p": s.label(p), "q": s.label(q) }))
            .collect::<Vec<_>>(),
    );
    report.artifact("M", elem_labels(s, &m_elems));
    if !report.failures.is_empty() {
        report.note("a condition failed, so the generating-set constructions were not run");
        return Ok(report.finish());
    }

    let (mm, emb) = s.submonoid(&m_elems)?;
    let pos = |x: ElementId| emb.binary_search(&x).unwrap();
    let act_s = FiniteRightAct::regular(s);
    let act_m = FiniteRightAct::regular(&mm);
    let mut r = rng(seed, 49);
    let mut runs = Vec::new();
    for _ in 0..samples {
        let hm = random_pairs(&mut r, mm.size(), 1, 2);
        let h: Vec<Pair> = hm.iter().map(|&(c, d)| (emb[c], emb[d])).collect();
        let rho_m = closure(&mm, &hm);
        let rho_m_oracle = oracle_closure(&mm, &hm);
        let rho_s = closure(s, &h);
        let mut k_prime_sizes = Vec::new();
        for &a in &emb {
            let k = congruence_generating_set(&act_s, &ann_of_class(&act_s, &rho_s, a));
            let mut k_prime: Vec<Pair> = Vec::new();
            for &(u, v) in &k {
                let (eu, ev) = (s.mul(e, u), s.mul(e, v));
                if tilde.r.related(e, eu) && tilde.h.related(eu, ev) {
                    let (p, _) = choices[&(eu, ev)];
                    k_prime.push((pos(s.mul(eu, p)), pos(s.mul(ev, p))));
                }
            }
            k_prime.sort_unstable();
            k_prime.dedup();
            let target = ann_scan(&act_m, &rho_m_oracle, pos(a));
            let got = oracle_closure(&mm, &k_prime);
            report.require(
                got == target,
                "⟨K'⟩_M = ann(aρ)",
                json!({ "H": elem_pair_labels(s, &h), "a": s.label(a), "diff": partition_mismatch(&act_m, &got, &target) }),
            );
            k_prime_sizes.push(k_prime.len());
        }
        let reps = rho_s.representatives();
        for &a in &emb {
            for &b in &emb {
                let (q_s, inter_s) = class_intersection(&act_s, &rho_s, a, b);
                let c_set: Vec<ElementId> = minimal_generating_set(&q_s, &inter_s)
                    .into_iter()
                    .map(|c| reps[c])
                    .collect();
                let t: Vec<usize> = c_set
                    .iter()
                    .filter(|&&c| tilde.r.related(c, e))
                    .map(|&c| rho_m.class_of(pos(s.mul(c, choices[&(c, c)].0))))
                    .collect();
                let (q_m, inter_m) = class_intersection(&act_m, &rho_m, pos(a), pos(b));
                let got = Subact::generated(&q_m, &t);
                report.require(
                    got == inter_m,
                    "T generates (aρ)M ∩ (bρ)M",
                    json!({ "H": elem_pair_labels(s, &h), "a": s.label(a), "b": s.label(b) }),
                );
            }
        }
        runs.push(json!({ "H": elem_pair_labels(s, &h), "K_prime_sizes": k_prime_sizes }));
    }
    report.artifact("sampled_congruences", runs);
    Ok(report.finish())
}

/// The conditions for `BR(M, θ)` with `E` its idempotents and `M` embedded
/// as `{(0, g, 0)}`, inside `ball(radius)`.
pub fn prop49_bruck_reilly(
    base: &FiniteMonoid,
    theta: Endomorphism,
    radius: usize,
) -> Result<ConstructionReport> {
    let s = BruckReilly::new(base, theta);
    let ball = s.ball(radius);
    let inner = s.ball(radius / 2);
    let e = s.identity();
    let idem: Vec<Element> = ball
        .iter()
        .filter(|x| s.multiply(x, x) == **x)
        .cloned()
        .collect();
    let key_r =
        |x: &Element| -> Vec<bool> { idem.iter().map(|f| s.multiply(f, x) == *x).collect() };
    let key_l =
        |x: &Element| -> Vec<bool> { idem.iter().map(|f| s.multiply(x, f) == *x).collect() };
    let r_rel = |x: &Element, y: &Element| key_r(x) == key_r(y);
    let h_rel = |x: &Element, y: &Element| r_rel(x, y) && key_l(x) == key_l(y);
    let in_m = |x: &Element| matches!(x, Element::Triple(0, _, 0));
    let mut report = ConstructionReport::new(
        BR_NAME,
        BR_ANCHOR,
        format!("{} inside the ball of radius {radius}", s.describe()),
    );
    report.bound_relative = true;
    report.require(idem.contains(&e), "(a) e ∈ E", s.render(&e));
    let gens = s.generators();
    for x in &inner {
        for y in inner.iter().filter(|y| h_rel(x, y)) {
            for g in &gens {
                let (xg, yg) = (s.multiply(x, g), s.multiply(y, g));
                report.require(
                    h_rel(&xg, &yg),
                    "(b) ~H_E is compatible with right multiplication",
                    [s.render(x), s.render(y), s.render(g)],
                );
            }
        }
    }
    let m_class: Vec<Element> = inner.iter().filter(|x| h_rel(&e, x)).cloned().collect();
    let expected: Vec<Element> = base.elements().map(|g| Element::Triple(0, g, 0)).collect();
    let mut sorted_expected = expected.clone();
    sorted_expected.sort();
    report.require(
        m_class == sorted_expected,
        "(c) the ~H_E-class of e is {(0,g,0)}",
        m_class.iter().map(|x| s.render(x)).collect::<Vec<_>>(),
    );
    let mut choices = Vec::new();
    for u in inner.iter().filter(|u| r_rel(&e, u)) {
        for v in inner.iter().filter(|v| h_rel(u, v)) {
            let found = ball
                .iter()
                .filter(|p| in_m(&s.multiply(u, p)) && in_m(&s.multiply(v, p)))
                .find_map(|p| {
                    ball.iter()
                        .find(|q| {
                            let pq = s.multiply(p, q);
                            s.multiply(u, &pq) == *u && s.multiply(v, &pq) == *v
                        })
                        .map(|q| (p.clone(), q.clone()))
                });
            match found {
                Some((p, q)) => choices.push(json!({
                    "u": s.render(u), "v": s.render(v), "p": s.render(&p), "q": s.render(&q),
                })),
                None => report.fail("(d) p, q exist in the ball", [s.render(u), s.render(v)]),
            }
        }
    }
    report.artifact("idempotents_in_ball", idem.len());
    report.artifact("pq_choices", choices);
    report.note("the relations are computed from the idempotents of the ball, so every verdict is relative to it");
    Ok(report.finish())
}
