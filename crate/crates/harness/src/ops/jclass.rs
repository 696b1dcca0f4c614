//! Annihilators and intersections on a 𝒥-class that is a monoid.

use coact_core::congruence::{ann_of_class, congruence_generating_set};
use coact_core::green::{green, unitary_status};
use coact_core::oracle::ann_scan;
use coact_core::subact::{minimal_generating_set, srcep_check};
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Subact};
use serde_json::json;

use super::{check_element, check_pairs};
use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "thm48_jclass_constructions";
pub const ANCHOR: &str =
    "for a 𝒥-class J with identity e: J is weakly left and right unitary and has SRCEP; \
ann(aρ) = ⟨H'⟩_J with H' = {(ec, ed) : (c, d) ∈ H, ec, ed ∈ J} for generators H of ann(aρ^S); \
(aρ)J ∩ (bρ)J = Y'J with Y' = {x'ρ : x' ∈ eX ∩ J} for a transversal X of generators of \
(aρ^S)S ∩ (bρ^S)S";

/// At most this many single-pair congruences are tried for SRCEP.
const SRCEP_PAIR_CAP: usize = 400;

/// `j` names the 𝒥-class by one of its elements; `h`, `a`, `b` index `s`.
pub fn thm48_jclass_constructions(
    s: &FiniteMonoid,
    j: ElementId,
    h: &[Pair],
    a: ElementId,
    b: ElementId,
) -> Result<ConstructionReport> {
    check_element(s, j, "j")?;
    check_pairs(s, h, "H")?;
    let jc = green(s).j_class(j);
    let e = s.identity_of(&jc).ok_or_else(|| {
        HarnessError::Precondition(format!("the 𝒥-class of {} has no identity", s.label(j)))
    })?;
    if !s.is_subsemigroup(&jc) {
        return Err(HarnessError::Precondition(
            "the 𝒥-class is not a subsemigroup".into(),
        ));
    }
    let inside = |x: ElementId| jc.binary_search(&x).is_ok();
    for (what, x) in [("a", a), ("b", b)] {
        if !inside(x) {
            return Err(HarnessError::param(
                what,
                format!("{} is outside J", s.label(x)),
            ));
        }
    }
    if let Some(&(c, d)) = h.iter().find(|&&(c, d)| !inside(c) || !inside(d)) {
        return Err(HarnessError::param(
            "H",
            format!("pair ({}, {}) leaves J", s.label(c), s.label(d)),
        ));
    }
    let (jm, emb) = s.submonoid(&jc)?;
    let pos = |x: ElementId| emb.binary_search(&x).unwrap();
    let act_s = FiniteRightAct::regular(s);
    let act_j = FiniteRightAct::regular(&jm);
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|S| = {}, J = {:?}, H = {:?}, a = {}, b = {}",
            s.size(),
            elem_labels(s, &jc),
            elem_pair_labels(s, h),
            s.label(a),
            s.label(b)
        ),
    );

    let status = unitary_status(s, &jc)?;
    report.require(
        status.weakly_left_unitary.holds(),
        "J is weakly left unitary",
        format!("{:?}", status.weakly_left_unitary),
    );
    report.require(
        status.weakly_right_unitary.holds(),
        "J is weakly right unitary",
        format!("{:?}", status.weakly_right_unitary),
    );
    let mut srcep_sets: Vec<Vec<Pair>> = vec![h.to_vec()];
    srcep_sets.extend(
        jc.iter()
            .flat_map(|&x| jc.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| x < y)
            .take(SRCEP_PAIR_CAP)
            .map(|p| vec![p]),
    );
    for pairs in &srcep_sets {
        let c = srcep_check(s, &jc, pairs)?;
        report.require(
            c.holds(),
            "J has SRCEP",
            json!({
                "pairs": elem_pair_labels(s, pairs),
                "restriction_witness": c.restriction_witness.map(|(x, y)| [s.label(x), s.label(y)]),
                "class_witness": c.class_witness.map(|(x, y)| [s.label(x), s.label(y)]),
            }),
        );
    }

    let hj: Vec<Pair> = h.iter().map(|&(c, d)| (pos(c), pos(d))).collect();
    let rho_j = closure(&jm, &hj);
    let rho_s = closure(s, h);

    let ann_s = ann_of_class(&act_s, &rho_s, a);
    let hs = congruence_generating_set(&act_s, &ann_s);
    let mut h_prime: Vec<Pair> = hs
        .iter()
        .map(|&(c, d)| (s.mul(e, c), s.mul(e, d)))
        .filter(|&(c, d)| inside(c) && inside(d))
        .map(|(c, d)| (pos(c), pos(d)))
        .collect();
    h_prime.sort_unstable();
    h_prime.dedup();
    let target = ann_scan(&act_j, &oracle_closure(&jm, &hj), pos(a));
    let generated = oracle_closure(&jm, &h_prime);
    report.require(
        generated == target,
        "⟨H'⟩_J = ann(aρ)",
        partition_mismatch(&act_j, &generated, &target),
    );

    let (q_s, inter_s) = class_intersection(&act_s, &rho_s, a, b);
    let y_classes = minimal_generating_set(&q_s, &inter_s);
    let reps = rho_s.representatives();
    let x: Vec<ElementId> = y_classes.iter().map(|&c| reps[c]).collect();
    let mut x_prime: Vec<ElementId> = x
        .iter()
        .map(|&x| s.mul(e, x))
        .filter(|&x| inside(x))
        .collect();
    x_prime.sort_unstable();
    x_prime.dedup();
    let (q_j, inter_j) = class_intersection(&act_j, &rho_j, pos(a), pos(b));
    let y_prime: Vec<usize> = x_prime.iter().map(|&x| rho_j.class_of(pos(x))).collect();
    let generated = Subact::generated(&q_j, &y_prime);
    report.require(
        generated == inter_j,
        "(aρ)J ∩ (bρ)J = Y'J",
        subact_mismatch(&q_j, &generated, &inter_j),
    );

    report.artifact("J", elem_labels(s, &jc));
    report.artifact("e", s.label(e));
    report.artifact("H_ann_S", elem_pair_labels(s, &hs));
    report.artifact("H_prime", elem_pair_labels(&jm, &h_prime));
    report.artifact("X", elem_labels(s, &x));
    report.artifact("X_prime", elem_labels(s, &x_prime));
    report.artifact("intersection_in_J", labels(&q_j, inter_j.elements()));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::constructions::direct_product;
    use coact_core::monoid::builtin::*;

    #[test]
    fn group_of_units() {
        let s = z3();
        let r = thm48_jclass_constructions(&s, 0, &[(0, 1)], 1, 2).unwrap();
        assert!(r.verified, "{:?}", r.failures);
    }

    #[test]
    fn zero_class_of_brandt() {
        let s = coact_core::constructions::brandt(&z2(), 2, true).unwrap();
        let z = s.zero().unwrap();
        let r = thm48_jclass_constructions(&s, z, &[], z, z).unwrap();
        assert!(r.verified);
    }

    #[test]
    fn proper_monoid_class_of_product() {
        let s = direct_product(&u2(), &z2());
        let eg = s.element("(e,g)").unwrap();
        let e1 = s.element("(e,1)").unwrap();
        let r = thm48_jclass_constructions(&s, eg, &[(e1, eg)], e1, eg).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["J"], json!(["(e,1)", "(e,g)"]));
    }

    #[test]
    fn class_without_identity() {
        let s = nilpotent();
        let a = s.element("a").unwrap();
        assert!(thm48_jclass_constructions(&s, a, &[], a, a).is_err());
    }
}
