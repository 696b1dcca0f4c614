//! Adjoining a zero: congruences, annihilators and intersections carry over.

use coact_core::congruence::congruence_generating_set;
use coact_core::constructions::adjoin_zero;
use coact_core::oracle::ann_scan;
use coact_core::subact::minimal_generating_set;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Subact};

use super::{check_element, check_pairs};
use crate::error::Result;
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "cor56_zero_transfer";
pub const ANCHOR: &str =
    "for ρ = ⟨H⟩ on M and ρ⁰ = ⟨H⟩ on M⁰: ρ⁰ = ρ ∪ {(0, 0)}, a generating set of ann(aρ) \
generates ann(aρ⁰) together with the class {0}, and generators of (aρ)M ∩ (bρ)M with 0ρ⁰ generate \
(aρ⁰)M⁰ ∩ (bρ⁰)M⁰";

pub fn cor56_zero_transfer(
    m: &FiniteMonoid,
    h: &[Pair],
    a: ElementId,
    b: ElementId,
) -> Result<ConstructionReport> {
    check_pairs(m, h, "H")?;
    check_element(m, a, "a")?;
    check_element(m, b, "b")?;
    let n = m.size();
    let m0 = adjoin_zero(m);
    let zero = n;
    let act = FiniteRightAct::regular(m);
    let act0 = FiniteRightAct::regular(&m0);
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|M| = {n}, H = {:?}, a = {}, b = {}",
            elem_pair_labels(m, h),
            m.label(a),
            m.label(b)
        ),
    );

    let rho = oracle_closure(m, h);
    let rho0 = oracle_closure(&m0, h);
    let inside: Vec<usize> = (0..n).collect();
    let restricted = rho0.restrict(&inside);
    report.require(
        restricted == rho,
        "ρ⁰ ∩ (M × M) = ρ",
        partition_mismatch(&act, &restricted, &rho),
    );
    report.require(
        rho0.class(zero).len() == 1,
        "{0} is a ρ⁰-class",
        m0.label(zero),
    );

    let ann = ann_scan(&act, &rho, a);
    let ann0 = ann_scan(&act0, &rho0, a);
    report.require(
        ann0.restrict(&inside) == ann && ann0.class(zero).len() == 1,
        "ann(aρ⁰) = ann(aρ) ∪ {(0, 0)}",
        classes_json(&act0, &ann0),
    );
    let gens = congruence_generating_set(&act, &ann);
    let generated = oracle_closure(&m0, &gens);
    report.require(
        generated == ann0,
        "a generating set of ann(aρ) generates ann(aρ⁰)",
        partition_mismatch(&act0, &generated, &ann0),
    );

    let (q, inter) = class_intersection(&act, &rho, a, b);
    let y = minimal_generating_set(&q, &inter);
    let (q0, inter0) = class_intersection(&act0, &rho0, a, b);
    let reps = rho.representatives();
    let mut y0: Vec<usize> = y.iter().map(|&c| rho0.class_of(reps[c])).collect();
    y0.push(rho0.class_of(zero));
    let got = Subact::generated(&q0, &y0);
    report.require(
        got == inter0,
        "Y ∪ {0ρ⁰} generates (aρ⁰)M⁰ ∩ (bρ⁰)M⁰",
        subact_mismatch(&q0, &got, &inter0),
    );

    for u in m0.elements() {
        for v in m0.elements() {
            let (au, bv) = (m0.mul(a, u), m0.mul(b, v));
            let expected = (au == zero && bv == zero) || (au < n && bv < n && rho.related(au, bv));
            report.require(
                rho0.related(au, bv) == expected,
                "au ρ⁰ bv ⇔ au = bv = 0 or (au, bv ∈ M and au ρ bv)",
                [m0.label(u), m0.label(v)],
            );
        }
    }

    report.artifact("ann_generators", elem_pair_labels(m, &gens));
    report.artifact("Y", labels(&q, &y));
    report.artifact("Y0", labels(&q0, &y0));
    report.artifact("rho0_classes", classes_json(&act0, &rho0));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::*;

    #[test]
    fn u2_and_z3() {
        let m = u2();
        let e = m.element("e").unwrap();
        assert!(cor56_zero_transfer(&m, &[(0, e)], e, 0).unwrap().verified);
        let m = z3();
        assert!(cor56_zero_transfer(&m, &[], 1, 2).unwrap().verified);
    }

    #[test]
    fn zero_gets_its_own_class() {
        let m = z2();
        let r = cor56_zero_transfer(&m, &[(0, 1)], 0, 1).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["rho0_classes"].as_array().unwrap().len(), 2);
    }
}
