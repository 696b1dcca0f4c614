//! Generators of `ann(aρ)` over a regular monoid with finitely generated
//! right ideals.

use std::collections::BTreeMap;

use coact_core::congruence::symmetric_closure;
use coact_core::oracle::ann_scan;
use coact_core::subact::rho_closure;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Subact};
use serde_json::json;

use super::{check_element, check_pairs};
use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "thm32_annihilator_gens";
pub const ANCHOR: &str = "ann(aρ) = ⟨Y⟩, Y = {(1, z_f·a)} ∪ {(z_p·x·h, z_q·y·h) ∈ ann(aρ) : \
p, q ∈ K, (x, y) ∈ X, h ∈ L(p,p,x,x) ∪ L(p,q,x,y)}, where (aS)ρ = ⋃_{e∈K} eS, e ρ a·z_e, \
a ∈ fS and (pS, x) ∩ (qS, y) = ⋃_{h∈L(p,q,x,y)} hS";

/// `{t : xt ∈ pS and yt ∈ qS}` for idempotents `p`, `q`.
fn quotient_meet(
    s: &FiniteMonoid,
    p: ElementId,
    q: ElementId,
    x: ElementId,
    y: ElementId,
) -> Vec<ElementId> {
    s.elements()
        .filter(|&t| {
            let (xt, yt) = (s.mul(x, t), s.mul(y, t));
            s.mul(p, xt) == xt && s.mul(q, yt) == yt
        })
        .collect()
}

pub fn thm32_annihilator_gens(
    s: &FiniteMonoid,
    x: &[Pair],
    a: ElementId,
) -> Result<ConstructionReport> {
    check_element(s, a, "a")?;
    check_pairs(s, x, "X")?;
    if let Some(w) = s.non_regular_witness() {
        return Err(HarnessError::Precondition(format!(
            "the monoid is not regular: {} has no inverse",
            s.label(w)
        )));
    }
    let act = FiniteRightAct::regular(s);
    let xs = symmetric_closure(x);
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|S| = {}, X = {:?}, a = {}",
            s.size(),
            elem_pair_labels(s, x),
            s.label(a)
        ),
    );
    let rho = closure(s, &xs);
    let a_s = Subact::generated(&act, &[a]);
    let a_s_rho = rho_closure(&act, &a_s, &rho);
    let k = idempotent_generators(s, a_s_rho.elements())
        .expect("regular monoids have idempotent generators");
    let mut z: BTreeMap<ElementId, ElementId> = BTreeMap::new();
    for &e in &k {
        let ze = least(s, |t| rho.related(e, s.mul(a, t))).ok_or_else(|| {
            HarnessError::Precondition(format!(
                "no z_e for e = {}; this indicates an implementation bug",
                s.label(e)
            ))
        })?;
        z.insert(e, ze);
    }
    let f = *k
        .iter()
        .find(|&&p| s.mul(p, a) == a)
        .ok_or_else(|| HarnessError::Precondition("a lies in no eS with e ∈ K".into()))?;

    let mut l_memo: BTreeMap<(ElementId, ElementId, ElementId, ElementId), Vec<ElementId>> =
        BTreeMap::new();
    let mut l = |p, q, xx, yy| -> Vec<ElementId> {
        l_memo
            .entry((p, q, xx, yy))
            .or_insert_with(|| {
                idempotent_generators(s, &quotient_meet(s, p, q, xx, yy))
                    .expect("regular monoids have idempotent generators")
            })
            .clone()
    };
    let in_ann = |u: ElementId, v: ElementId| rho.related(s.mul(a, u), s.mul(a, v));
    let mut y: Vec<Pair> = vec![(s.identity(), s.mul(z[&f], a))];
    let mut l_record = Vec::new();
    for &p in &k {
        for &q in &k {
            for &(xx, yy) in &xs {
                let mut hs = l(p, p, xx, xx);
                let pq = l(p, q, xx, yy);
                l_record.push(json!({
                    "p": s.label(p), "q": s.label(q), "x": s.label(xx), "y": s.label(yy),
                    "L": elem_labels(s, &pq),
                }));
                hs.extend(pq);
                hs.sort_unstable();
                hs.dedup();
                for h in hs {
                    let u = s.product([z[&p], xx, h]);
                    let v = s.product([z[&q], yy, h]);
                    if in_ann(u, v) {
                        y.push((u, v));
                    }
                }
            }
        }
    }
    y.sort_unstable();
    y.dedup();

    let union: Vec<ElementId> = {
        let mut v: Vec<_> = k.iter().flat_map(|&e| s.right_ideal(e)).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    report.require(
        union == a_s_rho.elements(),
        "(aS)ρ is the union of eS over e ∈ K",
        json!({ "union": elem_labels(s, &union), "aS_rho": elem_labels(s, a_s_rho.elements()) }),
    );
    for &(u, v) in &y {
        report.require(in_ann(u, v), "Y ⊆ ann(aρ)", [s.label(u), s.label(v)]);
    }
    let target = ann_scan(&act, &oracle_closure(s, &xs), a);
    let tau = oracle_closure(s, &y);
    report.require(
        tau == target,
        "⟨Y⟩ = ann(aρ)",
        partition_mismatch(&act, &tau, &target),
    );

    // The two stepping claims of the proof, instance-wise.
    for &(c, d) in &xs {
        for &p in &k {
            for t in s.elements() {
                let ct = s.mul(c, t);
                if s.mul(p, ct) != ct {
                    continue;
                }
                let dt = s.mul(d, t);
                let zp = s.mul(z[&p], ct);
                let forward = k
                    .iter()
                    .any(|&q| s.mul(q, dt) == dt && tau.related(zp, s.mul(z[&q], dt)));
                report.require(
                    forward,
                    "forward step: some q ∈ K has (z_p·c·t, z_q·d·t) ∈ ⟨Y⟩ and q·d·t = d·t",
                    [s.label(c), s.label(d), s.label(p), s.label(t)],
                );
                for w in s.elements().filter(|&w| s.mul(a, w) == dt) {
                    report.require(
                        tau.related(zp, w),
                        "closing step: d·t = a·w gives (z_p·c·t, w) ∈ ⟨Y⟩",
                        [s.label(c), s.label(d), s.label(p), s.label(t), s.label(w)],
                    );
                }
            }
        }
    }

    report.artifact("rho_classes", classes_json(&act, &rho));
    report.artifact("aS_rho", elem_labels(s, a_s_rho.elements()));
    report.artifact("K", elem_labels(s, &k));
    report.artifact(
        "z",
        z.iter()
            .map(|(&e, &ze)| (s.label(e).to_string(), s.label(ze).to_string()))
            .collect::<BTreeMap<_, _>>(),
    );
    report.artifact("f", s.label(f));
    report.artifact("L", l_record);
    report.artifact("Y", elem_pair_labels(s, &y));
    report.artifact("ann_classes", classes_json(&act, &target));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::constructions::BrandtMonoid;
    use coact_core::monoid::builtin::*;

    #[test]
    fn brandt_instance() {
        let b = BrandtMonoid::new(&z2(), 2, true).unwrap();
        let s = b.monoid();
        let g = s.element("(1,g,1)").unwrap();
        let one11 = s.element("(1,1,1)").unwrap();
        let r = thm32_annihilator_gens(s, &[(g, one11)], one11).unwrap();
        assert!(r.verified, "{:?}", r.failures);
    }

    #[test]
    fn empty_x_gives_plain_annihilator() {
        let s = u2();
        for a in s.elements() {
            let r = thm32_annihilator_gens(&s, &[], a).unwrap();
            assert!(r.verified);
        }
    }

    #[test]
    fn rejects_non_regular() {
        let s = nilpotent();
        assert!(matches!(
            thm32_annihilator_gens(&s, &[], 0),
            Err(HarnessError::Precondition(_))
        ));
    }
}
