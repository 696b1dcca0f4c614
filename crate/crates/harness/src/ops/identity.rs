//! Adjoining a new identity: restriction and annihilator transfer.

use coact_core::congruence::{congruence_generating_set, symmetric_closure};
use coact_core::constructions::adjoin_identity;
use coact_core::oracle::ann_scan;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair};
use serde_json::json;

use super::{check_element, check_pairs};
use crate::error::Result;
use crate::report::ConstructionReport;
use crate::support::*;

pub const NAME: &str = "prop43_identity_transfer";
pub const ANCHOR: &str = "for ρ = ⟨H⟩ on M with a new identity 1̲: ρ ∩ (M × M) = ⟨K⟩_M with \
K = (H ∩ M × M) ∪ {(1_M, a) : (1̲, a) ∈ H̄}, and ann(aρ) = ⟨ann(aν) ∪ {(1_M, 1̲)}⟩ for a ∈ M";

/// `h` indexes `M` with the new identity, which has index `|M|`.
pub fn prop43_identity_transfer(
    m: &FiniteMonoid,
    h: &[Pair],
    a: ElementId,
) -> Result<ConstructionReport> {
    check_element(m, a, "a")?;
    let m1 = adjoin_identity(m);
    check_pairs(&m1, h, "H")?;
    let new_one = m1.identity();
    let n = m.size();
    let act1 = FiniteRightAct::regular(&m1);
    let act = FiniteRightAct::regular(m);
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!(
            "|M| = {n}, H = {:?}, a = {}",
            elem_pair_labels(&m1, h),
            m.label(a)
        ),
    );

    let mut k: Vec<Pair> = h.iter().copied().filter(|&(c, d)| c < n && d < n).collect();
    for (c, d) in symmetric_closure(h) {
        if c == new_one && d < n {
            k.push((m.identity(), d));
        }
    }
    k.sort_unstable();
    k.dedup();

    let rho = closure(&m1, h);
    let nu = rho.restrict(&(0..n).collect::<Vec<_>>());
    let generated = oracle_closure(m, &k);
    report.require(
        generated == nu,
        "ρ ∩ (M × M) = ⟨K⟩_M",
        partition_mismatch(&act, &generated, &nu),
    );

    let ann_nu = ann_scan(&act, &nu, a);
    let mut kappa_gens = congruence_generating_set(&act, &ann_nu);
    kappa_gens.push((m.identity(), new_one));
    let kappa = oracle_closure(&m1, &kappa_gens);
    let target = ann_scan(&act1, &oracle_closure(&m1, h), a);
    report.require(
        kappa == target,
        "ann(aρ) = ⟨ann(aν) ∪ {(1_M, 1̲)}⟩",
        partition_mismatch(&act1, &kappa, &target),
    );

    report.artifact("K", elem_pair_labels(m, &k));
    report.artifact("nu_classes", classes_json(&act, &nu));
    report.artifact("kappa_generators", elem_pair_labels(&m1, &kappa_gens));
    report.artifact("ann_classes", classes_json(&act1, &target));
    report.artifact("new_identity", json!(m1.label(new_one)));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::*;

    #[test]
    fn z2_with_new_identity_pair() {
        let m = z2();
        let g = m.element("g").unwrap();
        let r = prop43_identity_transfer(&m, &[(2, g)], g).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["K"], json!([["1", "g"]]));
    }

    #[test]
    fn pairs_inside_m_are_kept() {
        let m = u2();
        let r = prop43_identity_transfer(&m, &[(0, 1)], 1).unwrap();
        assert!(r.verified);
        assert_eq!(r.artifacts["K"], json!([["1", "e"]]));
    }
}
