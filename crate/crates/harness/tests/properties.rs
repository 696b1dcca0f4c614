mod common;

use coact_core::constructions::BrandtMonoid;
use coact_core::monoid::builtin::{u2, z2};
use coact_core::{FiniteMonoid, FiniteRightAct, Pair};
use coact_harness::ops::{annihilator, brandt, fuzz};
use coact_harness::random::regular_catalogue;
use common::*;
use proptest::prelude::*;

fn base(which: bool) -> FiniteMonoid {
    if which {
        u2()
    } else {
        z2()
    }
}

fn pairs(size: usize, max: usize) -> impl Strategy<Value = Vec<Pair>> {
    prop::collection::vec((0..size, 0..size), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn normal_form_generates_the_same_congruence(which in any::<bool>(), k in pairs(10, 3), bullet in 0usize..2) {
        let m = base(which);
        let br = BrandtMonoid::new(&m, 2, true).unwrap();
        let data = brandt::normalize(&br, &k, bullet).unwrap();
        data.check(&br).unwrap();
        let act = FiniteRightAct::regular(br.monoid());
        prop_assert_eq!(naive_closure(&act, &data.generators(&br)), naive_closure(&act, &k));
    }

    #[test]
    fn transfer_biconditional_holds(which in any::<bool>(), raw in prop::collection::vec((0usize..2, 0usize..2, 0usize..2, 0usize..2), 0..3)) {
        let m = base(which);
        let br = BrandtMonoid::new(&m, 2, true).unwrap();
        let a = raw;
        let r = brandt::lemma52_transfer(&m, 2, &a, 0).unwrap();
        prop_assert!(r.verified, "{:?}", r.failures);
        // Independent reading: the closure of H_A never joins rows with
        // different third coordinates.
        let act = FiniteRightAct::regular(br.monoid());
        let rel = naive_closure(&act, &brandt::BrandtCongruenceData {
            case: brandt::BrandtCase::IdentityAlone,
            a: a.clone(),
            b: vec![],
            bullet: 0,
            index_i: None,
        }.h_a(&br));
        for (p, d, q, e) in [(0, 0, 1, 0), (0, 0, 1, 1), (1, 1, 0, 0)] {
            for j in 0..2 {
                for l in 0..2 {
                    if rel[br.triple(p, d, j)][br.triple(q, e, l)] {
                        prop_assert_eq!(j, l);
                    }
                }
            }
        }
    }

    #[test]
    fn annihilator_generators_agree_with_scan(pick in 0usize..64, k in pairs(12, 2), a in 0usize..12) {
        let catalogue = regular_catalogue();
        let s = catalogue[pick % catalogue.len()].1.clone();
        let n = s.size();
        let x: Vec<Pair> = k.into_iter().map(|(p, q)| (p % n, q % n)).collect();
        let r = annihilator::thm32_annihilator_gens(&s, &x, a % n).unwrap();
        prop_assert!(r.verified, "{:?}", r.failures);
        let act = FiniteRightAct::regular(&s);
        let y: Vec<Pair> = r.artifacts["Y"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (s.element(p[0].as_str().unwrap()).unwrap(), s.element(p[1].as_str().unwrap()).unwrap()))
            .collect();
        prop_assert_eq!(naive_closure(&act, &y), naive_annihilator(&act, &naive_closure(&act, &x), a % n));
    }

    #[test]
    fn reports_serialize_identically(pick in 0usize..64, a in 0usize..12) {
        let catalogue = regular_catalogue();
        let s = catalogue[pick % catalogue.len()].1.clone();
        let first = annihilator::thm32_annihilator_gens(&s, &[], a % s.size()).unwrap().to_json();
        let second = annihilator::thm32_annihilator_gens(&s, &[], a % s.size()).unwrap().to_json();
        prop_assert_eq!(first, second);
    }
}

#[test]
fn fuzz_runs_are_deterministic() {
    let a = fuzz::fuzz_implications(3, 40, 6, false);
    let b = fuzz::fuzz_implications(3, 40, 6, false);
    assert!(a.verified);
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn injected_fault_surfaces_one_minimal_counterexample() {
    let r = fuzz::fuzz_implications(3, 40, 6, true);
    assert!(!r.verified);
    assert_eq!(r.failures.len(), 1);
}

#[test]
fn oracle_agreement_on_random_acts() {
    assert!(fuzz::oracle_equivalence(5, 60, 6, 10, 3).verified);
}
