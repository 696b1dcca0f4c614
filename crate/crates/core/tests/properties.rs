mod common;

use coact_core::congruence::*;
use coact_core::green::{green, tilde_relations, unitary_status};
use coact_core::subact::*;
use coact_core::{FiniteRightAct, Subact};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_equals_naive_oracle(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let h = common::random_pairs(seed, act.size(), 4);
        let c = congruence_closure(&act, &h).unwrap();
        prop_assert_eq!(c.partition(), &common::naive_closure(&act, &h));
        prop_assert!(act.is_congruence(c.partition()));
    }

    #[test]
    fn witnesses_replay(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let h = common::random_pairs(seed, act.size(), 4);
        let c = congruence_closure(&act, &h).unwrap();
        for a in 0..act.size() {
            for b in 0..act.size() {
                match c.witness(a, b) {
                    Some(w) => prop_assert!(w.replay(&act, &h, a, b)),
                    None => prop_assert!(!c.related(a, b)),
                }
            }
        }
    }

    #[test]
    fn generator_propagation_agrees(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let m = act.monoid();
        let gens = m.irreducible_elements();
        let h = common::random_pairs(seed, act.size(), 4);
        let full = congruence_closure(&act, &h).unwrap();
        let by_gens = congruence_closure_by(&act, &h, &gens).unwrap();
        prop_assert_eq!(full.partition(), by_gens.partition());
    }

    #[test]
    fn symmetric_closure_generates_same(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let h = common::random_pairs(seed, act.size(), 4);
        let a = congruence_closure(&act, &h).unwrap();
        let b = congruence_closure(&act, &symmetric_closure(&h)).unwrap();
        prop_assert_eq!(a.partition(), b.partition());
    }

    #[test]
    fn closure_is_monotone(seed in any::<u64>(), extra in 0usize..144, extra2 in 0usize..144) {
        let act = common::random_act(seed, 8, 12);
        let n = act.size();
        let h = common::random_pairs(seed, n, 4);
        let mut h2 = h.clone();
        h2.push((extra % n, extra2 % n));
        let a = congruence_closure(&act, &h).unwrap();
        let b = congruence_closure(&act, &h2).unwrap();
        prop_assert!(a.partition().refines(b.partition()));
    }

    #[test]
    fn generating_sets_regenerate(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let h = common::random_pairs(seed, act.size(), 4);
        let c = congruence_closure(&act, &h).unwrap();
        let g = congruence_generating_set(&act, c.partition());
        prop_assert_eq!(congruence_closure(&act, &g).unwrap().into_partition(), c.partition().clone());
        for i in 0..g.len() {
            let mut rest = g.clone();
            rest.remove(i);
            prop_assert_ne!(congruence_closure(&act, &rest).unwrap().into_partition(), c.partition().clone());
        }
    }

    #[test]
    fn minimal_generating_sets_are_minimal(seed in any::<u64>()) {
        let act = common::random_act(seed, 8, 12);
        let gens: Vec<usize> = common::random_pairs(seed, act.size(), 4).into_iter().map(|p| p.0).collect();
        let u = Subact::generated(&act, &gens);
        let mg = minimal_generating_set(&act, &u);
        prop_assert_eq!(Subact::generated(&act, &mg), u.clone());
        for i in 0..mg.len() {
            let mut rest = mg.clone();
            rest.remove(i);
            prop_assert_ne!(Subact::generated(&act, &rest), u.clone());
        }
    }

    #[test]
    fn ideal_quotients_agree_on_related_elements(seed in any::<u64>(), g in 0usize..8) {
        let m = common::random_monoid(seed, 8);
        let a = FiniteRightAct::regular(&m);
        let h = common::random_pairs(seed, m.size(), 3);
        let rho = congruence_closure(&a, &h).unwrap();
        let i = Subact::generated(&a, &[g % m.size()]);
        let closed = rho_closure(&a, &i, rho.partition());
        prop_assert!(i.is_subset(&closed));
        prop_assert!(Subact::from_set(&a, closed.elements()).is_ok());
        for x in m.elements() {
            for y in rho.class(x) {
                prop_assert_eq!(
                    ideal_quotient(&a, &closed, x).unwrap(),
                    ideal_quotient(&a, &closed, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn green_structure_laws(seed in any::<u64>()) {
        let m = common::random_monoid(seed, 8);
        let g = green(&m);
        prop_assert_eq!(&g.h, &g.r.meet(&g.l));
        prop_assert!(g.r.refines(&g.d));
        prop_assert!(g.l.refines(&g.d));
        prop_assert_eq!(&g.r, &coact_core::oracle::r_by_orbits(&m));
        for a in m.elements() {
            for b in m.elements() {
                prop_assert_eq!(g.j.related(a, b), g.leq_j(a, b) && g.leq_j(b, a));
            }
        }
    }

    #[test]
    fn tilde_contains_green(seed in any::<u64>(), mask in any::<u16>()) {
        let m = common::random_monoid(seed, 8);
        let idem = m.idempotents();
        let e: Vec<usize> = idem.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect();
        let t = tilde_relations(&m, &e).unwrap();
        let g = green(&m);
        prop_assert!(g.r.refines(&t.r));
        prop_assert!(g.l.refines(&t.l));
        prop_assert!(g.h.refines(&t.h));
        prop_assert_eq!(&t.h, &t.r.meet(&t.l));
        if m.is_regular() {
            let full = tilde_relations(&m, &idem).unwrap();
            prop_assert_eq!(full.r, g.r);
            prop_assert_eq!(full.l, g.l);
        }
    }

    #[test]
    fn monoid_j_classes_are_weakly_unitary(seed in any::<u64>()) {
        let m = common::random_monoid(seed, 8);
        let g = green(&m);
        for class in g.j.classes() {
            if m.identity_of(&class).is_some() && m.is_subsemigroup(&class) {
                let u = unitary_status(&m, &class).unwrap();
                prop_assert!(u.weakly_left_unitary.holds());
                prop_assert!(u.weakly_right_unitary.holds());
            }
        }
    }

    #[test]
    fn weakly_left_unitary_has_srcep(seed in any::<u64>(), pick in any::<u32>()) {
        let m = common::random_monoid(seed, 8);
        // the local submonoid eSe of a random idempotent e
        let e = m.idempotents()[pick as usize % m.idempotents().len()];
        let sub: Vec<usize> = m.elements().filter(|&x| m.mul(e, x) == x && m.mul(x, e) == x).collect();
        if !m.is_subsemigroup(&sub) {
            return Ok(());
        }
        let u = unitary_status(&m, &sub).unwrap();
        if u.weakly_left_unitary.holds() {
            let h = common::random_pairs(seed, sub.len(), 3);
            let pairs: Vec<(usize, usize)> = h.iter().map(|&(a, b)| (sub[a], sub[b])).collect();
            prop_assert!(srcep_check(&m, &sub, &pairs).unwrap().holds());
        }
    }
}

#[test]
fn inverse_implies_regular_on_many_samples() {
    let mut inverse = 0;
    for seed in 0..400u64 {
        let m = common::random_monoid(seed, 8);
        if m.is_inverse() {
            inverse += 1;
            assert!(m.is_regular(), "seed {seed}");
        }
    }
    assert!(inverse > 0);
}
