//! Worked instances of every check, with expected values computed by the
//! naive oracle in `common` and frozen here.

mod common;

use coact_core::computable::{ComputableMonoid, Element, ExtendedBruckReilly};
use coact_core::constructions::{
    adjoin_identity, brandt, direct_product, BrandtMonoid, Endomorphism, SandwichMatrix,
};
use coact_core::monoid::builtin::*;
use coact_core::{FiniteMonoid, FiniteRightAct, Pair};
use coact_harness::ops::brandt::{BrandtCase, BrandtCongruenceData};
use coact_harness::ops::*;
use coact_harness::ConstructionReport;
use common::*;
use serde_json::{json, Value};

fn ok(r: ConstructionReport) -> ConstructionReport {
    assert!(r.verified, "{}: {:?}", r.instance, r.failures);
    r
}

fn pairs_from(m: &FiniteMonoid, v: &Value) -> Vec<Pair> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|p| {
            (
                m.element(p[0].as_str().unwrap()).unwrap(),
                m.element(p[1].as_str().unwrap()).unwrap(),
            )
        })
        .collect()
}

fn b_z2_2() -> FiniteMonoid {
    brandt(&z2(), 2, true).unwrap()
}

#[test]
fn brandt_annihilator_generators_match_naive_annihilator() {
    let s = b_z2_2();
    let x = [(s.element("(1,g,1)").unwrap(), s.element("(1,1,1)").unwrap())];
    let a = s.element("(1,1,1)").unwrap();
    let r = ok(annihilator::thm32_annihilator_gens(&s, &x, a).unwrap());
    let act = FiniteRightAct::regular(&s);
    let y = pairs_from(&s, &r.artifacts["Y"]);
    let want = naive_annihilator(&act, &naive_closure(&act, &x), a);
    assert_eq!(naive_closure(&act, &y), want);
}

#[test]
fn empty_x_gives_the_plain_annihilator() {
    let s = b_z2_2();
    let act = FiniteRightAct::regular(&s);
    let identity = naive_closure(&act, &[]);
    for a in s.elements() {
        let r = ok(annihilator::thm32_annihilator_gens(&s, &[], a).unwrap());
        let y = pairs_from(&s, &r.artifacts["Y"]);
        assert_eq!(
            naive_closure(&act, &y),
            naive_annihilator(&act, &identity, a)
        );
    }
}

#[test]
fn u2_annihilators_of_e() {
    let s = u2();
    let e = s.element("e").unwrap();
    for x in [vec![], vec![(0, 1)], vec![(1, 1)]] {
        ok(annihilator::thm32_annihilator_gens(&s, &x, e).unwrap());
    }
}

#[test]
fn rees_right_ideals_are_unions_of_rows() {
    let g = z2();
    let p = SandwichMatrix::constant(2, 2, g.identity()).unwrap();
    let r = ok(rees::prop34_rees_check(&g, p, 5, 1).unwrap());
    // Frozen from a closed-subset enumeration of the 10-element monoid.
    assert_eq!(
        r.artifacts["proper_right_ideals_as_row_sets"],
        json!([[], [1], [1, 2], [2]])
    );
}

#[test]
fn rees_with_a_nontrivial_sandwich() {
    let g = z3();
    let p = SandwichMatrix::new(2, 2, vec![Some(0), Some(0), Some(0), Some(1)]).unwrap();
    ok(rees::prop34_rees_check(&g, p, 5, 2).unwrap());
}

#[test]
fn brandt_zero_closure_three_rows() {
    let g = z2();
    let r = ok(brandt_zero::prop35_brandt_zero_closure(&g, 3, 0, 1).unwrap());
    let s = brandt(&g, 3, true).unwrap();
    let act = FiniteRightAct::regular(&s);
    let gen = (s.element("(1,g,1)").unwrap(), s.element("1!").unwrap());
    let rel = naive_closure(&act, &[gen]);
    let zero = s.element("0!").unwrap();
    let want: Vec<&str> = s
        .elements()
        .filter(|&x| rel[zero][x])
        .map(|x| s.label(x))
        .collect();
    let got: Vec<&str> = r.artifacts["zero_closure"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(got, want);
    assert_eq!(got.len(), 13);
    assert!(!got.contains(&"1!"));
    for w in r.artifacts["witnesses"].as_array().unwrap() {
        assert_eq!(w["chain"].as_array().unwrap().last().unwrap(), "0!");
    }
}

#[test]
fn brandt_zero_closure_single_row() {
    let r = ok(brandt_zero::prop35_brandt_zero_closure(&z2(), 1, 0, 0).unwrap());
    assert_eq!(r.artifacts["zero_closure"], json!(["0!"]));
}

fn colon_on_ball(s: &ExtendedBruckReilly, e: &Element, a: &Element, r: usize) -> Vec<Element> {
    s.ball(r)
        .into_iter()
        .filter(|t| {
            let at = s.multiply(a, t);
            s.multiply(e, &at) == at
        })
        .collect()
}

#[test]
fn ebr_colon_ideal_formula() {
    let g = z2();
    let s = ExtendedBruckReilly::new(&g, Endomorphism::trivial(&g)).unwrap();
    let e = Element::Triple(2, 0, 2);
    let a = Element::Triple(0, 1, 1);
    let f = Element::Triple(3, 0, 3);
    let ideal: Vec<Element> = s
        .ball(12)
        .into_iter()
        .filter(|t| s.multiply(&f, t) == *t)
        .collect();
    assert_eq!(colon_on_ball(&s, &e, &a, 12), ideal);
    let es: Vec<Element> = s
        .ball(12)
        .into_iter()
        .filter(|t| s.multiply(&e, t) == *t)
        .collect();
    assert_eq!(colon_on_ball(&s, &e, &s.identity(), 12), es);
    let ea = s.multiply(&e, &a);
    assert_eq!(colon_on_ball(&s, &e, &ea, 12), s.ball(12));
    let r = ok(ebr::prop36_ebr_check(&g, Endomorphism::trivial(&g), 9, 10, 4).unwrap());
    assert!(r.bound_relative);
}

#[test]
fn retractions() {
    let s = u2();
    ok(retraction::ideal_retraction(&s, &[s.element("e").unwrap()]).unwrap());
    ok(retraction::product_projection(&u2(), &z2()).unwrap());
    ok(retraction::identity_retraction(&b_z2_2()).unwrap());
}

#[test]
fn identity_transfer_keeps_pairs_inside_m() {
    let m = u2();
    let e = m.element("e").unwrap();
    let r = ok(identity::prop43_identity_transfer(&m, &[(0, e)], e).unwrap());
    assert_eq!(r.artifacts["K"], json!([["1", "e"]]));
}

#[test]
fn identity_transfer_on_z2() {
    let m = z2();
    let m1 = adjoin_identity(&m);
    let g = m.element("g").unwrap();
    let h = [(m1.element("1!").unwrap(), g)];
    let r = ok(identity::prop43_identity_transfer(&m, &h, g).unwrap());
    assert_eq!(r.artifacts["K"], json!([["1", "g"]]));
    // ν is the restriction of the closure on M¹.
    let rel = naive_monoid_closure(&m1, &h);
    assert!(rel[0][g]);
}

#[test]
fn identity_transfer_mixed_pairs_on_u2() {
    let m = u2();
    let m1 = adjoin_identity(&m);
    let (one, e, new) = (0, m.element("e").unwrap(), m1.element("1!").unwrap());
    for a in [one, e] {
        ok(identity::prop43_identity_transfer(&m, &[(new, e), (one, one)], a).unwrap());
    }
}

#[test]
fn jclass_of_units() {
    let s = direct_product(&u2(), &z2());
    let j = s.element("(1,1)").unwrap();
    let g = s.element("(1,g)").unwrap();
    let r = ok(jclass::thm48_jclass_constructions(&s, j, &[(j, g)], j, g).unwrap());
    assert_eq!(r.artifacts["J"], json!(["(1,1)", "(1,g)"]));
}

#[test]
fn jclass_of_zero_in_brandt() {
    let s = b_z2_2();
    let z = s.element("0!").unwrap();
    ok(jclass::thm48_jclass_constructions(&s, z, &[], z, z).unwrap());
}

#[test]
fn jclass_proper_monoid_class() {
    let s = direct_product(&u2(), &z2());
    let (x, y) = (s.element("(e,1)").unwrap(), s.element("(e,g)").unwrap());
    for h in [vec![], vec![(x, y)]] {
        let r = ok(jclass::thm48_jclass_constructions(&s, x, &h, x, y).unwrap());
        assert_eq!(r.artifacts["J"], json!(["(e,1)", "(e,g)"]));
    }
}

#[test]
fn conditions_on_a_brandt_monoid() {
    let s = b_z2_2();
    let e = s.element("(1,1,1)").unwrap();
    let e_set: Vec<usize> = ["(1,1,1)", "(2,1,2)", "0!"]
        .iter()
        .map(|l| s.element(l).unwrap())
        .collect();
    let r = ok(tilde::prop49_conditions_check(&s, e, &e_set, None, 4, 1).unwrap());
    assert_eq!(r.artifacts["M"], json!(["(1,1,1)", "(1,g,1)"]));
    let choices = r.artifacts["pq_choices"].as_array().unwrap();
    let across = choices
        .iter()
        .find(|c| c["u"] == "(1,1,2)" && c["v"] == "(1,1,2)")
        .unwrap();
    assert_eq!(across["p"], "(2,1,1)");
    assert_eq!(across["q"], "(1,1,2)");
}

#[test]
fn condition_d_holds_in_a_regular_monoid() {
    let s = symmetric_inverse(2);
    for e in s.idempotents() {
        let r = tilde::prop49_conditions_check(&s, e, &s.idempotents(), None, 2, 0).unwrap();
        assert!(r.failures.iter().all(|f| !f.what.starts_with("(d)")));
    }
}

#[test]
fn condition_b_failure_is_named() {
    let s = symmetric_inverse(2);
    let r = tilde::prop49_conditions_check(&s, s.identity(), &s.idempotents(), None, 2, 0).unwrap();
    assert!(!r.verified);
    assert!(r.failures[0].what.starts_with("(b)"));
    assert_eq!(r.failures[0].witness.as_array().unwrap().len(), 3);
}

#[test]
fn bruck_reilly_surrogate() {
    let m = z2();
    let r = ok(tilde::prop49_bruck_reilly(&m, Endomorphism::trivial(&m), 6).unwrap());
    assert!(r.bound_relative);
}

fn brandt_z2() -> (FiniteMonoid, BrandtMonoid) {
    let m = z2();
    let b = BrandtMonoid::new(&m, 2, true).unwrap();
    (m, b)
}

#[test]
fn normal_form_cases() {
    let t = trivial();
    let b1 = BrandtMonoid::new(&t, 2, true).unwrap();
    let (_, d) = brandt::lemma51_normalize(&t, 2, &[(b1.one(), b1.zero())], 0).unwrap();
    assert_eq!(d.case, BrandtCase::Universal);

    let (m, b) = brandt_z2();
    let k = [(b.triple(0, 1, 0), b.triple(0, 0, 0))];
    let (r, d) = brandt::lemma51_normalize(&m, 2, &k, 0).unwrap();
    ok(r);
    assert_eq!((d.case, d.b.len()), (BrandtCase::IdentityAlone, 0));

    let k = [(b.triple(0, 1, 0), b.one())];
    let (r, d) = brandt::lemma51_normalize(&m, 2, &k, 0).unwrap();
    ok(r);
    assert_eq!((d.case, d.index_i), (BrandtCase::IdentityLinked, Some(0)));
    assert!(d.generators(&b).contains(&(b.triple(0, 0, 0), b.one())));
}

#[test]
fn transfer_instances() {
    let (m, _) = brandt_z2();
    ok(brandt::lemma52_transfer(&m, 2, &[], 0).unwrap());
    let r = ok(brandt::lemma52_transfer(&m, 2, &[(0, 1, 1, 0)], 0).unwrap());
    // 2 rows in the support, 2 elements each, all ordered pairs.
    assert_eq!(r.artifacts["pairs_checked"], 16);
    let r = ok(brandt::lemma52_transfer(&m, 2, &[(0, 1, 0, 1)], 0).unwrap());
    assert_eq!(r.artifacts["tau_classes"].as_array().unwrap().len(), 2);
}

fn data(a: Vec<(usize, usize, usize, usize)>, b: Vec<(usize, usize)>) -> BrandtCongruenceData {
    BrandtCongruenceData {
        case: BrandtCase::IdentityAlone,
        a,
        b,
        bullet: 0,
        index_i: None,
    }
}

#[test]
fn brandt_annihilator_instances() {
    let (m, b) = brandt_z2();
    let r = ok(brandt::lemma53_annihilator(
        &m,
        2,
        &data(vec![(0, 0, 0, 0)], vec![]),
        b.triple(0, 0, 0),
    )
    .unwrap());
    assert_eq!(r.artifacts["R3"], json!([]));
    ok(
        brandt::lemma53_annihilator(&m, 2, &data(vec![(0, 1, 0, 0)], vec![]), b.triple(0, 0, 0))
            .unwrap(),
    );

    let m = u2();
    let b = BrandtMonoid::new(&m, 2, true).unwrap();
    let r = ok(brandt::lemma53_annihilator(
        &m,
        2,
        &data(vec![(0, 1, 1, 1)], vec![(1, 0)]),
        b.triple(0, 0, 0),
    )
    .unwrap());
    assert_eq!(r.artifacts["R3"], json!([["(1,e,1)", "0!"]]));
    // Independent check of the annihilator.
    let d = data(vec![(0, 1, 1, 1)], vec![(1, 0)]);
    let act = FiniteRightAct::regular(b.monoid());
    let want = naive_annihilator(
        &act,
        &naive_closure(&act, &d.generators(&b)),
        b.triple(0, 0, 0),
    );
    let got: Vec<Pair> = ["R1", "R2", "R3"]
        .iter()
        .flat_map(|k| pairs_from(b.monoid(), &r.artifacts[*k]))
        .collect();
    assert_eq!(naive_closure(&act, &got), want);
}

#[test]
fn brandt_annihilator_rejects_zero_class() {
    let (m, b) = brandt_z2();
    let d = data(vec![], vec![(0, 0)]);
    assert!(brandt::lemma53_annihilator(&m, 2, &d, b.triple(0, 1, 1)).is_err());
}

#[test]
fn brandt_intersection_instances() {
    let (m, b) = brandt_z2();
    let r = ok(brandt::lemma54_intersection(
        &m,
        2,
        &data(vec![], vec![]),
        b.triple(0, 0, 0),
        b.triple(1, 0, 0),
    )
    .unwrap());
    assert_eq!(r.artifacts["intersection"], json!(["[0!]"]));
    let r = ok(brandt::lemma54_intersection(
        &m,
        2,
        &data(vec![(0, 1, 1, 0)], vec![]),
        b.triple(0, 0, 0),
        b.triple(1, 0, 1),
    )
    .unwrap());
    assert!(r.artifacts["D"].as_array().unwrap().len() == 1);
    ok(brandt::lemma54_intersection(
        &m,
        2,
        &data(vec![(0, 1, 0, 0)], vec![]),
        b.triple(0, 0, 0),
        b.triple(0, 1, 0),
    )
    .unwrap());
}

#[test]
fn zero_transfer_instances() {
    let m = z2();
    let g = m.element("g").unwrap();
    let r = ok(zero::cor56_zero_transfer(&m, &[(0, g)], g, 0).unwrap());
    assert_eq!(r.artifacts["rho0_classes"], json!([["1", "g"], ["0!"]]));
    let m = u2();
    let e = m.element("e").unwrap();
    let r = ok(zero::cor56_zero_transfer(&m, &[], e, e).unwrap());
    assert_eq!(r.artifacts["rho0_classes"].as_array().unwrap().len(), 3);
}

#[test]
fn product_example_classes_and_witness() {
    let (p, h) = product::system();
    let class =
        coact_core::bounded::saturated_class(&p, &h, &p.parse("(ax^2,b)").unwrap(), 8).unwrap();
    let shown: Vec<String> = class.members.iter().map(|x| p.render(x)).collect();
    let mut want: Vec<Element> = ["(ax^2,b)", "(ax,xb)", "(a,x^2b)"]
        .iter()
        .map(|s| p.parse(s).unwrap())
        .collect();
    want.sort();
    assert_eq!(class.members, want, "{shown:?}");
    assert!(class.complete);

    let zero = coact_core::bounded::saturated_class(&p, &h, &p.parse("(a,b)").unwrap(), 4).unwrap();
    assert_eq!(zero.members.len(), 1);

    let w = product::displayed_witness(3);
    let from = p.parse("(ax^3b,b)").unwrap();
    let chain = w.chain(&p, &h, &from).unwrap();
    assert!(chain.contains(&p.parse("(aa,x^3b)").unwrap()));
    assert_eq!(chain.last().unwrap(), &p.parse("(ax^3a,b)").unwrap());
    assert_eq!(chain.len(), 8);

    let r = ok(product::ex62_product_check(3, 10, 2, 20, 1).unwrap());
    assert!(r.bound_relative);
}

#[test]
fn product_example_rejects_small_radius() {
    assert!(product::ex62_product_check(3, 7, 2, 0, 1).is_err());
}

#[test]
fn act_transfer_instances() {
    let r = ok(act_transfer::prop65_act_transfer(&u2(), &trivial(), 1, &[(0, 1)]).unwrap());
    assert_eq!(r.artifacts["A_size"], 1);
    let r = ok(act_transfer::prop65_act_transfer(&u2(), &z2(), 1, &[]).unwrap());
    assert_eq!(r.artifacts["H_prime_over_S"], json!([]));
    // The kernel over S × T is trivial, so only the (1_S, t) pairs remain.
    assert_eq!(r.artifacts["H_over_S"], json!([]));
    let r = ok(act_transfer::prop65_act_transfer(&u2(), &z2(), 1, &[(0, 3)]).unwrap());
    assert_eq!(r.artifacts["A_size"], 1);
}
