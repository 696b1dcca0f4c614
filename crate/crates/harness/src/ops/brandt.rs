//! Right congruences on Brandt monoids `B(M; I)¹`: normal forms of
//! generating sets, transfer to free `M`-acts, annihilators and
//! intersections.

use std::collections::BTreeSet;

use coact_core::congruence::{
    ann_of_class, annihilator, congruence_closure, congruence_generating_set,
};
use coact_core::constructions::{BrandtMonoid, MatrixElement};
use coact_core::oracle::{ann_scan, bfs_closure};
use coact_core::subact::minimal_generating_set;
use coact_core::{ElementId, FiniteMonoid, FiniteRightAct, Pair, Partition, Subact};
use serde_json::{json, Value};

use super::{check_element, check_pairs};
use crate::error::{HarnessError, Result};
use crate::report::ConstructionReport;
use crate::support::*;

pub const NORMALIZE: &str = "lemma51_normalize";
pub const NORMALIZE_ANCHOR: &str = "a right congruence on B(M; I)¹ is S × S = ⟨(1, 0)⟩, or has 1ρ = {1} and \
generators {((i,b,•), (k,c,•)) : (i,b,k,c) ∈ A} ∪ {((j,d,•), 0) : (j,d) ∈ B}, or has {1} ≠ 1ρ ≠ S and \
generators {((i,1,i), 1)} ∪ {((i,b,•), (i,c,•)) : (i,b,i,c) ∈ A} ∪ {((j,d,•), 0) : (j,d) ∈ B} with A ≠ ∅";
pub const TRANSFER: &str = "lemma52_transfer";
pub const TRANSFER_ANCHOR: &str =
    "(p,d,•) ρ_A (q,e,•) ⇔ x_p·d τ_A x_q·e, where ρ_A = ⟨((i,b,•), (k,c,•)) : A⟩ \
on B(M; I)¹ and τ_A = ⟨(x_i·b, x_k·c) : A⟩ on the free M-act over {x_h : h ∈ supp A}";
pub const ANNIHILATOR: &str = "lemma53_annihilator";
pub const ANNIHILATOR_ANCHOR: &str = "ann((u,a,v)ρ) = ⟨R₁ ∪ R₂ ∪ R₃⟩ with R₁ = {((v,x,v), (v,y,v)) : (x,y) ∈ T} ∪ \
{(1, (v,1,v))} for generators T of ann(a), R₂ = {((v,s,v), (v,t,v)) : (s,t) ∈ U} for generators U of \
ann((x_u·a)τ_A), and R₃ = {((v,h_{α,p},v), 0)} from (x_u·a)τ_A·M ∩ (x_j·d)τ_A·M = ⋃_p (x_{α,p}·w_{α,p})τ_A·M";
pub const INTERSECTION: &str = "lemma54_intersection";
pub const INTERSECTION_ANCHOR: &str =
    "(𝐚ρ)S ∩ (𝐛ρ)S is generated by U = {(u,c,u)ρ : c ∈ C}, where aM ∩ bM = ⋃_{c∈C} cM, \
and V = {(u,a·d,•)ρ : d ∈ D}, where (x_u·a)τ_A·M ∩ (x_w·b)τ_A·M = ⋃_{d∈D} (x_u·a·d)τ_A·M";

/// Which of the three normal forms a congruence takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BrandtCase {
    /// `ρ = S × S`.
    Universal,
    /// `1ρ = {1}`.
    IdentityAlone,
    /// `{1} ≠ 1ρ ≠ S`.
    IdentityLinked,
}

impl BrandtCase {
    pub fn tag(self) -> &'static str {
        match self {
            BrandtCase::Universal => "i",
            BrandtCase::IdentityAlone => "ii",
            BrandtCase::IdentityLinked => "iii",
        }
    }

    /// The case a congruence falls in, read off the partition.
    pub fn of(b: &BrandtMonoid, rho: &Partition) -> Self {
        if rho.related(b.one(), b.zero()) {
            BrandtCase::Universal
        } else if rho.class(b.one()).len() == 1 {
            BrandtCase::IdentityAlone
        } else {
            BrandtCase::IdentityLinked
        }
    }
}

/// Index sets of a normal-form generating set. Rows are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BrandtCongruenceData {
    pub case: BrandtCase,
    /// Quadruples `(i, b, k, c)`.
    pub a: Vec<(usize, ElementId, usize, ElementId)>,
    /// Pairs `(j, d)`.
    pub b: Vec<(usize, ElementId)>,
    pub bullet: usize,
    /// The row `i` of the pair `((i,1,i), 1)` in the third case.
    pub index_i: Option<usize>,
}

impl BrandtCongruenceData {
    pub fn universal(bullet: usize) -> Self {
        BrandtCongruenceData {
            case: BrandtCase::Universal,
            a: Vec::new(),
            b: Vec::new(),
            bullet,
            index_i: None,
        }
    }

    /// Rows appearing first or third in a quadruple of `A`.
    pub fn support(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.a.iter().flat_map(|&(i, _, k, _)| [i, k]).collect();
        s.into_iter().collect()
    }

    pub fn check(&self, br: &BrandtMonoid) -> Result<()> {
        let (n, nm) = (br.index(), br.base().size());
        let bad = |what: &str| Err(HarnessError::param(what, "index out of range"));
        if self.bullet >= n {
            return bad("bullet");
        }
        for &(i, b, k, c) in &self.a {
            if i >= n || k >= n || b >= nm || c >= nm {
                return bad("A");
            }
        }
        for &(j, d) in &self.b {
            if j >= n || d >= nm {
                return bad("B");
            }
        }
        if self.case == BrandtCase::IdentityLinked {
            let Some(i) = self.index_i else {
                return Err(HarnessError::param("i", "the third case needs its row"));
            };
            if i >= n {
                return bad("i");
            }
            if self.a.is_empty() {
                return Err(HarnessError::param(
                    "A",
                    "must be non-empty in the third case",
                ));
            }
            if self.a.iter().any(|&(j, _, k, _)| j != i || k != i) {
                return Err(HarnessError::param(
                    "A",
                    "every quadruple must sit on row i",
                ));
            }
        }
        Ok(())
    }

    /// `H_A`.
    pub fn h_a(&self, br: &BrandtMonoid) -> Vec<Pair> {
        self.a
            .iter()
            .map(|&(i, b, k, c)| (br.triple(i, b, self.bullet), br.triple(k, c, self.bullet)))
            .collect()
    }

    /// The generating set `H` displayed for the case.
    pub fn generators(&self, br: &BrandtMonoid) -> Vec<Pair> {
        if self.case == BrandtCase::Universal {
            return vec![(br.one(), br.zero())];
        }
        let mut h = Vec::new();
        if let (BrandtCase::IdentityLinked, Some(i)) = (self.case, self.index_i) {
            h.push((br.triple(i, br.base().identity(), i), br.one()));
        }
        h.extend(self.h_a(br));
        h.extend(
            self.b
                .iter()
                .map(|&(j, d)| (br.triple(j, d, self.bullet), br.zero())),
        );
        h
    }

    pub fn to_json(&self, br: &BrandtMonoid) -> Value {
        let m = br.base();
        json!({
            "case": self.case.tag(),
            "A": self.a.iter().map(|&(i, b, k, c)| json!([i + 1, m.label(b), k + 1, m.label(c)])).collect::<Vec<_>>(),
            "B": self.b.iter().map(|&(j, d)| json!([j + 1, m.label(d)])).collect::<Vec<_>>(),
            "bullet": self.bullet + 1,
            "i": self.index_i.map(|i| i + 1),
        })
    }
}

/// First `((i,b,j), (k,c,j))` where relatedness differs from that of the
/// same triples rebased to the bullet column.
pub fn bullet_invariance_failure(
    br: &BrandtMonoid,
    rho: &Partition,
    bullet: usize,
) -> Option<[ElementId; 2]> {
    let (n, m) = (br.index(), br.base());
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                for b in m.elements() {
                    for c in m.elements() {
                        let (x, y) = (br.triple(i, b, j), br.triple(k, c, j));
                        let (xb, yb) = (br.triple(i, b, bullet), br.triple(k, c, bullet));
                        if rho.related(x, y) != rho.related(xb, yb) {
                            return Some([x, y]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn free_over_support(m: &FiniteMonoid, supp: &[usize]) -> FiniteRightAct {
    let basis: Vec<String> = supp.iter().map(|i| format!("x{}", i + 1)).collect();
    FiniteRightAct::free(m, &basis)
}

fn g_a(m: &FiniteMonoid, data: &BrandtCongruenceData, supp: &[usize]) -> Vec<Pair> {
    let pos = |i: usize| supp.binary_search(&i).unwrap();
    data.a
        .iter()
        .map(|&(i, b, k, c)| {
            (
                FiniteRightAct::free_element(m, pos(i), b),
                FiniteRightAct::free_element(m, pos(k), c),
            )
        })
        .collect()
}

/// Rewrites `k` into normal form per the three cases.
pub fn normalize(br: &BrandtMonoid, k: &[Pair], bullet: usize) -> Result<BrandtCongruenceData> {
    let s = br.monoid();
    check_pairs(s, k, "K")?;
    if bullet >= br.index() {
        return Err(HarnessError::param("bullet", "row out of range"));
    }
    let rho = closure(s, k);
    if rho.related(br.one(), br.zero()) {
        return Ok(BrandtCongruenceData::universal(bullet));
    }
    let one_m = br.base().identity();
    let mut a_set: BTreeSet<(usize, ElementId, usize, ElementId)> = BTreeSet::new();
    let mut b_set: BTreeSet<(usize, ElementId)> = BTreeSet::new();
    let mut index_i: Option<usize> = None;
    for &(x, y) in k {
        if x == y {
            continue;
        }
        match (br.decode(x), br.decode(y)) {
            (MatrixElement::One, MatrixElement::Triple(i, b, j))
            | (MatrixElement::Triple(i, b, j), MatrixElement::One) => {
                if i != j || index_i.is_some_and(|i0| i0 != i) {
                    return Err(HarnessError::Precondition(
                        "a pair with 1 contradicts (1, 0) ∉ ρ; this indicates an implementation bug".into(),
                    ));
                }
                index_i = Some(i);
                a_set.insert((i, one_m, i, b));
            }
            (MatrixElement::Triple(i, b, _), MatrixElement::Zero)
            | (MatrixElement::Zero, MatrixElement::Triple(i, b, _)) => {
                b_set.insert((i, b));
            }
            (MatrixElement::Triple(i, b, j), MatrixElement::Triple(k2, c, l)) => {
                if j == l {
                    a_set.insert((i, b, k2, c));
                } else {
                    b_set.insert((i, b));
                    b_set.insert((k2, c));
                }
            }
            _ => return Err(HarnessError::Precondition(
                "a pair (1, 0) survived the universal test; this indicates an implementation bug"
                    .into(),
            )),
        }
    }
    let case = match index_i {
        Some(i0) => {
            let mut keep = BTreeSet::new();
            for (j, b, k2, c) in a_set {
                if j == i0 && k2 == i0 {
                    keep.insert((j, b, k2, c));
                } else {
                    b_set.insert((j, b));
                    b_set.insert((k2, c));
                }
            }
            if keep.is_empty() {
                keep.insert((i0, one_m, i0, one_m));
            }
            a_set = keep;
            BrandtCase::IdentityLinked
        }
        None => BrandtCase::IdentityAlone,
    };
    Ok(BrandtCongruenceData {
        case,
        a: a_set.into_iter().collect(),
        b: b_set.into_iter().collect(),
        bullet,
        index_i,
    })
}

fn brandt_instance(m: &FiniteMonoid, n: usize) -> String {
    format!("B(M; I)¹ with |M| = {}, |I| = {n}", m.size())
}

/// Normal form of `⟨k⟩` with `⟨H⟩ = ⟨k⟩` checked by oracle.
pub fn lemma51_normalize(
    m: &FiniteMonoid,
    n: usize,
    k: &[Pair],
    bullet: usize,
) -> Result<(ConstructionReport, BrandtCongruenceData)> {
    let br = BrandtMonoid::new(m, n, true)?;
    let s = br.monoid();
    let act = FiniteRightAct::regular(s);
    let data = normalize(&br, k, bullet)?;
    data.check(&br)?;
    let mut report = ConstructionReport::new(
        NORMALIZE,
        NORMALIZE_ANCHOR,
        format!(
            "{}, K = {:?}",
            brandt_instance(m, n),
            elem_pair_labels(s, k)
        ),
    );
    let h = data.generators(&br);
    let want = bfs_closure(&act, k);
    let got = bfs_closure(&act, &h);
    report.require(
        got == want,
        "⟨H⟩ = ⟨K⟩",
        partition_mismatch(&act, &got, &want),
    );
    let observed = BrandtCase::of(&br, &want);
    report.require(
        observed == data.case,
        "the case read off the congruence matches the normal form",
        json!({ "normal_form": data.case.tag(), "congruence": observed.tag() }),
    );
    if data.case == BrandtCase::IdentityLinked {
        let supp = data.support();
        report.require(
            !data.a.is_empty() && supp.len() == 1 && Some(supp[0]) == data.index_i,
            "A is non-empty and supported on row i",
            data.to_json(&br),
        );
    }
    let inv = bullet_invariance_failure(&br, &want, bullet);
    report.require(
        inv.is_none(),
        "(i,b,j) ρ (k,c,j) ⇔ (i,b,•) ρ (k,c,•)",
        inv.map(|[x, y]| [s.label(x), s.label(y)]),
    );
    report.artifact("data", data.to_json(&br));
    report.artifact("H", elem_pair_labels(s, &h));
    report.artifact("classes", want.num_classes());
    Ok((report.finish(), data))
}

/// The transfer between `ρ_A` and `τ_A`, over all `(p,d), (q,e)`.
pub fn lemma52_transfer(
    m: &FiniteMonoid,
    n: usize,
    a: &[(usize, ElementId, usize, ElementId)],
    bullet: usize,
) -> Result<ConstructionReport> {
    let br = BrandtMonoid::new(m, n, true)?;
    let s = br.monoid();
    let data = BrandtCongruenceData {
        case: BrandtCase::IdentityAlone,
        a: a.to_vec(),
        b: Vec::new(),
        bullet,
        index_i: None,
    };
    data.check(&br)?;
    let act = FiniteRightAct::regular(s);
    let h_a = data.h_a(&br);
    let mut report = ConstructionReport::new(
        TRANSFER,
        TRANSFER_ANCHOR,
        format!("{}, A = {}", brandt_instance(m, n), data.to_json(&br)["A"]),
    );
    let rho_a = congruence_closure(&act, &h_a)?.into_partition();
    let oracle = bfs_closure(&act, &h_a);
    report.require(
        rho_a == oracle,
        "ρ_A agrees with the oracle",
        partition_mismatch(&act, &rho_a, &oracle),
    );
    let supp = data.support();
    if supp.is_empty() {
        report.note("A is empty, so the biconditional is vacuous");
    }
    let free = free_over_support(m, &supp);
    let ga = g_a(m, &data, &supp);
    let tau = congruence_closure(&free, &ga)?.into_partition();
    let tau_oracle = bfs_closure(&free, &ga);
    report.require(
        tau == tau_oracle,
        "τ_A agrees with the oracle",
        partition_mismatch(&free, &tau, &tau_oracle),
    );
    let mut checked = 0usize;
    for (pi, &p) in supp.iter().enumerate() {
        for d in m.elements() {
            for (qi, &q) in supp.iter().enumerate() {
                for e in m.elements() {
                    let lhs = oracle.related(br.triple(p, d, bullet), br.triple(q, e, bullet));
                    let rhs = tau_oracle.related(
                        FiniteRightAct::free_element(m, pi, d),
                        FiniteRightAct::free_element(m, qi, e),
                    );
                    report.require(
                        lhs == rhs,
                        "(p,d,•) ρ_A (q,e,•) ⇔ x_p·d τ_A x_q·e",
                        [
                            s.label(br.triple(p, d, bullet)),
                            s.label(br.triple(q, e, bullet)),
                        ],
                    );
                    checked += 1;
                }
            }
        }
    }
    report.require(
        oracle.class(br.one()).len() == 1 && oracle.class(br.zero()).len() == 1,
        "{1} and {0} are ρ_A-classes",
        (),
    );
    for x in s.elements() {
        for y in s.elements() {
            if let (MatrixElement::Triple(_, _, j), MatrixElement::Triple(_, _, l)) =
                (br.decode(x), br.decode(y))
            {
                if j != l && oracle.related(x, y) {
                    report.fail(
                        "ρ_A-related triples share their third coordinate",
                        [s.label(x), s.label(y)],
                    );
                }
            }
        }
    }
    let inv = bullet_invariance_failure(&br, &oracle, bullet);
    report.require(
        inv.is_none(),
        "(i,b,j) ρ_A (k,c,j) ⇔ (i,b,•) ρ_A (k,c,•)",
        inv.map(|[x, y]| [s.label(x), s.label(y)]),
    );
    report.artifact("support", supp.iter().map(|i| i + 1).collect::<Vec<_>>());
    report.artifact("G_A", pair_labels(&free, &ga));
    report.artifact("tau_classes", classes_json(&free, &tau));
    report.artifact("pairs_checked", checked);
    Ok(report.finish())
}

/// Generators of `ann(𝐚ρ)` from the normal-form data.
pub fn lemma53_annihilator(
    m: &FiniteMonoid,
    n: usize,
    data: &BrandtCongruenceData,
    elem: ElementId,
) -> Result<ConstructionReport> {
    let br = BrandtMonoid::new(m, n, true)?;
    data.check(&br)?;
    let s = br.monoid();
    check_element(s, elem, "a")?;
    if data.case == BrandtCase::Universal {
        return Err(HarnessError::Precondition("ρ = S × S".into()));
    }
    let act = FiniteRightAct::regular(s);
    let h = data.generators(&br);
    let rho = closure(s, &h);
    if rho.related(elem, br.zero()) {
        return Err(HarnessError::Precondition(format!(
            "{} ρ 0, so ann(𝐚ρ) = S × S",
            s.label(elem)
        )));
    }
    let MatrixElement::Triple(u, a, v) = br.decode(elem) else {
        return Err(HarnessError::Precondition("𝐚 must be a triple".into()));
    };
    let mut report = ConstructionReport::new(
        ANNIHILATOR,
        ANNIHILATOR_ANCHOR,
        format!(
            "{}, data = {}, 𝐚 = {}",
            brandt_instance(m, n),
            data.to_json(&br),
            s.label(elem)
        ),
    );
    let one_m = m.identity();
    let m_act = FiniteRightAct::regular(m);
    let t = congruence_generating_set(&m_act, &annihilator(&m_act, a));
    let mut r1: Vec<Pair> = t
        .iter()
        .map(|&(x, y)| (br.triple(v, x, v), br.triple(v, y, v)))
        .collect();
    r1.push((br.one(), br.triple(v, one_m, v)));
    let mut r3 = Vec::new();
    let mut n_data = Vec::new();
    let mut basis = data.support();
    if let Err(p) = basis.binary_search(&u) {
        basis.insert(p, u);
        report.note("u lies outside supp A, so x_u is added to the free act with no relations");
    }
    let pu = basis.binary_search(&u).expect("inserted above");
    let free = free_over_support(m, &basis);
    let tau = congruence_closure(&free, &g_a(m, data, &basis))?.into_partition();
    let xua = FiniteRightAct::free_element(m, pu, a);
    let u_gens = congruence_generating_set(&m_act, &ann_of_class(&free, &tau, xua));
    let r2: Vec<Pair> = u_gens
        .iter()
        .map(|&(x, y)| (br.triple(v, x, v), br.triple(v, y, v)))
        .collect();
    let reps = tau.representatives();
    for &(j, d) in &data.b {
        let Ok(pj) = basis.binary_search(&j) else {
            continue;
        };
        let xjd = FiniteRightAct::free_element(m, pj, d);
        let (q, inter) = class_intersection(&free, &tau, xua, xjd);
        for cls in minimal_generating_set(&q, &inter) {
            let w = reps[cls];
            let hh =
                least(m, |x| tau.related(free.act(xua, x), w)).expect("class lies in the orbit");
            let kk =
                least(m, |x| tau.related(free.act(xjd, x), w)).expect("class lies in the orbit");
            r3.push((br.triple(v, hh, v), br.zero()));
            n_data.push(json!({
                "alpha": [j + 1, m.label(d)],
                "x_w": free.label(w),
                "h": m.label(hh),
                "k": m.label(kk),
            }));
        }
    }
    let mut r: Vec<Pair> = r1.iter().chain(&r2).chain(&r3).copied().collect();
    r.sort_unstable();
    r.dedup();
    for &(x, y) in &r {
        report.require(
            rho.related(s.mul(elem, x), s.mul(elem, y)),
            "R ⊆ ann(𝐚ρ)",
            [s.label(x), s.label(y)],
        );
    }
    let target = ann_scan(&act, &bfs_closure(&act, &h), elem);
    let got = bfs_closure(&act, &r);
    report.require(
        got == target,
        "⟨R₁ ∪ R₂ ∪ R₃⟩ = ann(𝐚ρ)",
        partition_mismatch(&act, &got, &target),
    );
    report.artifact("T", elem_pair_labels(m, &t));
    report.artifact("U", elem_pair_labels(m, &u_gens));
    report.artifact("N", n_data);
    report.artifact("R1", elem_pair_labels(s, &r1));
    report.artifact("R2", elem_pair_labels(s, &r2));
    report.artifact("R3", elem_pair_labels(s, &r3));
    report.artifact("ann_classes", classes_json(&act, &target));
    Ok(report.finish())
}

/// Generators of `(𝐚ρ)S ∩ (𝐛ρ)S` from the normal-form data.
pub fn lemma54_intersection(
    m: &FiniteMonoid,
    n: usize,
    data: &BrandtCongruenceData,
    ea: ElementId,
    eb: ElementId,
) -> Result<ConstructionReport> {
    let br = BrandtMonoid::new(m, n, true)?;
    data.check(&br)?;
    let s = br.monoid();
    check_element(s, ea, "a")?;
    check_element(s, eb, "b")?;
    let act = FiniteRightAct::regular(s);
    let h = data.generators(&br);
    let rho = closure(s, &h);
    let mut report = ConstructionReport::new(
        INTERSECTION,
        INTERSECTION_ANCHOR,
        format!(
            "{}, data = {}, 𝐚 = {}, 𝐛 = {}",
            brandt_instance(m, n),
            data.to_json(&br),
            s.label(ea),
            s.label(eb)
        ),
    );
    let (q, inter) = class_intersection(&act, &bfs_closure(&act, &h), ea, eb);
    let special =
        |x: ElementId| !br.is_triple(x) || rho.related(x, br.one()) || rho.related(x, br.zero());
    if ea == eb || special(ea) || special(eb) {
        let gens = minimal_generating_set(&q, &inter);
        report.require(
            gens.len() == 1,
            "the intersection is monogenic",
            labels(&q, &gens),
        );
        report.note("𝐚 = 𝐛 or one of them is related to 1 or 0, so the intersection is monogenic");
        report.artifact("generators", labels(&q, &gens));
        report.artifact("intersection", labels(&q, inter.elements()));
        return Ok(report.finish());
    }
    let (MatrixElement::Triple(u, a, _), MatrixElement::Triple(w, b, _)) =
        (br.decode(ea), br.decode(eb))
    else {
        unreachable!("both are triples");
    };
    let m_act = FiniteRightAct::regular(m);
    let mut c_set = Vec::new();
    if u == w {
        let am = Subact::generated(&m_act, &[a]);
        let bm = Subact::generated(&m_act, &[b]);
        c_set = minimal_generating_set(&m_act, &am.intersection(&bm));
    }
    let mut gens: Vec<usize> = c_set
        .iter()
        .map(|&c| rho.class_of(br.triple(u, c, u)))
        .collect();
    let supp = data.support();
    let mut d_set = Vec::new();
    if let (Ok(pu), Ok(pw)) = (supp.binary_search(&u), supp.binary_search(&w)) {
        let free = free_over_support(m, &supp);
        let tau = congruence_closure(&free, &g_a(m, data, &supp))?.into_partition();
        let xua = FiniteRightAct::free_element(m, pu, a);
        let xwb = FiniteRightAct::free_element(m, pw, b);
        let (qf, inter_f) = class_intersection(&free, &tau, xua, xwb);
        for cls in minimal_generating_set(&qf, &inter_f) {
            let d = least(m, |d| tau.class_of(free.act(xua, d)) == cls)
                .expect("class lies in the orbit");
            d_set.push(d);
            gens.push(rho.class_of(br.triple(u, m.mul(a, d), data.bullet)));
        }
    }
    gens.push(rho.class_of(br.zero()));
    let got = Subact::generated(&q, &gens);
    report.require(
        got == inter,
        "⟨U ∪ V⟩ = (𝐚ρ)S ∩ (𝐛ρ)S",
        subact_mismatch(&q, &got, &inter),
    );
    report.note("0ρ always lies in the intersection and is added to the generators");
    report.artifact("C", elem_labels(m, &c_set));
    report.artifact("D", elem_labels(m, &d_set));
    report.artifact("generators", labels(&q, &gens));
    report.artifact("intersection", labels(&q, inter.elements()));
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coact_core::monoid::builtin::*;

    fn b(m: &FiniteMonoid, n: usize) -> BrandtMonoid {
        BrandtMonoid::new(m, n, true).unwrap()
    }

    #[test]
    fn one_zero_is_universal() {
        let m = trivial();
        let br = b(&m, 2);
        let (r, data) = lemma51_normalize(&m, 2, &[(br.one(), br.zero())], 0).unwrap();
        assert!(r.verified);
        assert_eq!(data.case, BrandtCase::Universal);
    }

    #[test]
    fn triple_pair_is_case_two() {
        let m = z2();
        let br = b(&m, 2);
        let k = [(br.triple(0, 1, 0), br.triple(0, 0, 0))];
        let (r, data) = lemma51_normalize(&m, 2, &k, 0).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(data.case, BrandtCase::IdentityAlone);
        assert!(data.b.is_empty());
    }

    #[test]
    fn identity_pair_is_case_three() {
        let m = z2();
        let br = b(&m, 2);
        let k = [(br.triple(0, 1, 0), br.one())];
        let (r, data) = lemma51_normalize(&m, 2, &k, 0).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(data.case, BrandtCase::IdentityLinked);
        assert_eq!(data.index_i, Some(0));
        let h = data.generators(&br);
        assert!(h.contains(&(br.triple(0, 0, 0), br.one())));
    }

    #[test]
    fn transfer_examples() {
        let m = z2();
        assert!(
            lemma52_transfer(&m, 2, &[(0, 1, 1, 0)], 0)
                .unwrap()
                .verified
        );
        assert!(lemma52_transfer(&m, 2, &[], 0).unwrap().verified);
        assert!(
            lemma52_transfer(&m, 2, &[(0, 1, 0, 1)], 1)
                .unwrap()
                .verified
        );
    }

    #[test]
    fn annihilator_examples() {
        let m = z2();
        let br = b(&m, 2);
        let data = BrandtCongruenceData {
            case: BrandtCase::IdentityAlone,
            a: vec![(0, 1, 0, 0)],
            b: vec![],
            bullet: 0,
            index_i: None,
        };
        let r = lemma53_annihilator(&m, 2, &data, br.triple(0, 0, 0)).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        let m = u2();
        let br = b(&m, 2);
        let data = BrandtCongruenceData {
            case: BrandtCase::IdentityAlone,
            a: vec![(0, 1, 1, 1)],
            b: vec![(1, 0)],
            bullet: 0,
            index_i: None,
        };
        let r = lemma53_annihilator(&m, 2, &data, br.triple(0, 0, 0)).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["R3"].as_array().unwrap().len(), 1);
    }

    #[test]
    fn zero_pair_on_the_row_of_a_outside_the_support() {
        let m = u2();
        let br = b(&m, 2);
        let data = BrandtCongruenceData {
            case: BrandtCase::IdentityAlone,
            a: vec![],
            b: vec![(0, 1), (1, 0)],
            bullet: 1,
            index_i: None,
        };
        let r = lemma53_annihilator(&m, 2, &data, br.triple(0, 0, 1)).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["R3"], json!([["(2,e,2)", "0!"]]));
    }

    #[test]
    fn intersection_examples() {
        let m = z2();
        let br = b(&m, 2);
        let data = BrandtCongruenceData {
            case: BrandtCase::IdentityAlone,
            a: vec![(0, 1, 1, 0)],
            b: vec![],
            bullet: 0,
            index_i: None,
        };
        let r = lemma54_intersection(&m, 2, &data, br.triple(0, 0, 0), br.triple(1, 0, 1)).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        let empty = BrandtCongruenceData { a: vec![], ..data };
        let r =
            lemma54_intersection(&m, 2, &empty, br.triple(0, 0, 0), br.triple(1, 0, 0)).unwrap();
        assert!(r.verified, "{:?}", r.failures);
        assert_eq!(r.artifacts["intersection"].as_array().unwrap().len(), 1);
    }
}
