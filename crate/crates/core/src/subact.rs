//! Subacts, right ideals, ρ-closures, ideal quotients and congruence
//! extension to and restriction from submonoids.

use crate::act::FiniteRightAct;
use crate::congruence::{congruence_closure, ActCongruence, Pair};
use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::partition::Partition;

/// A subact, stored as a sorted set of act elements. The empty set is a subact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Subact {
    elements: Vec<usize>,
}

impl Subact {
    pub fn empty() -> Self {
        Subact::default()
    }

    /// Checks closure under the action.
    pub fn from_set(act: &FiniteRightAct, set: &[usize]) -> Result<Self> {
        let mut elements = set.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= act.size()) {
            return Err(Error::OutOfRange {
                index: x,
                size: act.size(),
            });
        }
        let s = Subact { elements };
        for &a in &s.elements {
            for t in act.monoid().elements() {
                if !s.contains(act.act(a, t)) {
                    return Err(Error::NotSubact(format!(
                        "{}·{} = {} is missing",
                        act.label(a),
                        act.monoid().label(t),
                        act.label(act.act(a, t))
                    )));
                }
            }
        }
        Ok(s)
    }

    /// `gens·S`.
    pub fn generated(act: &FiniteRightAct, gens: &[usize]) -> Self {
        let mut seen = vec![false; act.size()];
        let mut stack: Vec<usize> = Vec::new();
        for &g in gens {
            if !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
        while let Some(a) = stack.pop() {
            for s in act.monoid().elements() {
                let b = act.act(a, s);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        Subact {
            elements: (0..act.size()).filter(|&x| seen[x]).collect(),
        }
    }

    pub fn whole(act: &FiniteRightAct) -> Self {
        Subact {
            elements: (0..act.size()).collect(),
        }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn intersection(&self, other: &Subact) -> Subact {
        Subact {
            elements: self
                .elements
                .iter()
                .copied()
                .filter(|&x| other.contains(x))
                .collect(),
        }
    }

    pub fn union(&self, other: &Subact) -> Subact {
        let mut elements: Vec<usize> = self
            .elements
            .iter()
            .chain(&other.elements)
            .copied()
            .collect();
        elements.sort_unstable();
        elements.dedup();
        Subact { elements }
    }

    pub fn is_subset(&self, other: &Subact) -> bool {
        self.elements.iter().all(|&x| other.contains(x))
    }
}

/// Least-index representatives of the source strongly connected components
/// of the graph `x → succ(x, s)` restricted to `nodes`. Successors outside
/// `nodes` are explored but never reported.
///
/// These are exactly the elements of a minimal generating set of the closed
/// set `nodes`: one per maximal mutual-reachability class.
pub fn minimal_generators_of(
    universe: usize,
    nodes: &[usize],
    num_multipliers: usize,
    succ: impl Fn(usize, usize) -> usize,
) -> Vec<usize> {
    let mut member = vec![false; universe];
    for &x in nodes {
        member[x] = true;
    }
    // Tarjan's algorithm, iterative.
    let mut order: Vec<usize> = nodes.to_vec();
    order.sort_unstable();
    order.dedup();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; universe];
    let mut low = vec![0usize; universe];
    let mut on_stack = vec![false; universe];
    let mut comp = vec![UNSEEN; universe];
    let mut stack: Vec<usize> = Vec::new();
    let mut counter = 0;
    let mut ncomp = 0;
    for &root in &order {
        if index[root] != UNSEEN {
            continue;
        }
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = call.len().checked_sub(1) {
            let (v, next) = call[top];
            if next < num_multipliers {
                let w = succ(v, next);
                call[top].1 += 1;
                if index[w] == UNSEEN {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(u, _)) = call.last() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    let mut has_incoming = vec![false; ncomp];
    let mut rep = vec![UNSEEN; ncomp];
    for &x in &order {
        rep[comp[x]] = rep[comp[x]].min(x);
        for s in 0..num_multipliers {
            let y = succ(x, s);
            if member[y] && comp[y] != comp[x] {
                has_incoming[comp[y]] = true;
            }
        }
    }
    let mut out: Vec<usize> = (0..ncomp)
        .filter(|&c| !has_incoming[c] && rep[c] != UNSEEN)
        .map(|c| rep[c])
        .collect();
    out.sort_unstable();
    out
}

/// Minimal generating set of a subact: least-index representatives of the
/// maximal mutual-reachability classes, ascending.
pub fn minimal_generating_set(act: &FiniteRightAct, u: &Subact) -> Vec<usize> {
    minimal_generators_of(act.size(), u.elements(), act.monoid().size(), |x, s| {
        act.act(x, s)
    })
}

/// `Iρ`: the union of the ρ-classes meeting `I`.
pub fn rho_closure(act: &FiniteRightAct, i: &Subact, rho: &Partition) -> Subact {
    let mut hit = vec![false; rho.num_classes()];
    for &x in i.elements() {
        hit[rho.class_of(x)] = true;
    }
    Subact {
        elements: (0..act.size()).filter(|&x| hit[rho.class_of(x)]).collect(),
    }
}

/// `(U, x) = {t ∈ S : xt ∈ U}` as a right ideal of `S` (possibly empty).
pub fn ideal_quotient(act: &FiniteRightAct, u: &Subact, x: usize) -> Result<Subact> {
    let u = Subact::from_set(act, u.elements())?;
    Ok(Subact {
        elements: act
            .monoid()
            .elements()
            .filter(|&t| u.contains(act.act(x, t)))
            .collect(),
    })
}

/// Checks that every pair lies in `t × t`.
fn pairs_inside(t: &[ElementId], pairs: &[Pair]) -> Result<()> {
    for &(c, d) in pairs {
        for x in [c, d] {
            if !t.contains(&x) {
                return Err(Error::NotClosed(format!(
                    "pair element {x} lies outside the subsemigroup"
                )));
            }
        }
    }
    Ok(())
}

/// `ρ^S`: the right congruence on `S` generated by pairs from `T × T`.
pub fn extend_congruence(
    s: &FiniteMonoid,
    t: &[ElementId],
    pairs: &[Pair],
) -> Result<ActCongruence> {
    pairs_inside(t, pairs)?;
    congruence_closure(&FiniteRightAct::regular(s), pairs)
}

/// `ρ_S ∩ (T × T)`, indexed by position in the sorted `t`.
pub fn restrict_congruence(rho_s: &Partition, t: &[ElementId]) -> Partition {
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    rho_s.restrict(&t)
}

/// Outcome of comparing `⟨H⟩_T` with `⟨H⟩_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SrcepCheck {
    /// `⟨H⟩_T = ⟨H⟩_S ∩ (T × T)`.
    pub restriction_exact: bool,
    /// `T` is a union of `⟨H⟩_S`-classes.
    pub union_of_classes: bool,
    /// `(a, b)` in `T` related in `S` but not in `T`.
    pub restriction_witness: Option<(ElementId, ElementId)>,
    /// `(a, b)` with `a ∈ T`, `b ∉ T`, `a ⟨H⟩_S b`.
    pub class_witness: Option<(ElementId, ElementId)>,
}

impl SrcepCheck {
    pub fn holds(&self) -> bool {
        self.restriction_exact && self.union_of_classes
    }
}

/// Tests the two SRCEP conditions for the single congruence `⟨pairs⟩_T`.
/// `t` must be a subsemigroup with its own identity.
pub fn srcep_check(s: &FiniteMonoid, t: &[ElementId], pairs: &[Pair]) -> Result<SrcepCheck> {
    let (tm, emb) = s.submonoid(t)?;
    pairs_inside(&emb, pairs)?;
    let pos = |x: ElementId| emb.binary_search(&x).unwrap();
    let local: Vec<Pair> = pairs.iter().map(|&(c, d)| (pos(c), pos(d))).collect();
    let rho_t = congruence_closure(&FiniteRightAct::regular(&tm), &local)?;
    let rho_s = congruence_closure(&FiniteRightAct::regular(s), pairs)?;
    let mut restriction_witness = None;
    'outer: for (i, &a) in emb.iter().enumerate() {
        for (j, &b) in emb.iter().enumerate().skip(i + 1) {
            if rho_s.related(a, b) != rho_t.related(i, j) {
                restriction_witness = Some((a, b));
                break 'outer;
            }
        }
    }
    let mut class_witness = None;
    'outer2: for &a in &emb {
        for b in rho_s.class(a) {
            if emb.binary_search(&b).is_err() {
                class_witness = Some((a, b));
                break 'outer2;
            }
        }
    }
    Ok(SrcepCheck {
        restriction_exact: restriction_witness.is_none(),
        union_of_classes: class_witness.is_none(),
        restriction_witness,
        class_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::BrandtMonoid;
    use crate::monoid::builtin::*;

    #[test]
    fn generated_by_identity_is_everything() {
        let m = symmetric_inverse(2);
        let a = FiniteRightAct::regular(&m);
        assert_eq!(Subact::generated(&a, &[m.identity()]).len(), m.size());
        assert_eq!(
            minimal_generating_set(&a, &Subact::whole(&a)),
            vec![m.identity()]
        );
    }

    #[test]
    fn distinct_rows_meet_at_zero() {
        let b = BrandtMonoid::new(&trivial(), 2, true).unwrap();
        let a = FiniteRightAct::regular(b.monoid());
        let u = Subact::generated(&a, &[b.triple(0, 0, 0)]);
        let v = Subact::generated(&a, &[b.triple(1, 0, 0)]);
        let w = u.intersection(&v);
        assert_eq!(w.elements(), &[b.zero()]);
        assert_eq!(minimal_generating_set(&a, &w), vec![b.zero()]);
    }

    #[test]
    fn minimal_generating_set_of_free_act() {
        let m = z2();
        let f = FiniteRightAct::free(&m, &["x".into(), "y".into()]);
        assert_eq!(minimal_generating_set(&f, &Subact::whole(&f)), vec![0, 2]);
        assert!(minimal_generating_set(&f, &Subact::empty()).is_empty());
    }

    #[test]
    fn quotients_and_closures() {
        let m = u2();
        let a = FiniteRightAct::regular(&m);
        let i = Subact::generated(&a, &[1]);
        assert_eq!(rho_closure(&a, &i, &Partition::discrete(2)), i);
        assert_eq!(ideal_quotient(&a, &i, m.identity()).unwrap(), i);
        assert!(ideal_quotient(&a, &Subact { elements: vec![0] }, 0).is_err());
        assert!(ideal_quotient(&a, &Subact::empty(), 1).unwrap().is_empty());
    }

    #[test]
    fn srcep_for_whole_monoid() {
        let m = full_transformation(2);
        let all: Vec<_> = m.elements().collect();
        let c = srcep_check(&m, &all, &[(1, 2)]).unwrap();
        assert!(c.holds());
        assert!(extend_congruence(&m, &[0, 1], &[(0, 3)]).is_err());
    }
}
