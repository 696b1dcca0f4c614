//! Radius-bounded congruence search over computable monoids acting on
//! themselves.
//!
//! Verdicts are three-valued. A negative answer is only reported when the
//! search saturated: every application of every generating pair to every
//! class member was computed exactly and stayed inside the radius.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::computable::{ComputableMonoid, Element};
use crate::error::{Error, Result};

pub type ElementPair = (Element, Element);

/// `c_k t = previous`, `d_k t = next`, with `pair` indexing `H̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedStep {
    pub pair: usize,
    pub multiplier: Element,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundedWitness {
    pub steps: Vec<BoundedStep>,
}

fn bar(pairs: &[ElementPair]) -> Vec<ElementPair> {
    pairs
        .iter()
        .cloned()
        .chain(pairs.iter().map(|(c, d)| (d.clone(), c.clone())))
        .collect()
}

impl BoundedWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `a, d₁t₁, d₂t₂, …`, or `None` if some link does not hold.
    pub fn chain(
        &self,
        m: &dyn ComputableMonoid,
        pairs: &[ElementPair],
        a: &Element,
    ) -> Option<Vec<Element>> {
        let h = bar(pairs);
        let mut out = vec![a.clone()];
        for st in &self.steps {
            let (c, d) = h.get(st.pair)?;
            if m.multiply(c, &st.multiplier) != *out.last().unwrap() {
                return None;
            }
            out.push(m.multiply(d, &st.multiplier));
        }
        Some(out)
    }

    pub fn replay(
        &self,
        m: &dyn ComputableMonoid,
        pairs: &[ElementPair],
        a: &Element,
        b: &Element,
    ) -> bool {
        self.chain(m, pairs, a).is_some_and(|c| c.last() == Some(b))
    }
}

/// A ρ-class explored within a ball.
#[derive(Debug, Clone)]
pub struct SaturatedClass {
    start: Element,
    /// Sorted members found.
    pub members: Vec<Element>,
    /// True when the class is exact rather than bound-relative.
    pub complete: bool,
    parent: HashMap<Element, (Element, BoundedStep)>,
}

impl SaturatedClass {
    pub fn contains(&self, x: &Element) -> bool {
        self.members.binary_search(x).is_ok()
    }

    /// The BFS-tree path from the start element to `b`.
    pub fn witness_to(&self, b: &Element) -> Option<BoundedWitness> {
        if !self.contains(b) {
            return None;
        }
        let mut steps = Vec::new();
        let mut cur = b.clone();
        while cur != self.start {
            let (prev, step) = self.parent.get(&cur)?;
            steps.push(step.clone());
            cur = prev.clone();
        }
        steps.reverse();
        Some(BoundedWitness { steps })
    }
}

fn check_in_ball(m: &dyn ComputableMonoid, x: &Element, radius: usize) -> Result<()> {
    if !m.contains(x) || m.norm(x) > radius {
        return Err(Error::OutsideBall {
            element: m.render(x),
            radius,
        });
    }
    Ok(())
}

/// Explores the class of `a` under `⟨pairs⟩` inside `ball(radius)`.
pub fn saturated_class(
    m: &dyn ComputableMonoid,
    pairs: &[ElementPair],
    a: &Element,
    radius: usize,
) -> Result<SaturatedClass> {
    check_in_ball(m, a, radius)?;
    for (c, d) in pairs {
        check_in_ball(m, c, radius)?;
        check_in_ball(m, d, radius)?;
    }
    let h = bar(pairs);
    let mut ball: Option<Vec<Element>> = None;
    let mut complete = true;
    let mut seen: BTreeSet<Element> = BTreeSet::from([a.clone()]);
    let mut parent = HashMap::new();
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(y) = queue.pop_front() {
        for (k, (c, d)) in h.iter().enumerate() {
            let ts = match m.right_factors(c, &y) {
                Some(ts) => ts,
                None => {
                    complete = false;
                    let ball = ball.get_or_insert_with(|| m.ball(radius));
                    ball.iter()
                        .filter(|t| m.multiply(c, t) == y)
                        .cloned()
                        .collect()
                }
            };
            for t in ts {
                let z = m.multiply(d, &t);
                if m.norm(&z) > radius {
                    complete = false;
                    continue;
                }
                if seen.insert(z.clone()) {
                    parent.insert(
                        z.clone(),
                        (
                            y.clone(),
                            BoundedStep {
                                pair: k,
                                multiplier: t,
                            },
                        ),
                    );
                    queue.push_back(z);
                }
            }
        }
    }
    Ok(SaturatedClass {
        start: a.clone(),
        members: seen.into_iter().collect(),
        complete,
        parent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedRelation {
    Related(BoundedWitness),
    /// Only reported when the class of the first element is complete.
    Unrelated,
    UnknownAtBound,
}

pub fn bounded_relation(
    m: &dyn ComputableMonoid,
    pairs: &[ElementPair],
    a: &Element,
    b: &Element,
    radius: usize,
) -> Result<BoundedRelation> {
    check_in_ball(m, b, radius)?;
    let class = saturated_class(m, pairs, a, radius)?;
    Ok(match class.witness_to(b) {
        Some(w) => BoundedRelation::Related(w),
        None if class.complete => BoundedRelation::Unrelated,
        None => BoundedRelation::UnknownAtBound,
    })
}

/// Three-valued verdict with a counterexample on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bounded<W> {
    True,
    False(W),
    UnknownAtBound { radius: usize },
}

impl<W> Bounded<W> {
    pub fn is_true(&self) -> bool {
        matches!(self, Bounded::True)
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Bounded::False(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedUnitary {
    pub identity: Element,
    pub left_unitary: Bounded<ElementPair>,
    pub weakly_left_unitary: Bounded<ElementPair>,
    pub right_unitary: Bounded<ElementPair>,
    pub weakly_right_unitary: Bounded<ElementPair>,
}

/// Unitary properties of a finite subsemigroup `t` of a computable monoid.
///
/// The left-hand properties are decided exactly when right factors are
/// computable; otherwise, and for the right-hand properties, `b` ranges over
/// `ball(radius)` and a clean scan is reported as unknown.
pub fn bounded_unitary_status(
    m: &dyn ComputableMonoid,
    t: &[Element],
    radius: usize,
) -> Result<BoundedUnitary> {
    let tset: BTreeSet<Element> = t.iter().cloned().collect();
    for x in &tset {
        for y in &tset {
            if !tset.contains(&m.multiply(x, y)) {
                return Err(Error::NotClosed(format!(
                    "{}·{} leaves the subsemigroup",
                    m.render(x),
                    m.render(y)
                )));
            }
        }
    }
    let e = tset
        .iter()
        .find(|e| {
            tset.iter()
                .all(|x| m.multiply(e, x) == *x && m.multiply(x, e) == *x)
        })
        .cloned()
        .ok_or(Error::NoIdentity)?;
    let ball = m.ball(radius);

    // Left side: b with a, ab ∈ T.
    let mut exact = true;
    let mut left_bs: Vec<ElementPair> = Vec::new();
    for a in &tset {
        let mut bs: BTreeSet<Element> = BTreeSet::new();
        for y in &tset {
            match m.right_factors(a, y) {
                Some(f) => bs.extend(f),
                None => {
                    exact = false;
                    bs.extend(ball.iter().filter(|b| m.multiply(a, b) == *y).cloned());
                }
            }
        }
        left_bs.extend(bs.into_iter().map(|b| (a.clone(), b)));
    }
    let verdict = |cands: &[ElementPair], ok: &dyn Fn(&Element) -> bool, exact: bool| match cands
        .iter()
        .find(|(_, b)| !ok(b))
    {
        Some(w) => Bounded::False(w.clone()),
        None if exact => Bounded::True,
        None => Bounded::UnknownAtBound { radius },
    };
    let left_unitary = verdict(&left_bs, &|b| tset.contains(b), exact);
    let weakly_left_unitary = verdict(&left_bs, &|b| tset.contains(&m.multiply(&e, b)), exact);

    // Right side: b with a, ba ∈ T, searched in the ball.
    let mut right_bs: Vec<ElementPair> = Vec::new();
    for a in &tset {
        for b in &ball {
            if tset.contains(&m.multiply(b, a)) {
                right_bs.push((a.clone(), b.clone()));
            }
        }
    }
    let right_unitary = verdict(&right_bs, &|b| tset.contains(b), false);
    let weakly_right_unitary = verdict(&right_bs, &|b| tset.contains(&m.multiply(b, &e)), false);
    Ok(BoundedUnitary {
        identity: e,
        left_unitary,
        weakly_left_unitary,
        right_unitary,
        weakly_right_unitary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::computable::{BruckReilly, FreeMonoid};

    #[test]
    fn bicyclic_idempotent_subsemigroup() {
        let b = BruckReilly::bicyclic();
        let t = [b.bicyclic_pair(1, 1)];
        let u = bounded_unitary_status(&b, &t, 6).unwrap();
        assert!(u.weakly_left_unitary.is_true());
        assert_eq!(
            u.left_unitary,
            Bounded::False((b.bicyclic_pair(1, 1), b.bicyclic_pair(0, 0)))
        );
        assert!(u.right_unitary.is_false());
        assert_eq!(
            u.weakly_right_unitary,
            Bounded::UnknownAtBound { radius: 6 }
        );
    }

    #[test]
    fn trivial_relation() {
        let f = FreeMonoid::new(&["a", "b"]).unwrap();
        let a = f.word("ab");
        let r = bounded_relation(&f, &[], &a, &a, 3).unwrap();
        assert_eq!(r, BoundedRelation::Related(BoundedWitness::default()));
        let r = bounded_relation(&f, &[], &a, &f.word("b"), 3).unwrap();
        assert_eq!(r, BoundedRelation::Unrelated);
        assert!(matches!(
            bounded_relation(&f, &[], &f.word("aaaa"), &a, 3),
            Err(Error::OutsideBall { .. })
        ));
    }

    #[test]
    fn escape_makes_incomplete() {
        let f = FreeMonoid::new(&["a", "b"]).unwrap();
        let h = [(f.word("a"), f.word("bb"))];
        let c = saturated_class(&f, &h, &f.word("ab"), 2).unwrap();
        assert!(!c.complete);
        let c = saturated_class(&f, &h, &f.word("ab"), 3).unwrap();
        assert!(c.complete);
        assert_eq!(c.members, vec![f.word("ab"), f.word("bbb")]);
        let w = c.witness_to(&f.word("bbb")).unwrap();
        assert!(w.replay(&f, &h, &f.word("ab"), &f.word("bbb")));
    }
}
