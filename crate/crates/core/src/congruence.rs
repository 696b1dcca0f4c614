//! Finitely generated congruences on finite right acts.
//!
//! Closure is union-find with a worklist: every merge of `x` and `y` queues
//! `(x·s, y·s)` for each multiplier `s`. Each merge is recorded as an edge of a
//! proof forest labelled by an H-sequence step, so a witness for `a ρ b` is the
//! forest path from `a` to `b`.

use std::collections::VecDeque;

use crate::act::FiniteRightAct;
use crate::error::{Error, Result};
use crate::monoid::ElementId;
use crate::partition::{Partition, UnionFind};

pub type Pair = (usize, usize);

/// `H̄ = H ∪ H⁻¹` laid out as `H` followed by the reversed pairs.
pub fn symmetric_closure(pairs: &[Pair]) -> Vec<Pair> {
    pairs
        .iter()
        .copied()
        .chain(pairs.iter().map(|&(c, d)| (d, c)))
        .collect()
}

/// One link `d_{k-1} t_{k-1} = c_k t_k` of an H-sequence: `pair` indexes `H̄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub pair: usize,
    pub multiplier: ElementId,
}

/// An H-sequence `a = c₁t₁, d₁t₁ = c₂t₂, …, dₙtₙ = b`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HSequenceWitness {
    pub steps: Vec<Step>,
}

impl HSequenceWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The chain of act elements `a, d₁t₁, …, dₙtₙ`, or `None` if a link breaks.
    pub fn chain(&self, act: &FiniteRightAct, pairs: &[Pair], a: usize) -> Option<Vec<usize>> {
        let bar = symmetric_closure(pairs);
        let mut cur = a;
        let mut out = vec![a];
        for st in &self.steps {
            let &(c, d) = bar.get(st.pair)?;
            if act.act(c, st.multiplier) != cur {
                return None;
            }
            cur = act.act(d, st.multiplier);
            out.push(cur);
        }
        Some(out)
    }

    /// Replays the steps from `a` and checks they end at `b`.
    pub fn replay(&self, act: &FiniteRightAct, pairs: &[Pair], a: usize, b: usize) -> bool {
        self.chain(act, pairs, a)
            .is_some_and(|c| *c.last().unwrap() == b)
    }
}

/// Forest edge from a node to its parent: `c_k t = node`, `d_k t = parent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Edge {
    parent: usize,
    step: Step,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct ProofForest {
    parent: Vec<Option<Edge>>,
    num_pairs: usize,
}

impl ProofForest {
    fn new(n: usize, num_pairs: usize) -> Self {
        ProofForest {
            parent: vec![None; n],
            num_pairs,
        }
    }

    fn flip(&self, s: Step) -> Step {
        let h = self.num_pairs;
        Step {
            pair: if s.pair < h { s.pair + h } else { s.pair - h },
            multiplier: s.multiplier,
        }
    }

    fn depth(&self, mut x: usize) -> usize {
        let mut d = 0;
        while let Some(e) = self.parent[x] {
            x = e.parent;
            d += 1;
        }
        d
    }

    /// Makes `x` the root of its tree by reversing the edges on its root path.
    fn evert(&mut self, x: usize) {
        let mut prev: Option<Edge> = None;
        let mut cur = x;
        loop {
            let next = self.parent[cur];
            self.parent[cur] = prev;
            match next {
                None => break,
                Some(e) => {
                    prev = Some(Edge {
                        parent: cur,
                        step: self.flip(e.step),
                    });
                    cur = e.parent;
                }
            }
        }
    }

    /// Links the trees of `x` and `y` (different trees) by the step `x → y`.
    fn link(&mut self, x: usize, y: usize, step: Step) {
        if self.depth(x) <= self.depth(y) {
            self.evert(x);
            self.parent[x] = Some(Edge { parent: y, step });
        } else {
            self.evert(y);
            let step = self.flip(step);
            self.parent[y] = Some(Edge { parent: x, step });
        }
    }

    fn path(&self, a: usize, b: usize) -> Option<Vec<Step>> {
        let mut up_a = vec![a];
        while let Some(e) = self.parent[*up_a.last().unwrap()] {
            up_a.push(e.parent);
        }
        let mut up_b = vec![b];
        let meet = loop {
            let y = *up_b.last().unwrap();
            if let Some(i) = up_a.iter().position(|&x| x == y) {
                break i;
            }
            up_b.push(self.parent[y]?.parent);
        };
        let mut steps: Vec<Step> = up_a[..meet]
            .iter()
            .map(|&x| self.parent[x].unwrap().step)
            .collect();
        for &y in up_b[..up_b.len() - 1].iter().rev() {
            steps.push(self.flip(self.parent[y].unwrap().step));
        }
        Some(steps)
    }
}

/// A congruence on a finite act, with the pairs it was generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActCongruence {
    partition: Partition,
    pairs: Vec<Pair>,
    forest: ProofForest,
}

impl ActCongruence {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    /// The generating pairs `H`.
    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.partition.related(a, b)
    }

    pub fn class(&self, a: usize) -> Vec<usize> {
        self.partition.class(a)
    }

    pub fn num_classes(&self) -> usize {
        self.partition.num_classes()
    }

    /// Least-index representatives, one per class.
    pub fn representatives(&self) -> Vec<usize> {
        self.partition.representatives()
    }

    /// An H-sequence from `a` to `b`; empty when `a = b`, `None` when unrelated.
    pub fn witness(&self, a: usize, b: usize) -> Option<HSequenceWitness> {
        if a == b {
            return Some(HSequenceWitness::default());
        }
        if !self.related(a, b) {
            return None;
        }
        self.forest
            .path(a, b)
            .map(|steps| HSequenceWitness { steps })
    }
}

fn check_pairs(act: &FiniteRightAct, pairs: &[Pair]) -> Result<()> {
    for &(c, d) in pairs {
        for x in [c, d] {
            if x >= act.size() {
                return Err(Error::OutOfRange {
                    index: x,
                    size: act.size(),
                });
            }
        }
    }
    Ok(())
}

/// The least congruence on `act` containing `pairs`, propagating by every
/// monoid element.
pub fn congruence_closure(act: &FiniteRightAct, pairs: &[Pair]) -> Result<ActCongruence> {
    let all: Vec<ElementId> = act.monoid().elements().collect();
    congruence_closure_by(act, pairs, &all)
}

/// As [`congruence_closure`], propagating only by `multipliers`, which must
/// generate the monoid for the result to be a congruence.
pub fn congruence_closure_by(
    act: &FiniteRightAct,
    pairs: &[Pair],
    multipliers: &[ElementId],
) -> Result<ActCongruence> {
    check_pairs(act, pairs)?;
    let n = act.size();
    let m = act.monoid();
    let mut uf = UnionFind::new(n);
    let mut forest = ProofForest::new(n, pairs.len());
    let mut queue: VecDeque<(usize, usize, Step)> = pairs
        .iter()
        .enumerate()
        .map(|(k, &(c, d))| {
            (
                c,
                d,
                Step {
                    pair: k,
                    multiplier: m.identity(),
                },
            )
        })
        .collect();
    while let Some((x, y, step)) = queue.pop_front() {
        if !uf.union(x, y) {
            continue;
        }
        forest.link(x, y, step);
        for &s in multipliers {
            queue.push_back((
                act.act(x, s),
                act.act(y, s),
                Step {
                    pair: step.pair,
                    multiplier: m.mul(step.multiplier, s),
                },
            ));
        }
    }
    Ok(ActCongruence {
        partition: Partition::from_union_find(&mut uf),
        pairs: pairs.to_vec(),
        forest,
    })
}

/// `ann(a) = {(u, v) : au = av}` as a partition of the monoid.
pub fn annihilator(act: &FiniteRightAct, a: usize) -> Partition {
    Partition::from_key(act.monoid().size(), |u| act.act(a, u))
}

/// `ann(aρ) = {(u, v) : au ρ av}`.
pub fn ann_of_class(act: &FiniteRightAct, rho: &Partition, a: usize) -> Partition {
    Partition::from_key(act.monoid().size(), |u| rho.class_of(act.act(a, u)))
}

/// A generating set for the congruence `rho` on `act`.
///
/// Starts from a minimal generating set of `rho` viewed as a subact of
/// `A × A`, drops diagonal pairs, orients each pair as `(min, max)`, and then
/// greedily removes pairs whose removal leaves the generated congruence
/// unchanged. The result is sorted and irredundant.
pub fn congruence_generating_set(act: &FiniteRightAct, rho: &Partition) -> Vec<Pair> {
    let n = act.size();
    let nodes: Vec<usize> = rho
        .pairs()
        .into_iter()
        .flat_map(|(x, y)| [x * n + y, y * n + x])
        .collect();
    let gens = crate::subact::minimal_generators_of(n * n, &nodes, act.monoid().size(), |p, s| {
        act.act(p / n, s) * n + act.act(p % n, s)
    });
    let mut cand: Vec<Pair> = gens
        .into_iter()
        .map(|p| (p / n, p % n))
        .filter(|&(x, y)| x != y)
        .map(|(x, y)| (x.min(y), x.max(y)))
        .collect();
    cand.sort_unstable();
    cand.dedup();
    let mut i = 0;
    while i < cand.len() {
        let mut rest = cand.clone();
        rest.remove(i);
        if congruence_closure(act, &rest).unwrap().partition() == rho {
            cand = rest;
        } else {
            i += 1;
        }
    }
    cand
}
