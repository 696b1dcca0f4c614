//! Brute-force reference computations used to cross-check the fast paths.

use std::collections::VecDeque;

use crate::act::FiniteRightAct;
use crate::congruence::{symmetric_closure, Pair};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::partition::Partition;

/// The H-sequence relation: connected components of the graph with an edge
/// `c·t ~ d·t` for every `(c, d) ∈ H̄` and every `t ∈ S`.
pub fn bfs_closure(act: &FiniteRightAct, pairs: &[Pair]) -> Partition {
    let n = act.size();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, d) in symmetric_closure(pairs) {
        for t in act.monoid().elements() {
            adj[act.act(c, t)].push(act.act(d, t));
        }
    }
    let mut comp = vec![usize::MAX; n];
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = start;
        let mut q = VecDeque::from([start]);
        while let Some(x) = q.pop_front() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = start;
                    q.push_back(y);
                }
            }
        }
    }
    Partition::from_labels(comp)
}

/// `{(u, v) : a·u ρ a·v}` by scanning all pairs.
pub fn ann_scan(act: &FiniteRightAct, rho: &Partition, a: usize) -> Partition {
    let m = act.monoid().size();
    let mut labels: Vec<usize> = (0..m).collect();
    for u in 0..m {
        for v in 0..u {
            if rho.related(act.act(a, u), act.act(a, v)) {
                labels[u] = labels[v];
                break;
            }
        }
    }
    Partition::from_labels(labels)
}

/// Every subact of `act`, as sorted element lists, in lexicographic order.
/// Enumerates down-closed unions of principal subacts; `None` when there are
/// more than `cap` of them.
pub fn all_subacts(act: &FiniteRightAct, cap: usize) -> Option<Vec<Vec<usize>>> {
    let n = act.size();
    let orbits: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            let mut mask = vec![false; n];
            for x in act.orbit(a) {
                mask[x] = true;
            }
            mask
        })
        .collect();
    let mut found: std::collections::BTreeSet<Vec<bool>> = std::collections::BTreeSet::new();
    found.insert(vec![false; n]);
    let mut frontier: Vec<Vec<bool>> = vec![vec![false; n]];
    while let Some(cur) = frontier.pop() {
        for a in 0..n {
            if cur[a] {
                continue;
            }
            let next: Vec<bool> = (0..n).map(|x| cur[x] || orbits[a][x]).collect();
            if found.insert(next.clone()) {
                if found.len() > cap {
                    return None;
                }
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found
        .into_iter()
        .map(|m| (0..n).filter(|&x| m[x]).collect())
        .collect();
    out.sort();
    Some(out)
}

/// `{s : a·s = a}` for every `a`, used for quick stabiliser checks.
pub fn stabilizer(act: &FiniteRightAct, a: usize) -> Vec<ElementId> {
    act.monoid()
        .elements()
        .filter(|&s| act.act(a, s) == a)
        .collect()
}

/// The relation `x ~ y` iff `x ≤ y` and `y ≤ x` in the reachability preorder
/// of the regular act, recomputed from orbits. Equals Green's R on finite
/// monoids.
pub fn r_by_orbits(m: &FiniteMonoid) -> Partition {
    let a = FiniteRightAct::regular(m);
    Partition::from_key(m.size(), |x| a.orbit(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builtin::*;

    #[test]
    fn bfs_matches_direct_u2() {
        let a = FiniteRightAct::regular(&u2());
        assert_eq!(bfs_closure(&a, &[(0, 1)]), Partition::universal(2));
        assert_eq!(bfs_closure(&a, &[]), Partition::discrete(2));
    }

    #[test]
    fn subacts_of_u2() {
        let a = FiniteRightAct::regular(&u2());
        assert_eq!(
            all_subacts(&a, 10).unwrap(),
            vec![vec![], vec![0, 1], vec![1]]
        );
    }
}
