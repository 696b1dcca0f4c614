#![allow(dead_code)]

use coact_core::{FiniteMonoid, FiniteRightAct, Pair};

/// Relation matrix of the least right congruence containing `pairs`,
/// by iterating the closure rules to a fixpoint.
pub fn naive_closure(act: &FiniteRightAct, pairs: &[Pair]) -> Vec<Vec<bool>> {
    let n = act.size();
    let mut rel = vec![vec![false; n]; n];
    for (x, row) in rel.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(a, b) in pairs {
        rel[a][b] = true;
        rel[b][a] = true;
    }
    loop {
        let mut changed = false;
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            for b in 0..n {
                if !rel[a][b] {
                    continue;
                }
                for s in act.monoid().elements() {
                    let (x, y) = (act.act(a, s), act.act(b, s));
                    if !rel[x][y] {
                        rel[x][y] = true;
                        rel[y][x] = true;
                        changed = true;
                    }
                }
                for c in 0..n {
                    if rel[b][c] && !rel[a][c] {
                        rel[a][c] = true;
                        rel[c][a] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return rel;
        }
    }
}

pub fn naive_monoid_closure(m: &FiniteMonoid, pairs: &[Pair]) -> Vec<Vec<bool>> {
    naive_closure(&FiniteRightAct::regular(m), pairs)
}

/// `{(s, t) : a·s rel a·t}`.
pub fn naive_annihilator(act: &FiniteRightAct, rel: &[Vec<bool>], a: usize) -> Vec<Vec<bool>> {
    let m = act.monoid();
    m.elements()
        .map(|s| {
            m.elements()
                .map(|t| rel[act.act(a, s)][act.act(a, t)])
                .collect()
        })
        .collect()
}

pub fn matrix_of(p: &coact_core::Partition) -> Vec<Vec<bool>> {
    (0..p.len())
        .map(|x| (0..p.len()).map(|y| p.related(x, y)).collect())
        .collect()
}
