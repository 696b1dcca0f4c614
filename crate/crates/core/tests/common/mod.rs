#![allow(dead_code)]

use coact_core::monoid::{transformation_monoid, FiniteMonoid};
use coact_core::{FiniteRightAct, Partition, Subact};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random monoid of partial transformations with at most `max_size`
/// elements, determined by `seed`.
pub fn random_monoid(seed: u64, max_size: usize) -> FiniteMonoid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let degree = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=3);
        let gens: Vec<Vec<Option<usize>>> = (0..k)
            .map(|_| {
                (0..degree)
                    .map(|_| {
                        if rng.gen_bool(0.2) {
                            None
                        } else {
                            Some(rng.gen_range(0..degree))
                        }
                    })
                    .collect()
            })
            .collect();
        if let Ok(m) = transformation_monoid(degree, &gens, max_size) {
            return m;
        }
    }
}

/// A random act with at most `max_size` elements over a random monoid of
/// order at most `max_monoid`.
pub fn random_act(seed: u64, max_monoid: usize, max_size: usize) -> FiniteRightAct {
    let m = random_monoid(seed, max_monoid);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..20 {
        let basis: Vec<String> = (0..rng.gen_range(1..=3)).map(|i| format!("x{i}")).collect();
        let free = FiniteRightAct::free(&m, &basis);
        let gens: Vec<usize> = (0..rng.gen_range(1..=3))
            .map(|_| rng.gen_range(0..free.size()))
            .collect();
        let sub = Subact::generated(&free, &gens);
        if sub.len() <= max_size {
            return free.subact(sub.elements()).unwrap().0;
        }
    }
    FiniteRightAct::regular(&m)
}

pub fn random_pairs(seed: u64, n: usize, max_pairs: usize) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
    (0..rng.gen_range(0..=max_pairs))
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect()
}

/// Least right congruence containing `pairs`, by iterating reflexive,
/// symmetric, transitive and compatibility closure on a boolean matrix.
pub fn naive_closure(act: &FiniteRightAct, pairs: &[(usize, usize)]) -> Partition {
    let n = act.size();
    let mut rel = vec![vec![false; n]; n];
    for (x, row) in rel.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(c, d) in pairs {
        rel[c][d] = true;
        rel[d][c] = true;
    }
    loop {
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                if !rel[x][y] {
                    continue;
                }
                for s in act.monoid().elements() {
                    let (a, b) = (act.act(x, s), act.act(y, s));
                    if !rel[a][b] {
                        rel[a][b] = true;
                        rel[b][a] = true;
                        changed = true;
                    }
                }
                let row_y = rel[y].clone();
                for (z, &yz) in row_y.iter().enumerate() {
                    if yz && !rel[x][z] {
                        rel[x][z] = true;
                        rel[z][x] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Partition::from_key(n, |x| rel[x].clone())
}

/// `aS` by direct enumeration.
pub fn principal_right_ideal(m: &FiniteMonoid, a: usize) -> Vec<usize> {
    let mut v: Vec<usize> = m.elements().map(|s| m.mul(a, s)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn principal_left_ideal(m: &FiniteMonoid, a: usize) -> Vec<usize> {
    let mut v: Vec<usize> = m.elements().map(|s| m.mul(s, a)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn two_sided_ideal(m: &FiniteMonoid, a: usize) -> Vec<usize> {
    let mut v: Vec<usize> = m
        .elements()
        .flat_map(|s| m.elements().map(move |t| (s, t)))
        .map(|(s, t)| m.mul(m.mul(s, a), t))
        .collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Catalogue of small regular monoids used across tests.
pub fn regular_catalogue() -> Vec<(String, FiniteMonoid)> {
    use coact_core::constructions::brandt;
    use coact_core::monoid::builtin::*;
    vec![
        ("U2".into(), u2()),
        ("Z2".into(), z2()),
        ("Z3".into(), z3()),
        ("I2".into(), symmetric_inverse(2)),
        ("I3".into(), symmetric_inverse(3)),
        ("T2".into(), full_transformation(2)),
        ("T3".into(), full_transformation(3)),
        ("B(1;2)".into(), brandt(&trivial(), 2, true).unwrap()),
        ("B(Z2;2)".into(), brandt(&z2(), 2, true).unwrap()),
        ("B(Z3;2)".into(), brandt(&z3(), 2, true).unwrap()),
        ("B(Z2;3)".into(), brandt(&z2(), 3, true).unwrap()),
    ]
}
