//! Seeded random instances. Every generator is a pure function of its seed.

use coact_core::constructions::brandt;
use coact_core::monoid::builtin;
use coact_core::monoid::transformation_monoid;
use coact_core::{FiniteMonoid, FiniteRightAct, Pair, Subact};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// A monoid of partial transformations of degree 2 to 4 with at most
/// `max_size` elements.
pub fn random_monoid(seed: u64, max_size: usize) -> FiniteMonoid {
    let mut r = rng(seed, 1);
    loop {
        let degree = r.gen_range(2..=4);
        let k = r.gen_range(1..=3);
        let gens: Vec<Vec<Option<usize>>> = (0..k)
            .map(|_| {
                (0..degree)
                    .map(|_| (!r.gen_bool(0.2)).then(|| r.gen_range(0..degree)))
                    .collect()
            })
            .collect();
        if let Ok(m) = transformation_monoid(degree, &gens, max_size) {
            return m;
        }
    }
}

/// A finitely generated subact of a small free act, or the regular act
/// when no sample fits within `max_size`.
pub fn random_act(seed: u64, max_monoid: usize, max_size: usize) -> FiniteRightAct {
    let m = random_monoid(seed, max_monoid);
    let mut r = rng(seed, 2);
    for _ in 0..20 {
        let basis: Vec<String> = (0..r.gen_range(1..=3)).map(|i| format!("x{i}")).collect();
        let free = FiniteRightAct::free(&m, &basis);
        let gens: Vec<usize> = (0..r.gen_range(1..=3))
            .map(|_| r.gen_range(0..free.size()))
            .collect();
        let sub = Subact::generated(&free, &gens);
        if sub.len() <= max_size {
            return free
                .subact(sub.elements())
                .expect("generated subacts are closed")
                .0;
        }
    }
    FiniteRightAct::regular(&m)
}

/// Between `min` and `max` uniformly random pairs over `0..n`.
pub fn random_pairs(r: &mut impl Rng, n: usize, min: usize, max: usize) -> Vec<Pair> {
    let k = r.gen_range(min..=max);
    (0..k)
        .map(|_| (r.gen_range(0..n), r.gen_range(0..n)))
        .collect()
}

/// Small regular monoids: Brandt monoids over Z2 and Z3, U2, and
/// symmetric inverse monoids.
pub fn regular_catalogue() -> Vec<(String, FiniteMonoid)> {
    vec![
        ("U2".into(), builtin::u2()),
        ("Z2".into(), builtin::z2()),
        ("Z3".into(), builtin::z3()),
        ("I2".into(), builtin::symmetric_inverse(2)),
        ("I3".into(), builtin::symmetric_inverse(3)),
        ("B(Z2;2)".into(), brandt(&builtin::z2(), 2, true).unwrap()),
        ("B(Z2;3)".into(), brandt(&builtin::z2(), 3, true).unwrap()),
        ("B(Z3;2)".into(), brandt(&builtin::z3(), 2, true).unwrap()),
        (
            "B(1;3)".into(),
            brandt(&builtin::trivial(), 3, true).unwrap(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(random_monoid(9, 7), random_monoid(9, 7));
        let (a, b) = (random_act(3, 6, 10), random_act(3, 6, 10));
        assert_eq!(a.labels(), b.labels());
    }

    #[test]
    fn sizes_respect_bounds() {
        for seed in 0..40 {
            assert!(random_monoid(seed, 7).size() <= 7);
            assert!(random_act(seed, 8, 12).size() <= 12);
        }
    }

    #[test]
    fn catalogue_is_regular() {
        for (name, m) in regular_catalogue() {
            assert!(m.is_regular(), "{name}");
        }
    }
}
