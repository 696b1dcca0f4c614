//! The direct product `F × F` of free monoids on `{a, x, b}` and the
//! annihilator of `(a, b)ρ` for `ρ = ⟨((ax,1),(a,x)), ((ab,1),(aa,1))⟩`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use coact_core::bounded::{saturated_class, BoundedStep, BoundedWitness, ElementPair};
use coact_core::computable::{ComputableMonoid, Element, FreeMonoid, ProductMonoid};
use rand::Rng;
use serde_json::json;

use crate::error::{HarnessError, Result};
use crate::random::rng;
use crate::report::ConstructionReport;

pub const NAME: &str = "ex62_product_check";
pub const ANCHOR: &str = "on F × F with H = {((ax,1),(a,x)), ((ab,1),(aa,1))}: (ax^n,b) ρ (ax^{n−1},xb) ρ … ρ (a,x^n b) \
is a whole ρ-class, (x^n,1)ν = {(x^n,1)}, (x^n b,1) ν (x^n a,1), and no finite K generates ν = ann((a,b)ρ)";

const A: u32 = 0;
const X: u32 = 1;
const B: u32 = 2;

fn word(parts: &[(u32, usize)]) -> Element {
    Element::Word(
        parts
            .iter()
            .flat_map(|&(s, k)| std::iter::repeat_n(s, k))
            .collect(),
    )
}

fn pair(l: &[(u32, usize)], r: &[(u32, usize)]) -> Element {
    Element::pair(word(l), word(r))
}

/// `F × F` over `{a, x, b}` and the two generating pairs.
pub fn system() -> (ProductMonoid, Vec<ElementPair>) {
    let f = FreeMonoid::new(&["a", "x", "b"]).expect("valid alphabet");
    let p = ProductMonoid::new(Box::new(f.clone()), Box::new(f));
    let h = vec![
        (pair(&[(A, 1), (X, 1)], &[]), pair(&[(A, 1)], &[(X, 1)])),
        (pair(&[(A, 1), (B, 1)], &[]), pair(&[(A, 2)], &[])),
    ];
    (p, h)
}

/// `(ax^{n−k}, x^k b)` for `k = 0..=n`, sorted.
pub fn displayed_class(n: usize) -> Vec<Element> {
    let mut v: Vec<Element> = (0..=n)
        .map(|k| pair(&[(A, 1), (X, n - k)], &[(X, k), (B, 1)]))
        .collect();
    v.sort();
    v
}

/// `(ax^n b, b) → … → (ab, x^n b) → (aa, x^n b) → … → (ax^n a, b)`, with
/// pair indices into `H̄ = H ∪ H⁻¹`.
pub fn displayed_witness(n: usize) -> BoundedWitness {
    let mut steps = Vec::new();
    for k in (1..=n).rev() {
        steps.push(BoundedStep {
            pair: 0,
            multiplier: pair(&[(X, k - 1), (B, 1)], &[(X, n - k), (B, 1)]),
        });
    }
    steps.push(BoundedStep {
        pair: 1,
        multiplier: pair(&[], &[(X, n), (B, 1)]),
    });
    for k in 0..n {
        steps.push(BoundedStep {
            pair: 2,
            multiplier: pair(&[(X, k), (A, 1)], &[(X, n - k - 1), (B, 1)]),
        });
    }
    BoundedWitness { steps }
}

fn words_up_to(len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<u32>| {
                (0..3).map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Least member of the ρ-class of `(a,b)u`, which identifies the ν-class of `u`.
fn nu_key(
    p: &ProductMonoid,
    h: &[ElementPair],
    u: &Element,
    radius: usize,
) -> Result<(Element, bool)> {
    let ab = pair(&[(A, 1)], &[(B, 1)]);
    let y = p.multiply(&ab, u);
    let class = saturated_class(p, h, &y, radius)?;
    Ok((class.members[0].clone(), class.complete))
}

struct Negative {
    elements: usize,
    nontrivial_pairs: usize,
    class_size: usize,
    complete: bool,
    contradiction: bool,
}

/// Closure of the `ν`-pairs among short elements, started at `(x^n a, 1)`.
fn negative_part(
    p: &ProductMonoid,
    h: &[ElementPair],
    n: usize,
    cap: usize,
    radius: usize,
    samples: usize,
    seed: u64,
) -> Result<Negative> {
    let start = pair(&[(X, n), (A, 1)], &[]);
    let target = pair(&[(X, n), (B, 1)], &[]);
    let mut small: BTreeSet<Element> = BTreeSet::new();
    if n > 0 {
        let words = words_up_to((n - 1).min(cap));
        for l in &words {
            for r in &words {
                small.insert(Element::pair(
                    Element::Word(l.clone()),
                    Element::Word(r.clone()),
                ));
            }
        }
        if n - 1 > cap {
            let mut g = rng(seed, 62 + n as u64);
            let rand_word = |g: &mut rand_chacha::ChaCha8Rng| -> Element {
                let len = g.gen_range(0..n);
                Element::Word((0..len).map(|_| g.gen_range(0..3)).collect())
            };
            for _ in 0..samples {
                let (l, r) = (rand_word(&mut g), rand_word(&mut g));
                small.insert(Element::pair(l, r));
            }
        }
    }
    let mut groups: BTreeMap<Element, Vec<Element>> = BTreeMap::new();
    let mut key_of: BTreeMap<Element, Element> = BTreeMap::new();
    let mut complete = true;
    for u in &small {
        let (key, c) = nu_key(p, h, u, radius)?;
        complete &= c;
        groups.entry(key.clone()).or_default().push(u.clone());
        key_of.insert(u.clone(), key);
    }
    let nontrivial_pairs: usize = groups.values().map(|g| g.len() * (g.len() - 1)).sum();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(y) = queue.pop_front() {
        for c in &small {
            let Some(ts) = p.right_factors(c, &y) else {
                complete = false;
                continue;
            };
            if ts.is_empty() {
                continue;
            }
            for d in &groups[&key_of[c]] {
                for t in &ts {
                    let z = p.multiply(d, t);
                    if p.norm(&z) > radius {
                        complete = false;
                    } else if seen.insert(z.clone()) {
                        queue.push_back(z);
                    }
                }
            }
        }
    }
    Ok(Negative {
        elements: small.len(),
        nontrivial_pairs,
        class_size: seen.len(),
        complete,
        contradiction: seen.contains(&target),
    })
}

/// Checks the four claims for every `n ≤ n_max`. Short elements have both
/// components of length at most `min(n − 1, cap)`, plus `samples` random
/// ones of length below `n` when `n − 1 > cap`.
pub fn ex62_product_check(
    n_max: usize,
    radius: usize,
    cap: usize,
    samples: usize,
    seed: u64,
) -> Result<ConstructionReport> {
    if radius < 2 * n_max + 2 {
        return Err(HarnessError::param(
            "radius",
            format!("must be at least 2·n_max + 2 = {}", 2 * n_max + 2),
        ));
    }
    let (p, h) = system();
    let mut report = ConstructionReport::new(
        NAME,
        ANCHOR,
        format!("F × F over {{a,x,b}}, n ≤ {n_max}, radius {radius}, cap {cap}"),
    );
    report.bound_relative = true;
    let render = |xs: &[Element]| xs.iter().map(|x| p.render(x)).collect::<Vec<_>>();
    let mut contradictions = 0usize;
    let mut per_n = Vec::new();
    for n in 0..=n_max {
        let start = pair(&[(A, 1), (X, n)], &[(B, 1)]);
        let class = saturated_class(&p, &h, &start, radius)?;
        let want = displayed_class(n);
        report.require(
            class.members == want && class.complete,
            format!("the ρ-class of (ax^{n},b) is the displayed chain and complete"),
            json!({ "found": render(&class.members), "complete": class.complete }),
        );
        let wider = saturated_class(&p, &h, &start, radius + 2)?;
        report.require(
            wider.members == class.members && wider.complete,
            format!(
                "the ρ-class of (ax^{n},b) is stable at radius {}",
                radius + 2
            ),
            render(&wider.members),
        );

        let ab = pair(&[(A, 1)], &[(B, 1)]);
        let mut nu_class: BTreeSet<Element> = BTreeSet::new();
        let mut exact = true;
        for member in &class.members {
            match p.right_factors(&ab, member) {
                Some(ts) => nu_class.extend(ts),
                None => exact = false,
            }
        }
        let xn = pair(&[(X, n)], &[]);
        let nu_class: Vec<Element> = nu_class.into_iter().collect();
        report.require(
            exact && nu_class == vec![xn],
            format!("(x^{n},1) is a ν-singleton"),
            render(&nu_class),
        );

        let from = pair(&[(A, 1), (X, n), (B, 1)], &[(B, 1)]);
        let to = pair(&[(A, 1), (X, n), (A, 1)], &[(B, 1)]);
        let witness = displayed_witness(n);
        let chain = witness.chain(&p, &h, &from);
        let through = pair(&[(A, 2)], &[(X, n), (B, 1)]);
        let ok = witness.replay(&p, &h, &from, &to)
            && chain.as_ref().is_some_and(|c| c.contains(&through))
            && p.multiply(&ab, &pair(&[(X, n), (B, 1)], &[])) == from
            && p.multiply(&ab, &pair(&[(X, n), (A, 1)], &[])) == to;
        report.require(
            ok,
            format!("(x^{n}b,1) ν (x^{n}a,1) through (aa,x^{n}b)"),
            chain.as_ref().map(|c| render(c)),
        );

        let neg = negative_part(&p, &h, n, cap, radius, samples, seed)?;
        if neg.contradiction {
            contradictions += 1;
            report.fail(
                format!("short ν-pairs relate (x^{n}a,1) and (x^{n}b,1)"),
                json!({ "n": n }),
            );
        }
        per_n.push(json!({
            "n": n,
            "class": render(&class.members),
            "complete": class.complete,
            "witness": chain.map(|c| render(&c)),
            "negative": {
                "short_elements": neg.elements,
                "nontrivial_short_pairs": neg.nontrivial_pairs,
                "class_of_xna_size": neg.class_size,
                "complete": neg.complete,
            },
        }));
    }
    report.artifact("instances", per_n);
    report.artifact("contradictions", contradictions);
    report.note("the negative part covers short pair sets inside the radius only");
    Ok(report.finish())
}
