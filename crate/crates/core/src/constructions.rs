//! Finite monoid constructions: adjoined identity and zero, direct products,
//! Rees matrix monoids and Brandt monoids.
//!
//! Adjoined elements always take the last indices of the carrier (zero before
//! identity when both are adjoined), labelled `0!` and `1!`.

use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};

pub const ADJOINED_ONE: &str = "1!";
pub const ADJOINED_ZERO: &str = "0!";

/// `M^1̲`: a new identity is adjoined whether or not `M` has one.
pub fn adjoin_identity(m: &FiniteMonoid) -> FiniteMonoid {
    let n = m.size();
    let one = n;
    let mut rows: Vec<Vec<ElementId>> = m
        .rows()
        .into_iter()
        .enumerate()
        .map(|(a, mut r)| {
            r.push(a);
            r
        })
        .collect();
    rows.push((0..=n).collect());
    let mut labels = m.labels().to_vec();
    labels.push(ADJOINED_ONE.into());
    FiniteMonoid::new(rows, one, m.zero(), Some(fresh_labels(labels))).unwrap()
}

/// `M^0̲`: a new zero is adjoined.
pub fn adjoin_zero(m: &FiniteMonoid) -> FiniteMonoid {
    let n = m.size();
    let zero = n;
    let mut rows: Vec<Vec<ElementId>> = m
        .rows()
        .into_iter()
        .map(|mut r| {
            r.push(zero);
            r
        })
        .collect();
    rows.push(vec![zero; n + 1]);
    let mut labels = m.labels().to_vec();
    labels.push(ADJOINED_ZERO.into());
    FiniteMonoid::new(rows, m.identity(), Some(zero), Some(fresh_labels(labels))).unwrap()
}

/// Keeps the last label unique by appending primes to it.
fn fresh_labels(mut labels: Vec<String>) -> Vec<String> {
    let last = labels.len() - 1;
    while labels[..last].contains(&labels[last]) {
        labels[last].push('\'');
    }
    labels
}

/// Componentwise product; `(s, t)` has index `s * |T| + t`.
pub fn direct_product(s: &FiniteMonoid, t: &FiniteMonoid) -> FiniteMonoid {
    let (ns, nt) = (s.size(), t.size());
    let idx = |a: ElementId, b: ElementId| a * nt + b;
    let mut rows = Vec::with_capacity(ns * nt);
    let mut labels = Vec::with_capacity(ns * nt);
    for a in s.elements() {
        for b in t.elements() {
            rows.push(
                (0..ns * nt)
                    .map(|y| idx(s.mul(a, y / nt), t.mul(b, y % nt)))
                    .collect(),
            );
            labels.push(format!("({},{})", s.label(a), t.label(b)));
        }
    }
    let zero = match (s.zero(), t.zero()) {
        (Some(a), Some(b)) => Some(idx(a, b)),
        _ => None,
    };
    FiniteMonoid::new(rows, idx(s.identity(), t.identity()), zero, Some(labels)).unwrap()
}

/// Λ×I sandwich matrix over `M`; `None` is the zero marker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Option<ElementId>>,
}

impl SandwichMatrix {
    /// `entries` is row-major over Λ (rows) × I (columns).
    pub fn new(rows: usize, cols: usize, entries: Vec<Option<ElementId>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyIndexSet);
        }
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(SandwichMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Every entry equal to `a`.
    pub fn constant(rows: usize, cols: usize, a: ElementId) -> Result<Self> {
        Self::new(rows, cols, vec![Some(a); rows * cols])
    }

    /// The I×I identity matrix with `one` on the diagonal and zero elsewhere.
    pub fn identity(n: usize, one: ElementId) -> Result<Self> {
        let entries = (0..n * n)
            .map(|k| (k / n == k % n).then_some(one))
            .collect();
        Self::new(n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `p_{λ i}`.
    pub fn entry(&self, lambda: usize, i: usize) -> Option<ElementId> {
        self.entries[lambda * self.cols + i]
    }

    pub fn has_zero_entry(&self) -> bool {
        self.entries.iter().any(Option::is_none)
    }

    /// Every row and every column has a non-zero entry (informational).
    pub fn is_regular(&self) -> bool {
        (0..self.rows).all(|l| (0..self.cols).any(|i| self.entry(l, i).is_some()))
            && (0..self.cols).all(|i| (0..self.rows).any(|l| self.entry(l, i).is_some()))
    }
}

/// Decoded element of a Rees matrix or Brandt monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixElement {
    /// `(i, a, λ)`; indices are 0-based.
    Triple(usize, ElementId, usize),
    Zero,
    One,
}

/// A Rees matrix semigroup `M(M; I, Λ; P)` (optionally with zero and an
/// adjoined identity) together with its element layout.
#[derive(Debug, Clone)]
pub struct ReesMatrixMonoid {
    base: FiniteMonoid,
    sandwich: SandwichMatrix,
    zero: Option<ElementId>,
    one: Option<ElementId>,
    monoid: FiniteMonoid,
}

impl ReesMatrixMonoid {
    pub fn new(
        base: &FiniteMonoid,
        sandwich: SandwichMatrix,
        with_zero: bool,
        adjoin_one: bool,
    ) -> Result<Self> {
        let (ni, nl, nm) = (sandwich.cols(), sandwich.rows(), base.size());
        for l in 0..nl {
            for i in 0..ni {
                match sandwich.entry(l, i) {
                    None if !with_zero => return Err(Error::UnexpectedZero { row: l, col: i }),
                    Some(a) if a >= nm => return Err(Error::OutOfRange { index: a, size: nm }),
                    _ => {}
                }
            }
        }
        let triples = ni * nm * nl;
        let zero = with_zero.then_some(triples);
        let one = adjoin_one.then_some(triples + usize::from(with_zero));
        let size = triples + usize::from(with_zero) + usize::from(adjoin_one);
        let encode = |i: usize, a: ElementId, l: usize| (i * nm + a) * nl + l;
        let decode = |x: ElementId| -> MatrixElement {
            if Some(x) == zero {
                MatrixElement::Zero
            } else if Some(x) == one {
                MatrixElement::One
            } else {
                MatrixElement::Triple(x / (nm * nl), (x / nl) % nm, x % nl)
            }
        };
        let rows: Vec<Vec<ElementId>> = (0..size)
            .map(|x| {
                (0..size)
                    .map(|y| match (decode(x), decode(y)) {
                        (MatrixElement::One, _) => y,
                        (_, MatrixElement::One) => x,
                        (MatrixElement::Zero, _) | (_, MatrixElement::Zero) => zero.unwrap(),
                        (MatrixElement::Triple(i, a, l), MatrixElement::Triple(j, b, mu)) => {
                            match sandwich.entry(l, j) {
                                Some(p) => encode(i, base.mul(base.mul(a, p), b), mu),
                                None => zero.unwrap(),
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let labels = (0..size)
            .map(|x| match decode(x) {
                MatrixElement::One => ADJOINED_ONE.to_string(),
                MatrixElement::Zero => ADJOINED_ZERO.to_string(),
                MatrixElement::Triple(i, a, l) => {
                    format!("({},{},{})", i + 1, base.label(a), l + 1)
                }
            })
            .collect();
        let identity = match one {
            Some(one) => one,
            None => find_identity(&rows).ok_or(Error::NoIdentity)?,
        };
        let monoid = FiniteMonoid::new(rows, identity, zero, Some(labels))?;
        Ok(ReesMatrixMonoid {
            base: base.clone(),
            sandwich,
            zero,
            one,
            monoid,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FiniteMonoid {
        self.monoid
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    pub fn sandwich(&self) -> &SandwichMatrix {
        &self.sandwich
    }

    /// |I|
    pub fn num_rows_i(&self) -> usize {
        self.sandwich.cols()
    }

    /// |Λ|
    pub fn num_cols_lambda(&self) -> usize {
        self.sandwich.rows()
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    pub fn one(&self) -> Option<ElementId> {
        self.one
    }

    pub fn triple(&self, i: usize, a: ElementId, lambda: usize) -> ElementId {
        let (nm, nl) = (self.base.size(), self.num_cols_lambda());
        (i * nm + a) * nl + lambda
    }

    pub fn decode(&self, x: ElementId) -> MatrixElement {
        let (nm, nl) = (self.base.size(), self.num_cols_lambda());
        if Some(x) == self.zero {
            MatrixElement::Zero
        } else if Some(x) == self.one {
            MatrixElement::One
        } else {
            MatrixElement::Triple(x / (nm * nl), (x / nl) % nm, x % nl)
        }
    }

    /// `R_i = {(i, g, λ)}`, ascending.
    pub fn row_class(&self, i: usize) -> Vec<ElementId> {
        let mut v: Vec<_> = (0..self.base.size())
            .flat_map(|a| (0..self.num_cols_lambda()).map(move |l| (a, l)))
            .map(|(a, l)| self.triple(i, a, l))
            .collect();
        v.sort_unstable();
        v
    }
}

fn find_identity(rows: &[Vec<ElementId>]) -> Option<ElementId> {
    let n = rows.len();
    (0..n).find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
}

/// Rees matrix construction as a plain monoid.
pub fn rees_matrix(
    base: &FiniteMonoid,
    sandwich: SandwichMatrix,
    with_zero: bool,
    adjoin_one: bool,
) -> Result<FiniteMonoid> {
    ReesMatrixMonoid::new(base, sandwich, with_zero, adjoin_one).map(ReesMatrixMonoid::into_monoid)
}

/// A Brandt monoid `B(M; I)` (with or without adjoined identity) and its
/// element layout. `(i,a,j)(k,b,l) = (i,ab,l)` if `j = k`, else `0`.
#[derive(Debug, Clone)]
pub struct BrandtMonoid {
    base: FiniteMonoid,
    index: usize,
    one: Option<ElementId>,
    monoid: FiniteMonoid,
}

impl BrandtMonoid {
    pub fn new(base: &FiniteMonoid, index: usize, adjoin_one: bool) -> Result<Self> {
        if index == 0 {
            return Err(Error::EmptyIndexSet);
        }
        let nm = base.size();
        let triples = index * index * nm;
        let zero = triples;
        let one = adjoin_one.then_some(triples + 1);
        let size = triples + 1 + usize::from(adjoin_one);
        let encode = |i: usize, a: ElementId, j: usize| (i * nm + a) * index + j;
        let decode = |x: ElementId| -> MatrixElement {
            if x == zero {
                MatrixElement::Zero
            } else if Some(x) == one {
                MatrixElement::One
            } else {
                MatrixElement::Triple(x / (nm * index), (x / index) % nm, x % index)
            }
        };
        let rows: Vec<Vec<ElementId>> = (0..size)
            .map(|x| {
                (0..size)
                    .map(|y| match (decode(x), decode(y)) {
                        (MatrixElement::One, _) => y,
                        (_, MatrixElement::One) => x,
                        (MatrixElement::Zero, _) | (_, MatrixElement::Zero) => zero,
                        (MatrixElement::Triple(i, a, j), MatrixElement::Triple(k, b, l)) => {
                            if j == k {
                                encode(i, base.mul(a, b), l)
                            } else {
                                zero
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let labels = (0..size)
            .map(|x| match decode(x) {
                MatrixElement::One => ADJOINED_ONE.to_string(),
                MatrixElement::Zero => ADJOINED_ZERO.to_string(),
                MatrixElement::Triple(i, a, j) => {
                    format!("({},{},{})", i + 1, base.label(a), j + 1)
                }
            })
            .collect();
        let identity = match one {
            Some(one) => one,
            None => find_identity(&rows).ok_or(Error::NoIdentity)?,
        };
        let monoid = FiniteMonoid::new(rows, identity, Some(zero), Some(labels))?;
        Ok(BrandtMonoid {
            base: base.clone(),
            index,
            one,
            monoid,
        })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn into_monoid(self) -> FiniteMonoid {
        self.monoid
    }

    pub fn base(&self) -> &FiniteMonoid {
        &self.base
    }

    /// |I|
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn zero(&self) -> ElementId {
        self.index * self.index * self.base.size()
    }

    /// The adjoined identity; panics when the identity was not adjoined.
    pub fn one(&self) -> ElementId {
        self.one
            .expect("Brandt semigroup built without adjoined identity")
    }

    pub fn triple(&self, i: usize, a: ElementId, j: usize) -> ElementId {
        (i * self.base.size() + a) * self.index + j
    }

    pub fn decode(&self, x: ElementId) -> MatrixElement {
        let (nm, n) = (self.base.size(), self.index);
        if x == self.zero() {
            MatrixElement::Zero
        } else if Some(x) == self.one {
            MatrixElement::One
        } else {
            MatrixElement::Triple(x / (nm * n), (x / n) % nm, x % n)
        }
    }

    pub fn is_triple(&self, x: ElementId) -> bool {
        matches!(self.decode(x), MatrixElement::Triple(..))
    }

    /// `R_i = {(i, a, j)}`, ascending.
    pub fn row_class(&self, i: usize) -> Vec<ElementId> {
        let mut v: Vec<_> = (0..self.base.size())
            .flat_map(|a| (0..self.index).map(move |j| (a, j)))
            .map(|(a, j)| self.triple(i, a, j))
            .collect();
        v.sort_unstable();
        v
    }

    /// `{(i, 1_M, i) : i ∈ I} ∪ {0}`.
    pub fn diagonal_idempotents(&self) -> Vec<ElementId> {
        let one_m = self.base.identity();
        let mut v: Vec<_> = (0..self.index)
            .map(|i| self.triple(i, one_m, i))
            .chain([self.zero()])
            .collect();
        v.sort_unstable();
        v
    }
}

pub fn brandt(base: &FiniteMonoid, index: usize, adjoin_one: bool) -> Result<FiniteMonoid> {
    BrandtMonoid::new(base, index, adjoin_one).map(BrandtMonoid::into_monoid)
}

/// An endomorphism θ of a finite monoid with memoized powers.
///
/// The sequence θ⁰, θ¹, ... is eventually periodic; it is stored up to the
/// first repeat so every power is a table lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    powers: Vec<Vec<ElementId>>,
    preperiod: usize,
    period: usize,
}

impl Endomorphism {
    /// Checks `(xy)θ = (xθ)(yθ)` for all pairs and `1θ = 1`.
    pub fn new(m: &FiniteMonoid, map: Vec<ElementId>) -> Result<Self> {
        if map.len() != m.size() {
            return Err(Error::NotEndomorphism(format!(
                "map has {} entries for {} elements",
                map.len(),
                m.size()
            )));
        }
        if let Some(&x) = map.iter().find(|&&x| x >= m.size()) {
            return Err(Error::OutOfRange {
                index: x,
                size: m.size(),
            });
        }
        if map[m.identity()] != m.identity() {
            return Err(Error::NotEndomorphism("identity is not fixed".into()));
        }
        for x in m.elements() {
            for y in m.elements() {
                if map[m.mul(x, y)] != m.mul(map[x], map[y]) {
                    return Err(Error::NotEndomorphism(format!(
                        "({}*{})θ != ({})θ*({})θ",
                        m.label(x),
                        m.label(y),
                        m.label(x),
                        m.label(y)
                    )));
                }
            }
        }
        let mut powers: Vec<Vec<ElementId>> = vec![m.elements().collect()];
        loop {
            let next: Vec<ElementId> = powers.last().unwrap().iter().map(|&x| map[x]).collect();
            if let Some(i) = powers.iter().position(|p| *p == next) {
                let period = powers.len() - i;
                return Ok(Endomorphism {
                    powers,
                    preperiod: i,
                    period,
                });
            }
            powers.push(next);
        }
    }

    pub fn identity(m: &FiniteMonoid) -> Self {
        Self::new(m, m.elements().collect()).unwrap()
    }

    /// The map sending everything to the identity.
    pub fn trivial(m: &FiniteMonoid) -> Self {
        Self::new(m, vec![m.identity(); m.size()]).unwrap()
    }

    /// `x θ^k`.
    pub fn apply_power(&self, x: ElementId, k: u64) -> ElementId {
        let k = k as usize;
        let idx = if k < self.powers.len() {
            k
        } else {
            self.preperiod + (k - self.preperiod) % self.period
        };
        self.powers[idx][x]
    }

    pub fn apply(&self, x: ElementId) -> ElementId {
        self.apply_power(x, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::builtin::*;

    #[test]
    fn adjoin_identity_keeps_old_identity() {
        let m = adjoin_identity(&u2());
        assert_eq!(m.size(), 3);
        assert_eq!(m.identity(), 2);
        assert_eq!(m.label(2), "1!");
        assert_eq!(m.mul(2, 1), 1);
        assert_eq!(m.mul(0, 0), 0);
        let twice = adjoin_identity(&m);
        assert_eq!(twice.size(), 4);
        assert_eq!(twice.label(3), "1!'");
    }

    #[test]
    fn adjoined_identity_to_group_is_not_a_group() {
        let m = adjoin_identity(&z2());
        assert_eq!(m.size(), 3);
        assert_eq!(m.units(), vec![2]);
        assert_eq!(m.idempotents(), vec![0, 2]);
    }

    #[test]
    fn adjoin_zero_has_no_zero_divisors() {
        let m = adjoin_zero(&z2());
        assert_eq!(m.size(), 3);
        assert_eq!(m.zero(), Some(2));
        for a in m.elements() {
            for b in m.elements() {
                if m.mul(a, b) == 2 {
                    assert!(a == 2 || b == 2);
                }
            }
        }
    }

    #[test]
    fn product_counts() {
        let p = direct_product(&u2(), &z2());
        assert_eq!(p.size(), 4);
        assert_eq!(p.identity(), 0);
        assert_eq!(p.label(3), "(e,g)");
    }

    #[test]
    fn rees_product_rule() {
        let g = z2();
        let p = SandwichMatrix::constant(2, 2, 0).unwrap();
        let r = ReesMatrixMonoid::new(&g, p, false, true).unwrap();
        assert_eq!(r.monoid().size(), 9);
        // (1,g,1)(2,1,2) with p_{12} = 1 gives (1,g,2)
        let x = r.triple(0, 1, 0);
        let y = r.triple(1, 0, 1);
        assert_eq!(r.monoid().mul(x, y), r.triple(0, 1, 1));
    }

    #[test]
    fn rees_zero_entry() {
        let g = z2();
        let p = SandwichMatrix::new(2, 2, vec![Some(0), None, None, Some(0)]).unwrap();
        assert!(matches!(
            ReesMatrixMonoid::new(&g, p.clone(), false, true),
            Err(Error::UnexpectedZero { .. })
        ));
        let r = ReesMatrixMonoid::new(&g, p, true, true).unwrap();
        let x = r.triple(0, 0, 0);
        let y = r.triple(1, 0, 0);
        assert_eq!(r.monoid().mul(x, y), r.zero().unwrap());
    }

    #[test]
    fn brandt_sizes_and_rule() {
        let b = BrandtMonoid::new(&trivial(), 2, true).unwrap();
        assert_eq!(b.monoid().size(), 6);
        let bz = BrandtMonoid::new(&z2(), 2, true).unwrap();
        assert_eq!(bz.monoid().size(), 10);
        let m = bz.monoid();
        let x = bz.triple(0, 1, 1);
        assert_eq!(m.mul(x, bz.triple(1, 1, 0)), bz.triple(0, 0, 0));
        assert_eq!(m.mul(x, bz.triple(0, 1, 0)), bz.zero());
        assert!(matches!(
            BrandtMonoid::new(&z2(), 0, true),
            Err(Error::EmptyIndexSet)
        ));
    }

    #[test]
    fn brandt_without_one() {
        // B(M;{•}) is M^0 and already has an identity
        let b = brandt(&z2(), 1, false).unwrap();
        assert_eq!(b.size(), 3);
        assert!(matches!(brandt(&z2(), 2, false), Err(Error::NoIdentity)));
    }

    #[test]
    fn endomorphism_powers() {
        let g = z3();
        let inv = Endomorphism::new(&g, vec![0, 2, 1]).unwrap();
        assert_eq!(inv.apply_power(1, 0), 1);
        assert_eq!(inv.apply_power(1, 1), 2);
        assert_eq!(inv.apply_power(1, 2), 1);
        assert_eq!(inv.apply_power(1, 1001), 2);
        let t = Endomorphism::trivial(&u2());
        assert_eq!(t.apply_power(1, 5), 0);
        assert!(matches!(
            Endomorphism::new(&g, vec![0, 1, 1]),
            Err(Error::NotEndomorphism(_))
        ));
        assert!(matches!(
            Endomorphism::new(&u2(), vec![1, 1]),
            Err(Error::NotEndomorphism(_))
        ));
    }
}
