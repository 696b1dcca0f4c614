//! Finite monoids given by a Cayley table.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Dense handle into the carrier of a [`FiniteMonoid`].
pub type ElementId = usize;

/// First failure found by [`FiniteMonoid::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Associativity {
        a: ElementId,
        b: ElementId,
        c: ElementId,
    },
    LeftIdentity {
        a: ElementId,
    },
    RightIdentity {
        a: ElementId,
    },
    Zero {
        a: ElementId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Associativity { a, b, c } => {
                write!(f, "(ab)c != a(bc) for (a,b,c) = ({a},{b},{c})")
            }
            Violation::LeftIdentity { a } => write!(f, "1*{a} != {a}"),
            Violation::RightIdentity { a } => write!(f, "{a}*1 != {a}"),
            Violation::Zero { a } => write!(f, "zero is not absorbing against {a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    size: usize,
    table: Vec<ElementId>,
    identity: ElementId,
    zero: Option<ElementId>,
    labels: Vec<String>,
}

impl FiniteMonoid {
    /// Builds a monoid from its table and checks every monoid law.
    pub fn new(
        rows: Vec<Vec<ElementId>>,
        identity: ElementId,
        zero: Option<ElementId>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let m = Self::unchecked(rows, identity, zero, labels)?;
        m.validate().map_err(Error::Invalid)?;
        Ok(m)
    }

    /// Checks dimensions and index ranges only; the monoid laws are left to
    /// [`FiniteMonoid::validate`].
    pub fn unchecked(
        rows: Vec<Vec<ElementId>>,
        identity: ElementId,
        zero: Option<ElementId>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Dimension("empty carrier".into()));
        }
        let mut table = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Dimension(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= size {
                    return Err(Error::OutOfRange { index: x, size });
                }
            }
            table.extend_from_slice(row);
        }
        for x in std::iter::once(identity).chain(zero) {
            if x >= size {
                return Err(Error::OutOfRange { index: x, size });
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != size {
                    return Err(Error::Dimension(format!(
                        "{} labels for {size} elements",
                        l.len()
                    )));
                }
                let mut seen = HashMap::new();
                for (i, s) in l.iter().enumerate() {
                    if let Some(j) = seen.insert(s.as_str(), i) {
                        return Err(Error::Dimension(format!(
                            "label `{s}` used for elements {j} and {i}"
                        )));
                    }
                }
                l
            }
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteMonoid {
            size,
            table,
            identity,
            zero,
            labels,
        })
    }

    /// Full triple loop for associativity, then identity and zero laws.
    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Violation::Associativity { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if self.mul(self.identity, a) != a {
                return Err(Violation::LeftIdentity { a });
            }
            if self.mul(a, self.identity) != a {
                return Err(Violation::RightIdentity { a });
            }
        }
        if let Some(z) = self.zero {
            for a in 0..n {
                if self.mul(z, a) != z || self.mul(a, z) != z {
                    return Err(Violation::Zero { a });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.table[a * self.size + b]
    }

    /// Product of a sequence, left to right; the identity for an empty sequence.
    pub fn product(&self, xs: impl IntoIterator<Item = ElementId>) -> ElementId {
        xs.into_iter()
            .fold(self.identity, |acc, x| self.mul(acc, x))
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> ElementId {
        self.identity
    }

    pub fn zero(&self) -> Option<ElementId> {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.size
    }

    pub fn label(&self, a: ElementId) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<ElementId> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn rows(&self) -> Vec<Vec<ElementId>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let rows = self.rows();
        self = Self::unchecked(rows, self.identity, self.zero, Some(labels))?;
        Ok(self)
    }

    /// Finds an absorbing element if there is one.
    pub fn detect_zero(&self) -> Option<ElementId> {
        self.elements().find(|&z| {
            self.elements()
                .all(|a| self.mul(z, a) == z && self.mul(a, z) == z)
        })
    }

    pub fn is_idempotent(&self, a: ElementId) -> bool {
        self.mul(a, a) == a
    }

    /// E(S), ascending.
    pub fn idempotents(&self) -> Vec<ElementId> {
        self.elements().filter(|&a| self.is_idempotent(a)).collect()
    }

    /// `e <= f` iff `ef = fe = e`.
    pub fn natural_order(&self, e: ElementId, f: ElementId) -> Result<bool> {
        for x in [e, f] {
            if !self.is_idempotent(x) {
                return Err(Error::NotIdempotent(self.label(x).to_string()));
            }
        }
        Ok(self.mul(e, f) == e && self.mul(f, e) == e)
    }

    /// Some `b` with `a = aba`, least index first.
    pub fn inverse_witness(&self, a: ElementId) -> Option<ElementId> {
        self.elements().find(|&b| self.mul(self.mul(a, b), a) == a)
    }

    /// Least element without a `b` satisfying `a = aba`.
    pub fn non_regular_witness(&self) -> Option<ElementId> {
        self.elements().find(|&a| self.inverse_witness(a).is_none())
    }

    pub fn is_regular(&self) -> bool {
        self.non_regular_witness().is_none()
    }

    /// Regular, with exactly one idempotent in each R-class and each L-class.
    pub fn is_inverse(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        let right: Vec<Vec<ElementId>> = self.elements().map(|a| self.right_ideal(a)).collect();
        let left: Vec<Vec<ElementId>> = self.elements().map(|a| self.left_ideal(a)).collect();
        let idem = self.idempotents();
        for (i, &e) in idem.iter().enumerate() {
            for &f in &idem[i + 1..] {
                if right[e] == right[f] || left[e] == left[f] {
                    return false;
                }
            }
        }
        true
    }

    /// aS as a sorted list.
    pub fn right_ideal(&self, a: ElementId) -> Vec<ElementId> {
        let mut v: Vec<_> = self.elements().map(|s| self.mul(a, s)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Sa as a sorted list.
    pub fn left_ideal(&self, a: ElementId) -> Vec<ElementId> {
        let mut v: Vec<_> = self.elements().map(|s| self.mul(s, a)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// SaS as a membership mask.
    pub fn two_sided_ideal_mask(&self, a: ElementId) -> Vec<bool> {
        let mut mask = vec![false; self.size];
        for s in self.elements() {
            let sa = self.mul(s, a);
            for t in self.elements() {
                mask[self.mul(sa, t)] = true;
            }
        }
        mask
    }

    /// The group of units.
    pub fn units(&self) -> Vec<ElementId> {
        self.elements()
            .filter(|&a| {
                self.elements()
                    .any(|b| self.mul(a, b) == self.identity && self.mul(b, a) == self.identity)
            })
            .collect()
    }

    /// Identity element of the subset, if it has one (least index).
    pub fn identity_of(&self, subset: &[ElementId]) -> Option<ElementId> {
        subset.iter().copied().find(|&e| {
            subset
                .iter()
                .all(|&t| self.mul(e, t) == t && self.mul(t, e) == t)
        })
    }

    /// Closed under the multiplication of `self`?
    pub fn is_subsemigroup(&self, subset: &[ElementId]) -> bool {
        let mask = self.mask(subset);
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| mask[self.mul(a, b)]))
    }

    pub fn mask(&self, subset: &[ElementId]) -> Vec<bool> {
        let mut mask = vec![false; self.size];
        for &x in subset {
            mask[x] = true;
        }
        mask
    }

    /// Extracts a subsemigroup with an identity as a monoid in its own right.
    ///
    /// Returns the monoid together with the embedding (local index -> index in
    /// `self`). The subset is sorted and deduplicated first.
    pub fn submonoid(&self, subset: &[ElementId]) -> Result<(FiniteMonoid, Vec<ElementId>)> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::NoIdentity);
        }
        if let Some(&x) = elems.iter().find(|&&x| x >= self.size) {
            return Err(Error::OutOfRange {
                index: x,
                size: self.size,
            });
        }
        let local: HashMap<ElementId, usize> =
            elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut rows = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in &elems {
                let ab = self.mul(a, b);
                match local.get(&ab) {
                    Some(&i) => row.push(i),
                    None => {
                        return Err(Error::NotClosed(format!(
                            "{} * {} = {}",
                            self.label(a),
                            self.label(b),
                            self.label(ab)
                        )))
                    }
                }
            }
            rows.push(row);
        }
        let e = self.identity_of(&elems).ok_or(Error::NoIdentity)?;
        let zero = self
            .zero
            .filter(|z| local.contains_key(z))
            .map(|z| local[&z]);
        let labels = elems.iter().map(|&x| self.labels[x].clone()).collect();
        let m = FiniteMonoid::unchecked(rows, local[&e], zero, Some(labels))?;
        let zero = m.detect_zero();
        let m = FiniteMonoid { zero, ..m };
        Ok((m, elems))
    }

    /// The submonoid generated by `gens` together with the identity.
    pub fn generated_submonoid(&self, gens: &[ElementId]) -> Vec<ElementId> {
        let mut seen = vec![false; self.size];
        let mut queue = VecDeque::from([self.identity]);
        seen[self.identity] = true;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|&x| seen[x]).collect()
    }

    /// Elements that are not products of two non-identity elements, excluding
    /// the identity. Together with the group of units they generate the monoid.
    pub fn irreducible_elements(&self) -> Vec<ElementId> {
        let units = self.units();
        let mut gens: Vec<ElementId> = units
            .iter()
            .copied()
            .filter(|&u| u != self.identity)
            .collect();
        let mut current = self.generated_submonoid(&gens);
        for a in self.elements() {
            if current.binary_search(&a).is_err() {
                gens.push(a);
                current = self.generated_submonoid(&gens);
            }
        }
        gens
    }
}

/// Monoid of (partial) transformations of `0..degree` generated by `gens`,
/// composed left to right: `x(fg) = (xf)g`.
///
/// `None` entries are undefined points. Returns `Err(TooLarge)` if more than
/// `cap` elements are generated. Labels are the images written as strings.
pub fn transformation_monoid(
    degree: usize,
    gens: &[Vec<Option<usize>>],
    cap: usize,
) -> Result<FiniteMonoid> {
    type Map = Vec<Option<usize>>;
    let id: Map = (0..degree).map(Some).collect();
    let compose = |f: &Map, g: &Map| -> Map { f.iter().map(|x| x.and_then(|x| g[x])).collect() };
    let mut index: BTreeMap<Map, usize> = BTreeMap::new();
    let mut elems: Vec<Map> = vec![id.clone()];
    index.insert(id, 0);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let h = compose(&elems[i], g);
            if !index.contains_key(&h) {
                if elems.len() == cap {
                    return Err(Error::TooLarge { size: cap + 1, cap });
                }
                index.insert(h.clone(), elems.len());
                elems.push(h);
            }
        }
        i += 1;
    }
    let rows = elems
        .iter()
        .map(|f| elems.iter().map(|g| index[&compose(f, g)]).collect())
        .collect();
    let labels = elems
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if i == 0 {
                "1".to_string()
            } else {
                let s: String = f
                    .iter()
                    .map(|x| x.map_or('-', |x| char::from_digit(x as u32, 36).unwrap()))
                    .collect();
                format!("[{s}]")
            }
        })
        .collect();
    let m = FiniteMonoid::unchecked(rows, 0, None, Some(labels))?;
    let zero = m.detect_zero();
    Ok(FiniteMonoid { zero, ..m })
}

/// Named small monoids.
pub mod builtin {
    use super::*;

    /// The one-element monoid.
    pub fn trivial() -> FiniteMonoid {
        FiniteMonoid::new(vec![vec![0]], 0, None, Some(vec!["1".into()])).unwrap()
    }

    /// Cyclic group of order `n`, elements `1, g, g^2, ...`.
    pub fn cyclic_group(n: usize) -> FiniteMonoid {
        assert!(n > 0);
        let rows = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        FiniteMonoid::new(rows, 0, None, Some(labels)).unwrap()
    }

    pub fn z2() -> FiniteMonoid {
        cyclic_group(2)
    }

    pub fn z3() -> FiniteMonoid {
        cyclic_group(3)
    }

    /// The two-element semilattice `{1, e}`; `e` is a zero.
    pub fn u2() -> FiniteMonoid {
        FiniteMonoid::new(
            vec![vec![0, 1], vec![1, 1]],
            0,
            Some(1),
            Some(vec!["1".into(), "e".into()]),
        )
        .unwrap()
    }

    /// `{1, a, 0}` with `a^2 = 0`.
    pub fn nilpotent() -> FiniteMonoid {
        FiniteMonoid::new(
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]],
            0,
            Some(2),
            Some(vec!["1".into(), "a".into(), "0".into()]),
        )
        .unwrap()
    }

    /// Symmetric inverse monoid on `degree` points (all partial bijections).
    pub fn symmetric_inverse(degree: usize) -> FiniteMonoid {
        let mut gens = Vec::new();
        // every partial bijection is a generator; small degrees only
        let total = (degree + 1).pow(degree as u32);
        for code in 0..total {
            let mut c = code;
            let f: Vec<Option<usize>> = (0..degree)
                .map(|_| {
                    let v = c % (degree + 1);
                    c /= degree + 1;
                    if v == degree {
                        None
                    } else {
                        Some(v)
                    }
                })
                .collect();
            let mut imgs: Vec<usize> = f.iter().flatten().copied().collect();
            let k = imgs.len();
            imgs.sort_unstable();
            imgs.dedup();
            if imgs.len() == k {
                gens.push(f);
            }
        }
        transformation_monoid(degree, &gens, usize::MAX).unwrap()
    }

    /// Full transformation monoid on `degree` points.
    pub fn full_transformation(degree: usize) -> FiniteMonoid {
        let mut gens = Vec::new();
        if degree >= 2 {
            let mut cycle: Vec<Option<usize>> = (1..degree).map(Some).collect();
            cycle.push(Some(0));
            gens.push(cycle);
            let mut swap: Vec<Option<usize>> = (0..degree).map(Some).collect();
            swap.swap(0, 1);
            gens.push(swap);
            let mut collapse: Vec<Option<usize>> = (0..degree).map(Some).collect();
            collapse[1] = Some(0);
            gens.push(collapse);
        }
        transformation_monoid(degree, &gens, usize::MAX).unwrap()
    }

    /// Looks up a builtin by name: `trivial`, `Z<n>`, `U2`, `nil3`, `I<n>`, `T<n>`.
    pub fn by_name(name: &str) -> Option<FiniteMonoid> {
        match name {
            "trivial" | "1" => Some(trivial()),
            "U2" => Some(u2()),
            "nil3" => Some(nilpotent()),
            _ => {
                let mut chars = name.chars();
                let head = chars.next()?;
                let n: usize = chars.as_str().parse().ok()?;
                match head {
                    'Z' if (1..=64).contains(&n) => Some(cyclic_group(n)),
                    'I' if (1..=4).contains(&n) => Some(symmetric_inverse(n)),
                    'T' if (1..=4).contains(&n) => Some(full_transformation(n)),
                    _ => None,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::builtin::*;
    use super::*;

    #[test]
    fn u2_validates() {
        assert!(u2().validate().is_ok());
        assert_eq!(u2().idempotents(), vec![0, 1]);
    }

    #[test]
    fn non_associative_table_reports_triple() {
        // 0 is the identity; 1*1 = 2, 1*2 = 1, 2*1 = 2, 2*2 = 2
        let m = FiniteMonoid::unchecked(
            vec![vec![0, 1, 2], vec![1, 2, 1], vec![2, 2, 2]],
            0,
            None,
            None,
        )
        .unwrap();
        match m.validate() {
            Err(Violation::Associativity { a, b, c }) => {
                assert_ne!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
            }
            other => panic!("expected associativity violation, got {other:?}"),
        }
    }

    #[test]
    fn bad_identity_and_zero() {
        let m = FiniteMonoid::unchecked(vec![vec![0, 1], vec![1, 1]], 1, None, None).unwrap();
        assert_eq!(m.validate(), Err(Violation::LeftIdentity { a: 0 }));
        let m = FiniteMonoid::unchecked(vec![vec![0, 1], vec![1, 1]], 0, Some(0), None).unwrap();
        assert_eq!(m.validate(), Err(Violation::Zero { a: 1 }));
    }

    #[test]
    fn dimension_errors() {
        assert!(matches!(
            FiniteMonoid::unchecked(vec![vec![0, 1], vec![1]], 0, None, None),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            FiniteMonoid::unchecked(vec![vec![0, 3], vec![1, 1]], 0, None, None),
            Err(Error::OutOfRange { index: 3, .. })
        ));
    }

    #[test]
    fn idempotents_of_groups() {
        assert_eq!(z2().idempotents(), vec![0]);
        assert_eq!(z3().idempotents(), vec![0]);
    }

    #[test]
    fn natural_order_on_u2() {
        let m = u2();
        assert!(m.natural_order(1, 0).unwrap());
        assert!(!m.natural_order(0, 1).unwrap());
        let g = z2();
        assert!(matches!(
            g.natural_order(1, 0),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn regularity() {
        assert!(u2().is_regular() && u2().is_inverse());
        let n = nilpotent();
        assert!(!n.is_regular());
        assert_eq!(n.non_regular_witness(), Some(1));
        assert!(z3().is_inverse());
        let t2 = full_transformation(2);
        assert_eq!(t2.size(), 4);
        assert!(t2.is_regular());
        assert!(!t2.is_inverse());
    }

    #[test]
    fn symmetric_inverse_monoids() {
        assert_eq!(symmetric_inverse(1).size(), 2);
        assert_eq!(symmetric_inverse(2).size(), 7);
        assert_eq!(symmetric_inverse(3).size(), 34);
        assert!(symmetric_inverse(2).is_inverse());
        assert!(symmetric_inverse(2).zero().is_some());
        assert_eq!(full_transformation(3).size(), 27);
    }

    #[test]
    fn submonoid_extraction() {
        let m = symmetric_inverse(2);
        let e = m.idempotents();
        let (sub, emb) = m.submonoid(&e).unwrap();
        assert_eq!(sub.size(), 4);
        assert_eq!(emb, e);
        assert!(sub.validate().is_ok());
        assert!(m.submonoid(&m.units()[..1]).is_ok());
        let nil = nilpotent();
        assert!(matches!(nil.submonoid(&[0, 1]), Err(Error::NotClosed(_))));
    }

    #[test]
    fn irreducibles_generate() {
        for m in [u2(), z3(), symmetric_inverse(2), full_transformation(3)] {
            let gens = m.irreducible_elements();
            assert_eq!(m.generated_submonoid(&gens).len(), m.size());
        }
    }

    #[test]
    fn builtin_names() {
        assert_eq!(by_name("Z2").unwrap().size(), 2);
        assert_eq!(by_name("U2").unwrap().size(), 2);
        assert_eq!(by_name("I2").unwrap().size(), 7);
        assert!(by_name("Q9").is_none());
    }
}
