//! Finite right acts over finite monoids.

use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::partition::Partition;

/// A finite right S-act: carrier `0..size` with `a·s` stored in a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRightAct {
    monoid: FiniteMonoid,
    size: usize,
    action: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteRightAct {
    /// `rows[a][s] = a·s`. Checks `a·1 = a` and `a·(st) = (a·s)·t`.
    pub fn new(
        monoid: &FiniteMonoid,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let act = Self::unchecked(monoid, rows, labels)?;
        act.validate()?;
        Ok(act)
    }

    fn unchecked(
        monoid: &FiniteMonoid,
        rows: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let size = rows.len();
        let ms = monoid.size();
        let mut action = Vec::with_capacity(size * ms);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != ms {
                return Err(Error::Dimension(format!(
                    "act row {a} has {} entries, monoid has {ms} elements",
                    row.len()
                )));
            }
            for &x in row {
                if x >= size {
                    return Err(Error::OutOfRange { index: x, size });
                }
                action.push(x);
            }
        }
        let labels = labels.unwrap_or_else(|| (0..size).map(|a| a.to_string()).collect());
        if labels.len() != size {
            return Err(Error::Dimension(format!(
                "{} labels for {size} act elements",
                labels.len()
            )));
        }
        Ok(FiniteRightAct {
            monoid: monoid.clone(),
            size,
            action,
            labels,
        })
    }

    fn validate(&self) -> Result<()> {
        let m = &self.monoid;
        for a in 0..self.size {
            if self.act(a, m.identity()) != a {
                return Err(Error::InvalidAct(format!(
                    "{}·1 != {}",
                    self.label(a),
                    self.label(a)
                )));
            }
            for s in m.elements() {
                for t in m.elements() {
                    if self.act(a, m.mul(s, t)) != self.act(self.act(a, s), t) {
                        return Err(Error::InvalidAct(format!(
                            "{}·({}{}) != ({}·{})·{}",
                            self.label(a),
                            m.label(s),
                            m.label(t),
                            self.label(a),
                            m.label(s),
                            m.label(t)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// S acting on itself by right multiplication.
    pub fn regular(m: &FiniteMonoid) -> Self {
        let rows = m.rows();
        Self::unchecked(m, rows, Some(m.labels().to_vec())).unwrap()
    }

    /// The free act `X × S`; `(x, s)` has index `x * |S| + s` and
    /// `(x, s)·t = (x, st)`.
    pub fn free(m: &FiniteMonoid, basis: &[String]) -> Self {
        let ms = m.size();
        let mut rows = Vec::with_capacity(basis.len() * ms);
        let mut labels = Vec::with_capacity(basis.len() * ms);
        for (x, name) in basis.iter().enumerate() {
            for s in m.elements() {
                rows.push(m.elements().map(|t| x * ms + m.mul(s, t)).collect());
                labels.push(if s == m.identity() {
                    name.clone()
                } else {
                    format!("{name}{}", m.label(s))
                });
            }
        }
        Self::unchecked(m, rows, Some(labels)).unwrap()
    }

    /// Index of the free-act element `(x, s)`.
    pub fn free_element(m: &FiniteMonoid, x: usize, s: ElementId) -> usize {
        x * m.size() + s
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn act(&self, a: usize, s: ElementId) -> usize {
        self.action[a * self.monoid.size() + s]
    }

    /// `a·s₁·s₂·…`
    pub fn act_word(&self, a: usize, word: impl IntoIterator<Item = ElementId>) -> usize {
        word.into_iter().fold(a, |x, s| self.act(x, s))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `aS`, ascending.
    pub fn orbit(&self, a: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.monoid.elements().map(|s| self.act(a, s)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// `Some((a, b, s))` with `a ρ b` but not `as ρ bs`.
    pub fn compatibility_failure(&self, p: &Partition) -> Option<(usize, usize, ElementId)> {
        for class in p.classes() {
            let a = class[0];
            for &b in &class[1..] {
                for s in self.monoid.elements() {
                    if !p.related(self.act(a, s), self.act(b, s)) {
                        return Some((a, b, s));
                    }
                }
            }
        }
        None
    }

    pub fn is_congruence(&self, p: &Partition) -> bool {
        p.len() == self.size && self.compatibility_failure(p).is_none()
    }

    /// `A/ρ`; class `k` is the class with canonical id `k`, labelled by its
    /// least member.
    pub fn quotient(&self, p: &Partition) -> Result<FiniteRightAct> {
        if p.len() != self.size {
            return Err(Error::Dimension(format!(
                "partition of {} points on an act of size {}",
                p.len(),
                self.size
            )));
        }
        if let Some((a, b, s)) = self.compatibility_failure(p) {
            return Err(Error::NotCongruence(format!(
                "{} ~ {} but not after acting by {}",
                self.label(a),
                self.label(b),
                self.monoid.label(s)
            )));
        }
        let reps = p.representatives();
        let rows = reps
            .iter()
            .map(|&r| {
                self.monoid
                    .elements()
                    .map(|s| p.class_of(self.act(r, s)))
                    .collect()
            })
            .collect();
        let labels = reps
            .iter()
            .map(|&r| format!("[{}]", self.label(r)))
            .collect();
        Self::unchecked(&self.monoid, rows, Some(labels))
    }

    /// The act restricted along a homomorphism `φ: N → S`: `a·n = a·(nφ)`.
    pub fn restrict_scalars(&self, n: &FiniteMonoid, phi: &[ElementId]) -> Result<FiniteRightAct> {
        if phi.len() != n.size() {
            return Err(Error::Dimension(format!(
                "map has {} entries for {} elements",
                phi.len(),
                n.size()
            )));
        }
        let rows = (0..self.size)
            .map(|a| phi.iter().map(|&s| self.act(a, s)).collect())
            .collect();
        Self::new(n, rows, Some(self.labels.clone()))
    }

    /// The sub-carrier `elements` (which must be closed) as an act of its own.
    /// Returns the act and the embedding.
    pub fn subact(&self, elements: &[usize]) -> Result<(FiniteRightAct, Vec<usize>)> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut pos = vec![usize::MAX; self.size];
        for (i, &a) in elems.iter().enumerate() {
            pos[a] = i;
        }
        let mut rows = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(self.monoid.size());
            for s in self.monoid.elements() {
                let x = self.act(a, s);
                if pos[x] == usize::MAX {
                    return Err(Error::NotSubact(format!(
                        "{}·{} = {} leaves the set",
                        self.label(a),
                        self.monoid.label(s),
                        self.label(x)
                    )));
                }
                row.push(pos[x]);
            }
            rows.push(row);
        }
        let labels = elems.iter().map(|&a| self.labels[a].clone()).collect();
        let act = Self::unchecked(&self.monoid, rows, Some(labels))?;
        Ok((act, elems))
    }
}
