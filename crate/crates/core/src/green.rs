//! Green's relations, their idempotent-relative variants, and unitary
//! subsemigroups.

use crate::error::{Error, Result};
use crate::monoid::{ElementId, FiniteMonoid};
use crate::partition::Partition;

/// Green's relations of a finite monoid, computed by comparing principal ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreenStructure {
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
    pub d: Partition,
    pub j: Partition,
    /// `leq_j[a][b]` iff `SaS ⊆ SbS`.
    pub leq_j: Vec<Vec<bool>>,
}

impl GreenStructure {
    pub fn leq_j(&self, a: ElementId, b: ElementId) -> bool {
        self.leq_j[a][b]
    }

    /// Members of the J-class of `a`.
    pub fn j_class(&self, a: ElementId) -> Vec<ElementId> {
        self.j.class(a)
    }
}

pub fn green(m: &FiniteMonoid) -> GreenStructure {
    let n = m.size();
    let r = Partition::from_key(n, |a| m.right_ideal(a));
    let l = Partition::from_key(n, |a| m.left_ideal(a));
    let h = r.meet(&l);
    let d = r.join(&l);
    let masks: Vec<Vec<bool>> = m.elements().map(|b| m.two_sided_ideal_mask(b)).collect();
    let leq_j: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| masks[b][a]).collect())
        .collect();
    let j = Partition::from_key(n, |a| masks[a].clone());
    GreenStructure {
        r,
        l,
        h,
        d,
        j,
        leq_j,
    }
}

/// The relations ~R_E, ~L_E and ~H_E for a chosen set of idempotents E.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TildeRelations {
    pub idempotents: Vec<ElementId>,
    pub r: Partition,
    pub l: Partition,
    pub h: Partition,
}

/// `a ~R_E b` iff for all `e ∈ E`: `ea = a ⇔ eb = b`; dually for ~L_E.
pub fn tilde_relations(m: &FiniteMonoid, e_set: &[ElementId]) -> Result<TildeRelations> {
    let mut idempotents = e_set.to_vec();
    idempotents.sort_unstable();
    idempotents.dedup();
    for &e in &idempotents {
        if e >= m.size() {
            return Err(Error::OutOfRange {
                index: e,
                size: m.size(),
            });
        }
        if !m.is_idempotent(e) {
            return Err(Error::NotIdempotent(m.label(e).to_string()));
        }
    }
    let n = m.size();
    let r = Partition::from_key(n, |a| {
        idempotents
            .iter()
            .map(|&e| m.mul(e, a) == a)
            .collect::<Vec<_>>()
    });
    let l = Partition::from_key(n, |a| {
        idempotents
            .iter()
            .map(|&e| m.mul(a, e) == a)
            .collect::<Vec<_>>()
    });
    let h = r.meet(&l);
    Ok(TildeRelations {
        idempotents,
        r,
        l,
        h,
    })
}

/// Is `p` a right congruence of `m` (compatible with right multiplication)?
/// Returns the first `(a, b, s)` with `a p b` but not `as p bs`.
pub fn right_compatibility_failure(
    m: &FiniteMonoid,
    p: &Partition,
) -> Option<(ElementId, ElementId, ElementId)> {
    let reps = p.representatives();
    for a in m.elements() {
        let b = reps[p.class_of(a)];
        if a == b {
            continue;
        }
        for s in m.elements() {
            if !p.related(m.mul(a, s), m.mul(b, s)) {
                return Some((b, a, s));
            }
        }
    }
    None
}

/// Verdict on one unitary property; `Fails` carries `(a, b)` with `a, ab ∈ T`
/// (or `a, ba ∈ T` for the right-handed versions).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails { a: ElementId, b: ElementId },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitaryStatus {
    /// Identity element of T.
    pub identity: ElementId,
    pub left_unitary: Verdict,
    pub weakly_left_unitary: Verdict,
    pub right_unitary: Verdict,
    pub weakly_right_unitary: Verdict,
}

/// Left/right unitary and weakly unitary verdicts for a subsemigroup `t` of
/// `m` that has an identity. Exhaustive over `a ∈ T`, `b ∈ S`.
pub fn unitary_status(m: &FiniteMonoid, t: &[ElementId]) -> Result<UnitaryStatus> {
    if let Some(&x) = t.iter().find(|&&x| x >= m.size()) {
        return Err(Error::OutOfRange {
            index: x,
            size: m.size(),
        });
    }
    if !m.is_subsemigroup(t) {
        return Err(Error::NotClosed("T is not a subsemigroup".into()));
    }
    let e = m.identity_of(t).ok_or(Error::NoIdentity)?;
    let mask = m.mask(t);
    let mut elems = t.to_vec();
    elems.sort_unstable();
    elems.dedup();
    let scan = |left: bool, weak: bool| -> Verdict {
        for &a in &elems {
            for b in m.elements() {
                let prod = if left { m.mul(a, b) } else { m.mul(b, a) };
                if !mask[prod] {
                    continue;
                }
                let target = match (weak, left) {
                    (false, _) => b,
                    (true, true) => m.mul(e, b),
                    (true, false) => m.mul(b, e),
                };
                if !mask[target] {
                    return Verdict::Fails { a, b };
                }
            }
        }
        Verdict::Holds
    };
    Ok(UnitaryStatus {
        identity: e,
        left_unitary: scan(true, false),
        weakly_left_unitary: scan(true, true),
        right_unitary: scan(false, false),
        weakly_right_unitary: scan(false, true),
    })
}
