//! Equivalence relations on `0..n`, stored in canonical form.
//!
//! Class ids are assigned in order of least member, so two partitions of the
//! same set are equal as relations iff their `class_of` vectors are equal.

use std::collections::HashMap;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    num_classes: usize,
}

impl Partition {
    /// The identity relation (all singletons).
    pub fn discrete(n: usize) -> Self {
        Partition {
            class_of: (0..n).collect(),
            num_classes: n,
        }
    }

    /// The universal relation.
    pub fn universal(n: usize) -> Self {
        Partition {
            class_of: vec![0; n],
            num_classes: usize::from(n > 0),
        }
    }

    /// Build from an arbitrary labelling; elements with equal labels share a class.
    pub fn from_labels<K: Eq + Hash>(labels: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let class_of: Vec<usize> = labels
            .into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition {
            num_classes: ids.len(),
            class_of,
        }
    }

    pub fn from_key<K: Eq + Hash>(n: usize, key: impl Fn(usize) -> K) -> Self {
        Self::from_labels((0..n).map(key))
    }

    pub fn from_union_find(uf: &mut UnionFind) -> Self {
        let n = uf.len();
        Self::from_labels((0..n).map(|x| uf.find(x)))
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn class_ids(&self) -> &[usize] {
        &self.class_of
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Classes in class-id order; each class sorted ascending.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    /// Members of the class containing `x`.
    pub fn class(&self, x: usize) -> Vec<usize> {
        let c = self.class_of[x];
        (0..self.len()).filter(|&y| self.class_of[y] == c).collect()
    }

    /// Least member of each class, in class-id order (ascending).
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.num_classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    /// Least member of the class of `x`.
    pub fn representative(&self, x: usize) -> usize {
        let c = self.class_of[x];
        self.class_of.iter().position(|&d| d == c).unwrap()
    }

    /// True iff every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        assert_eq!(self.len(), other.len());
        let mut image = vec![usize::MAX; self.num_classes];
        for x in 0..self.len() {
            let c = self.class_of[x];
            if image[c] == usize::MAX {
                image[c] = other.class_of[x];
            } else if image[c] != other.class_of[x] {
                return false;
            }
        }
        true
    }

    /// Intersection of two equivalences.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        Self::from_key(self.len(), |x| (self.class_of[x], other.class_of[x]))
    }

    /// Least equivalence containing both.
    pub fn join(&self, other: &Partition) -> Partition {
        assert_eq!(self.len(), other.len());
        let mut uf = UnionFind::new(self.len());
        for p in [self, other] {
            let reps = p.representatives();
            for x in 0..p.len() {
                uf.union(x, reps[p.class_of[x]]);
            }
        }
        Self::from_union_find(&mut uf)
    }

    /// Off-diagonal related pairs `(x, y)` with `x != y`, lexicographic.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let classes = self.classes();
        let mut out = Vec::new();
        for class in &classes {
            for &x in class {
                for &y in class {
                    if x != y {
                        out.push((x, y));
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Restriction to the positions listed in `subset`, re-indexed by position.
    pub fn restrict(&self, subset: &[usize]) -> Partition {
        Self::from_labels(subset.iter().map(|&x| self.class_of[x]))
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `x` and `y` were already in the same set.
    pub fn union(&mut self, x: usize, y: usize) -> bool {
        let (mut rx, mut ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        if self.size[rx] < self.size[ry] {
            std::mem::swap(&mut rx, &mut ry);
        }
        self.parent[ry] = rx;
        self.size[rx] += self.size[ry];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_ids_follow_least_member() {
        let p = Partition::from_labels(["b", "a", "b", "c"]);
        assert_eq!(p.class_ids(), &[0, 1, 0, 2]);
        assert_eq!(p.representatives(), vec![0, 1, 3]);
        assert_eq!(p.classes(), vec![vec![0, 2], vec![1], vec![3]]);
    }

    #[test]
    fn meet_and_join() {
        let p = Partition::from_labels([0, 0, 1, 1]);
        let q = Partition::from_labels([0, 1, 1, 2]);
        assert_eq!(p.meet(&q), Partition::discrete(4));
        assert_eq!(p.join(&q), Partition::universal(4));
        assert!(Partition::discrete(4).refines(&p));
        assert!(!p.refines(&q));
    }

    #[test]
    fn restrict_reindexes() {
        let p = Partition::from_labels([0, 1, 0, 1]);
        assert_eq!(p.restrict(&[1, 2, 3]), Partition::from_labels([0, 1, 0]));
    }
}
