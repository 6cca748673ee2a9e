use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::GroupElement;
use crate::error::{Error, Result};

/// A finite subset of Z_n x Z_n, kept in canonical lexicographic order.
///
/// The sorted, deduplicated element list is the canonical representation:
/// equality, hashing, ordering and serialization all read it directly, so two
/// sets built from the same points in any order compare equal and print
/// identically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PointSet {
    n: u32,
    elems: Vec<GroupElement>,
}

impl PointSet {
    /// The empty subset of Z_n x Z_n.
    pub fn empty(n: u32) -> Self {
        assert!(n >= 2, "modulus must be at least 2, got {n}");
        PointSet { n, elems: Vec::new() }
    }

    /// Builds a set from coordinate pairs, reducing mod `n` and deduplicating.
    pub fn from_pairs<I>(n: u32, pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let elems: BTreeSet<GroupElement> = pairs
            .into_iter()
            .map(|(x1, x2)| GroupElement::new(n, x1, x2))
            .collect();
        PointSet {
            n,
            elems: elems.into_iter().collect(),
        }
    }

    /// Builds a set from existing elements; all must share the modulus `n`.
    pub fn from_elements(n: u32, elements: impl IntoIterator<Item = GroupElement>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for e in elements {
            if e.modulus() != n {
                return Err(Error::ModulusMismatch {
                    left: n,
                    right: e.modulus(),
                });
            }
            set.insert(e);
        }
        Ok(PointSet {
            n,
            elems: set.into_iter().collect(),
        })
    }

    /// The full group Z_n x Z_n.
    pub fn full(n: u32) -> Self {
        assert!(n >= 2, "modulus must be at least 2, got {n}");
        let mut elems = Vec::with_capacity((n * n) as usize);
        for x1 in 0..n {
            for x2 in 0..n {
                elems.push(GroupElement::new(n, i64::from(x1), i64::from(x2)));
            }
        }
        PointSet { n, elems }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: GroupElement) -> bool {
        e.modulus() == self.n && self.elems.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, GroupElement> {
        self.elems.iter()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elems
    }

    /// Translate of the set: `{ a + t : a in self }`.
    pub fn translate(&self, t: GroupElement) -> Self {
        assert_eq!(self.n, t.modulus(), "modulus mismatch in translate");
        let elems: BTreeSet<GroupElement> = self.elems.iter().map(|&a| a + t).collect();
        PointSet {
            n: self.n,
            elems: elems.into_iter().collect(),
        }
    }

    /// Pointwise negation of the set.
    pub fn negated(&self) -> Self {
        let elems: BTreeSet<GroupElement> = self.elems.iter().map(|&a| -a).collect();
        PointSet {
            n: self.n,
            elems: elems.into_iter().collect(),
        }
    }

    /// Complement within the full group Z_n x Z_n.
    pub fn complement(&self) -> Self {
        let mut elems = Vec::with_capacity((self.n * self.n) as usize - self.elems.len());
        for x1 in 0..self.n {
            for x2 in 0..self.n {
                let e = GroupElement::new(self.n, i64::from(x1), i64::from(x2));
                if !self.contains(e) {
                    elems.push(e);
                }
            }
        }
        PointSet { n: self.n, elems }
    }

    pub fn union(&self, other: &PointSet) -> Result<Self> {
        self.check_modulus(other)?;
        let mut set: BTreeSet<GroupElement> = self.elems.iter().copied().collect();
        set.extend(other.elems.iter().copied());
        Ok(PointSet {
            n: self.n,
            elems: set.into_iter().collect(),
        })
    }

    pub fn intersection(&self, other: &PointSet) -> Result<Self> {
        self.check_modulus(other)?;
        let elems = self
            .elems
            .iter()
            .copied()
            .filter(|&e| other.contains(e))
            .collect();
        Ok(PointSet { n: self.n, elems })
    }

    pub fn is_disjoint(&self, other: &PointSet) -> Result<bool> {
        self.check_modulus(other)?;
        Ok(!self.elems.iter().any(|&e| other.contains(e)))
    }

    /// True when the set contains every difference of its own elements, i.e.
    /// it carries a subgroup. Empty sets are rejected by convention.
    pub fn is_subgroup_carrier(&self) -> bool {
        if self.is_empty() || !self.contains(GroupElement::zero(self.n)) {
            return false;
        }
        self.elems
            .iter()
            .all(|&a| self.elems.iter().all(|&b| self.contains(a - b)))
    }

    fn check_modulus(&self, other: &PointSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub(crate) fn from_indices(n: u32, indices: impl IntoIterator<Item = usize>) -> Self {
        let elems: BTreeSet<GroupElement> = indices
            .into_iter()
            .map(|idx| GroupElement::from_index(n, idx))
            .collect();
        PointSet {
            n,
            elems: elems.into_iter().collect(),
        }
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PointSet", 2)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("points", &self.elems)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_and_dedup() {
        let a = PointSet::from_pairs(4, [(3, 3), (0, 0), (3, 3), (1, 2)]);
        let b = PointSet::from_pairs(4, [(1, 2), (3, 3), (0, 0)]);
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        let coords: Vec<(u32, u32)> = a.iter().map(|e| (e.x1(), e.x2())).collect();
        assert_eq!(coords, vec![(0, 0), (1, 2), (3, 3)]);
    }

    #[test]
    fn from_elements_rejects_mixed_moduli() {
        let err = PointSet::from_elements(4, [GroupElement::new(5, 1, 1)]);
        assert!(matches!(err, Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn complement_partitions_the_group() {
        let a = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
        let c = a.complement();
        assert_eq!(a.len() + c.len(), 16);
        assert!(a.is_disjoint(&c).unwrap());
        assert_eq!(a.union(&c).unwrap(), PointSet::full(4));
    }

    #[test]
    fn translate_keeps_cardinality() {
        let a = PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]);
        let t = GroupElement::new(4, 1, 2);
        assert_eq!(a.translate(t).len(), a.len());
    }

    #[test]
    fn subgroup_carrier_detection() {
        let h = PointSet::from_pairs(4, [(0, 0), (2, 0), (0, 2), (2, 2)]);
        assert!(h.is_subgroup_carrier());
        let a = PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]);
        assert!(!a.is_subgroup_carrier());
        assert!(!PointSet::empty(4).is_subgroup_carrier());
    }

    #[test]
    fn index_construction_is_canonical() {
        let a = PointSet::from_indices(4, [5, 0, 5, 15]);
        assert_eq!(a, PointSet::from_pairs(4, [(1, 1), (0, 0), (3, 3)]));
    }
}
