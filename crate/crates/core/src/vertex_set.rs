use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the vertices `0..n` of some graph, stored as a dense bitset.
///
/// Two sets are only comparable when they share the same universe size; the
/// binary operations panic otherwise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from vertex indices. Panics if an index is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        Self::from_vertices(n, [v])
    }

    /// Size of the universe `0..n`.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    /// Inserts `v`, returning true if it was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe(),
            "vertex {v} outside universe of size {}",
            self.universe()
        );
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.contains(v);
        self.bits.set(v, false);
        present
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        VertexSet {
            bits: &self.bits | &other.bits,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        VertexSet {
            bits: &self.bits & &other.bits,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet { bits }
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check(other);
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check(other);
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.bits.is_disjoint(&other.bits)
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "vertex sets over different universes"
        );
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Formats as `[0,2,5]`, the form used in reports and on the command line.
impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_vertices(6, [0, 1, 2]);
        let b = VertexSet::from_vertices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.complement().to_vec(), vec![3, 4, 5]);
        assert!(VertexSet::from_vertices(6, [1]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(a.to_string(), "[0,1,2]");
        assert_eq!(VertexSet::empty(0).to_string(), "[]");
    }

    #[test]
    fn full_and_empty() {
        assert!(VertexSet::full(5).is_full());
        assert_eq!(VertexSet::full(5).len(), 5);
        assert!(VertexSet::empty(5).is_empty());
        assert!(VertexSet::full(0).is_empty());
    }

    #[test]
    #[should_panic]
    fn insert_out_of_range_panics() {
        VertexSet::empty(3).insert(3);
    }
}
