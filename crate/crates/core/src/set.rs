//! Bitmask sets of elements.

use std::cmp::Ordering;
use std::fmt;

use crate::algebra::ElementId;

/// A subset of an algebra's carrier, one bit per element (bit `i` is element `i`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All elements of an algebra of the given order.
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= 64);
        if order == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << order) - 1)
        }
    }

    pub fn singleton(e: ElementId) -> Self {
        ElementSet(1u64 << e.index())
    }

    pub fn contains(self, e: ElementId) -> bool {
        self.0 >> e.index() & 1 == 1
    }

    pub fn insert(&mut self, e: ElementId) -> bool {
        let fresh = !self.contains(e);
        self.0 |= 1u64 << e.index();
        fresh
    }

    pub fn with(self, e: ElementId) -> Self {
        ElementSet(self.0 | 1u64 << e.index())
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Canonical ordering: cardinality first, then the bitmask read as an
    /// integer (element 0 least significant).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.iter().map(|e| e.index()))
            .finish()
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<T: IntoIterator<Item = ElementId>>(iter: T) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = ElementId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterates members in increasing index order.
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(ElementId::new(i as usize))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}
