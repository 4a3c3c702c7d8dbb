//! Subsets of poset elements as bit-vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard limit on poset size so that subsets fit in a single `u128`.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of the elements `0..n-1` of a poset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u128,
    n: usize,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        ElementSet { bits: 0, n }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        let bits = if n == 0 { 0 } else { u128::MAX >> (MAX_ELEMENTS - n) };
        ElementSet { bits, n }
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        debug_assert!(i < n);
        ElementSet { bits: 1u128 << i, n }
    }

    pub fn from_bits(n: usize, bits: u128) -> Self {
        debug_assert_eq!(bits & !Self::full(n).bits, 0);
        ElementSet { bits, n }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, iter: I) -> Self {
        let mut s = Self::empty(n);
        for i in iter {
            s.insert(i);
        }
        s
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn universe_len(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.n);
        self.bits |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.bits &= !(1u128 << i);
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        ElementSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn inter(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        ElementSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        ElementSet { bits: self.bits & !other.bits, n: self.n }
    }

    pub fn complement(&self) -> Self {
        ElementSet { bits: Self::full(self.n).bits & !self.bits, n: self.n }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&i| self.bits >> i & 1 == 1)
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An upward-closed subset of a poset. Only poset operations construct these,
/// so the closure invariant holds by construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Upset(pub(crate) ElementSet);

impl Upset {
    pub fn set(&self) -> &ElementSet {
        &self.0
    }

    pub fn bits(&self) -> u128 {
        self.0.bits()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.0.to_indices()
    }
}
