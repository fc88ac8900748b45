//! Vertex subsets backed by a fixed-width bitmask.

use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::graph::{GraphError, MAX_VERTICES};

/// A subset of the vertices `0..n` of a specific graph.
///
/// The universe size `n` travels with the set so that predicates can reject
/// sets built for a different graph.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: u128,
}

impl VertexSet {
    /// The empty subset of `0..n`.
    ///
    /// # Panics
    /// Panics if `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe {n} exceeds {MAX_VERTICES}");
        Self { n, bits: 0 }
    }

    /// The full subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "universe {n} exceeds {MAX_VERTICES}");
        let bits = if n == 128 {
            u128::MAX
        } else {
            (1u128 << n) - 1
        };
        Self { n, bits }
    }

    /// Builds a set from explicit indices, rejecting out-of-range members.
    pub fn from_indices<I>(n: usize, indices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(n);
        for v in indices {
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            set.bits |= 1u128 << v;
        }
        Ok(set)
    }

    pub(crate) fn from_mask(n: usize, bits: u128) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        debug_assert_eq!(bits & !mask_below(n), 0, "bits outside universe");
        Self { n, bits }
    }

    pub(crate) fn mask(&self) -> u128 {
        self.bits
    }

    /// Size of the universe this set lives in (the graph order).
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits & (1u128 << v) != 0
    }

    /// Adds a vertex.
    ///
    /// # Panics
    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside universe {}", self.n);
        self.bits |= 1u128 << v;
    }

    /// Returns a copy with `v` added.
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits &= !(1u128 << v);
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.n == other.n && self.bits & !other.bits == 0
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub(crate) fn mask_below(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub(crate) struct BitIter(pub(crate) u128);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet{}", self)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}
