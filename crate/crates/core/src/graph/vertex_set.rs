use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::GraphError;
use crate::bits::Bits;

/// A subset of `0..n` with its cardinality cached.
///
/// Ordering is lexicographic on the ascending member lists, which is the
/// canonical enumeration order for dominating sets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Bits,
    len: usize,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: Bits::new(n),
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            n,
            bits: Bits::full(n),
            len: n,
        }
    }

    pub fn from_members<I>(n: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(n);
        for v in members {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Returns `true` if `v` was newly inserted. Panics if `v >= n`.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        if self.bits.contains(v) {
            return false;
        }
        self.bits.insert(v);
        self.len += 1;
        true
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n || !self.bits.contains(v) {
            return false;
        }
        self.bits.remove(v);
        self.len -= 1;
        true
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits.contains(v)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Number of members among `vs`.
    pub fn count_in(&self, vs: &[usize]) -> usize {
        vs.iter().filter(|&&v| self.contains(v)).count()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.n.cmp(&other.n))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
