use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest supported vertex count. One machine word per vertex set.
pub const MAX_VERTICES: usize = 63;

/// A subset of the vertex labels `0..m` packed into a single word.
///
/// Vertex `i` (0-based) is bit `i`. All I/O converts to 1-based labels; inside the
/// library everything is 0-based. The derived ordering is the numeric order of the
/// bitmask, which is the order used for facets, chain bases and subset blocks.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full set `{0, .., m-1}`.
    #[inline]
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_VERTICES);
        if m == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - m))
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut bits = 0u64;
        for v in vs {
            debug_assert!(v < MAX_VERTICES);
            bits |= 1 << v;
        }
        VertexSet(bits)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    /// Number of elements strictly below `v`.
    #[inline]
    pub const fn count_below(self, v: usize) -> usize {
        (self.0 & ((1u64 << v) - 1)).count_ones() as usize
    }

    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending vertex indices.
    #[inline]
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// Shift every vertex up by `offset`.
    pub fn shifted(self, offset: usize) -> VertexSet {
        debug_assert!(self.max().map_or(true, |v| v + offset < MAX_VERTICES));
        VertexSet(self.0 << offset)
    }

    /// All subsets of `self`, in increasing numeric order.
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, next: Some(0) }
    }

    /// 1-based labels, ascending.
    pub fn labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v + 1)).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;
    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration, ascending.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

/// All `k`-subsets of `{0, .., m-1}` in increasing numeric order (Gosper's hack).
pub fn subsets_of_size(m: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = if m == 64 { u64::MAX } else { 1u64 << m };
    let first = if k == 0 {
        Some(0u64)
    } else if k > m {
        None
    } else {
        Some(u64::MAX >> (64 - k))
    };
    std::iter::successors(first, move |&x| {
        if x == 0 {
            return None;
        }
        let c = x & x.wrapping_neg();
        let r = x + c;
        let next = (((r ^ x) >> 2) / c) | r;
        (next < limit && r != 0).then_some(next)
    })
    .filter(move |&x| x < limit)
    .map(VertexSet)
}
