use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::linalg::FieldSpec;

/// Bidegree `(k, 2l)` with `k <= 0`. Ordered by `l`, then `k`.
///
/// The regraded coordinate is `j = l + k`, so `(k, 2l)` and `(j, l)` determine each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub l: usize,
    pub k: i64,
}

impl Bidegree {
    pub fn new(k: i64, l: usize) -> Self {
        Bidegree { l, k }
    }

    /// From the pair as usually written, `(k, 2l)`. Panics on an odd second entry.
    pub fn from_pair(k: i64, two_l: usize) -> Self {
        assert!(two_l % 2 == 0, "second degree {two_l} is odd");
        Bidegree { l: two_l / 2, k }
    }

    pub fn from_jl(j: i64, l: usize) -> Self {
        Bidegree { l, k: j - l as i64 }
    }

    pub fn j(self) -> i64 {
        self.l as i64 + self.k
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, 2 * self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    Hochster,
    Ch,
    Hh,
}

/// A disagreement between two tables at one bidegree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDiff {
    pub bidegree: Bidegree,
    pub expected: usize,
    pub actual: usize,
}

impl fmt::Display for EntryDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, got {}", self.bidegree, self.expected, self.actual)
    }
}

/// Dimensions indexed by bidegree; zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigradedTable {
    pub kind: TableKind,
    pub m: usize,
    pub field: FieldSpec,
    pub hash: String,
    entries: BTreeMap<Bidegree, usize>,
}

impl BigradedTable {
    pub fn new(kind: TableKind, m: usize, field: FieldSpec, hash: impl Into<String>) -> Self {
        BigradedTable { kind, m, field, hash: hash.into(), entries: BTreeMap::new() }
    }

    /// Adds `dim` to the entry at `b`.
    pub fn add(&mut self, b: Bidegree, dim: usize) {
        if dim > 0 {
            *self.entries.entry(b).or_insert(0) += dim;
        }
    }

    pub fn with_entries(mut self, entries: impl IntoIterator<Item = (Bidegree, usize)>) -> Self {
        for (b, d) in entries {
            self.add(b, d);
        }
        self
    }

    pub fn get(&self, b: Bidegree) -> usize {
        self.entries.get(&b).copied().unwrap_or(0)
    }

    /// Entry at `(k, 2l)` written as a pair.
    pub fn at(&self, k: i64, two_l: usize) -> usize {
        self.get(Bidegree::from_pair(k, two_l))
    }

    pub fn entries(&self) -> &BTreeMap<Bidegree, usize> {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (Bidegree, usize)> + '_ {
        self.entries.iter().map(|(b, d)| (*b, *d))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total dimension.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// The same entries indexed by `(j, l)`.
    pub fn jl_view(&self) -> BTreeMap<(i64, usize), usize> {
        self.iter().map(|(b, d)| ((b.j(), b.l), d)).collect()
    }

    pub fn from_jl_view(
        kind: TableKind,
        m: usize,
        field: FieldSpec,
        hash: impl Into<String>,
        view: &BTreeMap<(i64, usize), usize>,
    ) -> Self {
        Self::new(kind, m, field, hash)
            .with_entries(view.iter().map(|((j, l), d)| (Bidegree::from_jl(*j, *l), *d)))
    }

    /// Tensor product of tables: bidegrees add and dimensions multiply.
    pub fn convolve(&self, other: &BigradedTable) -> BigradedTable {
        let mut out = BigradedTable::new(self.kind, self.m + other.m, self.field, String::new());
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add(Bidegree { l: a.l + b.l, k: a.k + b.k }, x * y);
            }
        }
        out
    }

    /// Bidegrees where `self` (actual) and `expected` differ.
    pub fn diff(&self, expected: &BTreeMap<Bidegree, usize>) -> Vec<EntryDiff> {
        let mut keys: Vec<Bidegree> = self.entries.keys().chain(expected.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|b| {
                let e = expected.get(&b).copied().unwrap_or(0);
                let a = self.get(b);
                (a != e).then_some(EntryDiff { bidegree: b, expected: e, actual: a })
            })
            .collect()
    }

    pub fn same_entries(&self, other: &BigradedTable) -> bool {
        self.entries == other.entries
    }
}

/// Builds an entry map from `(k, 2l, dim)` triples, merging repeated bidegrees.
pub fn entry_map(triples: &[(i64, usize, usize)]) -> BTreeMap<Bidegree, usize> {
    let mut out = BTreeMap::new();
    for &(k, two_l, d) in triples {
        if d > 0 {
            *out.entry(Bidegree::from_pair(k, two_l)).or_insert(0) += d;
        }
    }
    out
}

impl fmt::Display for BigradedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            TableKind::Hochster => "Hochster",
            TableKind::Ch => "CH",
            TableKind::Hh => "HH",
        };
        writeln!(f, "{kind} over {} (total {})", self.field, self.total())?;
        writeln!(f, "  {:>10}  {:>4}  {:>4}  {:>6}", "(k,2l)", "j", "l", "dim")?;
        for (b, d) in self.iter() {
            writeln!(f, "  {:>10}  {:>4}  {:>4}  {:>6}", b.to_string(), b.j(), b.l, d)?;
        }
        Ok(())
    }
}
