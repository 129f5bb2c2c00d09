//! Level-by-level computation of the double homology ranks.
//!
//! Subsets are processed by cardinality `l`. Only the homology bases of levels `l` and
//! `l + 1` are alive at any time; the differential `d^l` between them is assembled for
//! every homological degree at once and reduced to its rank. Pivot rows of `d^{l-1}` mark
//! columns of `d^l` that are known to reduce to zero, and those columns are never built.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::{subset_homology, FaceIndex, SubsetHomology};
use crate::linalg::sparse::{rank_with_pivots, SparseVec};
use crate::linalg::{Field, FieldSpec};
use crate::vertex_set::{subsets_of_size, VertexSet};

use super::table::{Bidegree, BigradedTable, TableKind};

pub const DEFAULT_MAX_M: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    pub max_m: usize,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { max_m: DEFAULT_MAX_M }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTimings {
    pub homology: Duration,
    pub differentials: Duration,
    pub ranks: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub subset: VertexSet,
    pub degree: i32,
    pub dim: usize,
}

/// Rank of `d^level` on the stratum `j = degree + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEntry {
    pub degree: i32,
    pub level: usize,
    pub rank: usize,
}

/// Everything needed to rebuild the Hochster and HH tables: the nonzero reduced Betti
/// numbers of all full subcomplexes and the nonzero differential ranks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HhSummary {
    pub m: usize,
    pub field: FieldSpec,
    pub hash: String,
    pub betti: Vec<BettiEntry>,
    pub ranks: Vec<RankEntry>,
}

impl HhSummary {
    /// `dim CH` keyed by `(degree, level)`.
    pub fn ch_dims(&self) -> BTreeMap<(i32, usize), usize> {
        let mut out = BTreeMap::new();
        for b in &self.betti {
            *out.entry((b.degree, b.subset.len())).or_insert(0) += b.dim;
        }
        out
    }

    pub fn rank(&self, degree: i32, level: usize) -> usize {
        self.ranks.iter().find(|r| r.degree == degree && r.level == level).map_or(0, |r| r.rank)
    }

    fn bidegree(degree: i32, level: usize) -> Bidegree {
        Bidegree::from_jl(degree as i64 + 1, level)
    }

    pub fn hochster(&self) -> BigradedTable {
        BigradedTable::new(TableKind::Hochster, self.m, self.field, self.hash.clone()).with_entries(
            self.betti.iter().map(|b| (Self::bidegree(b.degree, b.subset.len()), b.dim)),
        )
    }

    pub fn hh(&self) -> BigradedTable {
        let ranks: BTreeMap<(i32, usize), usize> =
            self.ranks.iter().map(|r| ((r.degree, r.level), r.rank)).collect();
        let rank = |p: i32, l: usize| ranks.get(&(p, l)).copied().unwrap_or(0);
        let entries = self.ch_dims().into_iter().map(|((p, l), dim)| {
            let before = if l == 0 { 0 } else { rank(p, l - 1) };
            (Self::bidegree(p, l), dim - rank(p, l) - before)
        });
        BigradedTable::new(TableKind::Hh, self.m, self.field, self.hash.clone()).with_entries(entries)
    }
}

struct Level<F: Field> {
    subsets: Vec<SubsetHomology<F>>,
    /// `offsets[d][i]`: first generator index of `subsets[i]` in degree `d - 1`.
    offsets: Vec<Vec<usize>>,
    totals: Vec<usize>,
}

impl<F: Field> Level<F> {
    fn new(subsets: Vec<SubsetHomology<F>>, degrees: usize) -> Self {
        let mut offsets = vec![Vec::with_capacity(subsets.len()); degrees];
        let mut totals = vec![0; degrees];
        for h in &subsets {
            for d in 0..degrees {
                offsets[d].push(totals[d]);
                totals[d] += h.basis(d as i32 - 1).map_or(0, |b| b.dim());
            }
        }
        Level { subsets, offsets, totals }
    }

    fn find(&self, subset: VertexSet) -> Option<usize> {
        self.subsets.binary_search_by_key(&subset.bits(), |h| h.subset.bits()).ok()
    }
}

fn record<F: Field>(level: &Level<F>, out: &mut Vec<BettiEntry>) {
    for h in &level.subsets {
        for b in h.bases() {
            out.push(BettiEntry { subset: h.subset, degree: b.degree(), dim: b.dim() });
        }
    }
}

/// Columns of `d^l` in degree `d - 1` for one source subset, skipping cleared ones.
fn columns_for<F: Field>(
    field: &F,
    m: usize,
    src: &SubsetHomology<F>,
    first: usize,
    cleared: &[bool],
    next: &Level<F>,
    d: usize,
) -> Vec<SparseVec<F::Elem>> {
    let degree = d as i32 - 1;
    let Some(basis) = src.basis(degree) else {
        return Vec::new();
    };
    let j = src.subset;
    let mut targets = Vec::new();
    for x in (0..m).filter(|x| !j.contains(*x)) {
        if let Some(i) = next.find(j.with(x)) {
            if let Some(dst) = next.subsets[i].basis(degree) {
                targets.push((dst, next.offsets[d][i], j.count_below(x) % 2 == 1));
            }
        }
    }
    let mut out = Vec::with_capacity(basis.dim());
    for (r, rep) in basis.representatives().iter().enumerate() {
        if cleared.get(first + r).copied().unwrap_or(false) {
            continue;
        }
        let mut col = Vec::new();
        for (dst, offset, negative) in &targets {
            let coords = dst.decompose_sparse(rep).expect("a cycle of K_J is a cycle of K_{J+x}");
            for (i, v) in coords {
                let v = if *negative { field.neg(&v) } else { v };
                col.push((*offset as u64 + i, v));
            }
        }
        out.push(col);
    }
    out
}

/// Runs the full computation.
pub fn compute<F: Field>(
    k: &SimplicialComplex,
    field: &F,
    opts: &EngineOptions,
) -> Result<(HhSummary, PhaseTimings)> {
    let m = k.m();
    if m > opts.max_m {
        return Err(Error::CapExceeded { m, cap: opts.max_m });
    }
    let faces = FaceIndex::new(k);
    let degrees = (k.dim() + 2) as usize;
    let mut timings = PhaseTimings::default();
    let mut betti = Vec::new();
    let mut ranks = Vec::new();

    let clock = Instant::now();
    let mut current = Level::new(vec![subset_homology(field, &faces, VertexSet::EMPTY, None)], degrees);
    timings.homology += clock.elapsed();
    record(&current, &mut betti);
    let mut cleared: Vec<Vec<bool>> = vec![Vec::new(); degrees];

    for l in 0..m {
        let clock = Instant::now();
        let candidates: Vec<VertexSet> = subsets_of_size(m, l + 1).collect();
        let next: Vec<SubsetHomology<F>> = candidates
            .par_iter()
            .map(|&j| subset_homology(field, &faces, j, None))
            .filter(|h| !h.is_trivial())
            .collect();
        let next = Level::new(next, degrees);
        timings.homology += clock.elapsed();
        record(&next, &mut betti);

        let clock = Instant::now();
        let columns: Vec<Vec<SparseVec<F::Elem>>> = (0..degrees)
            .map(|d| {
                if current.totals[d] == 0 || next.totals[d] == 0 {
                    return Vec::new();
                }
                let per_subset: Vec<Vec<SparseVec<F::Elem>>> = current
                    .subsets
                    .par_iter()
                    .enumerate()
                    .map(|(i, h)| {
                        columns_for(field, m, h, current.offsets[d][i], &cleared[d], &next, d)
                    })
                    .collect();
                per_subset.into_iter().flatten().collect()
            })
            .collect();
        timings.differentials += clock.elapsed();

        let clock = Instant::now();
        let reduced: Vec<(usize, Vec<u64>)> =
            columns.into_par_iter().map(|cols| rank_with_pivots(field, cols)).collect();
        timings.ranks += clock.elapsed();

        for (d, (rank, pivots)) in reduced.into_iter().enumerate() {
            if rank > 0 {
                ranks.push(RankEntry { degree: d as i32 - 1, level: l, rank });
            }
            let mut flags = vec![false; next.totals[d]];
            for p in pivots {
                flags[p as usize] = true;
            }
            cleared[d] = flags;
        }
        current = next;
    }

    let summary = HhSummary { m, field: field.spec(), hash: k.hash(), betti, ranks };
    Ok((summary, timings))
}
