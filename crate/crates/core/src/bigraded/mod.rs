//! Hochster tables, the cochain complexes `CH_j^*` and double homology.

mod engine;
mod stratum;
mod table;

pub use engine::{
    compute, BettiEntry, EngineOptions, HhSummary, PhaseTimings, RankEntry, DEFAULT_MAX_M,
};
pub use stratum::{build_ch_stratum, ChStratum};
pub use table::{entry_map, Bidegree, BigradedTable, EntryDiff, TableKind};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::betti_profile;
use crate::linalg::Field;
use crate::vertex_set::VertexSet;

/// `ε(J, x) = (-1)^{#{y ∈ J : y < x}}`.
pub fn epsilon(subset: VertexSet, x: usize) -> Result<i8> {
    if subset.contains(x) {
        return Err(Error::VertexInSet { vertex: x + 1, set: subset });
    }
    Ok(if subset.count_below(x) % 2 == 0 { 1 } else { -1 })
}

/// Entry `(k, 2l)` is `Σ_{|J| = l} dim H̃_{l+k-1}(K_J)`.
pub fn hochster_table<F: Field>(k: &SimplicialComplex, field: &F) -> Result<BigradedTable> {
    let profile = betti_profile(k, field, DEFAULT_MAX_M)?;
    Ok(BigradedTable::new(TableKind::Hochster, k.m(), field.spec(), k.hash()).with_entries(
        profile
            .into_iter()
            .map(|((j, p), dim)| (Bidegree::from_jl(p as i64 + 1, j.len()), dim)),
    ))
}

pub fn hh_table<F: Field>(k: &SimplicialComplex, field: &F) -> Result<BigradedTable> {
    hh_table_with(k, field, &EngineOptions::default())
}

pub fn hh_table_with<F: Field>(
    k: &SimplicialComplex,
    field: &F,
    opts: &EngineOptions,
) -> Result<BigradedTable> {
    Ok(compute(k, field, opts)?.0.hh())
}

pub fn hh_total_rank<F: Field>(k: &SimplicialComplex, field: &F) -> Result<usize> {
    Ok(hh_table(k, field)?.total())
}
