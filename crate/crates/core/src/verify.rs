//! Executable checks of structural results about double homology.
//!
//! A check whose hypotheses do not hold is skipped with a machine-readable reason rather
//! than passed vacuously. Every failure carries a witness sufficient to reproduce it.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bigraded::{entry_map, hh_table, hh_table_with, Bidegree, BigradedTable, EngineOptions, EntryDiff};
use crate::complex::{
    induced_cycles, is_p_neighborly, is_primitive_sphere, is_simplex_boundary, is_sphere_proxy,
    SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::linalg::{Field, FieldSpec};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Duality,
    TheoremA,
    FacetRemoval,
    Neighborliness,
    Rank2,
}

impl Check {
    pub const ALL: [Check; 5] =
        [Check::Duality, Check::TheoremA, Check::FacetRemoval, Check::Neighborliness, Check::Rank2];

    pub fn name(self) -> &'static str {
        match self {
            Check::Duality => "duality",
            Check::TheoremA => "theorem-a",
            Check::FacetRemoval => "facet-removal",
            Check::Neighborliness => "neighborliness",
            Check::Rank2 => "rank2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    NotASphere,
    PrimitiveSphere,
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SkipReason::NotASphere => "not-a-sphere",
            SkipReason::PrimitiveSphere => "primitive-sphere",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped(SkipReason),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail => f.write_str("fail"),
            Status::Skipped(r) => write!(f, "skipped ({r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Table { diffs: Vec<EntryDiff> },
    Facet { facet: Vec<usize>, rank_before: usize, rank_after: usize },
    Neighborliness { p: usize, p_neighborly: bool, entry: Bidegree, dim: usize },
    Rank { total: usize, simplex_boundary: bool },
    NoRankDrop { rank: usize, facets: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Table { diffs } => {
                let parts: Vec<String> = diffs.iter().map(|d| d.to_string()).collect();
                write!(f, "{}", parts.join("; "))
            }
            Witness::Facet { facet, rank_before, rank_after } => {
                write!(f, "removing {facet:?} takes rank {rank_before} to {rank_after}")
            }
            Witness::Neighborliness { p, p_neighborly, entry, dim } => {
                write!(f, "p = {p}: {p}-neighborly is {p_neighborly} but HH at {entry} has dim {dim}")
            }
            Witness::Rank { total, simplex_boundary } => {
                write!(f, "total rank {total}, simplex boundary: {simplex_boundary}")
            }
            Witness::NoRankDrop { rank, facets } => {
                write!(f, "none of the {facets} facets lowers rank {rank} by 2")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: Check,
    pub hash: String,
    pub field: FieldSpec,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(check: Check, k: &SimplicialComplex, field: FieldSpec, status: Status) -> Self {
        VerificationReport { check, hash: k.hash(), field, status, witness: None, notes: Vec::new() }
    }

    fn skipped(check: Check, k: &SimplicialComplex, field: FieldSpec, reason: SkipReason) -> Self {
        Self::new(check, k, field, Status::Skipped(reason))
    }

    fn verdict(check: Check, k: &SimplicialComplex, field: FieldSpec, witness: Option<Witness>) -> Self {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        VerificationReport { witness, ..Self::new(check, k, field, status) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<15} {:<8} {}", self.check.name(), self.field.to_string(), self.status)?;
        if let Some(w) = &self.witness {
            write!(f, ": {w}")?;
        }
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        Ok(())
    }
}

/// Image of `(k, 2l)` under `(k, 2l) ↦ (n - k + 1 - m, 2m - 2l)` for an `n`-sphere on `[m]`.
pub fn dual_bidegree(b: Bidegree, n: i32, m: usize) -> Option<Bidegree> {
    let l = m.checked_sub(b.l)?;
    Some(Bidegree::new(n as i64 - b.k + 1 - m as i64, l))
}

/// Bigraded Poincaré duality of HH for spheres.
pub fn check_duality<F: Field>(k: &SimplicialComplex, field: &F) -> Result<VerificationReport> {
    let (sphere, _) = is_sphere_proxy(k);
    if !sphere {
        return Ok(VerificationReport::skipped(Check::Duality, k, field.spec(), SkipReason::NotASphere));
    }
    Ok(duality_report(k, &hh_table(k, field)?))
}

/// As [`check_duality`] with a precomputed table; assumes `k` is a sphere.
pub fn duality_report(k: &SimplicialComplex, hh: &BigradedTable) -> VerificationReport {
    let n = k.dim();
    let m = k.m();
    let diffs: Vec<EntryDiff> = hh
        .iter()
        .filter_map(|(b, d)| {
            let other = dual_bidegree(b, n, m).map_or(0, |db| hh.get(db));
            (other != d).then_some(EntryDiff { bidegree: b, expected: other, actual: d })
        })
        .collect();
    let witness = (!diffs.is_empty()).then_some(Witness::Table { diffs });
    VerificationReport::verdict(Check::Duality, k, hh.field, witness)
}

/// HH of a non-primitive `n`-sphere on `[m]`: one class each at `(0,0)`, `(-1,4)`,
/// `(n-m+2, 2m-4)` and `(n-m+1, 2m)`, merged where bidegrees coincide.
pub fn theorem_a_expected(n: i32, m: usize) -> std::collections::BTreeMap<Bidegree, usize> {
    let (n, mi) = (n as i64, m as i64);
    entry_map(&[(0, 0, 1), (-1, 4, 1), (n - mi + 2, 2 * m - 4, 1), (n - mi + 1, 2 * m, 1)])
}

pub fn check_theorem_a<F: Field>(k: &SimplicialComplex, field: &F) -> Result<VerificationReport> {
    let spec = field.spec();
    match theorem_a_applies(k) {
        Some(reason) => Ok(VerificationReport::skipped(Check::TheoremA, k, spec, reason)),
        None => Ok(theorem_a_report(k, &hh_table(k, field)?)),
    }
}

fn theorem_a_applies(k: &SimplicialComplex) -> Option<SkipReason> {
    match is_primitive_sphere(k) {
        Err(_) => Some(SkipReason::NotASphere),
        Ok(true) => Some(SkipReason::PrimitiveSphere),
        Ok(false) => None,
    }
}

/// As [`check_theorem_a`] with a precomputed table; assumes `k` is a non-primitive sphere.
pub fn theorem_a_report(k: &SimplicialComplex, hh: &BigradedTable) -> VerificationReport {
    let diffs = hh.diff(&theorem_a_expected(k.dim(), k.m()));
    let witness = (!diffs.is_empty()).then_some(Witness::Table { diffs });
    VerificationReport::verdict(Check::TheoremA, k, hh.field, witness)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRemoval {
    pub facet: VertexSet,
    pub rank_before: usize,
    pub rank_after: usize,
    /// Some vertex of the facet is not adjacent to every other vertex.
    pub has_non_neighbor: bool,
}

impl FacetRemoval {
    pub fn delta(&self) -> i64 {
        self.rank_after as i64 - self.rank_before as i64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetRemovalScan {
    pub report: VerificationReport,
    pub rows: Vec<FacetRemoval>,
}

/// Total HH rank after deleting each facet in turn.
///
/// For a sphere the rank is unchanged by every deletion when `K` is neighborly, and
/// drops by exactly 2 for some facet otherwise. Any delta outside `{0, -2}` fails.
/// Whether the facets that drop are exactly those containing a vertex with a
/// non-neighbour is recorded in the notes only.
pub fn facet_removal_scan<F: Field>(k: &SimplicialComplex, field: &F) -> Result<FacetRemovalScan> {
    facet_removal_scan_with(k, field, &EngineOptions::default())
}

pub fn facet_removal_scan_with<F: Field>(
    k: &SimplicialComplex,
    field: &F,
    opts: &EngineOptions,
) -> Result<FacetRemovalScan> {
    let rank = |k: &SimplicialComplex| -> Result<usize> { Ok(hh_table_with(k, field, opts)?.total()) };
    let spec = field.spec();
    if !is_sphere_proxy(k).0 {
        let report = VerificationReport::skipped(Check::FacetRemoval, k, spec, SkipReason::NotASphere);
        return Ok(FacetRemovalScan { report, rows: Vec::new() });
    }
    let before = rank(k)?;
    let m = k.m();
    let rows: Vec<FacetRemoval> = k
        .facets()
        .par_iter()
        .map(|&sigma| {
            let after = rank(&k.remove_facet(sigma)?)?;
            let has_non_neighbor = sigma.iter().any(|x| k.neighbors(x).len() + 1 < m);
            Ok(FacetRemoval { facet: sigma, rank_before: before, rank_after: after, has_non_neighbor })
        })
        .collect::<Result<_>>()?;

    let facet_witness = |r: &FacetRemoval| Witness::Facet {
        facet: r.facet.labels(),
        rank_before: r.rank_before,
        rank_after: r.rank_after,
    };
    let neighborly = is_p_neighborly(k, 1);
    let witness = if let Some(r) = rows.iter().find(|r| r.delta() != 0 && r.delta() != -2) {
        Some(facet_witness(r))
    } else if neighborly {
        rows.iter().find(|r| r.delta() != 0).map(facet_witness)
    } else if !rows.iter().any(|r| r.delta() == -2) {
        Some(Witness::NoRankDrop { rank: before, facets: rows.len() })
    } else {
        None
    };
    let mut report = VerificationReport::verdict(Check::FacetRemoval, k, spec, witness);
    let drops = rows.iter().filter(|r| r.delta() == -2).count();
    let agree = rows.iter().filter(|r| (r.delta() == -2) == r.has_non_neighbor).count();
    report.notes.push(format!(
        "rank {before}; {drops} of {} facets lower it by 2; the drop matches \"facet has a vertex with a non-neighbour\" on {agree} of {} facets",
        rows.len(),
        rows.len()
    ));
    Ok(FacetRemovalScan { report, rows })
}

/// For each `p >= 1` with `K` `(p-1)`-neighborly: `K` is `p`-neighborly iff
/// `HH_{-1, 2p+2}` vanishes.
pub fn check_neighborliness_criterion<F: Field>(
    k: &SimplicialComplex,
    field: &F,
) -> Result<VerificationReport> {
    Ok(neighborliness_report(k, &hh_table(k, field)?))
}

pub fn neighborliness_report(k: &SimplicialComplex, hh: &BigradedTable) -> VerificationReport {
    let mut witness = None;
    let mut tested = Vec::new();
    let mut p = 1;
    while p < k.m() && is_p_neighborly(k, p - 1) {
        let entry = Bidegree::new(-1, p + 1);
        let dim = hh.get(entry);
        let p_neighborly = is_p_neighborly(k, p);
        tested.push(p);
        if p_neighborly != (dim == 0) {
            witness = Some(Witness::Neighborliness { p, p_neighborly, entry, dim });
            break;
        }
        p += 1;
    }
    let mut report = VerificationReport::verdict(Check::Neighborliness, k, hh.field, witness);
    report.notes.push(format!("tested p in {tested:?}"));
    report
}

/// Total rank 2 exactly for simplex boundaries.
pub fn check_rank2_characterization<F: Field>(
    k: &SimplicialComplex,
    field: &F,
) -> Result<VerificationReport> {
    if !is_sphere_proxy(k).0 {
        return Ok(VerificationReport::skipped(Check::Rank2, k, field.spec(), SkipReason::NotASphere));
    }
    Ok(rank2_report(k, &hh_table(k, field)?))
}

pub fn rank2_report(k: &SimplicialComplex, hh: &BigradedTable) -> VerificationReport {
    let total = hh.total();
    let simplex_boundary = is_simplex_boundary(k);
    let witness = ((total == 2) != simplex_boundary).then_some(Witness::Rank { total, simplex_boundary });
    VerificationReport::verdict(Check::Rank2, k, hh.field, witness)
}

/// Runs one check. Facet removal recomputes HH per facet; the others share `hh`.
pub fn run_check<F: Field>(
    check: Check,
    k: &SimplicialComplex,
    field: &F,
    hh: &BigradedTable,
) -> Result<VerificationReport> {
    let sphere = is_sphere_proxy(k).0;
    let skip = |reason| VerificationReport::skipped(check, k, field.spec(), reason);
    Ok(match check {
        Check::Duality if !sphere => skip(SkipReason::NotASphere),
        Check::Duality => duality_report(k, hh),
        Check::TheoremA => match theorem_a_applies(k) {
            Some(reason) => skip(reason),
            None => theorem_a_report(k, hh),
        },
        Check::FacetRemoval => facet_removal_scan(k, field)?.report,
        Check::Neighborliness => neighborliness_report(k, hh),
        Check::Rank2 if !sphere => skip(SkipReason::NotASphere),
        Check::Rank2 => rank2_report(k, hh),
    })
}

/// Induced cycles of a 2-sphere whose length is `1 mod 3`. Reporting only.
pub fn induced_cycle_scan(k: &SimplicialComplex) -> Result<Vec<VertexSet>> {
    if is_sphere_proxy(k) != (true, 2) {
        return Err(Error::NotASphere);
    }
    Ok(induced_cycles(k).into_iter().filter(|c| c.len() % 3 == 1).collect())
}
