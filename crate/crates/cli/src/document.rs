//! The JSON result document.

use std::fmt::Write as _;

use dblhom_core::bigraded::{HhSummary, PhaseTimings};
use dblhom_core::{Bidegree, BigradedTable, FieldSpec, SimplicialComplex};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexInfo {
    pub m: usize,
    pub dim: i32,
    pub facet_count: usize,
    pub hash: String,
}

/// One table entry at bidegree `(k, 2l)`; `k <= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub k: i64,
    pub l: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timings {
    pub homology_ms: f64,
    pub differentials_ms: f64,
    pub ranks_ms: f64,
    pub cache_hit: bool,
}

impl Timings {
    pub fn new(t: &PhaseTimings, cache_hit: bool) -> Self {
        let ms = |d: std::time::Duration| d.as_secs_f64() * 1e3;
        Timings {
            homology_ms: ms(t.homology),
            differentials_ms: ms(t.differentials),
            ranks_ms: ms(t.ranks),
            cache_hit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub schema_version: u32,
    pub complex: ComplexInfo,
    pub field: FieldSpec,
    pub hochster: Vec<Entry>,
    pub hh: Vec<Entry>,
    pub hh_total_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

fn entries(t: &BigradedTable) -> Vec<Entry> {
    t.iter().map(|(b, dim)| Entry { k: b.k, l: b.l, dim }).collect()
}

impl ResultDocument {
    pub fn new(k: &SimplicialComplex, summary: &HhSummary) -> Self {
        let hh = summary.hh();
        ResultDocument {
            schema_version: SCHEMA_VERSION,
            complex: ComplexInfo { m: k.m(), dim: k.dim(), facet_count: k.facets().len(), hash: k.hash() },
            field: summary.field,
            hochster: entries(&summary.hochster()),
            hh_total_rank: hh.total(),
            hh: entries(&hh),
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn hh_table(&self) -> BigradedTable {
        self.table(dblhom_core::TableKind::Hh, &self.hh)
    }

    pub fn hochster_table(&self) -> BigradedTable {
        self.table(dblhom_core::TableKind::Hochster, &self.hochster)
    }

    fn table(&self, kind: dblhom_core::TableKind, e: &[Entry]) -> BigradedTable {
        BigradedTable::new(kind, self.complex.m, self.field, self.complex.hash.clone())
            .with_entries(e.iter().map(|e| (Bidegree::new(e.k, e.l), e.dim)))
    }

    pub fn to_table(&self) -> String {
        let c = &self.complex;
        let mut s = String::new();
        writeln!(s, "complex: m = {}, dim = {}, {} facets, hash {}", c.m, c.dim, c.facet_count, c.hash).unwrap();
        writeln!(s).unwrap();
        write!(s, "{}", self.hochster_table()).unwrap();
        writeln!(s).unwrap();
        write!(s, "{}", self.hh_table()).unwrap();
        writeln!(s, "\nrank HH = {}", self.hh_total_rank).unwrap();
        if let Some(t) = &self.timings {
            writeln!(
                s,
                "timings: homology {:.1} ms, differentials {:.1} ms, ranks {:.1} ms{}",
                t.homology_ms,
                t.differentials_ms,
                t.ranks_ms,
                if t.cache_hit { " (cached)" } else { "" }
            )
            .unwrap();
        }
        s
    }
}
