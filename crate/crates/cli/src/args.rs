use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dblhom_core::FieldSpec;

#[derive(Debug, Parser)]
#[command(name = "dblhom", version, about = "Bigraded double homology of moment-angle complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads; defaults to the number of cores
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    pub jobs: Option<u16>,

    /// Largest vertex count accepted by the engine
    #[arg(long, global = true)]
    pub max_m: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated complex as a facet list
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Compute the Hochster and double homology tables
    Hh(HhArgs),
    /// Check structural theorems against computed double homology
    Verify(VerifyArgs),
    /// Compute ranks over a family of complexes
    Search(SearchArgs),
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// The m-gon
    Cycle { m: usize },
    /// Boundary of the n-simplex, on n + 1 vertices
    SimplexBoundary { n: usize },
    Octahedron,
    Icosahedron,
    /// Bicapped n-gonal h-antiprism
    BicappedAntiprism { n: usize, h: usize },
    Join { a: PathBuf, b: PathBuf },
    /// Connected sum along two facets. Labels are paired in the order given, so an
    /// ascending pair of lists is the order-preserving identification. Defaults to the
    /// first facet of each complex.
    ConnectedSum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        facet1: Option<String>,
        #[arg(long)]
        facet2: Option<String>,
    },
    RemoveFacet {
        input: PathBuf,
        #[arg(long)]
        facet: String,
    },
    AddFace {
        input: PathBuf,
        #[arg(long)]
        face: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CoeffArgs {
    /// Coefficient field: gf2, gfp:<prime> or q
    #[arg(long, global = true, default_value = "gf2")]
    pub coeff: FieldSpec,

    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct HhArgs {
    /// Facet list file; stdin when omitted or `-`
    pub input: Option<PathBuf>,

    #[command(flatten)]
    pub coeff: CoeffArgs,

    /// Directory for cached results
    #[arg(long)]
    pub cache: Option<PathBuf>,

    /// Include wall-clock phase timings in the output
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckArg {
    One(dblhom_core::verify::Check),
    All,
}

impl FromStr for CheckArg {
    type Err = dblhom_core::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(CheckArg::All)
        } else {
            s.parse().map(CheckArg::One)
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: Option<PathBuf>,

    /// duality, theorem-a, facet-removal, neighborliness, rank2 or all
    #[arg(long, default_value = "all")]
    pub check: CheckArg,

    #[command(flatten)]
    pub coeff: CoeffArgs,
}

/// Inclusive integer range written `a..b`, `a..=b` or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for IntRange {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range `{s}`"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(IntRange { lo, hi })
    }
}

impl IntRange {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(subcommand)]
    pub family: Family,

    #[command(flatten)]
    pub coeff: CoeffArgs,

    /// Write facet files of complexes whose rank is not a power of 2 into this directory
    #[arg(long, global = true)]
    pub emit_exotic: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    BicappedAntiprism {
        #[arg(long, default_value = "4..8")]
        n: IntRange,
        #[arg(long, default_value = "1")]
        h: IntRange,
    },
    /// Every complex obtained by deleting one facet
    FacetDeletions { input: PathBuf },
    /// Every connected sum over a pair of facets, order-preserving
    ConnectedSums { a: PathBuf, b: PathBuf },
}
