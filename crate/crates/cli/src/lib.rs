//! Command-line front end for `dblhom-core`: facet-list I/O, JSON result documents, a
//! result cache, verification reports and batch searches.

pub mod args;
pub mod cache;
mod commands;
pub mod document;
pub mod format;

use std::io::{self, Read};
use std::path::{Path, PathBuf};

use dblhom_core::bigraded::{EngineOptions, DEFAULT_MAX_M};
use dblhom_core::{Error as CoreError, SimplicialComplex};

pub use args::Cli;
pub use commands::run;
pub use document::ResultDocument;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("{}: {message}", path.display())]
    Parse { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0} check(s) failed")]
    VerificationFailed(usize),
}

impl CliError {
    /// 1 for I/O and input errors, 2 for resource caps, 3 for failed verification.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::CapExceeded { .. } | CoreError::TooManyVertices { .. }) => 2,
            CliError::VerificationFailed(_) => 3,
            _ => 1,
        }
    }
}

/// Worker pool and engine limits shared by all subcommands.
pub struct Context {
    pool: rayon::ThreadPool,
    pub opts: EngineOptions,
}

impl Context {
    pub fn new(jobs: Option<usize>, max_m: Option<usize>) -> Result<Context, CliError> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.unwrap_or(0))
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        let max_m = match max_m {
            Some(v) if v != DEFAULT_MAX_M => {
                log::warn!("vertex cap set to {v} (default {DEFAULT_MAX_M}); work and memory grow as 2^m");
                v
            }
            _ => DEFAULT_MAX_M,
        };
        Ok(Context { pool, opts: EngineOptions { max_m } })
    }

    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        self.pool.install(f)
    }
}

/// Reads a facet list from `path`, or from stdin when it is absent or `-`.
pub fn read_complex(path: Option<&Path>) -> Result<SimplicialComplex, CliError> {
    let (label, text) = match path {
        Some(p) if p != Path::new("-") => {
            let text = std::fs::read_to_string(p).map_err(|source| CliError::Read { path: p.into(), source })?;
            (p.to_path_buf(), text)
        }
        _ => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|source| CliError::Read { path: "<stdin>".into(), source })?;
            (PathBuf::from("<stdin>"), text)
        }
    };
    format::parse_complex(&text).map_err(|e| match e {
        format::ParseError::Complex(c @ CoreError::TooManyVertices { .. }) => CliError::Core(c),
        other => CliError::Parse { path: label, message: other.to_string() },
    })
}
