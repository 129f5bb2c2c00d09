//! Double homology of moment-angle complexes, computed from the full subcomplexes of a
//! simplicial complex.
//!
//! The moment-angle complex itself is never built. Everything is derived from the
//! reduced homology of the full subcomplexes `K_J` and the maps induced by the
//! inclusions `K_J ⊆ K_{J ∪ x}`.

pub mod bigraded;
pub mod complex;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod verify;
mod vertex_set;

pub use bigraded::{hh_table, hh_total_rank, hochster_table, Bidegree, BigradedTable, TableKind};
pub use complex::{FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use linalg::{Field, FieldSpec, Gf2, Gfp, Rationals};
pub use vertex_set::{subsets_of_size, VertexSet, MAX_VERTICES};
