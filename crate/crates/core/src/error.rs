use thiserror::Error;

use crate::VertexSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {m} exceeds the supported maximum of {max}")]
    TooManyVertices { m: usize, max: usize },
    #[error("vertex {vertex} is outside the vertex range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },
    #[error("vertex {vertex} does not appear in any facet")]
    GhostVertex { vertex: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(VertexSet),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(VertexSet),
    #[error("{0} is already a face of the complex")]
    AlreadyAFace(VertexSet),
    #[error("the boundary of {0} is not contained in the complex")]
    BoundaryMissing(VertexSet),
    #[error("vertex {vertex} belongs to {set}")]
    VertexInSet { vertex: usize, set: VertexSet },
    #[error("gluing faces have different sizes ({0} vs {1})")]
    GluingMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime or is out of range for GF(p)")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("complex has {m} vertices, above the configured cap of {cap}")]
    CapExceeded { m: usize, cap: usize },
    #[error("complex does not pass the sphere check")]
    NotASphere,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
