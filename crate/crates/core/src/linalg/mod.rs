//! Exact linear algebra over `GF(2)`, `GF(p)` and `Q`.

pub mod bitmatrix;
pub mod dense;
pub mod field;
pub mod sparse;

pub use bitmatrix::BitMatrix;
pub use dense::{ColumnReduction, Matrix};
pub use field::{Field, FieldSpec, Gf2, Gfp, Rationals};
