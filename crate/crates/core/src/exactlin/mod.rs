//! Exact scalars and linear algebra over them.

pub mod field;
pub mod matrix;
pub mod sparse;

pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{quotient_basis, Echelon, Matrix, Quotient};
pub use sparse::{normalize, rank_of_rows, ranks, SparseMap, SparseVec};
