//! Finite-dimensional entwining structures and coalgebra-Galois extensions
//! over exact fields, with the cohomology theories attached to them.
//!
//! Everything is represented by structure constants and computed with exact
//! arithmetic over the rationals or a prime field:
//!
//! - [`exactlin`]: scalars, dense and sparse matrices, rank/kernel/solve.
//! - [`algcore`]: algebras, coalgebras, bimodules and their axiom checkers.
//! - [`entwine`]: entwining structures `(A, C, ψ)` and the bimodule `A ⊗ C`.
//! - [`galois`]: comodule algebras, coinvariants, the Galois map, the
//!   translation map and the canonical entwining.
//! - [`homology`]: bar and entwined complexes, cochains with coefficients in
//!   a bimodule, cohomology dimensions, projectivity, and the comparison of
//!   entwined cohomology with Hochschild cohomology of the coinvariants.
//! - [`zoo`]: validated example structures.

pub mod algcore;
pub mod entwine;
pub mod error;
pub mod exactlin;
pub mod galois;
pub mod homology;
pub mod zoo;

pub use error::{Error, Result};
