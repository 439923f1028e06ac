//! Resolutions, cochain complexes, and cohomology dimensions.

pub mod cap;
pub mod cochain;
pub mod complex;
pub mod free;
pub mod projective;
pub mod theorem;

pub use cap::{resource_cap, set_resource_cap, DEFAULT_RESOURCE_CAP, RESOURCE_CAP_ENV};
pub use cochain::{
    cohomology_dims, entwined_cohomology, hochschild_cohomology, hom_free, transported_cohomology, CochainComplex,
    CohomologyTable,
};
pub use complex::{bar_resolution, entwined_complex, transport_complex, FreeBimoduleComplex};
pub use free::{left_free_basis, LeftFreeBimodule};
pub use projective::{hom_bimodule, hom_bimodule_dim, is_projective_module, restricted_regular, Side};
pub use theorem::{projective_cross_check, verify_theorem, ProjectiveCrossCheck, TheoremReport};
