//! Algebras, coalgebras and bimodules by structure constants.

pub mod algebra;
pub mod bimodule;
pub mod coalgebra;
pub mod report;
pub mod tensor;

pub use algebra::{check_algebra, check_algebra_limited, subalgebra, Algebra, Subalgebra};
pub use bimodule::{check_bimodule, check_bimodule_limited, restrict_bimodule, Bimodule};
pub use coalgebra::{check_coalgebra, check_coalgebra_limited, Coalgebra};
pub use report::{AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
pub use tensor::{flat2, unflat2, TensorShape};
