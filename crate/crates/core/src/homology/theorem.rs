//! Comparison of entwined cohomology of a Galois extension with the
//! Hochschild cohomology of its coinvariants.

use std::fmt;

use super::cochain::{entwined_cohomology, hochschild_cohomology, CohomologyTable};
use super::projective::{is_projective_module, restricted_regular, Side};
use crate::algcore::{restrict_bimodule, Bimodule};
use crate::entwine::{ac_bimodule, Entwining};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::galois::GaloisExtension;

/// `flat_left`/`flat_right` record whether `A` is projective (equivalently
/// flat) as a left/right `B`-module. `tables_match` is only decided when
/// one of them holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub n_max: usize,
    pub h0_psi: usize,
    pub h0_b: usize,
    pub h0_match: bool,
    pub flat_left: bool,
    pub flat_right: bool,
    pub table_psi: CohomologyTable,
    pub table_hh: CohomologyTable,
    pub tables_match: Option<bool>,
}

impl TheoremReport {
    /// No assertion is violated.
    pub fn passed(&self) -> bool {
        self.h0_match && self.tables_match != Some(false)
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "H^0_psi(A,M) = {}, H^0(B,M) = {}: {}", self.h0_psi, self.h0_b, verdict(self.h0_match))?;
        writeln!(f, "A projective (= flat) over B: left {}, right {}", self.flat_left, self.flat_right)?;
        writeln!(f, "entwined   {}", self.table_psi)?;
        writeln!(f, "Hochschild {}", self.table_hh)?;
        match self.tables_match {
            Some(m) => write!(f, "tables: {}", verdict(m)),
            None => write!(f, "tables: no verdict (A is not flat over B on either side)"),
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

/// Compute `H_ψ^*(A, M)` and `HH^*(B, M)` up to `n_max` and compare them.
pub fn verify_theorem<F: Field>(ext: &GaloisExtension<F>, m: &Bimodule<F>, n_max: usize) -> Result<TheoremReport> {
    if m.algebra() != ext.algebra() {
        return Err(Error::AlgebraMismatch("bimodule is not over the extension's algebra".into()));
    }
    let psi = ext.canonical_psi()?;
    let b = &ext.coinvariants().algebra;
    let m_b = restrict_bimodule(m, ext.b_basis())?;
    let table_psi = entwined_cohomology(&psi, m, n_max)?;
    let table_hh = hochschild_cohomology(b, &m_b, n_max)?;
    let a_over_b = restricted_regular(ext.algebra(), ext.b_basis())?;
    let flat_left = is_projective_module(&a_over_b, Side::Left)?;
    let flat_right = is_projective_module(&a_over_b, Side::Right)?;
    let h0_psi = table_psi.dims[0];
    let h0_b = m_b.invariants_dim();
    let tables_match = (flat_left || flat_right).then(|| table_psi == table_hh);
    Ok(TheoremReport {
        n_max,
        h0_psi,
        h0_b,
        h0_match: h0_psi == h0_b,
        flat_left,
        flat_right,
        table_psi,
        table_hh,
        tables_match,
    })
}

/// When `A ⊗ C` is a projective bimodule, `H_ψ^1(A, M)` must vanish; this
/// checks that on the given sample. `None` when `A ⊗ C` is not projective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveCrossCheck {
    pub ac_projective: bool,
    pub h1_vanishes: Option<bool>,
}

pub fn projective_cross_check<F: Field>(e: &Entwining<F>, samples: &[Bimodule<F>]) -> Result<ProjectiveCrossCheck> {
    let ac_projective = is_projective_module(&ac_bimodule(e), Side::Bi)?;
    let h1_vanishes = if ac_projective {
        let mut all = true;
        for m in samples {
            all &= entwined_cohomology(e, m, 1)?.dims[1] == 0;
        }
        Some(all)
    } else {
        None
    };
    Ok(ProjectiveCrossCheck { ac_projective, h1_vanishes })
}
