//! Cochain complexes `Hom_{A^e}(A ⊗ G_* ⊗ A, M)` and their cohomology.

use std::fmt;

use rayon::prelude::*;

use super::cap::check_cap;
use super::complex::{bar_resolution, entwined_complex, transport_complex, FreeBimoduleComplex};
use crate::algcore::{Algebra, Bimodule};
use crate::entwine::Entwining;
use crate::error::{Error, Result};
use crate::exactlin::{normalize, ranks, Field, SparseMap, SparseVec};
use crate::galois::GaloisExtension;

#[derive(Clone, Debug)]
pub struct CochainComplex<F: Field> {
    field: F,
    dims: Vec<usize>,
    /// `diffs[n]`: `C^n -> C^{n+1}`
    diffs: Vec<SparseMap<F>>,
}

impl<F: Field> CochainComplex<F> {
    pub fn new(field: F, dims: Vec<usize>, diffs: Vec<SparseMap<F>>) -> Result<Self> {
        if dims.is_empty() || diffs.len() + 1 != dims.len() {
            return Err(Error::InvalidComplex(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (n, d) in diffs.iter().enumerate() {
            if d.src_dim() != dims[n] || d.dst_dim() != dims[n + 1] {
                return Err(Error::InvalidComplex(format!(
                    "∂^{n} maps {} -> {}, expected {} -> {}",
                    d.src_dim(),
                    d.dst_dim(),
                    dims[n],
                    dims[n + 1]
                )));
            }
        }
        Ok(CochainComplex { field, dims, diffs })
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn differential(&self, n: usize) -> &SparseMap<F> {
        &self.diffs[n]
    }

    pub fn check_d_squared(&self) -> Result<()> {
        let bad = (1..self.diffs.len())
            .into_par_iter()
            .find_first(|&n| !self.diffs[n].compose(&self.diffs[n - 1]).is_zero());
        match bad {
            Some(n) => Err(Error::InvalidComplex(format!("∂^{n} ∘ ∂^{} is nonzero", n - 1))),
            None => Ok(()),
        }
    }
}

/// Dimensions `h^0, …, h^top`. Unless `top_truncated` is false, the last
/// entry counts the whole kernel of the top space and may overcount.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub dims: Vec<usize>,
    pub top_truncated: bool,
}

impl CohomologyTable {
    pub fn max_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<usize> {
        self.dims.get(n).copied()
    }

    /// Keep degrees `0..=n_max`; entries below the old top are genuine.
    pub fn truncated(&self, n_max: usize) -> Self {
        if n_max >= self.max_degree() {
            return self.clone();
        }
        CohomologyTable {
            dims: self.dims[..=n_max].to_vec(),
            top_truncated: false,
        }
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))?;
        if self.top_truncated {
            write!(f, " [top degree truncated]")?;
        }
        Ok(())
    }
}

/// `h^n = dim C^n − rank ∂^n − rank ∂^{n−1}`.
pub fn cohomology_dims<F: Field>(cc: &CochainComplex<F>) -> Result<CohomologyTable> {
    cc.check_d_squared()?;
    let r = ranks(&cc.diffs);
    let dims = (0..cc.dims.len())
        .map(|n| {
            let out = r.get(n).copied().unwrap_or(0);
            let inc = if n == 0 { 0 } else { r[n - 1] };
            cc.dims[n] - out - inc
        })
        .collect();
    Ok(CohomologyTable {
        dims,
        top_truncated: true,
    })
}

/// `Hom_{A^e}(A ⊗ G_n ⊗ A, M) ≅ Hom_k(G_n, M)`; a cochain `φ` has
/// coordinate `g·dim M + μ` for the `μ`-th coordinate of `φ(g)`, and
/// `(∂φ)(g) = Σ c · e_x φ(g') e_y` over the terms of `d(1 ⊗ g ⊗ 1)`.
pub fn hom_free<F: Field>(complex: &FreeBimoduleComplex<F>, m: &Bimodule<F>) -> Result<CochainComplex<F>> {
    let a = complex.algebra();
    if m.algebra() != a {
        return Err(Error::AlgebraMismatch(
            "coefficient bimodule is over a different algebra than the complex".into(),
        ));
    }
    let f = a.field().clone();
    let (da, dm) = (a.dim(), m.dim());
    let top = complex.top_degree();
    let mut dims = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let d = complex
            .gen_dim(n)
            .checked_mul(dm)
            .ok_or(Error::ResourceCap { degree: n, dim: usize::MAX, cap: super::cap::resource_cap() })?;
        check_cap(n, d)?;
        dims.push(d);
    }

    // (L_x R_y) as sparse columns: lr[x*da+y][μ] = image of m_μ
    let lr: Vec<Vec<SparseVec<F::Elem>>> = (0..da * da)
        .into_par_iter()
        .map(|xy| {
            let t = m.left(xy / da).mul(m.right(xy % da));
            (0..dm)
                .map(|mu| {
                    (0..dm)
                        .filter(|&nu| !f.is_zero(t.get(nu, mu)))
                        .map(|nu| (nu, t.get(nu, mu).clone()))
                        .collect()
                })
                .collect()
        })
        .collect();

    let mut diffs = Vec::with_capacity(top);
    for n in 0..top {
        let lower = complex.gen_dim(n);
        let upper = complex.gen_dim(n + 1);
        // triples (source, target, value), grouped later by source
        let entries: Vec<Vec<(usize, usize, F::Elem)>> = (0..upper)
            .into_par_iter()
            .map(|g| {
                let mut out = Vec::new();
                for (idx, c) in complex.generator_image(n + 1, g) {
                    let (xg, y) = (idx / da, idx % da);
                    let (x, gl) = (xg / lower, xg % lower);
                    for (mu, col) in lr[x * da + y].iter().enumerate() {
                        for (nu, v) in col {
                            out.push((gl * dm + mu, g * dm + nu, f.mul(c, v)));
                        }
                    }
                }
                out
            })
            .collect();
        let mut images: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); dims[n]];
        for (s, t, v) in entries.into_iter().flatten() {
            images[s].push((t, v));
        }
        let images = images.into_par_iter().map(|v| normalize(&f, v)).collect();
        diffs.push(SparseMap::new(f.clone(), dims[n], dims[n + 1], images));
    }
    CochainComplex::new(f, dims, diffs)
}

fn truncated_cohomology<F: Field>(
    complex: &FreeBimoduleComplex<F>,
    m: &Bimodule<F>,
    n_max: usize,
) -> Result<CohomologyTable> {
    Ok(cohomology_dims(&hom_free(complex, m)?)?.truncated(n_max))
}

/// `H_ψ^n(A, M)` for `n ≤ n_max`.
pub fn entwined_cohomology<F: Field>(e: &Entwining<F>, m: &Bimodule<F>, n_max: usize) -> Result<CohomologyTable> {
    truncated_cohomology(&entwined_complex(e, n_max + 1)?, m, n_max)
}

/// `HH^n(B, M)` for `n ≤ n_max`.
pub fn hochschild_cohomology<F: Field>(b: &Algebra<F>, m: &Bimodule<F>, n_max: usize) -> Result<CohomologyTable> {
    if m.algebra() != b {
        return Err(Error::AlgebraMismatch("bimodule is not over the given algebra".into()));
    }
    truncated_cohomology(&bar_resolution(b, n_max + 1)?, m, n_max)
}

/// `Ext_{A^e}^n(A ⊗_B A, M)` for `n ≤ n_max`, from the resolution of
/// `A ⊗_B A` itself.
pub fn transported_cohomology<F: Field>(
    ext: &GaloisExtension<F>,
    m: &Bimodule<F>,
    n_max: usize,
) -> Result<CohomologyTable> {
    truncated_cohomology(&transport_complex(ext, n_max + 1)?, m, n_max)
}
