//! Free bimodule resolutions `P ⊗_A B_*(A)` of a left-free bimodule `P`.
//!
//! Degree `n` is `A ⊗ G_n ⊗ A` with `G_n = R ⊗ A^{⊗n}`; a basis element
//! `e_x ⊗ g ⊗ e_y` sits at index `(x·dim G_n + g)·dim A + y`. The
//! differential is the bar differential with its first face replaced by
//! the right action of `A` on `P`:
//!
//! ```text
//! d(r ⊗ a₁ ⊗ … ⊗ aₙ ⊗ 1) = (r·a₁) ⊗ a₂ ⊗ … ⊗ 1
//!                        + Σ_{0<i<n} (−1)^i r ⊗ … ⊗ aᵢaᵢ₊₁ ⊗ … ⊗ 1
//!                        + (−1)^n r ⊗ a₁ ⊗ … ⊗ aₙ₋₁ ⊗ aₙ
//! ```
//!
//! and degree 0 is augmented onto `P` by `x ⊗ r ⊗ y ↦ x·r·y`.

use rayon::prelude::*;

use super::cap::check_cap;
use super::free::{left_free_basis, LeftFreeBimodule};
use crate::algcore::{check_bimodule, Algebra, TensorShape};
use crate::entwine::{check_entwining, Entwining};
use crate::error::{Error, Result};
use crate::exactlin::{normalize, ranks, Field, Matrix, SparseMap, SparseVec};
use crate::galois::GaloisExtension;

#[derive(Clone, Debug)]
pub struct FreeBimoduleComplex<F: Field> {
    module: LeftFreeBimodule<F>,
    top: usize,
    /// `gen_images[n-1][g]` = `d_n(1 ⊗ g ⊗ 1)` in degree `n - 1`.
    gen_images: Vec<Vec<SparseVec<F::Elem>>>,
    products: Vec<Vec<SparseVec<F::Elem>>>,
}

/// `B_*(A)`, resolving `A` itself.
pub fn bar_resolution<F: Field>(a: &Algebra<F>, n_max: usize) -> Result<FreeBimoduleComplex<F>> {
    FreeBimoduleComplex::resolve(LeftFreeBimodule::regular(a), n_max)
}

/// `(A ⊗ C) ⊗_A B_*(A)` for an entwining structure.
pub fn entwined_complex<F: Field>(e: &Entwining<F>, n_max: usize) -> Result<FreeBimoduleComplex<F>> {
    let report = check_entwining(e);
    if !report.all_hold() {
        let names: Vec<&str> = report.failing().map(|c| c.name.as_str()).collect();
        return Err(Error::NotEntwining(names.join(", ")));
    }
    FreeBimoduleComplex::resolve(LeftFreeBimodule::from_entwining(e), n_max)
}

/// `(A ⊗_B A) ⊗_A B_*(A)` for a Galois extension.
///
/// Left generators are found among the classes `1 ⊗ e_j` when possible
/// (falling back to the translation map), so the complex is built without
/// going through `β` or the canonical entwining.
pub fn transport_complex<F: Field>(ext: &GaloisExtension<F>, n_max: usize) -> Result<FreeBimoduleComplex<F>> {
    let a = ext.algebra();
    let m = ext.aba_bimodule();
    let candidates: Vec<Vec<F::Elem>> = (0..a.dim())
        .map(|j| ext.class_of(a.unit(), &a.basis_vector(j)))
        .collect();
    let candidates = Matrix::from_columns(a.field().clone(), m.dim(), &candidates);
    let gens = match left_free_basis(&m, &candidates) {
        Some(g) => g,
        None => ext.gamma()?.clone(),
    };
    FreeBimoduleComplex::resolve(LeftFreeBimodule::from_bimodule(&m, &gens)?, n_max)
}

impl<F: Field> FreeBimoduleComplex<F> {
    /// Build degrees `0..=top` and verify `d ∘ d = 0` on generators.
    pub fn resolve(module: LeftFreeBimodule<F>, top: usize) -> Result<Self> {
        let a = module.algebra().clone();
        let f = a.field().clone();
        let n = a.dim();
        for deg in 0..=top {
            let dim = component_dim(n, module.rank(), deg).ok_or(Error::ResourceCap {
                degree: deg,
                dim: usize::MAX,
                cap: super::cap::resource_cap(),
            })?;
            check_cap(deg, dim)?;
        }
        let products = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| normalize(&f, a.basis_product(x, y).iter().cloned().enumerate().collect()))
                    .collect()
            })
            .collect();
        let mut cx = FreeBimoduleComplex {
            module,
            top,
            gen_images: Vec::with_capacity(top),
            products,
        };
        for deg in 1..=top {
            let imgs = (0..cx.gen_dim(deg))
                .into_par_iter()
                .map(|g| cx.compute_generator_image(deg, g))
                .collect();
            cx.gen_images.push(imgs);
        }
        cx.check_d_squared()?;
        Ok(cx)
    }

    pub fn algebra(&self) -> &Algebra<F> {
        self.module.algebra()
    }
    pub fn field(&self) -> &F {
        self.module.field()
    }
    /// The augmentation target.
    pub fn module(&self) -> &LeftFreeBimodule<F> {
        &self.module
    }
    pub fn top_degree(&self) -> usize {
        self.top
    }

    /// `dim G_n = R · (dim A)^n`
    pub fn gen_dim(&self, n: usize) -> usize {
        self.module.rank() * self.algebra().dim().pow(n as u32)
    }

    pub fn component_dim(&self, n: usize) -> usize {
        let a = self.algebra().dim();
        a * a * self.gen_dim(n)
    }

    /// `d_n(1 ⊗ g ⊗ 1)`, for `1 ≤ n ≤ top`.
    pub fn generator_image(&self, n: usize, g: usize) -> &SparseVec<F::Elem> {
        &self.gen_images[n - 1][g]
    }

    fn compute_generator_image(&self, n: usize, g: usize) -> SparseVec<F::Elem> {
        let a = self.algebra();
        let f = a.field();
        let da = a.dim();
        let rank = self.module.rank();
        let word = TensorShape::power(da, n);
        let lower = TensorShape::power(da, n - 1);
        let lower_gens = rank * lower.total();
        let (i, js) = (g / word.total(), word.unflatten(g % word.total()));
        let unit = a.unit_terms();
        let index = |x: usize, g: usize, y: usize| (x * lower_gens + g) * da + y;
        let mut acc: Vec<(usize, F::Elem)> = Vec::new();

        // face 0: r_i·e_{j1} ⊗ e_{j2} ⊗ … ⊗ 1
        let tail = lower.flatten(&js[1..]);
        for (idx, c) in self.module.right_on_generator(i, js[0]) {
            let (beta, k) = (idx / rank, idx % rank);
            for (u, cu) in &unit {
                acc.push((index(beta, k * lower.total() + tail, *u), f.mul(c, cu)));
            }
        }
        // inner faces
        for t in 0..n.saturating_sub(1) {
            let sign = if (t + 1) % 2 == 0 { f.one() } else { f.neg(&f.one()) };
            for (p, cp) in &self.products[js[t]][js[t + 1]] {
                let mut w = Vec::with_capacity(n - 1);
                w.extend_from_slice(&js[..t]);
                w.push(*p);
                w.extend_from_slice(&js[t + 2..]);
                let gi = i * lower.total() + lower.flatten(&w);
                for (u1, c1) in &unit {
                    for (u2, c2) in &unit {
                        let v = f.mul(&sign, &f.mul(cp, &f.mul(c1, c2)));
                        acc.push((index(*u1, gi, *u2), v));
                    }
                }
            }
        }
        // last face moves a_n into the right slot
        let sign = if n.is_multiple_of(2) { f.one() } else { f.neg(&f.one()) };
        let gi = i * lower.total() + lower.flatten(&js[..n - 1]);
        for (u, cu) in &unit {
            acc.push((index(*u, gi, js[n - 1]), f.mul(&sign, cu)));
        }
        normalize(f, acc)
    }

    /// `e_x · v · e_y` for `v` in `A ⊗ G ⊗ A` with `gdim` generators.
    fn act_on_component(&self, gdim: usize, v: &SparseVec<F::Elem>, x: usize, y: usize) -> Vec<(usize, F::Elem)> {
        let f = self.field();
        let da = self.algebra().dim();
        let mut out = Vec::new();
        for (idx, c) in v {
            let (xg, w) = (idx / da, idx % da);
            let (u, g) = (xg / gdim, xg % gdim);
            for (p, cp) in &self.products[x][u] {
                let cpc = f.mul(c, cp);
                for (q, cq) in &self.products[w][y] {
                    out.push(((p * gdim + g) * da + q, f.mul(&cpc, cq)));
                }
            }
        }
        out
    }

    /// Full matrix of `d_n` (`1 ≤ n ≤ top`), as images of basis elements.
    pub fn differential(&self, n: usize) -> SparseMap<F> {
        let da = self.algebra().dim();
        let gdim = self.gen_dim(n);
        let lower = self.gen_dim(n - 1);
        let images = (0..self.component_dim(n))
            .into_par_iter()
            .map(|s| {
                let (xg, y) = (s / da, s % da);
                let (x, g) = (xg / gdim, xg % gdim);
                normalize(self.field(), self.act_on_component(lower, self.generator_image(n, g), x, y))
            })
            .collect();
        SparseMap::new(self.field().clone(), self.component_dim(n), self.component_dim(n - 1), images)
    }

    /// `A ⊗ G_0 ⊗ A -> P`
    pub fn augmentation(&self) -> SparseMap<F> {
        let da = self.algebra().dim();
        let rank = self.module.rank();
        let images = (0..self.component_dim(0))
            .map(|s| {
                let (xi, rho) = (s / da, s % da);
                let (x, i) = (xi / rank, xi % rank);
                self.module.right_on_basis(x, i, rho)
            })
            .collect();
        SparseMap::new(self.field().clone(), self.component_dim(0), self.module.dim(), images)
    }

    /// Apply `d_n` (or the augmentation when `n == 0`) to a vector.
    fn apply(&self, n: usize, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = self.field();
        let da = self.algebra().dim();
        let gdim = self.gen_dim(n);
        let mut acc = Vec::new();
        for (idx, c) in v {
            let (xg, y) = (idx / da, idx % da);
            let (x, g) = (xg / gdim, xg % gdim);
            let img = if n == 0 {
                self.module.right_on_basis(x, g, y)
            } else {
                self.act_on_component(self.gen_dim(n - 1), self.generator_image(n, g), x, y)
            };
            for (k, w) in img {
                acc.push((k, f.mul(c, &w)));
            }
        }
        normalize(f, acc)
    }

    /// `d_{n-1} ∘ d_n = 0` on every generator, augmentation included.
    pub fn check_d_squared(&self) -> Result<()> {
        for n in 1..=self.top {
            let bad = (0..self.gen_dim(n))
                .into_par_iter()
                .find_first(|&g| !self.apply(n - 1, self.generator_image(n, g)).is_empty());
            if let Some(g) = bad {
                return Err(Error::InvalidComplex(format!(
                    "d_{} ∘ d_{n} is nonzero on generator {g}",
                    n - 1
                )));
            }
        }
        Ok(())
    }

    /// Homology of the augmented complex
    /// `… -> A⊗G_1⊗A -> A⊗G_0⊗A -> P -> 0`, in degrees `-1, 0, …, top-1`
    /// (entry `k` is degree `k - 1`). The top degree is omitted since its
    /// kernel is not computed.
    pub fn augmented_homology(&self) -> Vec<usize> {
        let mut maps = vec![self.augmentation()];
        maps.extend((1..=self.top).map(|n| self.differential(n)));
        let r = ranks(&maps);
        let mut out = vec![self.module.dim() - r[0]];
        for n in 0..self.top {
            out.push(self.component_dim(n) - r[n] - r[n + 1]);
        }
        out
    }

    pub fn is_exact(&self) -> bool {
        self.augmented_homology().iter().all(|&h| h == 0)
    }

    /// Sanity check that the augmentation target is a genuine bimodule.
    pub fn module_is_bimodule(&self) -> bool {
        check_bimodule(&self.module.to_bimodule()).all_hold()
    }
}

fn component_dim(a: usize, rank: usize, n: usize) -> Option<usize> {
    let mut d = rank.checked_mul(a)?.checked_mul(a)?;
    for _ in 0..n {
        d = d.checked_mul(a)?;
    }
    Some(d)
}
