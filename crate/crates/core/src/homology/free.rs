//! Bimodules that are free as left modules, `P ≅ A ⊗ R`.
//!
//! Such a `P` is determined by the right action on its left generators
//! `r_1, …, r_R`: `r_i · e_ρ = Σ c_{βk} e_β ⊗ r_k`. That is all the
//! resolution `P ⊗_A B_*(A)` needs.

use crate::algcore::{Algebra, Bimodule};
use crate::entwine::Entwining;
use crate::error::{Error, Result};
use crate::exactlin::{normalize, Field, Matrix, SparseVec};

#[derive(Clone, Debug, PartialEq)]
pub struct LeftFreeBimodule<F: Field> {
    algebra: Algebra<F>,
    rank: usize,
    /// `[ρ][i]`: `r_i · e_ρ` in `A ⊗ R`, index `β·rank + k`.
    right_on_gens: Vec<Vec<SparseVec<F::Elem>>>,
}

impl<F: Field> LeftFreeBimodule<F> {
    pub fn new(algebra: Algebra<F>, rank: usize, right_on_gens: Vec<Vec<SparseVec<F::Elem>>>) -> Result<Self> {
        let n = algebra.dim();
        if right_on_gens.len() != n || right_on_gens.iter().any(|v| v.len() != rank) {
            return Err(Error::DimensionMismatch(format!(
                "need {n}×{rank} generator images for the right action"
            )));
        }
        if right_on_gens.iter().flatten().flatten().any(|(i, _)| *i >= n * rank) {
            return Err(Error::DimensionMismatch("generator image out of range".into()));
        }
        Ok(LeftFreeBimodule { algebra, rank, right_on_gens })
    }

    /// `A` itself, on the generator `1`.
    pub fn regular(a: &Algebra<F>) -> Self {
        let f = a.field().clone();
        let right_on_gens = (0..a.dim()).map(|rho| vec![vec![(rho, f.one())]]).collect();
        LeftFreeBimodule {
            algebra: a.clone(),
            rank: 1,
            right_on_gens,
        }
    }

    /// `A ⊗ C` on the generators `1 ⊗ c_i`, with `(1 ⊗ c_i)·e_ρ = ψ(c_i ⊗ e_ρ)`.
    pub fn from_entwining(e: &Entwining<F>) -> Self {
        let f = e.field().clone();
        let (da, dc) = (e.algebra().dim(), e.coalgebra().dim());
        let psi = e.psi();
        let right_on_gens = (0..da)
            .map(|rho| {
                (0..dc)
                    .map(|i| {
                        let col = i * da + rho;
                        (0..da * dc)
                            .filter(|&r| !f.is_zero(psi.get(r, col)))
                            .map(|r| (r, psi.get(r, col).clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        LeftFreeBimodule {
            algebra: e.algebra().clone(),
            rank: dc,
            right_on_gens,
        }
    }

    /// Read off the structure of a bimodule `m` that is left free on the
    /// columns of `gens`.
    pub fn from_bimodule(m: &Bimodule<F>, gens: &Matrix<F>) -> Result<Self> {
        let a = m.algebra();
        let f = a.field().clone();
        let (n, rank) = (a.dim(), gens.cols());
        if gens.rows() != m.dim() || n * rank != m.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{rank} generators cannot give a left basis of a {}-dimensional module over a {n}-dimensional algebra",
                m.dim()
            )));
        }
        let cols: Vec<Vec<F::Elem>> = (0..n)
            .flat_map(|alpha| (0..rank).map(move |i| (alpha, i)))
            .map(|(alpha, i)| m.left(alpha).mul_vec(&gens.column(i)))
            .collect();
        let phi = Matrix::from_columns(f.clone(), m.dim(), &cols);
        let phi_inv = phi
            .inverse()
            .ok_or_else(|| Error::Invalid("generators do not form a left basis".into()))?;
        let right_on_gens = (0..n)
            .map(|rho| {
                (0..rank)
                    .map(|i| {
                        let img = phi_inv.mul_vec(&m.right(rho).mul_vec(&gens.column(i)));
                        normalize(&f, img.into_iter().enumerate().collect())
                    })
                    .collect()
            })
            .collect();
        Ok(LeftFreeBimodule {
            algebra: a.clone(),
            rank,
            right_on_gens,
        })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim() * self.rank
    }

    /// `r_i · e_ρ`
    pub fn right_on_generator(&self, i: usize, rho: usize) -> &SparseVec<F::Elem> {
        &self.right_on_gens[rho][i]
    }

    /// `(e_α ⊗ r_i) · e_ρ` in `A ⊗ R`.
    pub fn right_on_basis(&self, alpha: usize, i: usize, rho: usize) -> SparseVec<F::Elem> {
        let f = self.field();
        let a = &self.algebra;
        let mut acc = Vec::new();
        for (idx, c) in self.right_on_generator(i, rho) {
            let (beta, k) = (idx / self.rank, idx % self.rank);
            for (p, v) in a.basis_product(alpha, beta).iter().enumerate() {
                if !f.is_zero(v) {
                    acc.push((p * self.rank + k, f.mul(c, v)));
                }
            }
        }
        normalize(f, acc)
    }

    pub fn to_bimodule(&self) -> Bimodule<F> {
        let f = self.field().clone();
        let n = self.algebra.dim();
        let id = Matrix::identity(f.clone(), self.rank);
        let left = (0..n).map(|i| self.algebra.left_mult(i).kron(&id)).collect();
        let right = (0..n)
            .map(|rho| {
                let mut m = Matrix::zeros(f.clone(), self.dim(), self.dim());
                for alpha in 0..n {
                    for i in 0..self.rank {
                        for (r, v) in self.right_on_basis(alpha, i, rho) {
                            m.set(r, alpha * self.rank + i, v);
                        }
                    }
                }
                m
            })
            .collect();
        Bimodule::new(self.algebra.clone(), self.dim(), left, right).expect("shapes match")
    }
}

/// Greedily pick columns of `candidates` that freely generate `m` as a left
/// module. `None` when the greedy choice does not reach a basis.
pub fn left_free_basis<F: Field>(m: &Bimodule<F>, candidates: &Matrix<F>) -> Option<Matrix<F>> {
    let a = m.algebra();
    let f = a.field().clone();
    let n = a.dim();
    if n == 0 || !m.dim().is_multiple_of(n) {
        return None;
    }
    let mut chosen: Vec<Vec<F::Elem>> = Vec::new();
    let mut span = Matrix::zeros(f.clone(), m.dim(), 0);
    for j in 0..candidates.cols() {
        if span.cols() == m.dim() {
            break;
        }
        let x = candidates.column(j);
        let orbit: Vec<Vec<F::Elem>> = (0..n).map(|alpha| m.left(alpha).mul_vec(&x)).collect();
        let trial = span.hstack(&Matrix::from_columns(f.clone(), m.dim(), &orbit));
        if trial.rank() == span.cols() + n {
            span = trial;
            chosen.push(x);
        }
    }
    (span.cols() == m.dim()).then(|| Matrix::from_columns(f, m.dim(), &chosen))
}
