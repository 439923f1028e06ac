//! Bimodule homomorphisms and projectivity, both as solvability of linear
//! systems in the entries of an unknown map.
//!
//! For finite-dimensional modules over a field, flat, projective and
//! "the free cover splits" coincide; the last is what is tested.

use crate::algcore::{check_bimodule, Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::{normalize, rank_of_rows, Field, Matrix, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    /// Module over the enveloping algebra.
    Bi,
}

/// Rows of `s·X − Y·s = 0` for an unknown `rows × cols` matrix `s`
/// (coordinate `u·cols + t`), with `X` square of size `cols` and `Y` of
/// size `rows`.
fn intertwiner_rows<F: Field>(
    f: &F,
    rows: usize,
    cols: usize,
    x: &Matrix<F>,
    y: &Matrix<F>,
) -> Vec<SparseVec<F::Elem>> {
    let mut out = Vec::with_capacity(rows * cols);
    let x_cols = x.transpose().sparse_rows();
    let y_rows = y.sparse_rows();
    for u in 0..rows {
        for t in 0..cols {
            let mut row = Vec::new();
            for (kappa, xv) in &x_cols[t] {
                row.push((u * cols + kappa, xv.clone()));
            }
            for (w, yv) in &y_rows[u] {
                row.push((w * cols + t, f.neg(yv)));
            }
            let row = normalize(f, row);
            if !row.is_empty() {
                out.push(row);
            }
        }
    }
    out
}

fn same_algebra<F: Field>(p: &Bimodule<F>, m: &Bimodule<F>) -> Result<()> {
    if p.algebra() != m.algebra() {
        return Err(Error::AlgebraMismatch("bimodules are over different algebras".into()));
    }
    Ok(())
}

fn hom_system<F: Field>(p: &Bimodule<F>, m: &Bimodule<F>) -> Vec<SparseVec<F::Elem>> {
    let f = p.field();
    let mut rows = Vec::new();
    for i in 0..p.algebra().dim() {
        rows.extend(intertwiner_rows(f, m.dim(), p.dim(), p.left(i), m.left(i)));
        rows.extend(intertwiner_rows(f, m.dim(), p.dim(), p.right(i), m.right(i)));
    }
    rows
}

/// Basis of `Hom_{A^e}(P, M)`, each a `dim M × dim P` matrix.
pub fn hom_bimodule<F: Field>(p: &Bimodule<F>, m: &Bimodule<F>) -> Result<Vec<Matrix<F>>> {
    same_algebra(p, m)?;
    let f = p.field().clone();
    let unknowns = m.dim() * p.dim();
    let rows = hom_system(p, m);
    let mut system = Matrix::zeros(f.clone(), rows.len(), unknowns);
    for (r, row) in rows.into_iter().enumerate() {
        for (c, v) in row {
            system.set(r, c, v);
        }
    }
    let kernel = system.kernel_basis();
    Ok((0..kernel.cols())
        .map(|k| Matrix::from_fn(f.clone(), m.dim(), p.dim(), |nu, mu| kernel.get(nu * p.dim() + mu, k).clone()))
        .collect())
}

pub fn hom_bimodule_dim<F: Field>(p: &Bimodule<F>, m: &Bimodule<F>) -> Result<usize> {
    same_algebra(p, m)?;
    let unknowns = m.dim() * p.dim();
    Ok(unknowns - rank_of_rows(p.field(), unknowns, hom_system(p, m)))
}

/// Whether `m` is projective as a left, right, or bimodule over its algebra:
/// the free cover `π: F -> m` on a basis of `m` admits a module section.
pub fn is_projective_module<F: Field>(m: &Bimodule<F>, side: Side) -> Result<bool> {
    let report = check_bimodule(m);
    if !report.all_hold() {
        let names: Vec<&str> = report.failing().map(|c| c.name.as_str()).collect();
        return Err(Error::Invalid(format!("not a valid module: {}", names.join(", "))));
    }
    let a = m.algebra();
    let f = a.field().clone();
    let (n, d) = (a.dim(), m.dim());
    let id_d = Matrix::identity(f.clone(), d);
    let id_a = Matrix::identity(f.clone(), n);

    // (module action, free action) pairs and the cover π, per side
    let (pairs, pi): (Vec<(Matrix<F>, Matrix<F>)>, Matrix<F>) = match side {
        Side::Left => {
            let pairs = (0..n).map(|i| (m.left(i).clone(), a.left_mult(i).kron(&id_d))).collect();
            // π(e_α ⊗ v_t) = e_α · v_t
            let pi = Matrix::from_fn(f.clone(), d, n * d, |nu, c| m.left(c / d).get(nu, c % d).clone());
            (pairs, pi)
        }
        Side::Right => {
            let pairs = (0..n).map(|i| (m.right(i).clone(), id_d.kron(a.right_mult(i)))).collect();
            // π(v_t ⊗ e_α) = v_t · e_α
            let pi = Matrix::from_fn(f.clone(), d, d * n, |nu, c| m.right(c % n).get(nu, c / n).clone());
            (pairs, pi)
        }
        Side::Bi => {
            let mut pairs: Vec<_> = (0..n)
                .map(|i| (m.left(i).clone(), a.left_mult(i).kron(&id_d).kron(&id_a)))
                .collect();
            pairs.extend((0..n).map(|i| (m.right(i).clone(), id_a.kron(&id_d).kron(a.right_mult(i)))));
            // π(e_α ⊗ v_t ⊗ e_β) = e_α · v_t · e_β
            let lr: Vec<Matrix<F>> = (0..n * n).map(|ab| m.left(ab / n).mul(m.right(ab % n))).collect();
            let pi = Matrix::from_fn(f.clone(), d, n * d * n, |nu, c| {
                let (at, beta) = (c / n, c % n);
                let (alpha, t) = (at / d, at % d);
                lr[alpha * n + beta].get(nu, t).clone()
            });
            (pairs, pi)
        }
    };
    Ok(splits(&f, &pairs, &pi))
}

/// Is there `s` with `s·X_k = Y_k·s` for all `k` and `π·s = id`?
fn splits<F: Field>(f: &F, pairs: &[(Matrix<F>, Matrix<F>)], pi: &Matrix<F>) -> bool {
    let (d, free) = (pi.rows(), pi.cols());
    let unknowns = free * d;
    let mut rows = Vec::new();
    for (x, y) in pairs {
        rows.extend(intertwiner_rows(f, free, d, x, y));
    }
    // (π s)[ν][t] = Σ_u π[ν][u] s[u][t] = δ_{νt}; the right-hand side sits
    // in the extra column `unknowns`.
    for nu in 0..d {
        for t in 0..d {
            let mut row: Vec<(usize, F::Elem)> = (0..free)
                .filter(|&u| !f.is_zero(pi.get(nu, u)))
                .map(|u| (u * d + t, pi.get(nu, u).clone()))
                .collect();
            if nu == t {
                row.push((unknowns, f.one()));
            }
            rows.push(row);
        }
    }
    let without_rhs: Vec<SparseVec<F::Elem>> = rows
        .iter()
        .map(|r| r.iter().filter(|(i, _)| *i < unknowns).cloned().collect())
        .collect();
    rank_of_rows(f, unknowns, without_rhs) == rank_of_rows(f, unknowns + 1, rows)
}

/// `A` restricted to a subalgebra with basis `b_basis`, as a bimodule over it.
pub fn restricted_regular<F: Field>(a: &Algebra<F>, b_basis: &Matrix<F>) -> Result<Bimodule<F>> {
    crate::algcore::restrict_bimodule(&Bimodule::regular(a), b_basis)
}
