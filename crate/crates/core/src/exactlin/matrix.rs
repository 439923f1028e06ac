//! Dense matrices over an exact field.

use super::field::Field;
use super::sparse::{rank_of_rows, SparseVec};

/// Row-major dense matrix with exact entries.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

/// A quotient `k^n / span(S)` realized on a subset of the standard basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient<F: Field> {
    /// Standard basis indices whose cosets form a basis of the quotient.
    pub representatives: Vec<usize>,
    /// Ambient coordinates to quotient coordinates (`q × n`).
    pub projection: Matrix<F>,
}

impl<F: Field> Quotient<F> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }

    /// Inclusion of the representatives (`n × q`); `projection · section = id`.
    pub fn section(&self) -> Matrix<F> {
        let field = self.projection.field().clone();
        let mut s = Matrix::zeros(field.clone(), self.ambient_dim(), self.dim());
        for (t, &r) in self.representatives.iter().enumerate() {
            s.set(r, t, field.one());
        }
        s
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: F, rows: usize, cols: usize) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = m.field.one();
        }
        m
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Panics if the rows are ragged; callers validate shapes first.
    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(field: F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length");
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn column_vector(field: F, v: Vec<F::Elem>) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn add_at(&mut self, i: usize, j: usize, v: &F::Elem) {
        let k = i * self.cols + j;
        self.data[k] = self.field.add(&self.data[k], v);
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.rows, "matrix product shapes");
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shapes");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Matrix<F> {
        let data = self.data.iter().map(|a| self.field.mul(c, a)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product; row and column indices follow the tensor index
    /// convention `(i, j) -> i * dim(second) + j`.
    pub fn kron(&self, other: &Matrix<F>) -> Matrix<F> {
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if f.is_zero(a) {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !f.is_zero(b) {
                            out.set(i * other.rows + k, j * other.cols + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.rows, other.rows, "hstack row counts");
        Matrix::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, other.cols, "vstack column counts");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Columns `idx` of `self`, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn sparse_rows(&self) -> Vec<SparseVec<F::Elem>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !self.field.is_zero(v))
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            rank_of_rows(&self.field, self.cols, self.sparse_rows())
        } else {
            rank_of_rows(&self.field, self.rows, self.transpose().sparse_rows())
        }
    }

    /// Gauss–Jordan elimination. Pivot search scans columns left to right and
    /// takes the first nonzero entry at or below the current row.
    pub fn echelon(&self) -> Echelon<F> {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                    if !f.is_zero(pv) {
                        let v = f.sub_mul(m.get(i, j), &factor, pv);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    /// Columns form a basis of the null space; `cols - rank` of them.
    pub fn kernel_basis(&self) -> Matrix<F> {
        let f = self.field.clone();
        let Echelon { reduced, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f.clone(), self.cols, free.len());
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, f.one());
            for (r, &pc) in pivots.iter().enumerate() {
                let v = reduced.get(r, fc);
                if !f.is_zero(v) {
                    k.set(pc, t, f.neg(v));
                }
            }
        }
        k
    }

    /// Some `x` with `self · x = v`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(v.len(), self.rows, "right-hand side length");
        let f = self.field.clone();
        let aug = self.hstack(&Matrix::column_vector(f.clone(), v.to_vec()));
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = reduced.get(r, self.cols).clone();
        }
        Some(x)
    }

    /// Solve `self · X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix<F>) -> Option<Matrix<F>> {
        let f = self.field.clone();
        let aug = self.hstack(rhs);
        let Echelon { reduced, pivots } = aug.echelon();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, reduced.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field.clone(), self.rows);
        let x = self.solve_matrix(&id)?;
        (self.mul(&x) == id).then_some(x)
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn image_basis(&self) -> Matrix<F> {
        let pivots = self.echelon().pivots;
        self.select_columns(&pivots)
    }
}

/// Quotient of `k^ambient_dim` by the column span of `spanning`.
///
/// The representatives are the non-pivot positions of the echelon form of
/// the spanning vectors, so the projection is identity on them.
pub fn quotient_basis<F: Field>(field: &F, ambient_dim: usize, spanning: &Matrix<F>) -> Quotient<F> {
    assert_eq!(spanning.rows(), ambient_dim, "spanning vectors live in the ambient space");
    let Echelon { reduced, pivots } = spanning.transpose().echelon();
    let representatives: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let mut projection = Matrix::zeros(field.clone(), representatives.len(), ambient_dim);
    for (t, &rep) in representatives.iter().enumerate() {
        projection.set(t, rep, field.one());
        for (r, &pc) in pivots.iter().enumerate() {
            let v = reduced.get(r, rep);
            if !field.is_zero(v) {
                projection.set(t, pc, field.neg(v));
            }
        }
    }
    Quotient {
        representatives,
        projection,
    }
}
