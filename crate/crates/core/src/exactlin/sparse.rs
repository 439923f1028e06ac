//! Sparse vectors, sparse linear maps, and a sparse elimination engine
//! used for every large rank computation in the crate.

use rayon::prelude::*;

use super::field::Field;
use super::matrix::Matrix;

/// Sorted `(index, value)` pairs with no zero values and no repeated index.
pub type SparseVec<E> = Vec<(usize, E)>;

/// Sort, merge duplicate indices, and drop zeros.
pub fn normalize<F: Field>(field: &F, mut entries: Vec<(usize, F::Elem)>) -> SparseVec<F::Elem> {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, v) in entries {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc = field.add(acc, &v),
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !field.is_zero(v));
    out
}

/// `a - c * b`
pub fn sub_scaled<F: Field>(
    field: &F,
    a: &[(usize, F::Elem)],
    c: &F::Elem,
    b: &[(usize, F::Elem)],
) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, field.neg(&field.mul(c, &b[j].1))));
            j += 1;
        } else {
            let v = field.sub_mul(&a[i].1, c, &b[j].1);
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of a family of sparse vectors of length `width`.
///
/// Incremental echelon form: each vector is reduced at its leading index
/// against the stored pivot rows, shortest vectors first.
pub fn rank_of_rows<F: Field>(field: &F, width: usize, mut rows: Vec<SparseVec<F::Elem>>) -> usize {
    rows.sort_by_key(|r| r.len());
    let mut pivots: Vec<Option<SparseVec<F::Elem>>> = vec![None; width];
    let mut rank = 0;
    for mut row in rows {
        while let Some((lead, coeff)) = row.first() {
            match &pivots[*lead] {
                Some(p) => {
                    let c = coeff.clone();
                    row = sub_scaled(field, &row, &c, p);
                }
                None => break,
            }
        }
        let Some((lead, coeff)) = row.first() else {
            continue;
        };
        let lead = *lead;
        let inv = field.inv(coeff).expect("nonzero leading entry");
        for (_, v) in row.iter_mut() {
            *v = field.mul(v, &inv);
        }
        pivots[lead] = Some(row);
        rank += 1;
    }
    rank
}

/// A linear map `k^src -> k^dst` stored by the images of the source basis
/// vectors (so "column-major" in the usual matrix picture).
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMap<F: Field> {
    field: F,
    src_dim: usize,
    dst_dim: usize,
    images: Vec<SparseVec<F::Elem>>,
}

impl<F: Field> SparseMap<F> {
    pub fn new(field: F, src_dim: usize, dst_dim: usize, images: Vec<SparseVec<F::Elem>>) -> Self {
        assert_eq!(images.len(), src_dim, "one image per source basis vector");
        debug_assert!(images
            .iter()
            .all(|v| v.iter().all(|(i, _)| *i < dst_dim)));
        SparseMap {
            field,
            src_dim,
            dst_dim,
            images,
        }
    }

    pub fn zero(field: F, src_dim: usize, dst_dim: usize) -> Self {
        SparseMap::new(field, src_dim, dst_dim, vec![Vec::new(); src_dim])
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let field = m.field().clone();
        let images = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !field.is_zero(m.get(i, j)))
                    .map(|i| (i, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        SparseMap::new(field, m.cols(), m.rows(), images)
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.field.clone(), self.dst_dim, self.src_dim);
        for (j, img) in self.images.iter().enumerate() {
            for (i, v) in img {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn src_dim(&self) -> usize {
        self.src_dim
    }
    pub fn dst_dim(&self) -> usize {
        self.dst_dim
    }
    pub fn images(&self) -> &[SparseVec<F::Elem>] {
        &self.images
    }
    pub fn image(&self, j: usize) -> &SparseVec<F::Elem> {
        &self.images[j]
    }
    pub fn nnz(&self) -> usize {
        self.images.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Vec::is_empty)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(&self.field, self.dst_dim, self.images.clone())
    }

    pub fn apply(&self, v: &[(usize, F::Elem)]) -> SparseVec<F::Elem> {
        let mut acc = Vec::new();
        for (j, c) in v {
            for (i, w) in &self.images[*j] {
                acc.push((*i, self.field.mul(c, w)));
            }
        }
        normalize(&self.field, acc)
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &SparseMap<F>) -> SparseMap<F> {
        assert_eq!(inner.dst_dim, self.src_dim, "composable maps");
        let images = inner.images.par_iter().map(|v| self.apply(v)).collect();
        SparseMap::new(self.field.clone(), inner.src_dim, self.dst_dim, images)
    }
}

/// Ranks of several maps, computed in parallel; output order matches input.
pub fn ranks<F: Field>(maps: &[SparseMap<F>]) -> Vec<usize> {
    maps.par_iter().map(SparseMap::rank).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn normalize_merges_and_drops_zeros() {
        let f = PrimeField::new(3).unwrap();
        let v = normalize(&f, vec![(2, 1), (0, 2), (2, 2), (1, 1)]);
        assert_eq!(v, vec![(0, 2), (1, 1)]);
    }

    #[test]
    fn sparse_rank_matches_dense_examples() {
        let q = Rationals;
        let one = q.one();
        let two = q.from_i64(2);
        let four = q.from_i64(4);
        // columns (1,2) and (2,4)
        let rows = vec![
            vec![(0, one.clone()), (1, two.clone())],
            vec![(0, two.clone()), (1, four.clone())],
        ];
        assert_eq!(rank_of_rows(&q, 2, rows), 1);
        assert_eq!(rank_of_rows(&q, 0, Vec::new()), 0);
    }

    #[test]
    fn compose_and_apply() {
        let f = PrimeField::new(5).unwrap();
        // swap on k^2, then double
        let swap = SparseMap::new(f, 2, 2, vec![vec![(1, 1)], vec![(0, 1)]]);
        let dbl = SparseMap::new(f, 2, 2, vec![vec![(0, 2)], vec![(1, 2)]]);
        let c = dbl.compose(&swap);
        assert_eq!(c.apply(&[(0, 1)]), vec![(1, 2)]);
        assert_eq!(c.to_dense().rank(), 2);
        assert_eq!(SparseMap::from_dense(&c.to_dense()), c);
    }
}
