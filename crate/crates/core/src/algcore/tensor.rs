//! Flat indexing of tensor-product bases.
//!
//! A basis pair `(i, j)` of `V ⊗ W` sits at `i * dim(W) + j`; longer tensors
//! associate left to right, so the last factor varies fastest.

#[inline]
pub fn flat2(i: usize, j: usize, dim_second: usize) -> usize {
    i * dim_second + j
}

#[inline]
pub fn unflat2(k: usize, dim_second: usize) -> (usize, usize) {
    (k / dim_second, k % dim_second)
}

/// Shape of an iterated tensor product `V_0 ⊗ V_1 ⊗ … ⊗ V_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorShape {
    dims: Vec<usize>,
}

impl TensorShape {
    pub fn new(dims: Vec<usize>) -> Self {
        TensorShape { dims }
    }

    /// `V^{⊗n}`
    pub fn power(dim: usize, n: usize) -> Self {
        TensorShape { dims: vec![dim; n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| {
                debug_assert!(i < d);
                acc * d + i
            })
    }

    pub fn unflatten(&self, mut k: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = k % d;
            k /= d;
        }
        out
    }
}
