use crate::algcore::report::{compare_maps, AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::algcore::tensor::flat2;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// A finite-dimensional coalgebra: `Δ(c_i) = Σ_{j,k} d_i[j][k] c_j ⊗ c_k`
/// and counit `ε`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coalgebra<F: Field> {
    dim: usize,
    /// `dim² × dim`, the map `C -> C ⊗ C`.
    comult: Matrix<F>,
    counit: Vec<F::Elem>,
}

impl<F: Field> Coalgebra<F> {
    /// `tables[i][j][k]` is the coefficient of `c_j ⊗ c_k` in `Δ(c_i)`.
    pub fn from_tables(field: F, tables: Vec<Vec<Vec<F::Elem>>>, counit: Vec<F::Elem>) -> Result<Self> {
        let dim = tables.len();
        if counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "counit has length {}, coalgebra has dimension {dim}",
                counit.len()
            )));
        }
        let mut comult = Matrix::zeros(field, dim * dim, dim);
        for (i, d) in tables.into_iter().enumerate() {
            if d.len() != dim || d.iter().any(|row| row.len() != dim) {
                return Err(Error::DimensionMismatch(format!("comult[{i}] must be {dim}×{dim}")));
            }
            for (j, row) in d.into_iter().enumerate() {
                for (k, v) in row.into_iter().enumerate() {
                    comult.set(flat2(j, k, dim), i, v);
                }
            }
        }
        Ok(Coalgebra { dim, comult, counit })
    }

    pub fn from_matrix(comult: Matrix<F>, counit: Vec<F::Elem>) -> Result<Self> {
        let dim = comult.cols();
        if comult.rows() != dim * dim || counit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication is {}×{}, counit has length {}",
                comult.rows(),
                comult.cols(),
                counit.len()
            )));
        }
        Ok(Coalgebra { dim, comult, counit })
    }

    /// The ground field as a coalgebra: one group-like element.
    pub fn ground(field: F) -> Self {
        let one = field.one();
        Coalgebra {
            dim: 1,
            comult: Matrix::identity(field, 1),
            counit: vec![one],
        }
    }

    pub fn field(&self) -> &F {
        self.comult.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn comult(&self) -> &Matrix<F> {
        &self.comult
    }
    pub fn counit(&self) -> &[F::Elem] {
        &self.counit
    }

    /// `1 × dim` matrix of `ε`.
    pub fn counit_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.field().clone(), vec![self.counit.clone()])
    }

    /// `tables[i][j][k]` as in [`Coalgebra::from_tables`].
    pub fn tables(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let n = self.dim;
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.comult.get(flat2(j, k, n), i).clone()).collect())
                    .collect()
            })
            .collect()
    }

    /// New basis given by the columns of `q` (in the old basis).
    pub fn rebase(&self, q: &Matrix<F>) -> Result<Self> {
        let q_inv = q
            .inverse()
            .ok_or_else(|| Error::Invalid("basis change matrix is singular".into()))?;
        let comult = q_inv.kron(&q_inv).mul(&self.comult).mul(q);
        let counit = self.counit_matrix().mul(q).row(0).to_vec();
        Coalgebra::from_matrix(comult, counit)
    }
}

pub fn check_coalgebra<F: Field>(c: &Coalgebra<F>) -> AxiomReport {
    check_coalgebra_limited(c, DEFAULT_WITNESS_LIMIT)
}

/// Coassociativity `(Δ⊗id)Δ = (id⊗Δ)Δ` and both counit identities.
pub fn check_coalgebra_limited<F: Field>(c: &Coalgebra<F>, limit: usize) -> AxiomReport {
    let f = c.field().clone();
    let id = Matrix::identity(f, c.dim());
    let delta = c.comult();
    let eps = c.counit_matrix();
    let mut report = AxiomReport::new("coalgebra");
    let lhs = delta.kron(&id).mul(delta);
    let rhs = id.kron(delta).mul(delta);
    report.push(compare_maps("coassociativity", &lhs, &rhs, limit, |i| {
        format!("(Δ⊗id)Δ(c{i}) != (id⊗Δ)Δ(c{i})")
    }));
    let left = eps.kron(&id).mul(delta);
    let right = id.kron(&eps).mul(delta);
    let mut counit = AxiomCheck::new("counit");
    for i in 0..c.dim() {
        if left.column(i) != id.column(i) {
            counit.fail(limit, || format!("(ε⊗id)Δ(c{i}) != c{i}"));
        }
        if right.column(i) != id.column(i) {
            counit.fail(limit, || format!("(id⊗ε)Δ(c{i}) != c{i}"));
        }
    }
    report.push(counit);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rationals;

    #[test]
    fn grouplike_with_zero_counit_fails() {
        let q = Rationals;
        let c = Coalgebra::from_tables(q, vec![vec![vec![q.one()]]], vec![q.zero()]).unwrap();
        let r = check_coalgebra(&c);
        assert!(r.holds("coassociativity"));
        assert!(!r.holds("counit"));
    }

    #[test]
    fn ground_coalgebra_passes() {
        assert!(check_coalgebra(&Coalgebra::ground(Rationals)).all_hold());
    }

    #[test]
    fn tables_round_trip() {
        let q = Rationals;
        let t = vec![
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.zero()]],
            vec![vec![q.zero(), q.zero()], vec![q.zero(), q.one()]],
        ];
        let c = Coalgebra::from_tables(q, t.clone(), vec![q.one(), q.one()]).unwrap();
        assert_eq!(c.tables(), t);
        assert!(check_coalgebra(&c).all_hold());
    }

    #[test]
    fn ragged_table_rejected() {
        let q = Rationals;
        let e = Coalgebra::from_tables(q, vec![vec![vec![q.one(), q.one()]]], vec![q.one()]);
        assert!(matches!(e, Err(Error::DimensionMismatch(_))));
    }
}
