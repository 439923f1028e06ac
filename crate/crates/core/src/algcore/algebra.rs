use crate::algcore::report::{AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::algcore::tensor::flat2;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// A finite-dimensional unital associative algebra given by structure
/// constants: `e_i · e_j = Σ_k table[i*dim + j][k] e_k`.
///
/// Construction only checks shapes; use [`check_algebra`] for the axioms.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra<F: Field> {
    field: F,
    dim: usize,
    table: Vec<Vec<F::Elem>>,
    unit: Vec<F::Elem>,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Algebra<F> {
    /// `table[i][j]` is the coefficient vector of `e_i e_j`.
    pub fn from_table(field: F, table: Vec<Vec<Vec<F::Elem>>>, unit: Vec<F::Elem>) -> Result<Self> {
        let dim = table.len();
        if unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "unit has length {}, algebra has dimension {dim}",
                unit.len()
            )));
        }
        let mut flat = Vec::with_capacity(dim * dim);
        for (i, row) in table.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "mult[{i}] has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "mult[{i}][{j}] has length {}, expected {dim}",
                        v.len()
                    )));
                }
                flat.push(v);
            }
        }
        Ok(Self::from_flat(field, dim, flat, unit))
    }

    /// From the multiplication map `A ⊗ A -> A` as a `dim × dim²` matrix.
    pub fn from_mult_matrix(mult: &Matrix<F>, unit: Vec<F::Elem>) -> Result<Self> {
        let dim = mult.rows();
        if mult.cols() != dim * dim || unit.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "multiplication matrix is {}×{}, unit has length {}",
                mult.rows(),
                mult.cols(),
                unit.len()
            )));
        }
        let flat = (0..dim * dim).map(|c| mult.column(c)).collect();
        Ok(Self::from_flat(mult.field().clone(), dim, flat, unit))
    }

    fn from_flat(field: F, dim: usize, table: Vec<Vec<F::Elem>>, unit: Vec<F::Elem>) -> Self {
        let left = (0..dim)
            .map(|i| Matrix::from_fn(field.clone(), dim, dim, |k, j| table[flat2(i, j, dim)][k].clone()))
            .collect();
        let right = (0..dim)
            .map(|i| Matrix::from_fn(field.clone(), dim, dim, |k, j| table[flat2(j, i, dim)][k].clone()))
            .collect();
        Algebra {
            field,
            dim,
            table,
            unit,
            left,
            right,
        }
    }

    /// The ground field itself, with basis `{1}`.
    pub fn ground(field: F) -> Self {
        let one = field.one();
        Self::from_flat(field, 1, vec![vec![one.clone()]], vec![one])
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn unit(&self) -> &[F::Elem] {
        &self.unit
    }

    /// Coefficients of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.table[flat2(i, j, self.dim)]
    }

    /// `dim × dim²` matrix of `A ⊗ A -> A`.
    pub fn mult_matrix(&self) -> Matrix<F> {
        let n = self.dim;
        Matrix::from_fn(self.field.clone(), n, n * n, |k, c| self.table[c][k].clone())
    }

    /// Matrix of `x ↦ e_i x`.
    pub fn left_mult(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }

    /// Matrix of `x ↦ x e_i`.
    pub fn right_mult(&self, i: usize) -> &Matrix<F> {
        &self.right[i]
    }

    pub fn mul(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                let ab = f.mul(a, b);
                for (o, c) in out.iter_mut().zip(self.basis_product(i, j)) {
                    if !f.is_zero(c) {
                        *o = f.add(o, &f.mul(&ab, c));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Sparse expansion of the unit: `(index, coefficient)` with nonzero coefficients.
    pub fn unit_terms(&self) -> Vec<(usize, F::Elem)> {
        self.unit
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(i, c)| (i, c.clone()))
            .collect()
    }

    /// Change of basis: the new basis vectors are the columns of `t`
    /// (expressed in the old basis). `t` must be invertible.
    pub fn rebase(&self, t: &Matrix<F>) -> Result<Self> {
        let t_inv = t
            .inverse()
            .ok_or_else(|| Error::Invalid("basis change matrix is singular".into()))?;
        let mult = t_inv.mul(&self.mult_matrix()).mul(&t.kron(t));
        let unit = t_inv.mul_vec(&self.unit);
        Self::from_mult_matrix(&mult, unit)
    }
}

pub fn check_algebra<F: Field>(a: &Algebra<F>) -> AxiomReport {
    check_algebra_limited(a, DEFAULT_WITNESS_LIMIT)
}

/// Associativity on all basis triples and two-sided unitality.
pub fn check_algebra_limited<F: Field>(a: &Algebra<F>, limit: usize) -> AxiomReport {
    let n = a.dim();
    let mut report = AxiomReport::new("algebra");
    let mut assoc = AxiomCheck::new("associativity");
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j).to_vec();
            for k in 0..n {
                let lhs = a.mul(&ij, &a.basis_vector(k));
                let rhs = a.mul(&a.basis_vector(i), a.basis_product(j, k));
                if lhs != rhs {
                    assoc.fail(limit, || format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})"));
                }
            }
        }
    }
    report.push(assoc);

    let mut unit = AxiomCheck::new("unit");
    for i in 0..n {
        let e = a.basis_vector(i);
        if a.mul(a.unit(), &e) != e {
            unit.fail(limit, || format!("1 · e{i} != e{i}"));
        }
        if a.mul(&e, a.unit()) != e {
            unit.fail(limit, || format!("e{i} · 1 != e{i}"));
        }
    }
    report.push(unit);
    report
}

/// A subalgebra given by a basis inside an ambient algebra, with its own
/// structure constants in that basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subalgebra<F: Field> {
    pub algebra: Algebra<F>,
    /// `dim(A) × dim(B)`; column `i` is the `i`-th basis vector of `B` in `A`.
    pub inclusion: Matrix<F>,
}

/// Validate that the columns of `basis` span a unital subalgebra of `a`
/// and compute its structure constants.
pub fn subalgebra<F: Field>(a: &Algebra<F>, basis: &Matrix<F>) -> Result<Subalgebra<F>> {
    if basis.rows() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subalgebra basis has {} rows, algebra has dimension {}",
            basis.rows(),
            a.dim()
        )));
    }
    let b = basis.cols();
    if basis.rank() != b {
        return Err(Error::InvalidSubalgebra("basis vectors are linearly dependent".into()));
    }
    let columns: Vec<Vec<F::Elem>> = (0..b).map(|i| basis.column(i)).collect();
    let unit = basis
        .solve(a.unit())
        .ok_or_else(|| Error::InvalidSubalgebra("unit of the ambient algebra is not in the span".into()))?;
    let mut products = Vec::with_capacity(b * b);
    for i in 0..b {
        for j in 0..b {
            products.push(a.mul(&columns[i], &columns[j]));
        }
    }
    let rhs = Matrix::from_columns(a.field().clone(), a.dim(), &products);
    let coeffs = basis
        .solve_matrix(&rhs)
        .filter(|x| basis.mul(x) == rhs)
        .ok_or_else(|| Error::InvalidSubalgebra("span is not closed under multiplication".into()))?;
    let table = (0..b)
        .map(|i| (0..b).map(|j| coeffs.column(flat2(i, j, b))).collect())
        .collect();
    let algebra = Algebra::from_table(a.field().clone(), table, unit)?;
    Ok(Subalgebra {
        algebra,
        inclusion: basis.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Rationals;

    fn dual_numbers_with_unit(unit: [i64; 2]) -> Algebra<Rationals> {
        let q = Rationals;
        let v = |a: i64, b: i64| vec![q.from_i64(a), q.from_i64(b)];
        // basis {1, x}, x² = 0
        Algebra::from_table(
            q,
            vec![vec![v(1, 0), v(0, 1)], vec![v(0, 1), v(0, 0)]],
            v(unit[0], unit[1]),
        )
        .unwrap()
    }

    #[test]
    fn wrong_unit_detected() {
        let good = dual_numbers_with_unit([1, 0]);
        assert!(check_algebra(&good).all_hold());
        let bad = dual_numbers_with_unit([0, 1]);
        let r = check_algebra(&bad);
        assert!(r.holds("associativity"));
        assert!(!r.holds("unit"));
        assert!(!r.get("unit").unwrap().witnesses.is_empty());
    }

    #[test]
    fn shape_errors() {
        let q = Rationals;
        let e = Algebra::from_table(q, vec![vec![vec![q.one()]]], vec![]);
        assert!(matches!(e, Err(Error::DimensionMismatch(_))));
        let e = Algebra::from_table(q, vec![vec![vec![q.one(), q.one()]]], vec![q.one()]);
        assert!(matches!(e, Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn witness_limit_caps_output() {
        let q = Rationals;
        // all products zero with "unit" e0: unit fails for every basis element
        let n = 4;
        let table = vec![vec![vec![q.zero(); n]; n]; n];
        let mut unit = vec![q.zero(); n];
        unit[0] = q.one();
        let a = Algebra::from_table(q, table, unit).unwrap();
        let r = check_algebra_limited(&a, 3);
        let u = r.get("unit").unwrap();
        assert_eq!(u.failures, 8);
        assert_eq!(u.witnesses.len(), 3);
    }

    #[test]
    fn subalgebra_validation() {
        let a = dual_numbers_with_unit([1, 0]);
        let q = Rationals;
        let unit_only = Matrix::from_rows(q, vec![vec![q.one()], vec![q.zero()]]);
        let s = subalgebra(&a, &unit_only).unwrap();
        assert_eq!(s.algebra.dim(), 1);
        let x_only = Matrix::from_rows(q, vec![vec![q.zero()], vec![q.one()]]);
        assert!(matches!(subalgebra(&a, &x_only), Err(Error::InvalidSubalgebra(_))));
    }

    #[test]
    fn rebase_preserves_axioms() {
        let a = dual_numbers_with_unit([1, 0]);
        let q = Rationals;
        let t = Matrix::from_rows(q, vec![vec![q.one(), q.one()], vec![q.from_i64(2), q.from_i64(3)]]);
        let b = a.rebase(&t).unwrap();
        assert!(check_algebra(&b).all_hold());
        assert!(b.is_commutative());
    }
}
