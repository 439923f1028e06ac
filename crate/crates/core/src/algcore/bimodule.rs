use crate::algcore::algebra::{subalgebra, Algebra};
use crate::algcore::report::{AxiomCheck, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::error::{Error, Result};
use crate::exactlin::{quotient_basis, Field, Matrix};

/// A finite-dimensional bimodule over an algebra, given by the matrices of
/// the left and right actions of each algebra basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule<F: Field> {
    over: Algebra<F>,
    dim: usize,
    left: Vec<Matrix<F>>,
    right: Vec<Matrix<F>>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(over: Algebra<F>, dim: usize, left: Vec<Matrix<F>>, right: Vec<Matrix<F>>) -> Result<Self> {
        let n = over.dim();
        if left.len() != n || right.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "expected {n} action matrices per side, got {} left and {} right",
                left.len(),
                right.len()
            )));
        }
        for (side, mats) in [("left", &left), ("right", &right)] {
            if let Some(i) = mats.iter().position(|m| m.rows() != dim || m.cols() != dim) {
                return Err(Error::DimensionMismatch(format!(
                    "{side}[{i}] is {}×{}, module has dimension {dim}",
                    mats[i].rows(),
                    mats[i].cols()
                )));
            }
        }
        Ok(Bimodule { over, dim, left, right })
    }

    /// `A` acting on itself by multiplication.
    pub fn regular(a: &Algebra<F>) -> Self {
        let n = a.dim();
        Bimodule {
            over: a.clone(),
            dim: n,
            left: (0..n).map(|i| a.left_mult(i).clone()).collect(),
            right: (0..n).map(|i| a.right_mult(i).clone()).collect(),
        }
    }

    /// The free bimodule `A ⊗ V ⊗ A` on a space `V` of dimension `rank`.
    pub fn free(a: &Algebra<F>, rank: usize) -> Self {
        let n = a.dim();
        let f = a.field().clone();
        let id_mid = Matrix::identity(f.clone(), rank);
        let id_a = Matrix::identity(f, n);
        let left = (0..n).map(|i| a.left_mult(i).kron(&id_mid).kron(&id_a)).collect();
        let right = (0..n).map(|i| id_a.kron(&id_mid).kron(a.right_mult(i))).collect();
        Bimodule {
            over: a.clone(),
            dim: n * rank * n,
            left,
            right,
        }
    }

    pub fn zero(a: &Algebra<F>) -> Self {
        let f = a.field().clone();
        let z = Matrix::zeros(f, 0, 0);
        Bimodule {
            over: a.clone(),
            dim: 0,
            left: vec![z.clone(); a.dim()],
            right: vec![z; a.dim()],
        }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.over
    }
    pub fn field(&self) -> &F {
        self.over.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn left(&self, i: usize) -> &Matrix<F> {
        &self.left[i]
    }
    pub fn right(&self, i: usize) -> &Matrix<F> {
        &self.right[i]
    }
    pub fn left_actions(&self) -> &[Matrix<F>] {
        &self.left
    }
    pub fn right_actions(&self) -> &[Matrix<F>] {
        &self.right
    }

    fn combine(&self, mats: &[Matrix<F>], x: &[F::Elem]) -> Matrix<F> {
        let f = self.field();
        let mut acc = Matrix::zeros(f.clone(), self.dim, self.dim);
        for (m, c) in mats.iter().zip(x) {
            if !f.is_zero(c) {
                acc = acc.add(&m.scale(c));
            }
        }
        acc
    }

    /// Left action of an arbitrary algebra element.
    pub fn left_by(&self, x: &[F::Elem]) -> Matrix<F> {
        self.combine(&self.left, x)
    }

    /// Right action of an arbitrary algebra element.
    pub fn right_by(&self, x: &[F::Elem]) -> Matrix<F> {
        self.combine(&self.right, x)
    }

    pub fn direct_sum(&self, other: &Bimodule<F>) -> Result<Self> {
        if self.over != other.over {
            return Err(Error::AlgebraMismatch("direct sum of bimodules over different algebras".into()));
        }
        let f = self.field().clone();
        let block = |a: &Matrix<F>, b: &Matrix<F>| {
            let (n, m) = (a.rows(), b.rows());
            Matrix::from_fn(f.clone(), n + m, n + m, |i, j| match (i < n, j < n) {
                (true, true) => a.get(i, j).clone(),
                (false, false) => b.get(i - n, j - n).clone(),
                _ => f.zero(),
            })
        };
        let left = self.left.iter().zip(&other.left).map(|(a, b)| block(a, b)).collect();
        let right = self.right.iter().zip(&other.right).map(|(a, b)| block(a, b)).collect();
        Bimodule::new(self.over.clone(), self.dim + other.dim, left, right)
    }

    /// Smallest sub-bimodule containing the columns of `gens`, as a basis matrix.
    pub fn generated_submodule(&self, gens: &Matrix<F>) -> Matrix<F> {
        let mut span = gens.image_basis();
        loop {
            let mut cols = span.clone();
            for m in self.left.iter().chain(&self.right) {
                cols = cols.hstack(&m.mul(&span));
            }
            let next = cols.image_basis();
            if next.cols() == span.cols() {
                return span;
            }
            span = next;
        }
    }

    /// Quotient by the sub-bimodule spanned by the columns of `sub`, which
    /// must already be closed under both actions.
    pub fn quotient(&self, sub: &Matrix<F>) -> Result<Self> {
        let q = quotient_basis(self.field(), self.dim, sub);
        let sec = q.section();
        let proj = &q.projection;
        for m in self.left.iter().chain(&self.right) {
            if !proj.mul(&m.mul(sub)).is_zero() {
                return Err(Error::Invalid("subspace is not a sub-bimodule".into()));
            }
        }
        let push = |m: &Matrix<F>| proj.mul(&m.mul(&sec));
        Bimodule::new(
            self.over.clone(),
            q.dim(),
            self.left.iter().map(push).collect(),
            self.right.iter().map(push).collect(),
        )
    }

    /// The sub-bimodule spanned by the columns of `sub` (closed under the actions).
    pub fn submodule(&self, sub: &Matrix<F>) -> Result<Self> {
        let basis = sub.image_basis();
        let restrict = |m: &Matrix<F>| {
            basis
                .solve_matrix(&m.mul(&basis))
                .filter(|x| basis.mul(x) == m.mul(&basis))
                .ok_or_else(|| Error::Invalid("subspace is not a sub-bimodule".into()))
        };
        let left = self.left.iter().map(restrict).collect::<Result<Vec<_>>>()?;
        let right = self.right.iter().map(restrict).collect::<Result<Vec<_>>>()?;
        Bimodule::new(self.over.clone(), basis.cols(), left, right)
    }

    /// Basis (as columns) of `{m : b·m = m·b for all b}`.
    pub fn invariants(&self) -> Matrix<F> {
        let f = self.field().clone();
        let mut system = Matrix::zeros(f, 0, self.dim);
        for (l, r) in self.left.iter().zip(&self.right) {
            system = system.vstack(&l.sub(r));
        }
        system.kernel_basis()
    }

    pub fn invariants_dim(&self) -> usize {
        let f = self.field().clone();
        let mut system = Matrix::zeros(f, 0, self.dim);
        for (l, r) in self.left.iter().zip(&self.right) {
            system = system.vstack(&l.sub(r));
        }
        self.dim - system.rank()
    }
}

pub fn check_bimodule<F: Field>(m: &Bimodule<F>) -> AxiomReport {
    check_bimodule_limited(m, DEFAULT_WITNESS_LIMIT)
}

/// Unitality and associativity of both actions, and that they commute.
pub fn check_bimodule_limited<F: Field>(m: &Bimodule<F>, limit: usize) -> AxiomReport {
    let a = m.algebra();
    let n = a.dim();
    let f = a.field().clone();
    let id = Matrix::identity(f, m.dim());
    let mut report = AxiomReport::new("bimodule");

    let mut unit = AxiomCheck::new("unit");
    if m.left_by(a.unit()) != id {
        unit.fail(limit, || "1 · m != m".into());
    }
    if m.right_by(a.unit()) != id {
        unit.fail(limit, || "m · 1 != m".into());
    }
    report.push(unit);

    let mut left = AxiomCheck::new("left associativity");
    let mut right = AxiomCheck::new("right associativity");
    for i in 0..n {
        for j in 0..n {
            let prod = a.basis_product(i, j);
            if m.left(i).mul(m.left(j)) != m.left_by(prod) {
                left.fail(limit, || format!("e{i} · (e{j} · m) != (e{i} e{j}) · m"));
            }
            if m.right(j).mul(m.right(i)) != m.right_by(prod) {
                right.fail(limit, || format!("(m · e{i}) · e{j} != m · (e{i} e{j})"));
            }
        }
    }
    report.push(left);
    report.push(right);

    let mut commute = AxiomCheck::new("actions commute");
    for i in 0..n {
        for j in 0..n {
            if m.left(i).mul(m.right(j)) != m.right(j).mul(m.left(i)) {
                commute.fail(limit, || format!("(e{i} · m) · e{j} != e{i} · (m · e{j})"));
            }
        }
    }
    report.push(commute);
    report
}

/// Restrict an `A`-bimodule to the subalgebra whose basis is given by the
/// columns of `inclusion`.
pub fn restrict_bimodule<F: Field>(m: &Bimodule<F>, inclusion: &Matrix<F>) -> Result<Bimodule<F>> {
    let sub = subalgebra(m.algebra(), inclusion)?;
    let cols: Vec<Vec<F::Elem>> = (0..inclusion.cols()).map(|i| inclusion.column(i)).collect();
    let left = cols.iter().map(|c| m.left_by(c)).collect();
    let right = cols.iter().map(|c| m.right_by(c)).collect();
    Bimodule::new(sub.algebra, m.dim(), left, right)
}
