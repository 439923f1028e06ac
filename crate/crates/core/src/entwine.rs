//! Entwining structures `(A, C, ψ)` with `ψ: C ⊗ A -> A ⊗ C`.
//!
//! In Sweedler-style notation `ψ(c ⊗ a) = a_α ⊗ c^α`, the four conditions
//! checked here are
//!
//! ```text
//! (aa')_α ⊗ c^α        = a_α a'_β ⊗ c^{αβ}
//! 1_α ⊗ c^α            = 1 ⊗ c
//! a_α ⊗ c^α_1 ⊗ c^α_2  = a_{βα} ⊗ c_1^α ⊗ c_2^β
//! a_α ε(c^α)           = a ε(c)
//! ```
//!
//! Each is compared as an equality of linear maps, column by column, which
//! over a field decides it completely.

use crate::algcore::report::{compare_maps, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::algcore::{flat2, Algebra, Bimodule, Coalgebra, TensorShape};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

pub const MULTIPLICATIVITY: &str = "multiplicativity";
pub const UNIT: &str = "unit";
pub const COMULTIPLICATIVITY: &str = "comultiplicativity";
pub const COUNIT: &str = "counit";

#[derive(Clone, Debug, PartialEq)]
pub struct Entwining<F: Field> {
    a: Algebra<F>,
    c: Coalgebra<F>,
    /// `(dim A · dim C) × (dim C · dim A)`; column `i·dim A + j` is `ψ(c_i ⊗ e_j)`
    /// in the basis `e_α ⊗ c_k` at row `α·dim C + k`.
    psi: Matrix<F>,
}

impl<F: Field> Entwining<F> {
    pub fn new(a: Algebra<F>, c: Coalgebra<F>, psi: Matrix<F>) -> Result<Self> {
        let n = a.dim() * c.dim();
        if psi.rows() != n || psi.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "entwining map is {}×{}, expected {n}×{n}",
                psi.rows(),
                psi.cols()
            )));
        }
        Ok(Entwining { a, c, psi })
    }

    /// `ψ(c ⊗ a) = a ⊗ c`, an entwining for any `A` and `C`.
    pub fn flip(a: Algebra<F>, c: Coalgebra<F>) -> Self {
        let (da, dc) = (a.dim(), c.dim());
        let f = a.field().clone();
        let mut psi = Matrix::zeros(f.clone(), da * dc, dc * da);
        for i in 0..dc {
            for j in 0..da {
                psi.set(flat2(j, i, dc), flat2(i, j, da), f.one());
            }
        }
        Entwining { a, c, psi }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.a
    }
    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.c
    }
    pub fn psi(&self) -> &Matrix<F> {
        &self.psi
    }
    pub fn field(&self) -> &F {
        self.a.field()
    }

    /// `ψ(c_i ⊗ e_j)` as a vector in `A ⊗ C`.
    pub fn apply(&self, i: usize, j: usize) -> Vec<F::Elem> {
        self.psi.column(flat2(i, j, self.a.dim()))
    }

    pub fn with_psi(&self, psi: Matrix<F>) -> Result<Self> {
        Entwining::new(self.a.clone(), self.c.clone(), psi)
    }
}

pub fn check_entwining<F: Field>(e: &Entwining<F>) -> AxiomReport {
    check_entwining_limited(e, DEFAULT_WITNESS_LIMIT)
}

pub fn check_entwining_limited<F: Field>(e: &Entwining<F>, limit: usize) -> AxiomReport {
    let f = e.field().clone();
    let (da, dc) = (e.a.dim(), e.c.dim());
    let id_a = Matrix::identity(f.clone(), da);
    let id_c = Matrix::identity(f.clone(), dc);
    let mu = e.a.mult_matrix();
    let eta = Matrix::column_vector(f.clone(), e.a.unit().to_vec());
    let delta = e.c.comult();
    let eps = e.c.counit_matrix();
    let psi = &e.psi;

    let mut report = AxiomReport::new("entwining");

    let cxaxa = TensorShape::new(vec![dc, da, da]);
    let lhs = psi.mul(&id_c.kron(&mu));
    let rhs = mu
        .kron(&id_c)
        .mul(&id_a.kron(psi))
        .mul(&psi.kron(&id_a));
    report.push(compare_maps(MULTIPLICATIVITY, &lhs, &rhs, limit, |k| {
        let t = cxaxa.unflatten(k);
        format!("c{} ⊗ e{} ⊗ e{}", t[0], t[1], t[2])
    }));

    let lhs = psi.mul(&id_c.kron(&eta));
    let rhs = eta.kron(&id_c);
    report.push(compare_maps(UNIT, &lhs, &rhs, limit, |i| format!("c{i} ⊗ 1")));

    let lhs = id_a.kron(delta).mul(psi);
    let rhs = psi
        .kron(&id_c)
        .mul(&id_c.kron(psi))
        .mul(&delta.kron(&id_a));
    report.push(compare_maps(COMULTIPLICATIVITY, &lhs, &rhs, limit, |k| {
        let (i, j) = (k / da, k % da);
        format!("c{i} ⊗ e{j}")
    }));

    let lhs = id_a.kron(&eps).mul(psi);
    let rhs = eps.kron(&id_a);
    report.push(compare_maps(COUNIT, &lhs, &rhs, limit, |k| {
        let (i, j) = (k / da, k % da);
        format!("c{i} ⊗ e{j}")
    }));
    report
}

/// `A ⊗ C` as an `A`-bimodule: `λ·(a ⊗ c) = λa ⊗ c` and
/// `(a ⊗ c)·ρ = a·ψ(c ⊗ ρ)`.
///
/// No axioms are assumed; the right action is associative exactly when the
/// entwining conditions hold, so callers compose with `check_bimodule`.
pub fn ac_bimodule<F: Field>(e: &Entwining<F>) -> Bimodule<F> {
    let f = e.field().clone();
    let (da, dc) = (e.a.dim(), e.c.dim());
    let id_c = Matrix::identity(f.clone(), dc);
    let id_ac = Matrix::identity(f.clone(), da * dc);
    let id_a = Matrix::identity(f.clone(), da);
    let twisted = e.a.mult_matrix().kron(&id_c).mul(&id_a.kron(&e.psi));
    let left = (0..da).map(|i| e.a.left_mult(i).kron(&id_c)).collect();
    let right = (0..da)
        .map(|r| {
            let insert = Matrix::column_vector(f.clone(), e.a.basis_vector(r));
            twisted.mul(&id_ac.kron(&insert))
        })
        .collect();
    Bimodule::new(e.a.clone(), da * dc, left, right).expect("shapes are consistent by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::check_bimodule;
    use crate::exactlin::Rationals;

    fn c2() -> Algebra<Rationals> {
        let q = Rationals;
        let v = |a: i64, b: i64| vec![q.from_i64(a), q.from_i64(b)];
        Algebra::from_table(q, vec![vec![v(1, 0), v(0, 1)], vec![v(0, 1), v(1, 0)]], v(1, 0)).unwrap()
    }

    fn grouplike2() -> Coalgebra<Rationals> {
        let q = Rationals;
        let t = vec![
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.zero()]],
            vec![vec![q.zero(), q.zero()], vec![q.zero(), q.one()]],
        ];
        Coalgebra::from_tables(q, t, vec![q.one(), q.one()]).unwrap()
    }

    #[test]
    fn flip_over_ground_coalgebra_passes() {
        let e = Entwining::flip(c2(), Coalgebra::ground(Rationals));
        assert!(check_entwining(&e).all_hold());
        let m = ac_bimodule(&e);
        assert_eq!(m, Bimodule::regular(&c2()));
    }

    #[test]
    fn flip_gives_right_multiplication_on_a_factor() {
        let e = Entwining::flip(c2(), grouplike2());
        assert!(check_entwining(&e).all_hold());
        let m = ac_bimodule(&e);
        assert!(check_bimodule(&m).all_hold());
        let id_c = Matrix::identity(Rationals, 2);
        for r in 0..2 {
            assert_eq!(m.right(r), &c2().right_mult(r).kron(&id_c));
        }
    }

    #[test]
    fn zero_psi_breaks_unit() {
        let e = Entwining::flip(c2(), grouplike2());
        let z = e.with_psi(Matrix::zeros(Rationals, 4, 4)).unwrap();
        let r = check_entwining(&z);
        assert!(!r.holds(UNIT));
        assert!(!r.get(UNIT).unwrap().witnesses.is_empty());
    }

    #[test]
    fn shape_checked() {
        let bad = Entwining::new(c2(), grouplike2(), Matrix::zeros(Rationals, 3, 4));
        assert!(matches!(bad, Err(Error::DimensionMismatch(_))));
    }
}
