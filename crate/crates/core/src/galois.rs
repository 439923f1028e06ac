//! Comodule algebras and coalgebra-Galois extensions.
//!
//! For a right `C`-comodule `A` with coaction `δ(a) = a_0 ⊗ a_1`:
//!
//! - the coinvariants are `B = {b : δ(ba) = b a_0 ⊗ a_1 for all a}`;
//! - the Galois map is `β: A ⊗_B A -> A ⊗ C`, `a ⊗ a' ↦ a a'_0 ⊗ a'_1`;
//! - when `β` is bijective the translation map `γ = β⁻¹(1 ⊗ -)` exists and
//!   the canonical entwining is `ψ(c ⊗ a) = β(γ(c)·a)`.
//!
//! `A ⊗_B A` is realized as a quotient of `A ⊗ A` on a subset of the
//! standard basis; products inside it go through a section and the
//! projection, and well-definedness is checked at runtime.

use crate::algcore::report::{compare_maps, AxiomReport, DEFAULT_WITNESS_LIMIT};
use crate::algcore::{subalgebra, Algebra, Bimodule, Coalgebra, Subalgebra};
use crate::entwine::{ac_bimodule, Entwining};
use crate::error::{Error, Result};
use crate::exactlin::{quotient_basis, Field, Matrix, Quotient};

/// An algebra with a right coaction `δ: A -> A ⊗ C`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleAlgebra<F: Field> {
    a: Algebra<F>,
    c: Coalgebra<F>,
    /// `(dim A · dim C) × dim A`
    coaction: Matrix<F>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(a: Algebra<F>, c: Coalgebra<F>, coaction: Matrix<F>) -> Result<Self> {
        if coaction.rows() != a.dim() * c.dim() || coaction.cols() != a.dim() {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}×{}, expected {}×{}",
                coaction.rows(),
                coaction.cols(),
                a.dim() * c.dim(),
                a.dim()
            )));
        }
        Ok(ComoduleAlgebra { a, c, coaction })
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.a
    }
    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.c
    }
    pub fn coaction(&self) -> &Matrix<F> {
        &self.coaction
    }
    pub fn field(&self) -> &F {
        self.a.field()
    }
}

pub fn check_coaction<F: Field>(ca: &ComoduleAlgebra<F>) -> AxiomReport {
    check_coaction_limited(ca, DEFAULT_WITNESS_LIMIT)
}

/// `(id ⊗ ε)δ = id` and `(δ ⊗ id)δ = (id ⊗ Δ)δ`.
pub fn check_coaction_limited<F: Field>(ca: &ComoduleAlgebra<F>, limit: usize) -> AxiomReport {
    let f = ca.field().clone();
    let id_a = Matrix::identity(f.clone(), ca.a.dim());
    let id_c = Matrix::identity(f, ca.c.dim());
    let delta = &ca.coaction;
    let mut report = AxiomReport::new("coaction");
    let counit = id_a.kron(&ca.c.counit_matrix()).mul(delta);
    report.push(compare_maps("counit", &counit, &id_a, limit, |i| {
        format!("(id⊗ε)δ(e{i}) != e{i}")
    }));
    let lhs = delta.kron(&id_c).mul(delta);
    let rhs = id_a.kron(ca.c.comult()).mul(delta);
    report.push(compare_maps("coassociativity", &lhs, &rhs, limit, |i| {
        format!("(δ⊗id)δ(e{i}) != (id⊗Δ)δ(e{i})")
    }));
    report
}

/// Coinvariant subalgebra: `b` with `δ ∘ L_b = (L_b ⊗ id) ∘ δ`, i.e. the
/// condition quantified over every basis element of `A`.
pub fn coinvariants<F: Field>(ca: &ComoduleAlgebra<F>) -> Result<Subalgebra<F>> {
    let f = ca.field().clone();
    let (da, dc) = (ca.a.dim(), ca.c.dim());
    let id_c = Matrix::identity(f.clone(), dc);
    let blocks: Vec<Matrix<F>> = (0..da)
        .map(|i| {
            let l = ca.a.left_mult(i);
            ca.coaction.mul(l).sub(&l.kron(&id_c).mul(&ca.coaction))
        })
        .collect();
    let rows = da * dc * da;
    let system = Matrix::from_fn(f, rows, da, |r, i| blocks[i].entries()[r].clone());
    let basis = system.kernel_basis();
    subalgebra(&ca.a, &basis).map_err(|e| Error::Consistency(format!("coinvariants are not a subalgebra: {e}")))
}

/// `A ⊗_B A` as a quotient of `A ⊗ A` by `span{ab ⊗ a' - a ⊗ ba'}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOverB<F: Field> {
    pub quotient: Quotient<F>,
    /// Spanning set of the relations, as columns in `A ⊗ A`.
    pub relations: Matrix<F>,
}

impl<F: Field> TensorOverB<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }
    pub fn projection(&self) -> &Matrix<F> {
        &self.quotient.projection
    }
    pub fn section(&self) -> Matrix<F> {
        self.quotient.section()
    }
}

pub fn tensor_over_b<F: Field>(a: &Algebra<F>, b_basis: &Matrix<F>) -> TensorOverB<F> {
    let f = a.field().clone();
    let n = a.dim();
    let mut relations = Vec::with_capacity(n * n * b_basis.cols());
    for bi in 0..b_basis.cols() {
        let b = b_basis.column(bi);
        for i in 0..n {
            let ab = a.mul(&a.basis_vector(i), &b);
            for j in 0..n {
                let ba = a.mul(&b, &a.basis_vector(j));
                let lhs = Matrix::column_vector(f.clone(), ab.clone()).kron(&Matrix::column_vector(f.clone(), a.basis_vector(j)));
                let rhs = Matrix::column_vector(f.clone(), a.basis_vector(i)).kron(&Matrix::column_vector(f.clone(), ba));
                relations.push(lhs.sub(&rhs).column(0));
            }
        }
    }
    let relations = Matrix::from_columns(f.clone(), n * n, &relations);
    let quotient = quotient_basis(&f, n * n, &relations);
    TensorOverB { quotient, relations }
}

/// Lift of the Galois map to `A ⊗ A -> A ⊗ C`: `e_i ⊗ e_j ↦ e_i δ(e_j)`.
pub fn galois_lift<F: Field>(ca: &ComoduleAlgebra<F>) -> Matrix<F> {
    let f = ca.field().clone();
    let id_a = Matrix::identity(f.clone(), ca.a.dim());
    let id_c = Matrix::identity(f, ca.c.dim());
    ca.a.mult_matrix().kron(&id_c).mul(&id_a.kron(&ca.coaction))
}

/// The Galois map on the quotient and whether it is bijective.
///
/// Fails with a consistency error if the lift does not vanish on the
/// relations (that would mean the coinvariants were computed wrongly).
pub fn galois_beta<F: Field>(ca: &ComoduleAlgebra<F>, aba: &TensorOverB<F>) -> Result<(Matrix<F>, bool)> {
    let lift = galois_lift(ca);
    if !lift.mul(&aba.relations).is_zero() {
        return Err(Error::Consistency("Galois map does not vanish on the B-balancing relations".into()));
    }
    let beta = lift.mul(&aba.section());
    let target = ca.a.dim() * ca.c.dim();
    let is_galois = aba.dim() == target && beta.rank() == target;
    Ok((beta, is_galois))
}

/// A comodule algebra together with everything derived from it.
#[derive(Clone, Debug)]
pub struct GaloisExtension<F: Field> {
    base: ComoduleAlgebra<F>,
    b: Subalgebra<F>,
    aba: TensorOverB<F>,
    beta: Matrix<F>,
    is_galois: bool,
    gamma: Option<Matrix<F>>,
    left_on_aba: Vec<Matrix<F>>,
    right_on_aba: Vec<Matrix<F>>,
}

impl<F: Field> GaloisExtension<F> {
    pub fn new(base: ComoduleAlgebra<F>) -> Result<Self> {
        let report = check_coaction(&base);
        if !report.all_hold() {
            return Err(Error::Invalid(format!("coaction axioms fail:\n{report}")));
        }
        let b = coinvariants(&base)?;
        let aba = tensor_over_b(&base.a, &b.inclusion);
        let (beta, is_galois) = galois_beta(&base, &aba)?;
        let (left_on_aba, right_on_aba) = aba_actions(&base.a, &aba)?;
        let mut ext = GaloisExtension {
            base,
            b,
            aba,
            beta,
            is_galois,
            gamma: None,
            left_on_aba,
            right_on_aba,
        };
        if is_galois {
            ext.gamma = Some(translation_gamma(&ext)?);
        }
        Ok(ext)
    }

    pub fn base(&self) -> &ComoduleAlgebra<F> {
        &self.base
    }
    pub fn algebra(&self) -> &Algebra<F> {
        &self.base.a
    }
    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.base.c
    }
    pub fn field(&self) -> &F {
        self.base.field()
    }
    pub fn coinvariants(&self) -> &Subalgebra<F> {
        &self.b
    }
    pub fn b_basis(&self) -> &Matrix<F> {
        &self.b.inclusion
    }
    pub fn tensor_over_b(&self) -> &TensorOverB<F> {
        &self.aba
    }
    pub fn beta(&self) -> &Matrix<F> {
        &self.beta
    }
    pub fn is_galois(&self) -> bool {
        self.is_galois
    }

    pub fn gamma(&self) -> Result<&Matrix<F>> {
        self.gamma.as_ref().ok_or(Error::NotGalois)
    }

    /// Left multiplication by `e_j` on `A ⊗_B A`.
    pub fn left_on_aba(&self, j: usize) -> &Matrix<F> {
        &self.left_on_aba[j]
    }

    /// Right multiplication by `e_j` on `A ⊗_B A` (in the second leg).
    pub fn right_on_aba(&self, j: usize) -> &Matrix<F> {
        &self.right_on_aba[j]
    }

    /// `A ⊗_B A` with its natural `A`-bimodule structure.
    pub fn aba_bimodule(&self) -> Bimodule<F> {
        Bimodule::new(
            self.base.a.clone(),
            self.aba.dim(),
            self.left_on_aba.clone(),
            self.right_on_aba.clone(),
        )
        .expect("action shapes match the quotient")
    }

    /// Class of `x ⊗ y` in `A ⊗_B A`.
    pub fn class_of(&self, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field().clone();
        let xy = Matrix::column_vector(f.clone(), x.to_vec()).kron(&Matrix::column_vector(f, y.to_vec()));
        self.aba.projection().mul_vec(&xy.column(0))
    }

    pub fn canonical_psi(&self) -> Result<Entwining<F>> {
        canonical_psi(self)
    }
}

fn aba_actions<F: Field>(a: &Algebra<F>, aba: &TensorOverB<F>) -> Result<(Vec<Matrix<F>>, Vec<Matrix<F>>)> {
    let f = a.field().clone();
    let id = Matrix::identity(f, a.dim());
    let proj = aba.projection();
    let sec = aba.section();
    let mut left = Vec::with_capacity(a.dim());
    let mut right = Vec::with_capacity(a.dim());
    for j in 0..a.dim() {
        let l = a.left_mult(j).kron(&id);
        let r = id.kron(a.right_mult(j));
        if !proj.mul(&l.mul(&aba.relations)).is_zero() || !proj.mul(&r.mul(&aba.relations)).is_zero() {
            return Err(Error::Consistency(format!(
                "multiplication by e{j} does not preserve the B-balancing relations"
            )));
        }
        left.push(proj.mul(&l).mul(&sec));
        right.push(proj.mul(&r).mul(&sec));
    }
    Ok((left, right))
}

/// `γ = β⁻¹ ∘ (η ⊗ id)`, a `dim(A⊗_B A) × dim C` matrix.
pub fn translation_gamma<F: Field>(ext: &GaloisExtension<F>) -> Result<Matrix<F>> {
    if !ext.is_galois {
        return Err(Error::NotGalois);
    }
    let f = ext.field().clone();
    let eta = Matrix::column_vector(f.clone(), ext.algebra().unit().to_vec());
    let rhs = eta.kron(&Matrix::identity(f, ext.coalgebra().dim()));
    let gamma = ext
        .beta
        .solve_matrix(&rhs)
        .ok_or_else(|| Error::Consistency("bijective Galois map has no preimage of 1 ⊗ c".into()))?;
    if ext.beta.mul(&gamma) != rhs {
        return Err(Error::Consistency("β ∘ γ != η ⊗ id".into()));
    }
    Ok(gamma)
}

/// `ψ(c ⊗ a) = β(γ(c)·a)`, built column by column.
pub fn canonical_psi<F: Field>(ext: &GaloisExtension<F>) -> Result<Entwining<F>> {
    let gamma = ext.gamma()?;
    let (da, dc) = (ext.algebra().dim(), ext.coalgebra().dim());
    let f = ext.field().clone();
    let mut columns = Vec::with_capacity(dc * da);
    for i in 0..dc {
        let g = gamma.column(i);
        for j in 0..da {
            let moved = ext.right_on_aba(j).mul_vec(&g);
            columns.push(ext.beta.mul_vec(&moved));
        }
    }
    let psi = Matrix::from_columns(f, da * dc, &columns);
    Entwining::new(ext.algebra().clone(), ext.coalgebra().clone(), psi)
}

/// `β` is a map of `A`-bimodules when `A ⊗ C` carries the ψ-twisted right
/// action: compared on every basis element of `A ⊗_B A` and of `A`.
pub fn check_beta_bimodule<F: Field>(ext: &GaloisExtension<F>) -> Result<bool> {
    let psi = canonical_psi(ext)?;
    let ac = ac_bimodule(&psi);
    let beta = &ext.beta;
    Ok((0..ext.algebra().dim()).all(|j| {
        beta.mul(ext.right_on_aba(j)) == ac.right(j).mul(beta) && beta.mul(ext.left_on_aba(j)) == ac.left(j).mul(beta)
    }))
}

/// `a_0 l(a_1) ⊗ r(a_1) = 1 ⊗ a` in `A ⊗_B A` for every basis element `a`.
pub fn check_translation_identity<F: Field>(ext: &GaloisExtension<F>) -> Result<bool> {
    let gamma = ext.gamma()?;
    let f = ext.field().clone();
    let (da, dc) = (ext.algebra().dim(), ext.coalgebra().dim());
    let delta = ext.base.coaction();
    for k in 0..da {
        let mut acc = vec![f.zero(); ext.aba.dim()];
        for alpha in 0..da {
            for i in 0..dc {
                let coef = delta.get(alpha * dc + i, k);
                if f.is_zero(coef) {
                    continue;
                }
                let term = ext.left_on_aba(alpha).mul_vec(&gamma.column(i));
                for (s, t) in acc.iter_mut().zip(&term) {
                    *s = f.add(s, &f.mul(coef, t));
                }
            }
        }
        let expected = ext.class_of(ext.algebra().unit(), &ext.algebra().basis_vector(k));
        if acc != expected {
            return Ok(false);
        }
    }
    Ok(true)
}
