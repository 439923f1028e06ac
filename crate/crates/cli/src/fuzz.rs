//! Seeded random search for counterexamples to the Galois-extension
//! properties.
//!
//! Each trial builds a comodule algebra from
//! * an algebra of dimension `D` (cyclic group algebra, `k^D`, or
//!   `k[x]/(x^D)`) in a random basis,
//! * the group-like coalgebra of dimension `E` in a random basis,
//! * a coaction given by a `C`-grading of `A`: a random basis of `A` whose
//!   vectors are labelled by group-likes (or, for a group algebra with
//!   `E | D`, the grading by cosets of the subgroup of order `D/E`).
//!
//! Trials that come out Galois are checked for the entwining axioms of the
//! canonical ψ, the bimodule property of β, the translation identity, and
//! `dim H_ψ⁰(A, M) = dim M^B` on the regular and a random bimodule.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use entwined::algcore::{check_algebra, check_coalgebra, restrict_bimodule, Algebra, Bimodule};
use entwined::entwine::{check_entwining, Entwining};
use entwined::exactlin::{Field, Matrix};
use entwined::galois::{check_beta_bimodule, check_coaction, check_translation_identity, ComoduleAlgebra, GaloisExtension};
use entwined::homology::entwined_cohomology;
use entwined::zoo::{
    group_algebra, grouplike_coalgebra, product_of_fields, random_bimodule, random_scalar, truncated_polynomial,
    GroupPresentation,
};
use entwined::Result;

use crate::format::Structure;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub dim_a: usize,
    pub dim_c: usize,
    pub trials: usize,
    pub seed: u64,
    pub perturb: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    Cyclic,
    Product,
    Truncated,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Cyclic => "cyclic group algebra",
            AlgebraKind::Product => "product of fields",
            AlgebraKind::Truncated => "truncated polynomials",
        }
    }
}

/// Everything needed to rebuild one trial's structure.
#[derive(Clone, Debug, PartialEq)]
pub struct Case<F: Field> {
    pub kind: AlgebraKind,
    /// New basis of `A` (columns, in the standard basis).
    pub t: Matrix<F>,
    /// New basis of `C`.
    pub q: Matrix<F>,
    /// Graded basis of `A` (columns, standard basis) and their labels.
    pub grading: Matrix<F>,
    pub labels: Vec<usize>,
    /// Seed for the random coefficient bimodule.
    pub bimodule_seed: u64,
}

impl<F: Field> Case<F> {
    fn base_algebra(&self, field: &F) -> Result<Algebra<F>> {
        let d = self.t.rows();
        match self.kind {
            AlgebraKind::Cyclic => group_algebra(&GroupPresentation::cyclic(d), field.clone()),
            AlgebraKind::Product => product_of_fields(d, field.clone()),
            AlgebraKind::Truncated => truncated_polynomial(d, field.clone()),
        }
    }

    pub fn build(&self, field: &F) -> Result<ComoduleAlgebra<F>> {
        let (d, e) = (self.t.rows(), self.q.rows());
        let a0 = self.base_algebra(field)?;
        let c0 = grouplike_coalgebra(e, field.clone())?;
        let g_inv = self
            .grading
            .inverse()
            .ok_or_else(|| entwined::Error::Invalid("grading basis is singular".into()))?;
        // δ₀(e_j) = Σ_t G⁻¹[t][j] · g_t ⊗ c_{label t}
        let mut delta0 = Matrix::zeros(field.clone(), d * e, d);
        for j in 0..d {
            for t in 0..d {
                let w = g_inv.get(t, j);
                if field.is_zero(w) {
                    continue;
                }
                for alpha in 0..d {
                    let v = field.mul(w, self.grading.get(alpha, t));
                    delta0.add_at(alpha * e + self.labels[t], j, &v);
                }
            }
        }
        let t_inv = self.t.inverse().expect("basis change is invertible");
        let q_inv = self.q.inverse().expect("basis change is invertible");
        let coaction = t_inv.kron(&q_inv).mul(&delta0).mul(&self.t);
        ComoduleAlgebra::new(a0.rebase(&self.t)?, c0.rebase(&self.q)?, coaction)
    }

    fn matrices_mut(&mut self) -> [&mut Matrix<F>; 3] {
        [&mut self.t, &mut self.q, &mut self.grading]
    }
}

fn random_invertible<F: Field>(field: &F, n: usize, rng: &mut ChaCha8Rng) -> Matrix<F> {
    loop {
        let m = Matrix::from_fn(field.clone(), n, n, |_, _| random_scalar(field, rng));
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_case<F: Field>(field: &F, dim_a: usize, dim_c: usize, rng: &mut ChaCha8Rng) -> Case<F> {
    let kind = match rng.gen_range(0..3) {
        0 => AlgebraKind::Cyclic,
        1 => AlgebraKind::Product,
        _ => AlgebraKind::Truncated,
    };
    let t = random_invertible(field, dim_a, rng);
    let q = random_invertible(field, dim_c, rng);
    let (grading, labels) = if kind == AlgebraKind::Cyclic && dim_a.is_multiple_of(dim_c) && rng.gen_bool(0.5) {
        // cosets of the subgroup of order dim_a/dim_c: g^k ↦ k mod dim_c
        (Matrix::identity(field.clone(), dim_a), (0..dim_a).map(|k| k % dim_c).collect())
    } else {
        let g = random_invertible(field, dim_a, rng);
        (g, (0..dim_a).map(|_| rng.gen_range(0..dim_c)).collect())
    };
    Case {
        kind,
        t,
        q,
        grading,
        labels,
        bimodule_seed: rng.gen(),
    }
}

/// The properties every trial must satisfy; `None` when all hold.
pub fn check_properties<F: Field>(field: &F, case: &Case<F>) -> Option<String> {
    let ca = match case.build(field) {
        Ok(ca) => ca,
        Err(e) => return Some(format!("construction failed: {e}")),
    };
    if !check_algebra(ca.algebra()).all_hold() {
        return Some("algebra axioms".into());
    }
    if !check_coalgebra(ca.coalgebra()).all_hold() {
        return Some("coalgebra axioms".into());
    }
    if !check_coaction(&ca).all_hold() {
        return Some("coaction axioms".into());
    }
    let ext = match GaloisExtension::new(ca) {
        Ok(ext) => ext,
        Err(e) => return Some(format!("Galois pipeline failed: {e}")),
    };
    if !ext.is_galois() {
        return None;
    }
    galois_properties(&ext, case.bimodule_seed).err()
}

fn galois_properties<F: Field>(ext: &GaloisExtension<F>, seed: u64) -> std::result::Result<(), String> {
    let fail = |what: &str| Err(what.to_string());
    let psi = ext.canonical_psi().map_err(|e| format!("canonical entwining: {e}"))?;
    let report = check_entwining(&psi);
    if !report.all_hold() {
        return Err(format!("canonical entwining axioms:\n{report}"));
    }
    if !check_beta_bimodule(ext).map_err(|e| e.to_string())? {
        return fail("β is not a bimodule map");
    }
    if !check_translation_identity(ext).map_err(|e| e.to_string())? {
        return fail("translation identity");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = ext.algebra();
    for m in [Bimodule::regular(a), random_bimodule(a, &mut rng)] {
        let h0 = entwined_cohomology(&psi, &m, 0).map_err(|e| e.to_string())?.dims[0];
        let m_b = restrict_bimodule(&m, ext.b_basis()).map_err(|e| e.to_string())?;
        let expected = m_b.invariants_dim();
        if h0 != expected {
            return Err(format!(
                "H⁰ disagreement on a {}-dimensional bimodule: entwined {h0}, coinvariant side {expected}",
                m.dim()
            ));
        }
    }
    Ok(())
}

/// Move the case toward the identity while `fails` keeps failing.
pub fn shrink<F: Field>(field: &F, case: &Case<F>, fails: &dyn Fn(&Case<F>) -> bool) -> Case<F> {
    let mut best = case.clone();
    loop {
        let mut progressed = false;
        for which in 0..3 {
            let n = best.matrices_mut()[which].rows();
            for i in 0..n {
                for j in 0..n {
                    let target = if i == j { field.one() } else { field.zero() };
                    if *best.matrices_mut()[which].get(i, j) == target {
                        continue;
                    }
                    let mut trial = best.clone();
                    trial.matrices_mut()[which].set(i, j, target);
                    if trial.matrices_mut()[which].rank() == n && fails(&trial) {
                        best = trial;
                        progressed = true;
                    }
                }
            }
        }
        if !progressed {
            return best;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub trial: usize,
    pub message: String,
    /// The shrunk case as a structure file.
    pub structure: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub galois_trials: usize,
    pub findings: Vec<Finding>,
    /// Perturbed mode: trials whose perturbed ψ was flagged.
    pub detected: Option<usize>,
}

impl FuzzReport {
    /// Zero findings, and in perturbed mode at least 95% detection.
    pub fn ok(&self) -> bool {
        let detection_ok = match self.detected {
            Some(d) => d * 100 >= 95 * self.config.trials,
            None => true,
        };
        self.findings.is_empty() && detection_ok
    }
}

fn trial_seeds(seed: u64, trials: usize) -> Vec<u64> {
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| master.gen()).collect()
}

pub fn run_fuzz<F: Field>(field: &F, cfg: FuzzConfig) -> FuzzReport {
    run_fuzz_with(field, cfg, &|case| check_properties(field, case))
}

/// As [`run_fuzz`] with a custom property (used to exercise shrinking).
pub fn run_fuzz_with<F: Field>(
    field: &F,
    cfg: FuzzConfig,
    property: &(dyn Fn(&Case<F>) -> Option<String> + Sync),
) -> FuzzReport {
    struct Outcome {
        galois: bool,
        finding: Option<Finding>,
        detected: bool,
    }
    let outcomes: Vec<Outcome> = trial_seeds(cfg.seed, cfg.trials)
        .into_par_iter()
        .enumerate()
        .map(|(index, s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let case = random_case(field, cfg.dim_a, cfg.dim_c, &mut rng);
            let ext = case.build(field).ok().and_then(|ca| GaloisExtension::new(ca).ok());
            let galois = ext.as_ref().is_some_and(|e| e.is_galois());
            let finding = property(&case).map(|message| {
                let small = shrink(field, &case, &|c| property(c).is_some());
                Finding {
                    trial: index,
                    message,
                    structure: case_structure(field, &small),
                }
            });
            let detected = cfg.perturb && perturbation_detected(field, ext.as_ref(), &mut rng);
            Outcome {
                galois,
                finding,
                detected,
            }
        })
        .collect();
    FuzzReport {
        config: cfg,
        galois_trials: outcomes.iter().filter(|o| o.galois).count(),
        detected: cfg.perturb.then(|| outcomes.iter().filter(|o| o.detected).count()),
        findings: outcomes.into_iter().filter_map(|o| o.finding).collect(),
    }
}

/// Change one entry of an entwining (the canonical one when Galois, the
/// flip otherwise) and see whether the checker notices.
fn perturbation_detected<F: Field>(
    field: &F,
    ext: Option<&GaloisExtension<F>>,
    rng: &mut ChaCha8Rng,
) -> bool {
    let psi = match ext {
        Some(e) if e.is_galois() => match e.canonical_psi() {
            Ok(p) => p,
            Err(_) => return false,
        },
        Some(e) => Entwining::flip(e.algebra().clone(), e.coalgebra().clone()),
        None => return false,
    };
    let n = psi.psi().rows();
    let (r, c) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let delta = loop {
        let d = random_scalar(field, rng);
        if !field.is_zero(&d) {
            break d;
        }
    };
    let mut m = psi.psi().clone();
    m.add_at(r, c, &delta);
    let perturbed = psi.with_psi(m).expect("same shape");
    !check_entwining(&perturbed).all_hold()
}

pub fn case_structure<F: Field>(field: &F, case: &Case<F>) -> String {
    match case.build(field) {
        Ok(ca) => Structure {
            field: field.clone(),
            algebra: Some(ca.algebra().clone()),
            coalgebra: Some(ca.coalgebra().clone()),
            coaction: Some(ca.coaction().clone()),
            entwining: None,
            bimodule: None,
        }
        .emit(),
        Err(e) => format!("(case could not be rebuilt: {e})\n"),
    }
}
