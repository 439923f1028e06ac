//! The structure file: one JSON object with keys `field`, `algebra`,
//! `coalgebra`, `coaction`, `entwining`, `bimodule`.
//!
//! Scalars are strings (`"3"`, `"-1/2"` over Q; residues `"0"`..`"p-1"`
//! over F_p). Tensor indices follow `(i, j) ↦ i·dim₂ + j`.

use serde::{Deserialize, Serialize};

use entwined::algcore::{Algebra, Bimodule, Coalgebra};
use entwined::exactlin::{Field, FieldSpec, Matrix, PrimeField, Rationals};
use entwined::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FieldDoc {
    Rationals,
    PrimeField { p: u64 },
}

/// `mult[i][j]` is the coefficient vector of `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
}

/// `comult[i][j][k]` is the coefficient of `c_j ⊗ c_k` in `Δ(c_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraDoc {
    pub dim: usize,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
}

/// `left[i]`/`right[i]` are the matrices of acting by `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDoc {
    pub dim: usize,
    pub left: Vec<Vec<Vec<String>>>,
    pub right: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub field: FieldDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<CoalgebraDoc>,
    /// `(dim A · dim C) × dim A`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Vec<String>>>,
    /// `(dim A · dim C) × (dim C · dim A)`, column `i·dim A + j` is `ψ(c_i ⊗ e_j)`
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entwining: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bimodule: Option<BimoduleDoc>,
}

impl StructureDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        match self.field {
            FieldDoc::Rationals => Ok(FieldSpec::Rationals),
            FieldDoc::PrimeField { p } => {
                PrimeField::new(p).map_err(|e| Error::Parse(format!("field.p: {e}")))?;
                Ok(FieldSpec::Prime(p))
            }
        }
    }
}

impl FieldDoc {
    pub fn from_spec(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rationals => FieldDoc::Rationals,
            FieldSpec::Prime(p) => FieldDoc::PrimeField { p },
        }
    }
}

/// A parsed structure over a concrete field.
#[derive(Clone, Debug, PartialEq)]
pub struct Structure<F: Field> {
    pub field: F,
    pub algebra: Option<Algebra<F>>,
    pub coalgebra: Option<Coalgebra<F>>,
    pub coaction: Option<Matrix<F>>,
    pub entwining: Option<Matrix<F>>,
    pub bimodule: Option<Bimodule<F>>,
}

/// A structure over whichever field its file names.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyStructure {
    Rationals(Structure<Rationals>),
    Prime(Structure<PrimeField>),
}

pub fn parse_structure(text: &str) -> Result<AnyStructure> {
    let doc = StructureDoc::parse(text)?;
    match doc.field_spec()? {
        FieldSpec::Rationals => Ok(AnyStructure::Rationals(Structure::from_doc(&doc, Rationals, None)?)),
        FieldSpec::Prime(p) => Ok(AnyStructure::Prime(Structure::from_doc(
            &doc,
            PrimeField::new(p).expect("validated above"),
            None,
        )?)),
    }
}

fn scalar<F: Field>(f: &F, s: &str, key: &str) -> Result<F::Elem> {
    f.parse(s).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{key}: {msg}")),
        other => other,
    })
}

fn vector<F: Field>(f: &F, v: &[String], len: usize, key: &str) -> Result<Vec<F::Elem>> {
    if v.len() != len {
        return Err(Error::DimensionMismatch(format!("{key}: expected length {len}, got {}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, s)| scalar(f, s, &format!("{key}[{i}]")))
        .collect()
}

fn matrix<F: Field>(f: &F, rows: &[Vec<String>], nrows: usize, ncols: usize, key: &str) -> Result<Matrix<F>> {
    if rows.len() != nrows {
        return Err(Error::DimensionMismatch(format!("{key}: expected {nrows} rows, got {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(nrows);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(Error::DimensionMismatch(format!(
                "{key}: expected {ncols} columns, row {i} has {}",
                row.len()
            )));
        }
        parsed.push(vector(f, row, ncols, &format!("{key}[{i}]"))?);
    }
    Ok(Matrix::from_fn(f.clone(), nrows, ncols, |i, j| parsed[i][j].clone()))
}

fn cube<F: Field>(f: &F, t: &[Vec<Vec<String>>], dim: usize, key: &str) -> Result<Vec<Vec<Vec<F::Elem>>>> {
    if t.len() != dim {
        return Err(Error::DimensionMismatch(format!("{key}: expected {dim} entries, got {}", t.len())));
    }
    t.iter()
        .enumerate()
        .map(|(i, m)| {
            let key = format!("{key}[{i}]");
            if m.len() != dim {
                return Err(Error::DimensionMismatch(format!("{key}: expected {dim} entries, got {}", m.len())));
            }
            m.iter()
                .enumerate()
                .map(|(j, v)| vector(f, v, dim, &format!("{key}[{j}]")))
                .collect()
        })
        .collect()
}

impl<F: Field> Structure<F> {
    /// `fallback` supplies the algebra when the document has none (a
    /// bimodule file for an algebra given elsewhere).
    pub fn from_doc(doc: &StructureDoc, field: F, fallback: Option<&Algebra<F>>) -> Result<Self> {
        if doc.field_spec()? != field.spec() {
            return Err(Error::Parse(format!("field: file is over {}, expected {}", doc.field_spec()?, field.spec())));
        }
        let f = &field;
        let algebra = match &doc.algebra {
            Some(a) => {
                let table = cube(f, &a.mult, a.dim, "algebra.mult")?;
                let unit = vector(f, &a.unit, a.dim, "algebra.unit")?;
                Some(Algebra::from_table(field.clone(), table, unit)?)
            }
            None => fallback.cloned(),
        };
        let coalgebra = match &doc.coalgebra {
            Some(c) => {
                let tables = cube(f, &c.comult, c.dim, "coalgebra.comult")?;
                let counit = vector(f, &c.counit, c.dim, "coalgebra.counit")?;
                Some(Coalgebra::from_tables(field.clone(), tables, counit)?)
            }
            None => None,
        };
        let needs = |key: &str, what: &str| Error::Malformed(format!("{key}: requires {what}"));
        let coaction = match &doc.coaction {
            Some(rows) => {
                let a = algebra.as_ref().ok_or_else(|| needs("coaction", "an algebra"))?;
                let c = coalgebra.as_ref().ok_or_else(|| needs("coaction", "a coalgebra"))?;
                Some(matrix(f, rows, a.dim() * c.dim(), a.dim(), "coaction")?)
            }
            None => None,
        };
        let entwining = match &doc.entwining {
            Some(rows) => {
                let a = algebra.as_ref().ok_or_else(|| needs("entwining", "an algebra"))?;
                let c = coalgebra.as_ref().ok_or_else(|| needs("entwining", "a coalgebra"))?;
                let n = a.dim() * c.dim();
                Some(matrix(f, rows, n, n, "entwining")?)
            }
            None => None,
        };
        let bimodule = match &doc.bimodule {
            Some(b) => {
                let a = algebra.as_ref().ok_or_else(|| needs("bimodule", "an algebra"))?;
                let side = |mats: &[Vec<Vec<String>>], key: &str| -> Result<Vec<Matrix<F>>> {
                    if mats.len() != a.dim() {
                        return Err(Error::DimensionMismatch(format!(
                            "{key}: expected {} action matrices, got {}",
                            a.dim(),
                            mats.len()
                        )));
                    }
                    mats.iter()
                        .enumerate()
                        .map(|(i, m)| matrix(f, m, b.dim, b.dim, &format!("{key}[{i}]")))
                        .collect()
                };
                let left = side(&b.left, "bimodule.left")?;
                let right = side(&b.right, "bimodule.right")?;
                Some(Bimodule::new(a.clone(), b.dim, left, right)?)
            }
            None => None,
        };
        Ok(Structure {
            field,
            algebra,
            coalgebra,
            coaction,
            entwining,
            bimodule,
        })
    }

    pub fn to_doc(&self) -> StructureDoc {
        let f = &self.field;
        let fmt_vec = |v: &[F::Elem]| v.iter().map(|x| f.format(x)).collect::<Vec<_>>();
        let fmt_mat = |m: &Matrix<F>| (0..m.rows()).map(|i| fmt_vec(m.row(i))).collect::<Vec<_>>();
        StructureDoc {
            field: FieldDoc::from_spec(f.spec()),
            algebra: self.algebra.as_ref().map(|a| AlgebraDoc {
                dim: a.dim(),
                mult: (0..a.dim())
                    .map(|i| (0..a.dim()).map(|j| fmt_vec(a.basis_product(i, j))).collect())
                    .collect(),
                unit: fmt_vec(a.unit()),
            }),
            coalgebra: self.coalgebra.as_ref().map(|c| CoalgebraDoc {
                dim: c.dim(),
                comult: c
                    .tables()
                    .iter()
                    .map(|t| t.iter().map(|row| fmt_vec(row)).collect())
                    .collect(),
                counit: fmt_vec(c.counit()),
            }),
            coaction: self.coaction.as_ref().map(fmt_mat),
            entwining: self.entwining.as_ref().map(fmt_mat),
            bimodule: self.bimodule.as_ref().map(|b| BimoduleDoc {
                dim: b.dim(),
                left: b.left_actions().iter().map(fmt_mat).collect(),
                right: b.right_actions().iter().map(fmt_mat).collect(),
            }),
        }
    }

    pub fn emit(&self) -> String {
        self.to_doc().to_text()
    }

    pub fn empty(field: F) -> Self {
        Structure {
            field,
            algebra: None,
            coalgebra: None,
            coaction: None,
            entwining: None,
            bimodule: None,
        }
    }
}
