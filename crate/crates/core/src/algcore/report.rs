use std::fmt;

use crate::exactlin::{Field, Matrix};

/// How many failing witnesses a check records.
pub const DEFAULT_WITNESS_LIMIT: usize = 5;

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub holds: bool,
    /// Total number of failing basis elements (not capped).
    pub failures: usize,
    /// Up to the witness limit, human-readable failing basis elements.
    pub witnesses: Vec<String>,
}

impl AxiomCheck {
    pub fn new(name: impl Into<String>) -> Self {
        AxiomCheck {
            name: name.into(),
            holds: true,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    pub fn fail(&mut self, limit: usize, witness: impl FnOnce() -> String) {
        self.holds = false;
        self.failures += 1;
        if self.witnesses.len() < limit {
            self.witnesses.push(witness());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub subject: String,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn new(subject: impl Into<String>) -> Self {
        AxiomReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: AxiomCheck) {
        self.checks.push(check);
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Panics on an unknown check name.
    pub fn holds(&self, name: &str) -> bool {
        self.get(name)
            .unwrap_or_else(|| panic!("no check named {name:?} in {} report", self.subject))
            .holds
    }

    pub fn failing(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}:", self.subject)?;
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "FAIL" };
            write!(f, "  {:<20} {mark}", c.name)?;
            if !c.holds {
                write!(f, " ({} failing)", c.failures)?;
            }
            writeln!(f)?;
            for w in &c.witnesses {
                writeln!(f, "      {w}")?;
            }
        }
        Ok(())
    }
}

/// Compare two linear maps column by column (a column is the image of a
/// domain basis element), labelling failures with `label(column)`.
pub(crate) fn compare_maps<F: Field>(
    name: &str,
    lhs: &Matrix<F>,
    rhs: &Matrix<F>,
    limit: usize,
    label: impl Fn(usize) -> String,
) -> AxiomCheck {
    debug_assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()));
    let mut check = AxiomCheck::new(name);
    for j in 0..lhs.cols() {
        if (0..lhs.rows()).any(|i| lhs.get(i, j) != rhs.get(i, j)) {
            check.fail(limit, || label(j));
        }
    }
    check
}
