//! Finite-dimensional algebras and Hopf algebras given by structure
//! constants: axiom verification, builtin families, integrals and duals.

mod algebra;
pub mod builtins;
pub mod groups;
mod hopf_algebra;
mod integrals;

pub use algebra::{format_combination, tensor_product_mul, Algebra, Sparse};
pub use hopf_algebra::HopfAlgebra;
pub use integrals::{IntegralSpace, Side};

use serde::{Deserialize, Serialize};

/// Outcome of one axiom, with the first failing basis index tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

impl AxiomCheck {
    pub fn pass(axiom: &str) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(axiom: &str, witness: Vec<usize>) -> Self {
        AxiomCheck {
            axiom: axiom.to_string(),
            passed: false,
            witness: Some(witness),
        }
    }

    pub fn from_result(axiom: &str, witness: Option<Vec<usize>>) -> Self {
        match witness {
            Some(w) => Self::fail(axiom, w),
            None => Self::pass(axiom),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<AxiomCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, axiom: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Turns the first failure into an [`crate::Error::Axiom`].
    pub fn into_result(self, labels: &[String]) -> crate::Result<()> {
        match self.first_failure() {
            None => Ok(()),
            Some(c) => Err(crate::Error::Axiom(describe_failure(c, labels))),
        }
    }
}

/// `"antipode fails at (x)"` using basis labels where indices fit.
pub fn describe_failure(check: &AxiomCheck, labels: &[String]) -> String {
    let witness = check
        .witness
        .as_ref()
        .map(|w| {
            w.iter()
                .map(|&i| labels.get(i).cloned().unwrap_or_else(|| i.to_string()))
                .collect::<Vec<_>>()
                .join(", ")
        })
        .unwrap_or_default();
    format!("{} fails at ({witness})", check.axiom)
}
