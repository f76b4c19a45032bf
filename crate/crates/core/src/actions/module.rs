use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, HopfAlgebra, VerificationReport};
use crate::linalg::{Domain, LinearMap, Scalar, Subspace, Vector};

/// A finite-dimensional left module over a Hopf algebra, stored as one
/// action matrix per basis element of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfModule {
    hopf: HopfAlgebra,
    dim: usize,
    action: Vec<LinearMap>,
}

/// `V^H`, `I·V` and the Hopfological homology `V^H / I·V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub invariants_dim: usize,
    pub integral_image_dim: usize,
    pub homology_dim: usize,
}

impl HopfModule {
    /// `(h, s, t, c)` means `e_h · e_s += c e_t`.
    pub fn from_triples(
        hopf: HopfAlgebra,
        dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let d = hopf.domain();
        let mut action = vec![LinearMap::zeros(d, dim, dim); hopf.dim()];
        for (h, s, t, c) in triples {
            if h >= hopf.dim() || s >= dim || t >= dim {
                return Err(Error::Format(format!(
                    "action triple ({h}, {s}, {t}) out of range"
                )));
            }
            if c.domain() != d {
                return Err(Error::DomainMismatch {
                    left: d,
                    right: c.domain(),
                });
            }
            let cur = action[h].get(t, s) + &c;
            action[h].set(t, s, cur);
        }
        Ok(HopfModule { hopf, dim, action })
    }

    pub fn from_matrices(hopf: HopfAlgebra, action: Vec<LinearMap>) -> Result<Self> {
        if action.len() != hopf.dim() {
            return Err(Error::Format(format!(
                "{} action matrices for a {}-dimensional Hopf algebra",
                action.len(),
                hopf.dim()
            )));
        }
        let dim = action.first().map(|m| m.rows()).unwrap_or(0);
        for m in &action {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Format(
                    "action matrices must be square of one size".into(),
                ));
            }
            if m.domain() != hopf.domain() {
                return Err(Error::DomainMismatch {
                    left: hopf.domain(),
                    right: m.domain(),
                });
            }
        }
        Ok(HopfModule { hopf, dim, action })
    }

    /// `h·v = ε(h)v`.
    pub fn trivial(hopf: HopfAlgebra, dim: usize) -> Self {
        let d = hopf.domain();
        let action = hopf
            .counit()
            .iter()
            .map(|e| LinearMap::identity(d, dim).scale(e))
            .collect();
        HopfModule { hopf, dim, action }
    }

    /// `H` acting on itself by left multiplication.
    pub fn regular(hopf: HopfAlgebra) -> Self {
        let action = (0..hopf.dim())
            .map(|h| hopf.algebra().left_mul_matrix(&hopf.basis_vector(h)))
            .collect();
        HopfModule {
            dim: hopf.dim(),
            hopf,
            action,
        }
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        &self.hopf
    }

    pub fn domain(&self) -> Domain {
        self.hopf.domain()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, h: usize) -> &LinearMap {
        &self.action[h]
    }

    pub fn actions(&self) -> &[LinearMap] {
        &self.action
    }

    /// Matrix by which an arbitrary element of `H` acts.
    pub fn action_of(&self, h: &[Scalar]) -> LinearMap {
        let mut out = LinearMap::zeros(self.domain(), self.dim, self.dim);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c)).expect("shape");
            }
        }
        out
    }

    pub fn act(&self, h: &[Scalar], v: &[Scalar]) -> Vector {
        self.action_of(h).apply(v)
    }

    /// `(h, s, t, c)` triples of the action tensor.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (h, m) in self.action.iter().enumerate() {
            for s in 0..self.dim {
                for t in 0..self.dim {
                    let c = m.get(t, s);
                    if !c.is_zero() {
                        out.push((h, s, t, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Module law `(hk)·v = h·(k·v)` with witness `(h, k, v)` and unit law
    /// `1·v = v` with witness `(v)`.
    pub fn verify(&self) -> VerificationReport {
        let n = self.hopf.dim();
        let mut assoc = None;
        'outer: for h in 0..n {
            for k in 0..n {
                let hk = self
                    .hopf
                    .mul(&self.hopf.basis_vector(h), &self.hopf.basis_vector(k));
                let lhs = self.action_of(&hk);
                let rhs = self.action[h].compose(&self.action[k]).expect("shape");
                if let Some(v) = first_differing_column(&lhs, &rhs) {
                    assoc = Some(vec![h, k, v]);
                    break 'outer;
                }
            }
        }
        let unit = self.action_of(self.hopf.unit());
        let id = LinearMap::identity(self.domain(), self.dim);
        let unit_witness = first_differing_column(&unit, &id).map(|v| vec![v]);
        VerificationReport {
            checks: vec![
                AxiomCheck::from_result("module associativity", assoc),
                AxiomCheck::from_result("module unit", unit_witness),
            ],
        }
    }

    pub fn verified(self) -> Result<Self> {
        self.verify().into_result(self.hopf.labels())?;
        Ok(self)
    }

    /// Kernel of the stacked maps `ρ(h) − ε(h)·id`.
    pub fn invariants(&self) -> Result<Subspace> {
        let d = self.domain();
        let id = LinearMap::identity(d, self.dim);
        let blocks = self
            .action
            .iter()
            .zip(self.hopf.counit())
            .map(|(m, e)| m.sub(&id.scale(e)))
            .collect::<Result<Vec<_>>>()?;
        Subspace::kernel(&LinearMap::vstack(d, self.dim, &blocks)?)
    }

    /// `I·V`, the image of the left integral.
    pub fn integral_image(&self) -> Result<Subspace> {
        let lambda = self.hopf.left_integrals()?;
        Subspace::image(&self.action_of(lambda.generator()))
    }

    /// Kernel of `H → End(V)` is zero.
    pub fn is_faithful(&self) -> Result<bool> {
        Ok(self.representation_matrix().rank()? == self.hopf.dim())
    }

    /// `H → End(V)` with `End(V)` flattened row-major.
    pub fn representation_matrix(&self) -> LinearMap {
        let cols: Vec<Vector> = self.action.iter().map(|m| m.entries().to_vec()).collect();
        LinearMap::from_columns(self.domain(), self.dim * self.dim, &cols).expect("shape")
    }

    /// `V^H / I·V`; fails if the integral image escapes the invariants.
    pub fn hopfological_homology(&self) -> Result<HomologyReport> {
        let inv = self.invariants()?;
        let iv = self.integral_image()?;
        if !iv.is_subspace_of(&inv)? {
            return Err(Error::Inconsistent(
                "the integral image is not contained in the invariants".into(),
            ));
        }
        Ok(HomologyReport {
            invariants_dim: inv.dim(),
            integral_image_dim: iv.dim(),
            homology_dim: inv.dim() - iv.dim(),
        })
    }

    pub fn direct_sum(&self, other: &HopfModule) -> Result<HopfModule> {
        if !self.hopf.same_structure(&other.hopf) {
            return Err(Error::Precondition(
                "direct sum of modules over different Hopf algebras".into(),
            ));
        }
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(HopfModule {
            hopf: self.hopf.clone(),
            dim: self.dim + other.dim,
            action,
        })
    }
}

pub(crate) fn first_differing_column(a: &LinearMap, b: &LinearMap) -> Option<usize> {
    (0..a.cols()).find(|&c| (0..a.rows()).any(|r| a.get(r, c) != b.get(r, c)))
}
