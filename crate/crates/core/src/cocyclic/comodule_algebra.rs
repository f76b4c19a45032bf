use crate::actions::ModuleAlgebra;
use crate::cocyclic::tensor::{add_kron, build_operator};
use crate::cocyclic::{module_to_comodule, Comodule};
use crate::error::{Error, Result};
use crate::hopf::{Algebra, AxiomCheck, HopfAlgebra, VerificationReport};
use crate::linalg::{unit_vector, vec_kron, Domain, LinearMap, Subspace, Vector};

/// An algebra `S` with a right coaction `S → S ⊗ C` that is an algebra map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra {
    algebra: Algebra,
    comodule: Comodule,
    converted: bool,
}

impl ComoduleAlgebra {
    pub fn new(algebra: Algebra, comodule: Comodule) -> Result<Self> {
        if algebra.dim() != comodule.dim() {
            return Err(Error::Dimension(format!(
                "coaction on dimension {} for an algebra of dimension {}",
                comodule.dim(),
                algebra.dim()
            )));
        }
        Ok(ComoduleAlgebra {
            algebra,
            comodule,
            converted: false,
        })
    }

    /// An `H`-module algebra becomes a right `H*`-comodule algebra with
    /// `σ(t) = Σ_i (e_i·t) ⊗ e_i*`.
    pub fn from_module_algebra(ma: &ModuleAlgebra) -> Result<Self> {
        let comodule = module_to_comodule(ma.module())?;
        Ok(ComoduleAlgebra {
            algebra: ma.algebra().clone(),
            comodule,
            converted: true,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn comodule(&self) -> &Comodule {
        &self.comodule
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.comodule.hopf()
    }

    pub fn domain(&self) -> Domain {
        self.algebra.domain()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// True when the coaction was derived from an action.
    pub fn converted(&self) -> bool {
        self.converted
    }

    /// Algebra axioms, `ρ(ab) = ρ(a)ρ(b)` with witness `(a, b)` and
    /// `ρ(1) = 1 ⊗ 1`.
    pub fn verify(&self) -> VerificationReport {
        let mut report = self.algebra.verify();
        let n = self.dim();
        let rho = self.comodule.coaction();
        let target = [&self.algebra, self.hopf().algebra()];
        let mut witness = None;
        'outer: for a in 0..n {
            for b in 0..n {
                let ab = self
                    .algebra
                    .mul(&self.algebra.basis_vector(a), &self.algebra.basis_vector(b));
                let lhs = rho.apply(&ab);
                let rhs = crate::hopf::tensor_product_mul(&target, &rho.column(a), &rho.column(b));
                if lhs != rhs {
                    witness = Some(vec![a, b]);
                    break 'outer;
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("comodule algebra", witness));
        let unit_ok =
            rho.apply(self.algebra.unit()) == vec_kron(self.algebra.unit(), self.hopf().unit());
        report.checks.push(AxiomCheck::from_result(
            "coaction unit",
            (!unit_ok).then(Vec::new),
        ));
        report
    }

    pub fn verified(self) -> Result<Self> {
        self.verify().into_result(self.algebra.labels())?;
        Ok(self)
    }

    /// Diagonal coaction on `S^{⊗k}`:
    /// `a₁ ⊗ ⋯ ⊗ a_k ↦ a₁⁰ ⊗ ⋯ ⊗ a_k⁰ ⊗ a₁¹ ⋯ a_k¹`.
    pub fn tensor_coaction(&self, k: usize) -> LinearMap {
        let d = self.domain();
        let (n, nh) = (self.dim(), self.hopf().dim());
        let hopf = self.hopf();
        let total = n.pow(k as u32);
        build_operator(d, &vec![n; k], total * nh, |tuple, out| {
            // (flattened slot index, accumulated H element, coefficient)
            let mut acc: Vec<(usize, Vector, crate::linalg::Scalar)> =
                vec![(0, hopf.unit().to_vec(), d.one())];
            for &a in tuple {
                let mut next = Vec::new();
                for (idx, hv, c) in &acc {
                    for (ap, h, e) in self.comodule.terms(a) {
                        let prod = hopf.mul(hv, &hopf.basis_vector(h));
                        next.push((idx * n + ap, prod, c * &e));
                    }
                }
                acc = next;
            }
            for (idx, hv, c) in acc {
                let slot = unit_vector(d, total, idx);
                add_kron(out, &[&slot, &hv], &c);
            }
        })
    }

    pub fn coinvariants(&self) -> Result<Subspace> {
        self.comodule.coinvariants()
    }

    /// `S ⊗ S → S ⊗ C`, `s ⊗ t ↦ s t⁰ ⊗ t¹`.
    pub fn galois_map(&self) -> LinearMap {
        let d = self.domain();
        let (n, nh) = (self.dim(), self.hopf().dim());
        build_operator(d, &[n, n], n * nh, |t, out| {
            let s = self.algebra.basis_vector(t[0]);
            for (tp, h, c) in self.comodule.terms(t[1]) {
                let prod = self.algebra.mul(&s, &self.algebra.basis_vector(tp));
                add_kron(out, &[&prod, &unit_vector(d, nh, h)], &c);
            }
        })
    }
}
