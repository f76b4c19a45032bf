use crate::actions::HopfModule;
use crate::cocyclic::tensor::{add_kron, column_support};
use crate::cocyclic::Comodule;
use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, HopfAlgebra};
use crate::linalg::{Domain, LinearMap, Scalar};

/// A module and right comodule over the same Hopf algebra, read as a
/// left-left object through `m₍₋₁₎ ⊗ m₍₀₎ = α⁻¹(m₍₁₎) ⊗ m₍₀₎`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AydModule {
    action: HopfModule,
    coaction: Comodule,
}

impl AydModule {
    pub fn new(action: HopfModule, coaction: Comodule) -> Result<Self> {
        if action.dim() != coaction.dim() {
            return Err(Error::Dimension(format!(
                "action on dimension {} but coaction on dimension {}",
                action.dim(),
                coaction.dim()
            )));
        }
        if !action.hopf().same_structure(coaction.hopf()) {
            return Err(Error::Precondition(
                "action and coaction are over different Hopf algebras".into(),
            ));
        }
        Ok(AydModule { action, coaction })
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.action.hopf()
    }

    pub fn domain(&self) -> Domain {
        self.action.domain()
    }

    pub fn dim(&self) -> usize {
        self.action.dim()
    }

    pub fn action(&self) -> &HopfModule {
        &self.action
    }

    pub fn coaction(&self) -> &Comodule {
        &self.coaction
    }

    /// `λ(m) = α⁻¹(m₍₁₎) ⊗ m₍₀₎` as an `(dim H · dim M) × dim M` matrix.
    pub fn left_coaction(&self) -> Result<LinearMap> {
        let hopf = self.hopf();
        if !hopf.antipode_bijective() {
            return Err(Error::Precondition("the antipode is not bijective".into()));
        }
        let inv = hopf.antipode_inverse()?;
        let (dim, nh) = (self.dim(), hopf.dim());
        let mut out = LinearMap::zeros(self.domain(), nh * dim, dim);
        for m in 0..dim {
            let mut col = vec![self.domain().zero(); nh * dim];
            for (mp, h, c) in self.coaction.terms(m) {
                let e = crate::linalg::unit_vector(self.domain(), dim, mp);
                add_kron(&mut col, &[&inv.column(h), &e], &c);
            }
            for (r, v) in col.into_iter().enumerate() {
                out.set(r, m, v);
            }
        }
        Ok(out)
    }

    /// `λ(h·m) = h₁ m₍₋₁₎ α(h₃) ⊗ h₂·m₍₀₎` on basis pairs, witness `(h, m)`.
    pub fn ayd_check(&self) -> Result<AxiomCheck> {
        let hopf = self.hopf();
        let lambda = self.left_coaction()?;
        let (dim, nh) = (self.dim(), hopf.dim());
        let d = self.domain();
        for h in 0..nh {
            let act = self.action.action(h);
            let lhs = lambda.compose(act)?;
            let delta2 = hopf.comultiply_twice(&hopf.basis_vector(h));
            for m in 0..dim {
                let mut rhs = vec![d.zero(); nh * dim];
                for (abc, x) in delta2.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let (a, b, c) = (abc / (nh * nh), (abc / nh) % nh, abc % nh);
                    let anti = hopf.apply_antipode(&hopf.basis_vector(c));
                    for (r, y) in column_support(&lambda, m) {
                        let (k, mp) = (r / dim, r % dim);
                        let left = hopf.mul(
                            &hopf.mul(&hopf.basis_vector(a), &hopf.basis_vector(k)),
                            &anti,
                        );
                        let right = self.action.action(b).column(mp);
                        add_kron(&mut rhs, &[&left, &right], &(x * &y));
                    }
                }
                if lhs.column(m) != rhs {
                    return Ok(AxiomCheck::fail("anti-Yetter-Drinfeld", vec![h, m]));
                }
            }
        }
        Ok(AxiomCheck::pass("anti-Yetter-Drinfeld"))
    }

    /// `m₍₋₁₎·m₍₀₎ = m`, witness `(m)`.
    pub fn stability_check(&self) -> Result<AxiomCheck> {
        let lambda = self.left_coaction()?;
        let dim = self.dim();
        let d = self.domain();
        for m in 0..dim {
            let mut v = vec![d.zero(); dim];
            for (r, y) in column_support(&lambda, m) {
                let (k, mp) = (r / dim, r % dim);
                let col = self.action.action(k).column(mp);
                for (o, c) in v.iter_mut().zip(col) {
                    *o = &*o + &(&c * &y);
                }
            }
            if v != crate::linalg::unit_vector(d, dim, m) {
                return Ok(AxiomCheck::fail("stability", vec![m]));
            }
        }
        Ok(AxiomCheck::pass("stability"))
    }

    pub fn is_stable_ayd(&self) -> Result<bool> {
        Ok(self.ayd_check()?.passed && self.stability_check()?.passed)
    }
}

/// The group algebra `KG` as a module and comodule: `G` acts trivially,
/// or by left multiplication when `regular_action` is set, and the coaction
/// is `g ↦ g ⊗ g`.
pub fn group_like(hopf: &HopfAlgebra, regular_action: bool) -> Result<AydModule> {
    let n = hopf.dim();
    let action = if regular_action {
        HopfModule::regular(hopf.clone())
    } else {
        HopfModule::trivial(hopf.clone(), n)
    };
    let one: Scalar = hopf.domain().one();
    let coaction = Comodule::from_triples(hopf.clone(), n, (0..n).map(|g| (g, g, g, one.clone())))?;
    AydModule::new(action, coaction)
}
