use crate::actions::{HomologyReport, HopfModule};
use crate::cocyclic::tensor::column_support;
use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, HopfAlgebra, VerificationReport};
use crate::linalg::{vec_kron, Domain, LinearMap, Scalar, Subspace, Vector};

/// A right comodule `ρ : M → M ⊗ C`, stored as a `(dim M · dim C) × dim M`
/// matrix. Construction validates coassociativity and the counit law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    hopf: HopfAlgebra,
    dim: usize,
    coaction: LinearMap,
}

impl Comodule {
    /// `(m, m', h, c)` means `ρ(e_m) += c e_{m'} ⊗ e_h`.
    pub fn from_triples(
        hopf: HopfAlgebra,
        dim: usize,
        triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let nh = hopf.dim();
        let mut coaction = LinearMap::zeros(hopf.domain(), dim * nh, dim);
        for (m, mp, h, c) in triples {
            if m >= dim || mp >= dim || h >= nh {
                return Err(Error::Format(format!(
                    "coaction triple ({m}, {mp}, {h}) out of range"
                )));
            }
            if c.domain() != hopf.domain() {
                return Err(Error::DomainMismatch {
                    left: hopf.domain(),
                    right: c.domain(),
                });
            }
            let cur = coaction.get(mp * nh + h, m) + &c;
            coaction.set(mp * nh + h, m, cur);
        }
        Self::from_matrix(hopf, coaction)
    }

    pub fn from_matrix(hopf: HopfAlgebra, coaction: LinearMap) -> Result<Self> {
        let dim = coaction.cols();
        if coaction.rows() != dim * hopf.dim() {
            return Err(Error::Format(format!(
                "coaction matrix is {}x{}, expected {}x{dim}",
                coaction.rows(),
                coaction.cols(),
                dim * hopf.dim()
            )));
        }
        if coaction.domain() != hopf.domain() {
            return Err(Error::DomainMismatch {
                left: hopf.domain(),
                right: coaction.domain(),
            });
        }
        let c = Comodule {
            hopf,
            dim,
            coaction,
        };
        c.verify().into_result(&[])?;
        Ok(c)
    }

    /// `ρ(m) = m ⊗ 1`.
    pub fn trivial(hopf: HopfAlgebra, dim: usize) -> Self {
        let nh = hopf.dim();
        let mut coaction = LinearMap::zeros(hopf.domain(), dim * nh, dim);
        for m in 0..dim {
            for (h, c) in hopf.unit().iter().enumerate() {
                coaction.set(m * nh + h, m, c.clone());
            }
        }
        Comodule {
            hopf,
            dim,
            coaction,
        }
    }

    /// `C` coacting on itself by `Δ`.
    pub fn regular(hopf: HopfAlgebra) -> Self {
        Comodule {
            dim: hopf.dim(),
            coaction: hopf.comult_map(),
            hopf,
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

    pub fn coaction(&self) -> &LinearMap {
        &self.coaction
    }

    /// `ρ(e_m)` as `(m', h, c)` terms.
    pub fn terms(&self, m: usize) -> Vec<(usize, usize, Scalar)> {
        let nh = self.hopf.dim();
        column_support(&self.coaction, m)
            .into_iter()
            .map(|(r, c)| (r / nh, r % nh, c))
            .collect()
    }

    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        (0..self.dim)
            .flat_map(|m| {
                self.terms(m)
                    .into_iter()
                    .map(move |(mp, h, c)| (m, mp, h, c))
            })
            .collect()
    }

    /// Coassociativity and counit, each with the first failing basis index.
    pub fn verify(&self) -> VerificationReport {
        let d = self.domain();
        let (dim, nh) = (self.dim, self.hopf.dim());
        let coassoc = (0..dim).find(|&m| {
            let mut left = vec![d.zero(); dim * nh * nh];
            let mut right = vec![d.zero(); dim * nh * nh];
            for (mp, h, c) in self.terms(m) {
                for (mpp, k, e) in self.terms(mp) {
                    let idx = (mpp * nh + k) * nh + h;
                    left[idx] = &left[idx] + &(&c * &e);
                }
                for (jk, e) in self.hopf.basis_coproduct(h) {
                    let idx = mp * nh * nh + jk;
                    right[idx] = &right[idx] + &(&c * e);
                }
            }
            left != right
        });
        let counit = (0..dim).find(|&m| {
            let mut v = vec![d.zero(); dim];
            for (mp, h, c) in self.terms(m) {
                v[mp] = &v[mp] + &(&c * &self.hopf.counit()[h]);
            }
            v.iter()
                .enumerate()
                .any(|(i, x)| if i == m { !x.is_one() } else { !x.is_zero() })
        });
        VerificationReport {
            checks: vec![
                AxiomCheck::from_result("coassociativity", coassoc.map(|m| vec![m])),
                AxiomCheck::from_result("counit", counit.map(|m| vec![m])),
            ],
        }
    }

    /// `M^{coC} = ker(ρ − id ⊗ 1)`.
    pub fn coinvariants(&self) -> Result<Subspace> {
        let d = self.domain();
        let one = self.hopf.unit();
        let cols: Vec<Vector> = (0..self.dim)
            .map(|m| {
                let e = crate::linalg::unit_vector(d, self.dim, m);
                vec_kron(&e, one)
            })
            .collect();
        let embed = LinearMap::from_columns(d, self.dim * self.hopf.dim(), &cols)?;
        Subspace::kernel(&self.coaction.sub(&embed)?)
    }

    /// `M^{coC} / I·M` with the integral of `C*` acting through the dual
    /// module structure `f·m = Σ m₀ f(m₁)`.
    pub fn hopfological_homology(&self) -> Result<HomologyReport> {
        let co = self.coinvariants()?;
        let module = comodule_to_module(self)?;
        let im = module.integral_image()?;
        if !im.is_subspace_of(&co)? {
            return Err(Error::Inconsistent(
                "the integral image is not contained in the coinvariants".into(),
            ));
        }
        Ok(HomologyReport {
            invariants_dim: co.dim(),
            integral_image_dim: im.dim(),
            homology_dim: co.dim() - im.dim(),
        })
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        if !self.hopf.same_structure(&other.hopf) {
            return Err(Error::Precondition(
                "direct sum of comodules over different Hopf algebras".into(),
            ));
        }
        let shift = self.dim;
        let triples = self.triples().into_iter().chain(
            other
                .triples()
                .into_iter()
                .map(|(m, mp, h, c)| (m + shift, mp + shift, h, c)),
        );
        Comodule::from_triples(self.hopf.clone(), self.dim + other.dim, triples)
    }
}

/// Left `H`-module to right `H*`-comodule: `ρ(m) = Σ_i (e_i·m) ⊗ e_i*`.
pub fn module_to_comodule(module: &HopfModule) -> Result<Comodule> {
    let hopf = module.hopf();
    let dual = hopf.dual()?;
    let (dim, nh) = (module.dim(), hopf.dim());
    let mut coaction = LinearMap::zeros(hopf.domain(), dim * nh, dim);
    for i in 0..nh {
        let a = module.action(i);
        for m in 0..dim {
            for mp in 0..dim {
                coaction.set(mp * nh + i, m, a.get(mp, m).clone());
            }
        }
    }
    Comodule::from_matrix(dual, coaction)
}

/// Right `C`-comodule to left `C*`-module: `f·m = Σ m₀ f(m₁)`.
pub fn comodule_to_module(comodule: &Comodule) -> Result<HopfModule> {
    let dual = comodule.hopf().dual()?;
    let triples = comodule
        .triples()
        .into_iter()
        .map(|(m, mp, h, c)| (h, m, mp, c));
    HopfModule::from_triples(dual, comodule.dim(), triples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::group_algebra;
    use crate::hopf::groups::cyclic;

    fn c2(d: Domain) -> HopfAlgebra {
        group_algebra(&cyclic(2), d, None).unwrap()
    }

    #[test]
    fn regular_coinvariants_are_scalars() {
        let q = Domain::Rational;
        let r = Comodule::regular(c2(q));
        assert_eq!(
            r.coinvariants().unwrap().basis(),
            &[vec![q.one(), q.zero()]]
        );
    }

    #[test]
    fn zero_coaction_is_rejected() {
        let q = Domain::Rational;
        let err = Comodule::from_triples(c2(q), 1, Vec::new()).unwrap_err();
        assert!(matches!(err, Error::Axiom(_)));
    }

    #[test]
    fn trivial_module_gives_trivial_coaction() {
        let q = Domain::Rational;
        let m = HopfModule::trivial(c2(q), 1);
        let c = module_to_comodule(&m).unwrap();
        // m ⊗ (δ_1 + δ_σ) is m ⊗ 1 in the dual
        assert_eq!(c.coaction().column(0), vec![q.one(), q.one()]);
        assert_eq!(c.coinvariants().unwrap().dim(), 1);
    }
}
