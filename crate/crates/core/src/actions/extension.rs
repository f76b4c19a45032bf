use serde::{Deserialize, Serialize};

use crate::actions::ModuleAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{LinearMap, Subspace, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NotAnExtension,
    HExtension,
    Tame,
    HopfGalois,
    TameHopfGalois,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NotAnExtension => "not-an-extension",
            Classification::HExtension => "H-extension",
            Classification::Tame => "tame",
            Classification::HopfGalois => "Hopf-Galois",
            Classification::TameHopfGalois => "tame and Hopf-Galois",
        }
    }

    pub fn is_tame(self) -> bool {
        matches!(self, Classification::Tame | Classification::TameHopfGalois)
    }

    pub fn is_hopf_galois(self) -> bool {
        matches!(
            self,
            Classification::HopfGalois | Classification::TameHopfGalois
        )
    }
}

/// Which formulation decided the Hopf-Galois verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaloisForm {
    /// `j : S # H → End(S)`, for commutative `S` and cocommutative `H`.
    Endomorphism,
    /// `γ : S ⊗ S → S ⊗ H*`, used otherwise.
    PrincipalHomogeneous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionReport {
    pub dim_s: usize,
    pub dim_h: usize,
    pub ranks_equal: bool,
    pub invariants_dim: usize,
    pub invariants_are_scalars: bool,
    pub faithful: bool,
    pub integral: String,
    pub integral_image_dim: usize,
    pub trace_surjective: bool,
    pub homology_dim: usize,
    pub j_rank: usize,
    pub j_bijective: bool,
    pub gamma_rank: usize,
    pub gamma_bijective: bool,
    pub galois_form: GaloisForm,
    pub hopf_galois: bool,
    pub tame: bool,
    pub semisimple: bool,
    pub local: bool,
    pub cocommutative: bool,
    pub commutative: bool,
    /// Hypotheses under which tame, Hopf-Galois and vanishing homology
    /// coincide: `H` local and cocommutative, faithful, equal ranks,
    /// `S^H = K`.
    pub equivalence_applies: bool,
    /// Whether the three verdicts agreed, when the equivalence applies.
    pub equivalence_holds: Option<bool>,
    pub classification: Classification,
}

/// Outcome of the search for an `H`-linear `g : H* → S` with `g(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TotalIntegral {
    Present {
        /// Generator of `H*` as a left `H`-module, normalized by `Λ⇀t = ε`.
        t: Vector,
        /// Solution of `Λ·z = 1`.
        z: Vector,
        /// `dim S × dim H` matrix of `g` on the dual basis.
        map: LinearMap,
    },
    /// `I·S` misses `1`; carries `dim I·S`.
    Absent { integral_image_dim: usize },
}

impl TotalIntegral {
    pub fn is_present(&self) -> bool {
        matches!(self, TotalIntegral::Present { .. })
    }
}

impl ModuleAlgebra {
    fn scalars(&self) -> Result<Subspace> {
        Subspace::span(
            self.domain(),
            self.dim_s(),
            &[self.algebra().unit().to_vec()],
        )
    }

    /// Decides tameness and the Hopf-Galois property over a field.
    pub fn classify(&self) -> Result<ExtensionReport> {
        self.domain().require_field("extension classification")?;
        let hopf = self.hopf();
        let scalars = self.scalars()?;
        let inv = self.invariants()?;
        let invariants_are_scalars = inv == scalars;
        let faithful = self.is_faithful()?;
        let (dim_s, dim_h) = (self.dim_s(), self.dim_h());
        let ranks_equal = dim_s == dim_h;
        let lambda = hopf.left_integrals()?;
        let homology = self.module().hopfological_homology()?;
        let is = self.module().integral_image()?;
        let trace_surjective = is == scalars;

        let j = self.galois_map_j();
        let j_rank = j.rank()?;
        let j_bijective = j.is_square() && j_rank == j.cols();
        let gamma = self.galois_map_gamma();
        let gamma_rank = gamma.rank()?;
        let gamma_bijective = gamma.is_square() && gamma_rank == gamma.cols();

        let commutative = self.algebra().is_commutative();
        let cocommutative = hopf.is_cocommutative();
        let galois_form = if commutative && cocommutative {
            GaloisForm::Endomorphism
        } else {
            GaloisForm::PrincipalHomogeneous
        };
        let hopf_galois = match galois_form {
            GaloisForm::Endomorphism => j_bijective,
            GaloisForm::PrincipalHomogeneous => gamma_bijective,
        };
        let tame = invariants_are_scalars && ranks_equal && faithful && trace_surjective;
        let local = hopf.is_local()?;
        let equivalence_applies =
            local && cocommutative && ranks_equal && faithful && invariants_are_scalars;
        let equivalence_holds = equivalence_applies
            .then_some(tame == hopf_galois && tame == (homology.homology_dim == 0));
        let classification = match (invariants_are_scalars, tame, hopf_galois) {
            (_, true, true) => Classification::TameHopfGalois,
            (_, true, false) => Classification::Tame,
            (_, false, true) => Classification::HopfGalois,
            (true, false, false) => Classification::HExtension,
            (false, false, false) => Classification::NotAnExtension,
        };
        Ok(ExtensionReport {
            dim_s,
            dim_h,
            ranks_equal,
            invariants_dim: inv.dim(),
            invariants_are_scalars,
            faithful,
            integral: hopf.format_vector(lambda.generator()),
            integral_image_dim: is.dim(),
            trace_surjective,
            homology_dim: homology.homology_dim,
            j_rank,
            j_bijective,
            gamma_rank,
            gamma_bijective,
            galois_form,
            hopf_galois,
            tame,
            semisimple: hopf.is_semisimple()?,
            local,
            cocommutative,
            commutative,
            equivalence_applies,
            equivalence_holds,
            classification,
        })
    }

    /// Builds `g : H* → S` with `g(ε) = 1` from a solution of `Λ·z = 1`
    /// and a generator `t` of `H*` under `(h⇀f)(k) = f(kh)`, by
    /// `g(h⇀t) = h·z`. The result is checked to be `H`-linear.
    pub fn total_integral_map(&self) -> Result<TotalIntegral> {
        let d = self.domain();
        d.require_field("total integral")?;
        if self.invariants()? != self.scalars()? {
            return Err(Error::Precondition(
                "total integrals are only built when the invariants are the scalars".into(),
            ));
        }
        let hopf = self.hopf();
        let n = hopf.dim();
        let lambda = hopf.left_integrals()?.generator().clone();
        let lambda_action = self.module().action_of(&lambda);
        let z = match lambda_action.solve(self.algebra().unit())? {
            Some(z) => z,
            None => {
                return Ok(TotalIntegral::Absent {
                    integral_image_dim: Subspace::image(&lambda_action)?.dim(),
                })
            }
        };

        // h ⇀ f on H*, one matrix per basis element of H
        let hit: Vec<LinearMap> = (0..n)
            .map(|h| {
                hopf.algebra()
                    .right_mul_matrix(&hopf.basis_vector(h))
                    .transpose()
            })
            .collect();
        let hit_of = |v: &[crate::linalg::Scalar]| {
            let mut out = LinearMap::zeros(d, n, n);
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out = out.add(&hit[i].scale(c)).expect("shape");
                }
            }
            out
        };
        let dual = hopf.dual()?;
        let mut candidates = vec![
            dual.left_integrals()?.generator().clone(),
            dual.right_integrals()?.generator().clone(),
        ];
        candidates.extend((0..n).map(|i| dual.basis_vector(i)));
        let counit = hopf.counit().to_vec();
        let mut found = None;
        for t in candidates {
            let phi_cols: Vec<Vector> = hit.iter().map(|m| m.apply(&t)).collect();
            let phi = LinearMap::from_columns(d, n, &phi_cols)?;
            if !phi.is_invertible()? {
                continue;
            }
            let image = hit_of(&lambda).apply(&t);
            // Λ⇀t is invariant, hence a multiple of ε
            let k = (0..n).find(|&i| !counit[i].is_zero()).expect("ε ≠ 0");
            let c = image[k].inverse().and_then(|ck| {
                let scaled: Vector = image.iter().map(|x| x * &ck).collect();
                (scaled == counit).then_some(ck)
            });
            if let Some(c) = c {
                let t: Vector = t.iter().map(|x| x * &c).collect();
                let phi = phi.scale(&c);
                found = Some((t, phi));
                break;
            }
        }
        let (t, phi) = found.ok_or_else(|| {
            Error::Inconsistent("no generator of the dual found as a free module".into())
        })?;
        let phi_inv = phi.invert()?;
        let columns: Vec<Vector> = (0..n)
            .map(|f| {
                let h = phi_inv.column(f);
                self.module().act(&h, &z)
            })
            .collect();
        let map = LinearMap::from_columns(d, self.dim_s(), &columns)?;

        for h in 0..n {
            let lhs = map.compose(&hit[h])?;
            let rhs = self.action(h).compose(&map)?;
            if lhs != rhs {
                return Err(Error::Inconsistent(format!(
                    "total integral is not linear for basis element {}",
                    hopf.labels()[h]
                )));
            }
        }
        if map.apply(&counit) != self.algebra().unit() {
            return Err(Error::Inconsistent("total integral misses g(1) = 1".into()));
        }
        Ok(TotalIntegral::Present { t, z, map })
    }
}
