use serde::{Deserialize, Serialize};

use crate::cocyclic::bar::ShiftRow;
use crate::cocyclic::tensor::add_kron;
use crate::cocyclic::{Bounds, Comodule, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, VerificationReport};
use crate::linalg::{unit_vector, Domain, LinearMap, Scalar, Subspace, Vector};

/// A relative Hopf module: a left `S`-module and right `C`-comodule with
/// `ρ(a·m) = a⁰·m⁰ ⊗ a¹m¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeHopfModule {
    s: ComoduleAlgebra,
    s_action: Vec<LinearMap>,
    coaction: Comodule,
}

impl RelativeHopfModule {
    pub fn new(s: ComoduleAlgebra, s_action: Vec<LinearMap>, coaction: Comodule) -> Result<Self> {
        let dim = coaction.dim();
        if s_action.len() != s.dim() || s_action.iter().any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::Format(
                "S-action matrices do not match the comodule".into(),
            ));
        }
        if !s.hopf().same_structure(coaction.hopf()) {
            return Err(Error::Precondition(
                "the comodule is over a different Hopf algebra".into(),
            ));
        }
        Ok(RelativeHopfModule {
            s,
            s_action,
            coaction,
        })
    }

    /// `S` with left multiplication and its own coaction.
    pub fn base(s: &ComoduleAlgebra) -> Self {
        let alg = s.algebra();
        let s_action = (0..alg.dim())
            .map(|a| alg.left_mul_matrix(&alg.basis_vector(a)))
            .collect();
        RelativeHopfModule {
            s: s.clone(),
            s_action,
            coaction: s.comodule().clone(),
        }
    }

    /// `S ⊗ V` for a trivial `v_dim`-dimensional `V`: `a·(b⊗v) = ab⊗v`,
    /// `ρ(b⊗v) = b⁰⊗v⊗b¹`.
    pub fn cofree(s: &ComoduleAlgebra, v_dim: usize) -> Result<Self> {
        let alg = s.algebra();
        let d = s.domain();
        let id = LinearMap::identity(d, v_dim);
        let s_action = (0..alg.dim())
            .map(|a| alg.left_mul_matrix(&alg.basis_vector(a)).kronecker(&id))
            .collect::<Result<Vec<_>>>()?;
        let mut triples = Vec::new();
        for b in 0..alg.dim() {
            for (bp, h, c) in s.comodule().terms(b) {
                for v in 0..v_dim {
                    triples.push((b * v_dim + v, bp * v_dim + v, h, c.clone()));
                }
            }
        }
        let coaction = Comodule::from_triples(s.hopf().clone(), alg.dim() * v_dim, triples)?;
        Self::new(s.clone(), s_action, coaction)
    }

    pub fn dim(&self) -> usize {
        self.coaction.dim()
    }

    pub fn domain(&self) -> Domain {
        self.s.domain()
    }

    pub fn algebra(&self) -> &ComoduleAlgebra {
        &self.s
    }

    pub fn coaction(&self) -> &Comodule {
        &self.coaction
    }

    pub fn s_action(&self) -> &[LinearMap] {
        &self.s_action
    }

    fn act(&self, a: &[Scalar], m: &[Scalar]) -> Vector {
        let mut out = vec![self.domain().zero(); self.dim()];
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                for (o, v) in out.iter_mut().zip(self.s_action[i].apply(m)) {
                    *o = &*o + &(&v * c);
                }
            }
        }
        out
    }

    /// `S`-module laws and `ρ(a·m) = a⁰·m⁰ ⊗ a¹m¹` with witness `(a, m)`.
    pub fn verify(&self) -> VerificationReport {
        let alg = self.s.algebra();
        let (ns, dim) = (alg.dim(), self.dim());
        let d = self.domain();
        let hopf = self.s.hopf();
        let nh = hopf.dim();
        let e = |i: usize| unit_vector(d, dim, i);
        let mut report = VerificationReport::default();
        let mut assoc = None;
        'outer: for a in 0..ns {
            for b in 0..ns {
                let ab = alg.mul(&alg.basis_vector(a), &alg.basis_vector(b));
                for m in 0..dim {
                    let lhs = self.act(&ab, &e(m));
                    let rhs = self.s_action[a].apply(&self.s_action[b].apply(&e(m)));
                    if lhs != rhs {
                        assoc = Some(vec![a, b, m]);
                        break 'outer;
                    }
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("S-module associativity", assoc));
        let unit = (0..dim).find(|&m| self.act(alg.unit(), &e(m)) != e(m));
        report.checks.push(AxiomCheck::from_result(
            "S-module unit",
            unit.map(|m| vec![m]),
        ));
        let rho = self.coaction.coaction();
        let mut compat = None;
        'outer2: for a in 0..ns {
            for m in 0..dim {
                let lhs = rho.apply(&self.s_action[a].apply(&e(m)));
                let mut rhs = vec![d.zero(); dim * nh];
                for (ap, h, c) in self.s.comodule().terms(a) {
                    for (mp, k, c2) in self.coaction.terms(m) {
                        let left = self.s_action[ap].column(mp);
                        let right = hopf.mul(&hopf.basis_vector(h), &hopf.basis_vector(k));
                        add_kron(&mut rhs, &[&left, &right], &(&c * &c2));
                    }
                }
                if lhs != rhs {
                    compat = Some(vec![a, m]);
                    break 'outer2;
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("relative Hopf module", compat));
        report
    }

    pub fn coinvariants(&self) -> Result<Subspace> {
        self.coaction.coinvariants()
    }

    /// `S ⊗ M^{coC} → M`, `s ⊗ m ↦ s·m`.
    pub fn evaluation_map(&self) -> Result<LinearMap> {
        let co = self.coinvariants()?;
        let mut cols = Vec::new();
        for a in 0..self.s.dim() {
            for v in co.basis() {
                cols.push(self.s_action[a].apply(v));
            }
        }
        LinearMap::from_columns(self.domain(), self.dim(), &cols)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TShiftReport {
    pub dim_s: usize,
    pub dim_m: usize,
    pub coinvariants_dim: usize,
    pub galois_rank: usize,
    /// Over a field every module is flat; recorded for completeness.
    pub faithfully_flat: bool,
    pub evaluation_bijective: bool,
    pub rows: Vec<ShiftRow>,
}

impl TShiftReport {
    pub fn passed(&self) -> bool {
        self.evaluation_bijective
            && self
                .rows
                .iter()
                .all(|r| r.dim == r.shifted_dim && r.isomorphism)
    }
}

/// Fundamental theorem check `S ⊗ M^{coC} ≅ M`, then
/// `T_n(S, M) ≅ T_{n+1}(S, M^{coC})` degreewise, level `n` having `n + 1`
/// algebra slots.
pub fn t_shift_check(m: &RelativeHopfModule, top: usize, bounds: &Bounds) -> Result<TShiftReport> {
    bounds.check_level(top)?;
    let s = m.algebra();
    let d = s.domain();
    d.require_field("shift check")?;
    let galois = s.galois_map();
    let galois_rank = galois.rank()?;
    if !(galois.is_square() && galois_rank == galois.cols()) {
        return Err(Error::Precondition(format!(
            "the Galois map S ⊗ S → S ⊗ C is singular (rank {galois_rank} of {})",
            galois.cols()
        )));
    }
    let scalars = Subspace::span(d, s.dim(), &[s.algebra().unit().to_vec()])?;
    if s.coinvariants()? != scalars {
        return Err(Error::Precondition(
            "the coinvariants of S are larger than the base field".into(),
        ));
    }
    m.verify().into_result(&[])?;
    let ev = m.evaluation_map()?;
    let ns = s.dim();
    let co_dim = ev.cols() / ns.max(1);
    let evaluation_bijective = ev.is_square() && ev.is_invertible()?;
    let mut rows = Vec::new();
    if evaluation_bijective {
        let ev_inv = ev.invert()?;
        for n in 0..=top {
            let width = ns.pow(n as u32 + 1);
            bounds.check_dim(&format!("T_{n}"), width * m.dim())?;
            let psi = LinearMap::identity(d, width).kronecker(&ev_inv)?;
            let back = LinearMap::identity(d, width).kronecker(&ev)?;
            rows.push(ShiftRow {
                degree: n,
                dim: width * m.dim(),
                shifted_dim: width * ns * co_dim,
                isomorphism: back.compose(&psi)? == LinearMap::identity(d, psi.cols()),
                differential_compatible: None,
            });
        }
    }
    Ok(TShiftReport {
        dim_s: ns,
        dim_m: m.dim(),
        coinvariants_dim: co_dim,
        galois_rank,
        faithfully_flat: true,
        evaluation_bijective,
        rows,
    })
}
