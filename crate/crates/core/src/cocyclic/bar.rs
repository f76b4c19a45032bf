use serde::{Deserialize, Serialize};

use crate::actions::{HopfModule, ModuleAlgebra};
use crate::cocyclic::chain::ChainComplex;
use crate::cocyclic::tensor::{add_kron, build_operator};
use crate::cocyclic::Bounds;
use crate::error::{Error, Result};
use crate::hopf::{Algebra, AxiomCheck, VerificationReport};
use crate::linalg::{unit_vector, vec_kron, Domain, LinearMap, Scalar, Subspace, Vector};

/// A left `S # H`-module: commuting-up-to-twist actions of `S` and `H`
/// with `h·(s·m) = Σ (h₁·s)·(h₂·m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmashModule {
    ma: ModuleAlgebra,
    s_action: Vec<LinearMap>,
    h_action: HopfModule,
}

impl SmashModule {
    pub fn new(ma: ModuleAlgebra, s_action: Vec<LinearMap>, h_action: HopfModule) -> Result<Self> {
        if s_action.len() != ma.dim_s() {
            return Err(Error::Format(format!(
                "{} S-action matrices for dim S = {}",
                s_action.len(),
                ma.dim_s()
            )));
        }
        let dim = h_action.dim();
        if s_action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Format(
                "S-action matrices must match the H-module".into(),
            ));
        }
        if !h_action.hopf().same_structure(ma.hopf()) {
            return Err(Error::Precondition(
                "the H-action is over a different Hopf algebra".into(),
            ));
        }
        Ok(SmashModule {
            ma,
            s_action,
            h_action,
        })
    }

    /// `(s, m, m', c)` and `(h, m, m', c)` triples: `e_s·e_m += c e_{m'}`.
    pub fn from_triples(
        ma: ModuleAlgebra,
        dim: usize,
        s_triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        h_triples: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let d = ma.domain();
        let mut s_action = vec![LinearMap::zeros(d, dim, dim); ma.dim_s()];
        for (s, m, mp, c) in s_triples {
            if s >= ma.dim_s() || m >= dim || mp >= dim {
                return Err(Error::Format(format!(
                    "S-action triple ({s}, {m}, {mp}) out of range"
                )));
            }
            let cur = s_action[s].get(mp, m) + &c;
            s_action[s].set(mp, m, cur);
        }
        let h_action = HopfModule::from_triples(ma.hopf().clone(), dim, h_triples)?;
        Self::new(ma, s_action, h_action)
    }

    /// `S` itself: left multiplication and the given action.
    pub fn base(ma: &ModuleAlgebra) -> Self {
        let alg = ma.algebra();
        let s_action = (0..alg.dim())
            .map(|s| alg.left_mul_matrix(&alg.basis_vector(s)))
            .collect();
        SmashModule {
            ma: ma.clone(),
            s_action,
            h_action: ma.module().clone(),
        }
    }

    /// `S # H` acting on itself by left multiplication.
    pub fn regular(ma: &ModuleAlgebra) -> Result<Self> {
        let smash = ma.smash()?;
        let (ns, nh) = (ma.dim_s(), ma.dim_h());
        let d = ma.domain();
        let s_action = (0..ns)
            .map(|s| smash.left_mul_matrix(&vec_kron(&unit_vector(d, ns, s), ma.hopf().unit())))
            .collect();
        let h_mats = (0..nh)
            .map(|h| smash.left_mul_matrix(&vec_kron(ma.algebra().unit(), &unit_vector(d, nh, h))))
            .collect();
        let h_action = HopfModule::from_matrices(ma.hopf().clone(), h_mats)?;
        Ok(SmashModule {
            ma: ma.clone(),
            s_action,
            h_action,
        })
    }

    pub fn direct_sum(&self, other: &SmashModule) -> Result<Self> {
        let s_action = self
            .s_action
            .iter()
            .zip(&other.s_action)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(SmashModule {
            ma: self.ma.clone(),
            s_action,
            h_action: self.h_action.direct_sum(&other.h_action)?,
        })
    }

    pub fn module_algebra(&self) -> &ModuleAlgebra {
        &self.ma
    }

    pub fn dim(&self) -> usize {
        self.h_action.dim()
    }

    pub fn domain(&self) -> Domain {
        self.ma.domain()
    }

    pub fn s_action(&self) -> &[LinearMap] {
        &self.s_action
    }

    pub fn h_action(&self) -> &HopfModule {
        &self.h_action
    }

    pub fn s_action_of(&self, s: &[Scalar]) -> LinearMap {
        let mut out = LinearMap::zeros(self.domain(), self.dim(), self.dim());
        for (i, c) in s.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.s_action[i].scale(c)).expect("shape");
            }
        }
        out
    }

    /// `S`-module laws, `H`-module laws and the smash compatibility with
    /// witness `(h, s, m)`.
    pub fn verify(&self) -> VerificationReport {
        let alg = self.ma.algebra();
        let ns = alg.dim();
        let mut report = VerificationReport::default();
        let mut assoc = None;
        'outer: for s in 0..ns {
            for t in 0..ns {
                let st = alg.mul(&alg.basis_vector(s), &alg.basis_vector(t));
                let lhs = self.s_action_of(&st);
                let rhs = self.s_action[s].compose(&self.s_action[t]).expect("shape");
                if let Some(m) = crate::actions::first_differing_column(&lhs, &rhs) {
                    assoc = Some(vec![s, t, m]);
                    break 'outer;
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("S-module associativity", assoc));
        let unit = self.s_action_of(alg.unit());
        let id = LinearMap::identity(self.domain(), self.dim());
        report.checks.push(AxiomCheck::from_result(
            "S-module unit",
            crate::actions::first_differing_column(&unit, &id).map(|m| vec![m]),
        ));
        report.extend(self.h_action.verify());

        let hopf = self.ma.hopf();
        let nh = hopf.dim();
        let mut compat = None;
        'outer2: for h in 0..nh {
            for s in 0..ns {
                let lhs = self
                    .h_action
                    .action(h)
                    .compose(&self.s_action[s])
                    .expect("shape");
                let mut rhs = LinearMap::zeros(self.domain(), self.dim(), self.dim());
                for (jk, c) in hopf.basis_coproduct(h) {
                    let (j, k) = (jk / nh, jk % nh);
                    let hs = self.ma.action(j).apply(&alg.basis_vector(s));
                    let term = self
                        .s_action_of(&hs)
                        .compose(self.h_action.action(k))
                        .expect("shape");
                    rhs = rhs.add(&term.scale(c)).expect("shape");
                }
                if let Some(m) = crate::actions::first_differing_column(&lhs, &rhs) {
                    compat = Some(vec![h, s, m]);
                    break 'outer2;
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("smash compatibility", compat));
        report
    }

    pub fn verified(self) -> Result<Self> {
        self.verify().into_result(&[])?;
        Ok(self)
    }

    /// `M^H ≅ Hom_{S#H}(S, M)`.
    pub fn fixed_points(&self) -> Result<Subspace> {
        self.h_action.invariants()
    }

    /// Evaluation `S ⊗ M^H → M`, `s ⊗ m ↦ s·m`, on the echelon basis of
    /// `M^H`. Needs `j` bijective.
    pub fn morita_map(&self) -> Result<LinearMap> {
        require_hopf_galois(&self.ma)?;
        let fixed = self.fixed_points()?;
        let ns = self.ma.dim_s();
        let mut cols = Vec::with_capacity(ns * fixed.dim());
        for s in 0..ns {
            for v in fixed.basis() {
                cols.push(self.s_action[s].apply(v));
            }
        }
        LinearMap::from_columns(self.domain(), self.dim(), &cols)
    }

    /// Whether `S ⊗ M^H → M` is bijective.
    pub fn morita_decomposition(&self) -> Result<MoritaReport> {
        let map = self.morita_map()?;
        let fixed_dim = self.fixed_points()?.dim();
        Ok(MoritaReport {
            dim_m: self.dim(),
            dim_s: self.ma.dim_s(),
            fixed_dim,
            bijective: map.is_square() && map.is_invertible()?,
        })
    }
}

fn require_hopf_galois(ma: &ModuleAlgebra) -> Result<()> {
    let j = ma.galois_map_j();
    if !(j.is_square() && j.is_invertible()?) {
        return Err(Error::Precondition(format!(
            "the Galois map j : S#H → End(S) is not bijective (rank {} of {}), so M ≅ S ⊗ M^H is not available",
            j.rank()?,
            j.cols()
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoritaReport {
    pub dim_m: usize,
    pub dim_s: usize,
    pub fixed_dim: usize,
    pub bijective: bool,
}

/// One-sided bar complex `B_n = S^{⊗n} ⊗ M` with faces `d_1, …, d_n`:
/// `d_i` multiplies slots `i, i+1` for `i < n` and `d_n` acts on `M`;
/// `b_n = Σ_{i=1}^{n} (−1)^i d_i`.
pub fn bar_complex(
    algebra: &Algebra,
    action: &[LinearMap],
    top: usize,
    bounds: &Bounds,
) -> Result<ChainComplex> {
    bounds.check_level(top)?;
    let d = algebra.domain();
    let (ns, dm) = (algebra.dim(), action.first().map(|m| m.rows()).unwrap_or(0));
    let mut dims = vec![dm];
    let mut diffs = Vec::new();
    for n in 1..=top {
        let dim = ns.pow(n as u32) * dm;
        bounds.check_dim(&format!("B_{n}"), dim)?;
        let mut b = LinearMap::zeros(d, dims[n - 1], dim);
        for i in 1..=n {
            let sign = if i % 2 == 0 { d.one() } else { d.from_i64(-1) };
            b = b.add(&bar_face(algebra, action, n, i, dm).scale(&sign))?;
        }
        dims.push(dim);
        diffs.push(b);
    }
    ChainComplex::new(dims, diffs)
}

/// Face `d_i` (`1 ≤ i ≤ n`) of `S^{⊗n} ⊗ V`; the last face uses `action`
/// on `V`. Inner faces never touch `V`, so `action` may be empty when
/// `i < n`.
fn bar_face(algebra: &Algebra, action: &[LinearMap], n: usize, i: usize, dv: usize) -> LinearMap {
    let d = algebra.domain();
    let ns = algebra.dim();
    let mut in_dims = vec![ns; n];
    in_dims.push(dv);
    let out_len = ns.pow(n as u32 - 1) * dv;
    build_operator(d, &in_dims, out_len, |t, out| {
        let mut parts: Vec<Vector> = Vec::with_capacity(n);
        let e = |k: usize| algebra.basis_vector(t[k]);
        if i < n {
            for k in 0..i - 1 {
                parts.push(e(k));
            }
            parts.push(algebra.mul(&e(i - 1), &e(i)));
            for k in i + 1..n {
                parts.push(e(k));
            }
            parts.push(unit_vector(d, dv, t[n]));
        } else {
            for k in 0..n - 1 {
                parts.push(e(k));
            }
            parts.push(action[t[n - 1]].column(t[n]));
        }
        let refs: Vec<&[Scalar]> = parts.iter().map(Vec::as_slice).collect();
        add_kron(out, &refs, &d.one());
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftRow {
    pub degree: usize,
    pub dim: usize,
    pub shifted_dim: usize,
    pub isomorphism: bool,
    /// Whether the degreewise map intertwines the differentials; absent in
    /// degree 0.
    pub differential_compatible: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftReport {
    pub dim_s: usize,
    pub dim_m: usize,
    pub fixed_dim: usize,
    pub morita_bijective: bool,
    pub rows: Vec<ShiftRow>,
}

impl ShiftReport {
    /// Dimension equality and the degreewise isomorphism in every degree.
    pub fn passed(&self) -> bool {
        self.morita_bijective
            && self
                .rows
                .iter()
                .all(|r| r.dim == r.shifted_dim && r.isomorphism)
    }
}

/// `B_n(S, M) ≅ B_{n+1}(S, M^H)` through `id ⊗ φ⁻¹`, `φ : S ⊗ M^H → M`.
/// Compatibility is tested against `Σ_{i=1}^{n} (−1)^i d_i` on
/// `B_{n+1}(S, M^H)`, which needs no `S`-action on `M^H`.
pub fn bar_shift_check(m: &SmashModule, top: usize, bounds: &Bounds) -> Result<ShiftReport> {
    let ma = m.module_algebra();
    let phi = m.morita_map()?;
    let d = ma.domain();
    let (ns, dm) = (ma.dim_s(), m.dim());
    let fixed_dim = phi.cols() / ns.max(1);
    let morita_bijective = phi.is_square() && phi.is_invertible()?;
    if !morita_bijective {
        return Ok(ShiftReport {
            dim_s: ns,
            dim_m: dm,
            fixed_dim,
            morita_bijective,
            rows: Vec::new(),
        });
    }
    let phi_inv = phi.invert()?;
    let complex = bar_complex(ma.algebra(), m.s_action(), top, bounds)?;
    let mut rows = Vec::new();
    let mut prev_psi: Option<LinearMap> = None;
    for n in 0..=top {
        let psi = LinearMap::identity(d, ns.pow(n as u32)).kronecker(&phi_inv)?;
        let back = LinearMap::identity(d, ns.pow(n as u32)).kronecker(&phi)?;
        let isomorphism = back.compose(&psi)? == LinearMap::identity(d, psi.cols());
        let differential_compatible = match &prev_psi {
            None => None,
            Some(pp) => {
                let lhs = pp.compose(complex.differential(n))?;
                let mut shifted = LinearMap::zeros(d, pp.rows(), psi.rows());
                for i in 1..=n {
                    let sign = if i % 2 == 0 { d.one() } else { d.from_i64(-1) };
                    let face = bar_face(ma.algebra(), &[], n + 1, i, fixed_dim);
                    shifted = shifted.add(&face.scale(&sign))?;
                }
                Some(lhs == shifted.compose(&psi)?)
            }
        };
        rows.push(ShiftRow {
            degree: n,
            dim: complex.dims()[n],
            shifted_dim: ns.pow(n as u32 + 1) * fixed_dim,
            isomorphism,
            differential_compatible,
        });
        prev_psi = Some(psi);
    }
    Ok(ShiftReport {
        dim_s: ns,
        dim_m: dm,
        fixed_dim,
        morita_bijective,
        rows,
    })
}
