use serde::{Deserialize, Serialize};

use crate::cocyclic::chain::ChainComplex;
use crate::cocyclic::tensor::{add_kron, build_operator, column_support, split_index};
use crate::cocyclic::{AydModule, ComoduleAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Domain, LinearMap, Scalar, Subspace, Vector};

/// Limits on the levels and per-level dimensions that will be built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_level: usize,
    pub max_dim: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_level: 4,
            max_dim: 5000,
        }
    }
}

impl Bounds {
    /// Defaults, with `HOPFGAL_MAX_DIM` overriding the dimension bound.
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        if let Some(v) = std::env::var("HOPFGAL_MAX_DIM")
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            b.max_dim = v;
        }
        b
    }

    pub fn check_level(&self, n: usize) -> Result<()> {
        if n > self.max_level {
            return Err(Error::Resource(format!(
                "level {n} exceeds the level bound {}",
                self.max_level
            )));
        }
        Ok(())
    }

    pub fn check_dim(&self, what: &str, dim: usize) -> Result<()> {
        if dim > self.max_dim {
            return Err(Error::Resource(format!(
                "{what} has dimension {dim}, above the bound {}",
                self.max_dim
            )));
        }
        Ok(())
    }
}

/// One identity family: passed, or the first failing instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub passed: bool,
    pub failure: Option<String>,
}

impl IdentityCheck {
    fn pass() -> Self {
        IdentityCheck {
            passed: true,
            failure: None,
        }
    }

    fn fail(msg: String) -> Self {
        IdentityCheck {
            passed: false,
            failure: Some(msg),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelCheck {
    pub level: usize,
    pub dim: usize,
    pub cotensor_dim: usize,
    /// Presimplicial and degeneracy identities on the full space.
    pub simplicial: IdentityCheck,
    /// `d_n t_n = t_{n−1} d_{n−1}` on the full space.
    pub face_cyclic: IdentityCheck,
    /// `t_n^{n+1} = id` on the cotensor subspace.
    pub cyclicity: IdentityCheck,
    /// `t_n^{n+1} = id` on the whole space; informational.
    pub cyclic_on_full_space: bool,
}

/// The operators of one level on `S^{⊗(n+1)} ⊗ M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicLevel {
    pub level: usize,
    /// `d_0, …, d_n`, empty at level 0.
    pub faces: Vec<LinearMap>,
    /// `s_0, …, s_n`.
    pub degeneracies: Vec<LinearMap>,
    pub cyclic: LinearMap,
}

/// `T_•(S, M)`: level `n` is `[a_0|…|a_n]m` with
/// `d_i` multiplying `a_i a_{i+1}` for `i < n`,
/// `d_n = [a_n⁰a_0|a_1|…|a_{n−1}] a_n¹·m`, `s_i` inserting `1` after `a_i`
/// and `t_n = [a_n⁰|a_0|…|a_{n−1}] a_n¹·m`.
#[derive(Clone, Debug)]
pub struct CyclicModule {
    s: ComoduleAlgebra,
    m: AydModule,
    bounds: Bounds,
}

impl CyclicModule {
    pub fn new(s: ComoduleAlgebra, m: AydModule, bounds: Bounds) -> Result<Self> {
        if !s.hopf().same_structure(m.hopf()) {
            return Err(Error::Precondition(
                "the algebra and the coefficients are over different Hopf algebras".into(),
            ));
        }
        s.verify().into_result(s.algebra().labels())?;
        m.action().verify().into_result(m.hopf().labels())?;
        Ok(CyclicModule { s, m, bounds })
    }

    pub fn algebra(&self) -> &ComoduleAlgebra {
        &self.s
    }

    pub fn coefficients(&self) -> &AydModule {
        &self.m
    }

    fn domain(&self) -> Domain {
        self.s.domain()
    }

    fn slot_dims(&self, n: usize) -> Vec<usize> {
        let mut dims = vec![self.s.dim(); n + 1];
        dims.push(self.m.dim());
        dims
    }

    pub fn space_dim(&self, n: usize) -> usize {
        self.slot_dims(n).iter().product()
    }

    fn basis(&self, i: usize) -> Vector {
        self.s.algebra().basis_vector(i)
    }

    fn m_basis(&self, i: usize) -> Vector {
        unit_vector(self.domain(), self.m.dim(), i)
    }

    pub fn face(&self, n: usize, i: usize) -> LinearMap {
        assert!(n >= 1 && i <= n, "face d_{i} at level {n}");
        let alg = self.s.algebra();
        build_operator(
            self.domain(),
            &self.slot_dims(n),
            self.space_dim(n - 1),
            |t, out| {
                let m = t[n + 1];
                if i < n {
                    let mut parts: Vec<Vector> = Vec::with_capacity(n + 1);
                    for k in 0..i {
                        parts.push(self.basis(t[k]));
                    }
                    parts.push(alg.mul(&self.basis(t[i]), &self.basis(t[i + 1])));
                    for k in i + 2..=n {
                        parts.push(self.basis(t[k]));
                    }
                    parts.push(self.m_basis(m));
                    let refs: Vec<&[Scalar]> = parts.iter().map(Vec::as_slice).collect();
                    add_kron(out, &refs, &self.domain().one());
                } else {
                    for (ap, h, c) in self.s.comodule().terms(t[n]) {
                        let mut parts: Vec<Vector> = Vec::with_capacity(n + 1);
                        parts.push(alg.mul(&self.basis(ap), &self.basis(t[0])));
                        for k in 1..n {
                            parts.push(self.basis(t[k]));
                        }
                        parts.push(self.m.action().action(h).column(m));
                        let refs: Vec<&[Scalar]> = parts.iter().map(Vec::as_slice).collect();
                        add_kron(out, &refs, &c);
                    }
                }
            },
        )
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> LinearMap {
        assert!(i <= n, "degeneracy s_{i} at level {n}");
        let one = self.s.algebra().unit().to_vec();
        build_operator(
            self.domain(),
            &self.slot_dims(n),
            self.space_dim(n + 1),
            |t, out| {
                let mut parts: Vec<Vector> = Vec::with_capacity(n + 3);
                for k in 0..=i {
                    parts.push(self.basis(t[k]));
                }
                parts.push(one.clone());
                for k in i + 1..=n {
                    parts.push(self.basis(t[k]));
                }
                parts.push(self.m_basis(t[n + 1]));
                let refs: Vec<&[Scalar]> = parts.iter().map(Vec::as_slice).collect();
                add_kron(out, &refs, &self.domain().one());
            },
        )
    }

    pub fn cyclic_operator(&self, n: usize) -> LinearMap {
        build_operator(
            self.domain(),
            &self.slot_dims(n),
            self.space_dim(n),
            |t, out| {
                for (ap, h, c) in self.s.comodule().terms(t[n]) {
                    let mut parts: Vec<Vector> = Vec::with_capacity(n + 2);
                    parts.push(self.basis(ap));
                    for k in 0..n {
                        parts.push(self.basis(t[k]));
                    }
                    parts.push(self.m.action().action(h).column(t[n + 1]));
                    let refs: Vec<&[Scalar]> = parts.iter().map(Vec::as_slice).collect();
                    add_kron(out, &refs, &c);
                }
            },
        )
    }

    /// `S^{⊗(n+1)} □_H M`, the kernel of `ρ ⊗ id_M − id ⊗ λ_M`.
    pub fn cotensor(&self, n: usize) -> Result<Subspace> {
        let rho = self.s.tensor_coaction(n + 1);
        let lambda = self.m.left_coaction()?;
        let (dx, dm, nh) = (rho.cols(), self.m.dim(), self.s.hopf().dim());
        let map = build_operator(self.domain(), &[dx, dm], dx * nh * dm, |t, out| {
            let (x, m) = (t[0], t[1]);
            for (r, c) in column_support(&rho, x) {
                let idx = r * dm + m;
                out[idx] = &out[idx] + &c;
            }
            for (r, c) in column_support(&lambda, m) {
                let (h, mp) = (r / dm, r % dm);
                let idx = (x * nh + h) * dm + mp;
                out[idx] = &out[idx] - &c;
            }
        });
        Subspace::kernel(&map)
    }

    pub fn level(&self, n: usize) -> Result<CyclicLevel> {
        self.bounds.check_level(n)?;
        self.bounds
            .check_dim(&format!("level {n}"), self.space_dim(n))?;
        Ok(CyclicLevel {
            level: n,
            faces: if n == 0 {
                Vec::new()
            } else {
                (0..=n).map(|i| self.face(n, i)).collect()
            },
            degeneracies: (0..=n).map(|i| self.degeneracy(n, i)).collect(),
            cyclic: self.cyclic_operator(n),
        })
    }

    /// Renders the basis tuple of column `c` at level `n` as `[a|b]m1`.
    pub fn format_basis(&self, n: usize, c: usize) -> String {
        let t = split_index(&self.slot_dims(n), c);
        let labels = self.s.algebra().labels();
        let slots: Vec<&str> = t[..=n].iter().map(|&i| labels[i].as_str()).collect();
        format!("[{}]m{}", slots.join("|"), t[n + 1])
    }

    fn compare(
        &self,
        name: String,
        level: usize,
        a: &LinearMap,
        b: &LinearMap,
    ) -> Option<IdentityCheck> {
        crate::actions::first_differing_column(a, b).map(|c| {
            IdentityCheck::fail(format!("{name} fails at {}", self.format_basis(level, c)))
        })
    }

    /// The three verdicts at level `n`.
    pub fn check_level(&self, n: usize) -> Result<LevelCheck> {
        self.bounds.check_level(n)?;
        self.bounds
            .check_dim(&format!("level {}", n + 1), self.space_dim(n + 1))?;
        let cur = self.level(n)?;
        let prev = if n >= 1 {
            Some(self.level(n - 1)?)
        } else {
            None
        };
        let next_faces: Vec<LinearMap> = (0..=n + 1).map(|i| self.face(n + 1, i)).collect();
        let simplicial = self.simplicial_identities(n, &cur, prev.as_ref(), &next_faces);

        let face_cyclic = match &prev {
            None => IdentityCheck::pass(),
            Some(p) => {
                let lhs = cur.faces[n].compose(&cur.cyclic)?;
                let rhs = p.cyclic.compose(&cur.faces[n - 1])?;
                self.compare(
                    format!("d_{n} t_{n} = t_{} d_{}", n - 1, n - 1),
                    n,
                    &lhs,
                    &rhs,
                )
                .unwrap_or_else(IdentityCheck::pass)
            }
        };

        let cot = self.cotensor(n)?;
        let power = |v: &Vector| {
            let mut w = v.clone();
            for _ in 0..=n {
                w = cur.cyclic.apply(&w);
            }
            w
        };
        let cyclicity = cot
            .basis()
            .iter()
            .enumerate()
            .find(|(_, v)| power(v) != **v)
            .map(|(k, _)| {
                IdentityCheck::fail(format!("t_{n}^{} ≠ id on cotensor basis vector {k}", n + 1))
            })
            .unwrap_or_else(IdentityCheck::pass);
        let dim = self.space_dim(n);
        let cyclic_on_full_space = (0..dim).all(|c| {
            power(&unit_vector(self.domain(), dim, c)) == unit_vector(self.domain(), dim, c)
        });

        Ok(LevelCheck {
            level: n,
            dim,
            cotensor_dim: cot.dim(),
            simplicial,
            face_cyclic,
            cyclicity,
            cyclic_on_full_space,
        })
    }

    fn simplicial_identities(
        &self,
        n: usize,
        cur: &CyclicLevel,
        prev: Option<&CyclicLevel>,
        next_faces: &[LinearMap],
    ) -> IdentityCheck {
        let compose = |a: &LinearMap, b: &LinearMap| a.compose(b).expect("shape");
        if let Some(p) = prev {
            // d_i d_j = d_{j−1} d_i for i < j
            if n >= 2 {
                for j in 0..=n {
                    for i in 0..j {
                        let lhs = compose(&p.faces[i], &cur.faces[j]);
                        let rhs = compose(&p.faces[j - 1], &cur.faces[i]);
                        let name = format!("d_{i} d_{j} = d_{} d_{i}", j - 1);
                        if let Some(f) = self.compare(name, n, &lhs, &rhs) {
                            return f;
                        }
                    }
                }
            }
            // s_i s_j = s_{j+1} s_i for i ≤ j, on level n − 1
            for j in 0..n {
                for i in 0..=j {
                    let lhs = compose(&cur.degeneracies[i], &p.degeneracies[j]);
                    let rhs = compose(&cur.degeneracies[j + 1], &p.degeneracies[i]);
                    let name = format!("s_{i} s_{j} = s_{} s_{i}", j + 1);
                    if let Some(f) = self.compare(name, n - 1, &lhs, &rhs) {
                        return f;
                    }
                }
            }
        }
        let id = LinearMap::identity(self.domain(), self.space_dim(n));
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = compose(&next_faces[i], &cur.degeneracies[j]);
                let (rhs, name) = if i < j {
                    let p = prev.expect("i < j ≤ n forces n ≥ 1");
                    (
                        compose(&p.degeneracies[j - 1], &cur.faces[i]),
                        format!("d_{i} s_{j} = s_{} d_{i}", j - 1),
                    )
                } else if i == j || i == j + 1 {
                    (id.clone(), format!("d_{i} s_{j} = id"))
                } else {
                    let p = prev.expect("i > j + 1 forces n ≥ 1");
                    (
                        compose(&p.degeneracies[j], &cur.faces[i - 1]),
                        format!("d_{i} s_{j} = s_{j} d_{}", i - 1),
                    )
                };
                if let Some(f) = self.compare(name, n, &lhs, &rhs) {
                    return f;
                }
            }
        }
        IdentityCheck::pass()
    }

    /// `b = Σ_{i=0}^{n} (−1)^i d_i` on levels `0..=top`.
    pub fn hochschild_complex(&self, top: usize) -> Result<ChainComplex> {
        self.bounds.check_level(top)?;
        let d = self.domain();
        let mut dims = vec![self.space_dim(0)];
        let mut diffs = Vec::new();
        for n in 1..=top {
            self.bounds
                .check_dim(&format!("level {n}"), self.space_dim(n))?;
            let mut b = LinearMap::zeros(d, self.space_dim(n - 1), self.space_dim(n));
            for i in 0..=n {
                let sign = if i % 2 == 0 { d.one() } else { d.from_i64(-1) };
                b = b.add(&self.face(n, i).scale(&sign))?;
            }
            dims.push(self.space_dim(n));
            diffs.push(b);
        }
        ChainComplex::new(dims, diffs)
    }
}
