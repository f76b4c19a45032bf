use crate::actions::HopfModule;
use crate::error::{Error, Result};
use crate::hopf::{tensor_product_mul, Algebra, AxiomCheck, HopfAlgebra, VerificationReport};
use crate::linalg::{vec_kron, Domain, LinearMap, Scalar, Subspace, Vector};

/// An algebra `S` with a left `H`-action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleAlgebra {
    module: HopfModule,
    algebra: Algebra,
}

impl ModuleAlgebra {
    /// `(h, s, t, c)` means `e_h · e_s += c e_t`. Shapes only; see
    /// [`ModuleAlgebra::verify`].
    pub fn from_triples(
        hopf: HopfAlgebra,
        algebra: Algebra,
        action: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let module = HopfModule::from_triples(hopf, algebra.dim(), action)?;
        Self::new(module, algebra)
    }

    pub fn new(module: HopfModule, algebra: Algebra) -> Result<Self> {
        if module.dim() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "module of dimension {} on an algebra of dimension {}",
                module.dim(),
                algebra.dim()
            )));
        }
        if module.domain() != algebra.domain() {
            return Err(Error::DomainMismatch {
                left: module.domain(),
                right: algebra.domain(),
            });
        }
        Ok(ModuleAlgebra { module, algebra })
    }

    /// `h·s = ε(h)s`.
    pub fn trivial(hopf: HopfAlgebra, algebra: Algebra) -> Result<Self> {
        let module = HopfModule::trivial(hopf, algebra.dim());
        Self::new(module, algebra)
    }

    pub fn hopf(&self) -> &HopfAlgebra {
        self.module.hopf()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn module(&self) -> &HopfModule {
        &self.module
    }

    pub fn domain(&self) -> Domain {
        self.algebra.domain()
    }

    pub fn dim_s(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.hopf().dim()
    }

    pub fn action(&self, h: usize) -> &LinearMap {
        self.module.action(h)
    }

    /// Module laws, then `h·(st) = Σ (h₁·s)(h₂·t)` with witness `(h, s, t)`
    /// and `h·1 = ε(h)1` with witness `(h)`.
    pub fn verify(&self) -> VerificationReport {
        let mut report = self.algebra.verify();
        report.extend(self.module.verify());
        let n = self.dim_s();
        let h_dim = self.dim_h();
        let mut witness = None;
        'outer: for h in 0..h_dim {
            for s in 0..n {
                for t in 0..n {
                    let st = self.algebra.mul(&self.basis(s), &self.basis(t));
                    let lhs = self.action(h).apply(&st);
                    let rhs = self.leibniz(h, &self.basis(s), &self.basis(t));
                    if lhs != rhs {
                        witness = Some(vec![h, s, t]);
                        break 'outer;
                    }
                }
            }
        }
        report
            .checks
            .push(AxiomCheck::from_result("module algebra", witness));
        let one = self.algebra.unit();
        let unit_witness = (0..h_dim)
            .find(|&h| {
                let expected: Vector = one.iter().map(|c| c * &self.hopf().counit()[h]).collect();
                self.action(h).apply(one) != expected
            })
            .map(|h| vec![h]);
        report
            .checks
            .push(AxiomCheck::from_result("unit preserved", unit_witness));
        report
    }

    pub fn verified(self) -> Result<Self> {
        let report = self.verify();
        // witnesses mix H and S indices, so render them numerically
        report.into_result(&[])?;
        Ok(self)
    }

    fn basis(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    /// `Σ (h₁·a)(h₂·b)` for the basis element `e_h`.
    fn leibniz(&self, h: usize, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim_h();
        let mut out = vec![self.domain().zero(); self.dim_s()];
        for (jk, c) in self.hopf().basis_coproduct(h) {
            let (j, k) = (jk / n, jk % n);
            let prod = self
                .algebra
                .mul(&self.action(j).apply(a), &self.action(k).apply(b));
            for (o, p) in out.iter_mut().zip(prod) {
                *o = &*o + &(&p * c);
            }
        }
        out
    }

    pub fn invariants(&self) -> Result<Subspace> {
        self.module.invariants()
    }

    pub fn is_faithful(&self) -> Result<bool> {
        self.module.is_faithful()
    }

    /// `S # H` on the basis `s_i # h_j` at index `i·dim H + j` with
    /// `(s#h)(t#k) = Σ s(h₁·t) # h₂k`.
    pub fn smash(&self) -> Result<Algebra> {
        let (ns, nh) = (self.dim_s(), self.dim_h());
        let d = self.domain();
        let mut labels = Vec::with_capacity(ns * nh);
        for s in self.algebra.labels() {
            for h in self.hopf().labels() {
                labels.push(format!("{s}#{h}"));
            }
        }
        let unit = vec_kron(self.algebra.unit(), self.hopf().unit());
        let smash = Algebra::from_fn(d, labels, unit, |x, y| {
            let (s, h) = (x / nh, x % nh);
            let (t, k) = (y / nh, y % nh);
            let mut out = vec![d.zero(); ns * nh];
            for (ab, c) in self.hopf().basis_coproduct(h) {
                let (a, b) = (ab / nh, ab % nh);
                let left = self
                    .algebra
                    .mul(&self.basis(s), &self.action(a).apply(&self.basis(t)));
                let right = self
                    .hopf()
                    .mul(&self.hopf().basis_vector(b), &self.hopf().basis_vector(k));
                for (idx, v) in vec_kron(&left, &right).into_iter().enumerate() {
                    out[idx] = &out[idx] + &(&v * c);
                }
            }
            out
        })?;
        if let Some(f) = smash.verify().first_failure() {
            return Err(Error::Inconsistent(format!(
                "smash product fails {} at {:?}; the action data is not a module algebra",
                f.axiom, f.witness
            )));
        }
        Ok(smash)
    }

    /// `j : S # H → End(S)`, `j(s#h)(t) = s·(h·t)`, with `End(S)` flattened
    /// row-major.
    pub fn galois_map_j(&self) -> LinearMap {
        let (ns, nh) = (self.dim_s(), self.dim_h());
        let mut cols = Vec::with_capacity(ns * nh);
        for s in 0..ns {
            let ls = self.algebra.left_mul_matrix(&self.basis(s));
            for h in 0..nh {
                cols.push(
                    ls.compose(self.action(h))
                        .expect("shape")
                        .entries()
                        .to_vec(),
                );
            }
        }
        LinearMap::from_columns(self.domain(), ns * ns, &cols).expect("shape")
    }

    /// The induced right coaction `σ(t) = Σ_i (e_i·t) ⊗ e_i*` over the dual
    /// Hopf algebra, as a `(dim S · dim H) × dim S` matrix.
    pub fn coaction_matrix(&self) -> LinearMap {
        let (ns, nh) = (self.dim_s(), self.dim_h());
        let mut m = LinearMap::zeros(self.domain(), ns * nh, ns);
        for i in 0..nh {
            let a = self.action(i);
            for t in 0..ns {
                for s in 0..ns {
                    m.set(s * nh + i, t, a.get(s, t).clone());
                }
            }
        }
        m
    }

    /// `γ : S ⊗ S → S ⊗ H*`, `s ⊗ t ↦ (s ⊗ 1)σ(t)`.
    pub fn galois_map_gamma(&self) -> LinearMap {
        let (ns, nh) = (self.dim_s(), self.dim_h());
        let d = self.domain();
        let mut cols = Vec::with_capacity(ns * ns);
        for s in 0..ns {
            for t in 0..ns {
                let mut col = vec![d.zero(); ns * nh];
                for i in 0..nh {
                    let v = self
                        .algebra
                        .mul(&self.basis(s), &self.action(i).apply(&self.basis(t)));
                    for (a, c) in v.into_iter().enumerate() {
                        col[a * nh + i] = c;
                    }
                }
                cols.push(col);
            }
        }
        LinearMap::from_columns(d, ns * nh, &cols).expect("shape")
    }

    /// Checks `γ(xx' ⊗ yy') = γ(x⊗y)γ(x'⊗y')` on all basis quadruples, the
    /// codomain `S ⊗ H*` carrying the componentwise product. Requires γ to
    /// be bijective.
    pub fn gamma_is_algebra_map(&self) -> Result<AxiomCheck> {
        let gamma = self.galois_map_gamma();
        if !gamma.is_square() || !gamma.is_invertible()? {
            return Err(Error::Precondition(
                "γ is not bijective, so the algebra-map property is not defined here".into(),
            ));
        }
        let dual = self.hopf().dual()?;
        let ns = self.dim_s();
        let target = [&self.algebra, dual.algebra()];
        let g = |x: usize, y: usize| gamma.column(x * ns + y);
        for x in 0..ns {
            for xp in 0..ns {
                let xx = self.algebra.mul(&self.basis(x), &self.basis(xp));
                for y in 0..ns {
                    for yp in 0..ns {
                        let yy = self.algebra.mul(&self.basis(y), &self.basis(yp));
                        let lhs = gamma.apply(&vec_kron(&xx, &yy));
                        let rhs = tensor_product_mul(&target, &g(x, y), &g(xp, yp));
                        if lhs != rhs {
                            return Ok(AxiomCheck::fail("γ multiplicative", vec![x, xp, y, yp]));
                        }
                    }
                }
            }
        }
        Ok(AxiomCheck::pass("γ multiplicative"))
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        self.algebra.format_vector(v)
    }
}
