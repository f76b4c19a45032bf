use crate::error::{Error, Result};
use crate::hopf::algebra::{check_domain, to_sparse};
use crate::hopf::{tensor_product_mul, Algebra, AxiomCheck, Sparse, VerificationReport};
use crate::linalg::{vec_kron, Domain, LinearMap, Scalar, Subspace, Vector};

/// A finite-dimensional Hopf algebra: algebra structure plus
/// comultiplication, counit and an explicitly stored antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    algebra: Algebra,
    /// `coproducts[i]` is `Δ(e_i)` in the flattened basis `e_j ⊗ e_k ↦ j·n + k`.
    coproducts: Vec<Sparse>,
    counit: Vector,
    antipode: LinearMap,
}

impl HopfAlgebra {
    /// Assembles structure constants after shape checks only. `comult` holds
    /// `(i, j, k, c)` meaning `Δ(e_i) += c e_j ⊗ e_k`; column `i` of `antipode`
    /// is the image of `e_i`.
    pub fn from_parts(
        algebra: Algebra,
        comult: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        counit: Vector,
        antipode: LinearMap,
    ) -> Result<Self> {
        let n = algebra.dim();
        let domain = algebra.domain();
        if counit.len() != n {
            return Err(Error::Format(format!(
                "counit has {} entries for dimension {n}",
                counit.len()
            )));
        }
        check_domain(domain, counit.iter())?;
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::Format(format!(
                "antipode is {}x{}, expected {n}x{n}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        if antipode.domain() != domain {
            return Err(Error::DomainMismatch {
                left: domain,
                right: antipode.domain(),
            });
        }
        let mut dense = vec![vec![domain.zero(); n * n]; n];
        for (i, j, k, c) in comult {
            if i >= n || j >= n || k >= n {
                return Err(Error::Format(format!(
                    "comultiplication triple ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            check_domain(domain, std::iter::once(&c))?;
            let cur = &dense[i][j * n + k] + &c;
            dense[i][j * n + k] = cur;
        }
        Ok(HopfAlgebra {
            algebra,
            coproducts: dense.iter().map(|v| to_sparse(v)).collect(),
            counit,
            antipode,
        })
    }

    /// Same as [`HopfAlgebra::from_parts`] with dense coproduct vectors.
    pub fn from_dense(
        algebra: Algebra,
        coproducts: Vec<Vector>,
        counit: Vector,
        antipode: LinearMap,
    ) -> Result<Self> {
        let n = algebra.dim();
        let mut triples = Vec::new();
        for (i, v) in coproducts.into_iter().enumerate() {
            if v.len() != n * n {
                return Err(Error::Format(format!(
                    "coproduct of e_{i} has wrong length"
                )));
            }
            for (jk, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    triples.push((i, jk / n, jk % n, c));
                }
            }
        }
        Self::from_parts(algebra, triples, counit, antipode)
    }

    /// Runs [`HopfAlgebra::verify`] and rejects data failing any axiom.
    pub fn verified(self) -> Result<Self> {
        self.verify().into_result(self.labels())?;
        Ok(self)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn domain(&self) -> Domain {
        self.algebra.domain()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn unit(&self) -> &[Scalar] {
        self.algebra.unit()
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &LinearMap {
        &self.antipode
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        self.algebra.basis_vector(i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.algebra.mul(a, b)
    }

    pub fn basis_coproduct(&self, i: usize) -> &[(usize, Scalar)] {
        &self.coproducts[i]
    }

    /// `(i, j, k, c)` triples of the comultiplication tensor.
    pub fn comult_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for (i, cop) in self.coproducts.iter().enumerate() {
            for (jk, c) in cop {
                out.push((i, jk / n, jk % n, c.clone()));
            }
        }
        out
    }

    pub fn comultiply(&self, v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.domain().zero(); n * n];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (jk, c) in &self.coproducts[i] {
                out[*jk] = &out[*jk] + &(x * c);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        v.iter()
            .zip(&self.counit)
            .fold(self.domain().zero(), |acc, (x, e)| &acc + &(x * e))
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vector {
        self.antipode.apply(v)
    }

    /// Δ as an `n² × n` matrix.
    pub fn comult_map(&self) -> LinearMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n)
            .map(|i| self.comultiply(&self.basis_vector(i)))
            .collect();
        LinearMap::from_columns(self.domain(), n * n, &cols).expect("shape")
    }

    /// Iterated coproduct `(Δ ⊗ id) Δ (v)` in `H^{⊗3}`.
    pub fn comultiply_twice(&self, v: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.domain().zero(); n * n * n];
        let d = self.comultiply(v);
        for (jk, c) in d.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (j, k) = (jk / n, jk % n);
            for (ab, e) in &self.coproducts[j] {
                let idx = ab * n + k;
                out[idx] = &out[idx] + &(c * e);
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    /// Δ = τ∘Δ as tensors.
    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let d = self.comultiply(&self.basis_vector(i));
            (0..n).all(|j| (0..n).all(|k| d[j * n + k] == d[k * n + j]))
        })
    }

    /// Every Hopf axiom, in order: associativity, unit, coassociativity,
    /// counit, bialgebra compatibility, antipode.
    pub fn verify(&self) -> VerificationReport {
        let mut report = self.algebra.verify();
        let n = self.dim();
        let d = self.domain();

        let coassoc = (0..n).find(|&i| {
            let mut left = vec![d.zero(); n * n * n];
            let mut right = vec![d.zero(); n * n * n];
            for (jk, c) in &self.coproducts[i] {
                let (j, k) = (jk / n, jk % n);
                for (ab, e) in &self.coproducts[j] {
                    let idx = ab * n + k;
                    left[idx] = &left[idx] + &(c * e);
                }
                for (ab, e) in &self.coproducts[k] {
                    let idx = j * n * n + ab;
                    right[idx] = &right[idx] + &(c * e);
                }
            }
            left != right
        });
        report.checks.push(AxiomCheck::from_result(
            "coassociativity",
            coassoc.map(|i| vec![i]),
        ));

        let counit = (0..n).find(|&i| {
            let mut left = vec![d.zero(); n];
            let mut right = vec![d.zero(); n];
            for (jk, c) in &self.coproducts[i] {
                let (j, k) = (jk / n, jk % n);
                left[k] = &left[k] + &(c * &self.counit[j]);
                right[j] = &right[j] + &(c * &self.counit[k]);
            }
            let e = self.basis_vector(i);
            left != e || right != e
        });
        report
            .checks
            .push(AxiomCheck::from_result("counit", counit.map(|i| vec![i])));

        report.checks.push(self.check_bialgebra());

        let antipode = (0..n).find(|&i| {
            let target: Vector = self.unit().iter().map(|u| u * &self.counit[i]).collect();
            let mut left = vec![d.zero(); n];
            let mut right = vec![d.zero(); n];
            for (jk, c) in &self.coproducts[i] {
                let (j, k) = (jk / n, jk % n);
                let sj = self.antipode.column(j);
                let sk = self.antipode.column(k);
                let l = self.mul(&sj, &self.basis_vector(k));
                let r = self.mul(&self.basis_vector(j), &sk);
                for t in 0..n {
                    left[t] = &left[t] + &(c * &l[t]);
                    right[t] = &right[t] + &(c * &r[t]);
                }
            }
            left != target || right != target
        });
        report.checks.push(AxiomCheck::from_result(
            "antipode",
            antipode.map(|i| vec![i]),
        ));
        report
    }

    fn check_bialgebra(&self) -> AxiomCheck {
        let n = self.dim();
        let alg = &self.algebra;
        let unit_ok = self.comultiply(self.unit()) == vec_kron(self.unit(), self.unit())
            && self.counit_of(self.unit()).is_one();
        if !unit_ok {
            return AxiomCheck::fail("bialgebra", vec![]);
        }
        for i in 0..n {
            let di = self.comultiply(&self.basis_vector(i));
            for j in 0..n {
                let prod = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                let dj = self.comultiply(&self.basis_vector(j));
                if self.comultiply(&prod) != tensor_product_mul(&[alg, alg], &di, &dj)
                    || self.counit_of(&prod) != &self.counit[i] * &self.counit[j]
                {
                    return AxiomCheck::fail("bialgebra", vec![i, j]);
                }
            }
        }
        AxiomCheck::pass("bialgebra")
    }

    /// Full-rank test of the antipode. Over ℤ this asks for an integral
    /// inverse, i.e. determinant ±1.
    pub fn antipode_bijective(&self) -> bool {
        match self.domain() {
            Domain::Integer => self
                .antipode
                .determinant()
                .map(|d| d.inverse().is_some())
                .unwrap_or(false),
            _ => self.antipode.is_invertible().unwrap_or(false),
        }
    }

    pub fn antipode_inverse(&self) -> Result<LinearMap> {
        self.antipode.invert()
    }

    /// Dual Hopf algebra on the dual basis `δ_i`: the product is the transpose of
    /// Δ, the coproduct the transpose of μ, the unit is ε, the counit is
    /// evaluation at 1 and the antipode is transposed.
    pub fn dual(&self) -> Result<HopfAlgebra> {
        self.domain().require_field("dual")?;
        // the double dual is identified with the original basis
        let labels = self
            .labels()
            .iter()
            .map(|l| match l.strip_prefix("δ_") {
                Some(inner) => inner.to_string(),
                None => format!("δ_{l}"),
            })
            .collect();
        let mult = self
            .comult_triples()
            .into_iter()
            .map(|(i, j, k, c)| (j, k, i, c));
        let algebra = Algebra::from_triples(self.domain(), labels, mult, self.counit.clone())?;
        let comult = self
            .algebra
            .triples()
            .into_iter()
            .map(|(i, j, k, c)| (k, i, j, c));
        HopfAlgebra::from_parts(
            algebra,
            comult,
            self.unit().to_vec(),
            self.antipode.transpose(),
        )
    }

    /// True if all structure constants agree, ignoring basis labels.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self.algebra.same_structure(&other.algebra)
            && self.coproducts == other.coproducts
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Local in the sense used for the tame/Hopf-Galois comparison: the
    /// augmentation ideal `ker ε` is nilpotent.
    pub fn is_local(&self) -> Result<bool> {
        let d = self.domain();
        d.require_field("localness test")?;
        let n = self.dim();
        let eps = LinearMap::from_rows(d, n, std::slice::from_ref(&self.counit))?;
        let augmentation = Subspace::kernel(&eps)?;
        let mut power = augmentation.clone();
        for _ in 0..=n {
            if power.dim() == 0 {
                return Ok(true);
            }
            let mut products = Vec::new();
            for a in power.basis() {
                for b in augmentation.basis() {
                    products.push(self.mul(a, b));
                }
            }
            let next = Subspace::span(d, n, &products)?;
            if next == power {
                return Ok(false);
            }
            power = next;
        }
        Ok(power.dim() == 0)
    }

    pub fn format_vector(&self, v: &[Scalar]) -> String {
        self.algebra.format_vector(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::builtins::{group_algebra, sweedler, taft, truncated_primitive};
    use crate::hopf::groups::cyclic;

    fn qc2() -> HopfAlgebra {
        group_algebra(&cyclic(2), Domain::Rational, None).unwrap()
    }

    #[test]
    fn flipped_antipode_is_caught_at_x() {
        let s = sweedler(Domain::Rational).unwrap();
        let mut anti = s.antipode().clone();
        // α(x) = g·x instead of -g·x
        anti.set(3, 2, Domain::Rational.one());
        let broken = HopfAlgebra::from_parts(
            s.algebra().clone(),
            s.comult_triples(),
            s.counit().to_vec(),
            anti,
        )
        .unwrap();
        let report = broken.verify();
        let check = report.check("antipode").unwrap();
        assert!(!check.passed);
        assert_eq!(check.witness, Some(vec![2]));
        assert!(report.check("bialgebra").unwrap().passed);
        assert!(broken.verified().is_err());
    }

    #[test]
    fn dual_of_c2_is_pointwise() {
        let d = qc2().dual().unwrap();
        assert!(d.verify().all_passed());
        let q = Domain::Rational;
        let (de, dg) = (d.basis_vector(0), d.basis_vector(1));
        assert_eq!(d.mul(&de, &de), de);
        assert_eq!(d.mul(&dg, &dg), dg);
        assert_eq!(d.mul(&de, &dg), vec![q.zero(), q.zero()]);
        assert_eq!(d.unit(), &[q.one(), q.one()]);
    }

    #[test]
    fn double_dual_is_identity_on_structure() {
        let s = sweedler(Domain::Rational).unwrap();
        assert!(s.dual().unwrap().dual().unwrap().same_structure(&s));
        let t = taft(3, &Domain::prime(7).unwrap().from_i64(2)).unwrap();
        assert!(t.dual().unwrap().dual().unwrap().same_structure(&t));
        assert_eq!(s.dual().unwrap().dual().unwrap().labels(), s.labels());
    }

    #[test]
    fn dual_over_integers_is_rejected() {
        let h = group_algebra(&cyclic(2), Domain::Integer, None).unwrap();
        assert!(matches!(h.dual(), Err(Error::UnsupportedDomain { .. })));
    }

    #[test]
    fn integrals_of_small_examples() {
        let q = Domain::Rational;
        assert_eq!(
            qc2().left_integrals().unwrap().basis,
            vec![vec![q.one(), q.one()]]
        );
        let s = sweedler(q).unwrap();
        let l = s.left_integrals().unwrap();
        assert_eq!(s.format_vector(l.generator()), "x + g·x");
        let d = qc2().dual().unwrap();
        assert_eq!(
            d.left_integrals().unwrap().basis,
            vec![vec![q.one(), q.zero()]]
        );
    }

    #[test]
    fn semisimplicity() {
        assert!(qc2().is_semisimple().unwrap());
        let f2c2 = group_algebra(&cyclic(2), Domain::prime(2).unwrap(), None).unwrap();
        assert!(!f2c2.is_semisimple().unwrap());
        assert!(!sweedler(Domain::Rational).unwrap().is_semisimple().unwrap());
    }

    #[test]
    fn antipode_bijectivity() {
        assert!(qc2().antipode_bijective());
        assert!(sweedler(Domain::Rational).unwrap().antipode_bijective());
        let h = qc2();
        let zeroed = HopfAlgebra::from_parts(
            h.algebra().clone(),
            h.comult_triples(),
            h.counit().to_vec(),
            LinearMap::zeros(Domain::Rational, 2, 2),
        )
        .unwrap();
        assert!(!zeroed.antipode_bijective());
        let z = group_algebra(&cyclic(3), Domain::Integer, None).unwrap();
        assert!(z.antipode_bijective());
    }

    #[test]
    fn localness() {
        let f2c2 = group_algebra(&cyclic(2), Domain::prime(2).unwrap(), None).unwrap();
        assert!(f2c2.is_local().unwrap());
        assert!(!qc2().is_local().unwrap());
        assert!(truncated_primitive(Domain::prime(2).unwrap())
            .unwrap()
            .is_local()
            .unwrap());
    }

    #[test]
    fn cocommutativity() {
        assert!(qc2().is_cocommutative());
        assert!(!sweedler(Domain::Rational).unwrap().is_cocommutative());
    }
}
