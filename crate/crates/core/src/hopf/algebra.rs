use crate::error::{Error, Result};
use crate::hopf::{AxiomCheck, VerificationReport};
use crate::linalg::{unit_vector, vec_is_zero, Domain, LinearMap, Scalar, Vector};

/// Sparse coefficients `(basis index, coefficient)` of a vector.
pub type Sparse = Vec<(usize, Scalar)>;

/// A finite-dimensional unital algebra given by structure constants on a
/// fixed ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    domain: Domain,
    labels: Vec<String>,
    /// `products[i * n + j]` holds the expansion of `e_i · e_j`.
    products: Vec<Sparse>,
    unit: Vector,
}

impl Algebra {
    /// Builds an algebra from `(i, j, k, c)` triples meaning `e_i e_j += c e_k`.
    ///
    /// Only shapes and domains are checked here; run [`Algebra::verify`] for
    /// the axioms.
    pub fn from_triples(
        domain: Domain,
        labels: Vec<String>,
        mult: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: Vector,
    ) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::Format(format!(
                "unit has {} coefficients for a {n}-dimensional algebra",
                unit.len()
            )));
        }
        check_domain(domain, unit.iter())?;
        let mut dense = vec![vec![domain.zero(); n]; n * n];
        for (i, j, k, c) in mult {
            if i >= n || j >= n || k >= n {
                return Err(Error::Format(format!(
                    "multiplication triple ({i}, {j}, {k}) out of range for dimension {n}"
                )));
            }
            check_domain(domain, std::iter::once(&c))?;
            let cur = &dense[i * n + j][k] + &c;
            dense[i * n + j][k] = cur;
        }
        Ok(Algebra {
            domain,
            labels,
            products: dense.into_iter().map(|v| to_sparse(&v)).collect(),
            unit,
        })
    }

    /// Builds an algebra from a closure computing the product of two basis
    /// elements as a dense vector.
    pub fn from_fn(
        domain: Domain,
        labels: Vec<String>,
        unit: Vector,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Result<Self> {
        let n = labels.len();
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                for (k, c) in v.into_iter().enumerate() {
                    if !c.is_zero() {
                        triples.push((i, j, k, c));
                    }
                }
            }
        }
        Self::from_triples(domain, labels, triples, unit)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.domain, self.dim(), i)
    }

    /// Expansion of `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    /// `(i, j, k, c)` triples of the multiplication tensor, in index order.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.basis_product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vec![self.domain.zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.basis_product(i, j) {
                    out[*k] = &out[*k] + &(&xy * c);
                }
            }
        }
        out
    }

    /// Matrix of `t ↦ a·t`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> LinearMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(a, &self.basis_vector(j))).collect();
        LinearMap::from_columns(self.domain, n, &cols).expect("square")
    }

    /// Matrix of `t ↦ t·a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> LinearMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis_vector(j), a)).collect();
        LinearMap::from_columns(self.domain, n, &cols).expect("square")
    }

    /// The multiplication `A ⊗ A → A` as an `n × n²` matrix.
    pub fn mult_map(&self) -> LinearMap {
        let n = self.dim();
        let mut m = LinearMap::zeros(self.domain, n, n * n);
        for ij in 0..n * n {
            for (k, c) in &self.products[ij] {
                m.set(*k, ij, c.clone());
            }
        }
        m
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Associativity and unit axioms, each with the first failing basis tuple.
    pub fn verify(&self) -> VerificationReport {
        let n = self.dim();
        let mut assoc = AxiomCheck::pass("associativity");
        'outer: for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ij = self.mul(&ei, &self.basis_vector(j));
                for k in 0..n {
                    let ek = self.basis_vector(k);
                    let left = self.mul(&ij, &ek);
                    let right = self.mul(&ei, &self.mul(&self.basis_vector(j), &ek));
                    if left != right {
                        assoc = AxiomCheck::fail("associativity", vec![i, j, k]);
                        break 'outer;
                    }
                }
            }
        }
        let mut unit = AxiomCheck::pass("unit");
        for i in 0..n {
            let ei = self.basis_vector(i);
            if self.mul(&self.unit, &ei) != ei || self.mul(&ei, &self.unit) != ei {
                unit = AxiomCheck::fail("unit", vec![i]);
                break;
            }
        }
        VerificationReport {
            checks: vec![assoc, unit],
        }
    }

    /// Componentwise tensor product algebra `self ⊗ other`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        let (n, m) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        let unit = crate::linalg::vec_kron(&self.unit, &other.unit);
        let mut triples = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for p in 0..m {
                    for q in 0..m {
                        for (k, c) in self.basis_product(i, j) {
                            for (r, d) in other.basis_product(p, q) {
                                triples.push((i * m + p, j * m + q, k * m + r, c * d));
                            }
                        }
                    }
                }
            }
        }
        Algebra::from_triples(self.domain, labels, triples, unit)
    }

    /// True if the structure constants and unit agree, ignoring labels.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.domain == other.domain
            && self.dim() == other.dim()
            && self.products == other.products
            && self.unit == other.unit
    }

    /// Renders a vector as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        format_combination(&self.labels, v)
    }
}

pub(crate) fn check_domain<'a>(
    domain: Domain,
    values: impl Iterator<Item = &'a Scalar>,
) -> Result<()> {
    for v in values {
        if v.domain() != domain {
            return Err(Error::DomainMismatch {
                left: domain,
                right: v.domain(),
            });
        }
    }
    Ok(())
}

pub(crate) fn to_sparse(v: &[Scalar]) -> Sparse {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Product in a tensor product of algebras, computed factorwise on the
/// lexicographically flattened coordinates.
pub fn tensor_product_mul(factors: &[&Algebra], x: &[Scalar], y: &[Scalar]) -> Vector {
    let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
    let total: usize = dims.iter().product();
    let domain = factors[0].domain();
    let mut out = vec![domain.zero(); total];
    let split = |mut idx: usize| -> Vec<usize> {
        let mut parts = vec![0; dims.len()];
        for f in (0..dims.len()).rev() {
            parts[f] = idx % dims[f];
            idx /= dims[f];
        }
        parts
    };
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        let pa = split(a);
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let pb = split(b);
            // expand factor by factor
            let mut acc: Vec<(usize, Scalar)> = vec![(0, xa * yb)];
            for (f, alg) in factors.iter().enumerate() {
                let prod = alg.basis_product(pa[f], pb[f]);
                let mut next = Vec::with_capacity(acc.len() * prod.len());
                for (idx, c) in &acc {
                    for (k, d) in prod {
                        next.push((idx * dims[f] + k, c * d));
                    }
                }
                acc = next;
            }
            for (idx, c) in acc {
                out[idx] = &out[idx] + &c;
            }
        }
    }
    out
}

/// `"1 + σ"`-style rendering of a coefficient vector.
pub fn format_combination(labels: &[String], v: &[Scalar]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (c, label) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = if negative { -c } else { c.clone() };
        let body = if label == "1" {
            magnitude.to_string()
        } else if magnitude.is_one() {
            label.clone()
        } else {
            format!("{magnitude}·{label}")
        };
        if terms.is_empty() {
            terms.push(if negative { format!("-{body}") } else { body });
        } else {
            terms.push(format!("{} {body}", if negative { "-" } else { "+" }));
        }
    }
    if terms.is_empty() || vec_is_zero(v) {
        "0".to_string()
    } else {
        terms.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_rationals() -> Algebra {
        // ℚ[x]/(x²+1) on the basis {1, x}
        let d = Domain::Rational;
        Algebra::from_triples(
            d,
            vec!["1".into(), "x".into()],
            vec![
                (0, 0, 0, d.one()),
                (0, 1, 1, d.one()),
                (1, 0, 1, d.one()),
                (1, 1, 0, d.from_i64(-1)),
            ],
            vec![d.one(), d.zero()],
        )
        .unwrap()
    }

    #[test]
    fn gaussian_rationals_are_an_algebra() {
        let a = gaussian_rationals();
        assert!(a.verify().all_passed());
        assert!(a.is_commutative());
        let x = a.basis_vector(1);
        assert_eq!(
            a.mul(&x, &x),
            vec![Domain::Rational.from_i64(-1), Domain::Rational.zero()]
        );
    }

    #[test]
    fn broken_unit_is_reported() {
        let d = Domain::Rational;
        let a = Algebra::from_triples(
            d,
            vec!["1".into(), "x".into()],
            vec![(0, 0, 0, d.one()), (0, 1, 1, d.one()), (1, 0, 1, d.one())],
            vec![d.zero(), d.one()],
        )
        .unwrap();
        let report = a.verify();
        assert!(!report.all_passed());
        assert_eq!(report.check("unit").unwrap().witness, Some(vec![0]));
    }

    #[test]
    fn out_of_range_triple_is_a_format_error() {
        let d = Domain::Rational;
        let err =
            Algebra::from_triples(d, vec!["1".into()], vec![(0, 0, 3, d.one())], vec![d.one()]);
        assert!(matches!(err, Err(Error::Format(_))));
    }

    #[test]
    fn tensor_product_agrees_with_factorwise_product() {
        let a = gaussian_rationals();
        let t = a.tensor(&a).unwrap();
        assert!(t.verify().all_passed());
        let x = t.basis_vector(3); // x⊗x
        let direct = t.mul(&x, &x);
        assert_eq!(direct, tensor_product_mul(&[&a, &a], &x, &x));
        assert_eq!(t.format_vector(&direct), "1⊗1");
    }

    #[test]
    fn combination_formatting() {
        let d = Domain::Rational;
        let labels: Vec<String> = vec!["1".into(), "g".into(), "x".into()];
        let v = vec![
            d.parse_scalar("1/2").unwrap(),
            d.from_i64(-1),
            d.from_i64(3),
        ];
        assert_eq!(format_combination(&labels, &v), "1/2 - g + 3·x");
        assert_eq!(
            format_combination(&labels, &[d.zero(), d.zero(), d.zero()]),
            "0"
        );
    }
}
