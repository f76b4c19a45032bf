use crate::error::Result;
use crate::linalg::{echelon_rows, Domain, LinearMap, Scalar, Vector};

/// A subspace of `K^n` held by the reduced echelon basis of its span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    domain: Domain,
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(domain: Domain, ambient: usize) -> Self {
        Subspace {
            domain,
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn span(domain: Domain, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        domain.require_field("subspace span")?;
        Ok(Subspace {
            domain,
            ambient,
            basis: echelon_rows(domain, ambient, vectors)?,
        })
    }

    pub fn kernel(m: &LinearMap) -> Result<Self> {
        Ok(Subspace {
            domain: m.domain(),
            ambient: m.cols(),
            basis: m.kernel_basis()?,
        })
    }

    pub fn image(m: &LinearMap) -> Result<Self> {
        Ok(Subspace {
            domain: m.domain(),
            ambient: m.rows(),
            basis: m.image_basis()?,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(echelon_rows(self.domain, self.ambient, &rows)?.len() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        for v in &self.basis {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Self> {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.domain, self.ambient, &rows)
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> LinearMap {
        LinearMap::from_columns(self.domain, self.ambient, &self.basis)
            .expect("basis vectors have ambient length")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_membership() {
        let d = Domain::Rational;
        let v = |a: i64, b: i64, c: i64| vec![d.from_i64(a), d.from_i64(b), d.from_i64(c)];
        let s = Subspace::span(d, 3, &[v(1, 1, 0), v(2, 2, 0)]).unwrap();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&v(3, 3, 0)).unwrap());
        assert!(!s.contains(&v(1, 0, 0)).unwrap());
        let t = Subspace::span(d, 3, &[v(1, 0, 0), v(0, 1, 0)]).unwrap();
        assert!(s.is_subspace_of(&t).unwrap());
        assert!(!t.is_subspace_of(&s).unwrap());
        assert_eq!(s.sum(&t).unwrap(), t);
    }
}
