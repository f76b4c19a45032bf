use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{hermite_normal_form, vec_kron, Domain, LinearMap, Scalar, Vector};

/// A ℤ-lattice in `ℚ^n`, stored by the Hermite normal form of its basis
/// rows, so equal lattices have equal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    ambient: usize,
    basis: Vec<Vector>,
}

pub(crate) fn rationals(v: &[i64]) -> Vector {
    v.iter().map(|&x| Domain::Rational.from_i64(x)).collect()
}

fn denominator_lcm<'a>(vectors: impl IntoIterator<Item = &'a Vector>) -> BigInt {
    let mut d = BigInt::one();
    for v in vectors {
        for x in v {
            d = d.lcm(x.to_rational().denom());
        }
    }
    d
}

impl Lattice {
    /// The ℤ-span of `gens`, which may be linearly dependent.
    pub fn from_generators(ambient: usize, gens: &[Vector]) -> Result<Self> {
        for g in gens {
            if g.len() != ambient {
                return Err(Error::Dimension(format!(
                    "generator of length {} in a lattice of ambient dimension {ambient}",
                    g.len()
                )));
            }
            if let Some(x) = g.iter().find(|x| x.domain() != Domain::Rational) {
                return Err(Error::DomainMismatch {
                    left: Domain::Rational,
                    right: x.domain(),
                });
            }
        }
        if gens.is_empty() {
            return Ok(Lattice {
                ambient,
                basis: Vec::new(),
            });
        }
        let d = denominator_lcm(gens);
        let scale = BigRational::from_integer(d.clone());
        let rows: Vec<Vector> = gens
            .iter()
            .map(|g| {
                g.iter()
                    .map(|x| Scalar::Integer((x.to_rational() * &scale).to_integer()))
                    .collect()
            })
            .collect();
        let (h, _) = hermite_normal_form(&LinearMap::from_rows(Domain::Integer, ambient, &rows)?)?;
        let basis = (0..h.rows())
            .map(|r| h.row(r))
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .map(|row| {
                row.iter()
                    .map(|x| Scalar::Rational(x.to_rational() / &scale))
                    .collect()
            })
            .collect();
        Ok(Lattice { ambient, basis })
    }

    /// The lattice with the given ℚ-linearly independent basis.
    pub fn new(ambient: usize, basis: &[Vector]) -> Result<Self> {
        let l = Self::from_generators(ambient, basis)?;
        if l.rank() != basis.len() {
            return Err(Error::Format(
                "lattice basis vectors are linearly dependent".into(),
            ));
        }
        Ok(l)
    }

    /// `ℤ^n`.
    pub fn standard(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Domain::Rational.from_i64((i == j) as i64))
                    .collect()
            })
            .collect();
        Lattice { ambient: n, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient
    }

    /// Basis vectors as columns.
    pub fn basis_matrix(&self) -> Result<LinearMap> {
        LinearMap::from_columns(Domain::Rational, self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the basis, or `None` outside the ℚ-span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if self.basis.is_empty() {
            return Ok(v.iter().all(Scalar::is_zero).then(Vec::new));
        }
        self.basis_matrix()?.solve(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self
            .coordinates(v)?
            .is_some_and(|c| c.iter().all(|x| x.to_rational().is_integer())))
    }

    pub fn is_sublattice_of(&self, other: &Lattice) -> Result<bool> {
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `L ⊗ L'` inside `ℚ^{n·n'}` with lexicographic flattening.
    pub fn tensor(&self, other: &Lattice) -> Result<Lattice> {
        let gens: Vec<Vector> = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| vec_kron(a, b)))
            .collect();
        Self::from_generators(self.ambient * other.ambient, &gens)
    }

    /// `{t : t·v ∈ L}·v` for `v` in the ℚ-span, as a rank-one lattice.
    pub fn intersect_line(&self, v: &[Scalar]) -> Result<Lattice> {
        let coords = self.coordinates(v)?.ok_or_else(|| {
            Error::Precondition("the line is not inside the span of the lattice".into())
        })?;
        let d = denominator_lcm(std::iter::once(&coords));
        let ints: Vec<BigInt> = coords
            .iter()
            .map(|x| (x.to_rational() * BigRational::from_integer(d.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return Ok(Lattice {
                ambient: self.ambient,
                basis: Vec::new(),
            });
        }
        let t = Scalar::Rational(BigRational::new(d, g));
        let gen: Vector = v.iter().map(|x| x * &t).collect();
        Self::from_generators(self.ambient, &[gen])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(v: &[(i64, i64)]) -> Vector {
        v.iter()
            .map(|&(n, d)| Scalar::Rational(BigRational::new(n.into(), d.into())))
            .collect()
    }

    #[test]
    fn canonical_basis_identifies_equal_lattices() {
        let a =
            Lattice::from_generators(2, &[rationals(&[1, 0]), half(&[(1, 2), (1, 2)])]).unwrap();
        let b =
            Lattice::from_generators(2, &[half(&[(1, 2), (-1, 2)]), rationals(&[0, 1])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[half(&[(1, 2), (1, 2)]), rationals(&[0, 1])]);
    }

    #[test]
    fn membership() {
        let l = Lattice::from_generators(2, &[rationals(&[2, 0]), rationals(&[0, 3])]).unwrap();
        assert!(l.contains(&rationals(&[4, -3])).unwrap());
        assert!(!l.contains(&rationals(&[1, 0])).unwrap());
        assert!(Lattice::standard(2).contains(&rationals(&[1, 0])).unwrap());
        assert!(l.is_sublattice_of(&Lattice::standard(2)).unwrap());
        assert!(!Lattice::standard(2).is_sublattice_of(&l).unwrap());
    }

    #[test]
    fn dependent_basis_is_rejected() {
        assert!(Lattice::new(2, &[rationals(&[1, 1]), rationals(&[2, 2])]).is_err());
        let l = Lattice::from_generators(2, &[rationals(&[2, 2]), rationals(&[3, 3])]).unwrap();
        assert_eq!(l.basis(), &[rationals(&[1, 1])]);
    }

    #[test]
    fn line_intersection() {
        let l =
            Lattice::from_generators(2, &[rationals(&[1, 0]), half(&[(1, 2), (1, 2)])]).unwrap();
        let j = l.intersect_line(&rationals(&[3, 3])).unwrap();
        assert_eq!(j.basis(), &[half(&[(1, 2), (1, 2)])]);
        let j = Lattice::standard(2)
            .intersect_line(&half(&[(1, 2), (1, 2)]))
            .unwrap();
        assert_eq!(j.basis(), &[rationals(&[1, 1])]);
    }
}
