use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Domain, Scalar};

pub type Vector = Vec<Scalar>;

/// A dense matrix of a linear map `K^cols -> K^rows`, stored row-major.
///
/// Column `c` is the image of the `c`-th domain basis vector. Tensor
/// products of spaces are flattened lexicographically with the left
/// factor varying slowest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Domain,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: LinearMap,
    pub pivots: Vec<usize>,
}

impl LinearMap {
    pub fn zeros(domain: Domain, rows: usize, cols: usize) -> Self {
        LinearMap {
            domain,
            rows,
            cols,
            entries: vec![domain.zero(); rows * cols],
        }
    }

    pub fn identity(domain: Domain, n: usize) -> Self {
        let mut m = Self::zeros(domain, n, n);
        for i in 0..n {
            m.entries[i * n + i] = domain.one();
        }
        m
    }

    pub fn from_fn(
        domain: Domain,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                debug_assert_eq!(v.domain(), domain);
                entries.push(v);
            }
        }
        LinearMap {
            domain,
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(domain: Domain, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {} instead of {cols}",
                    row.len()
                )));
            }
            for v in row {
                if v.domain() != domain {
                    return Err(Error::DomainMismatch {
                        left: domain,
                        right: v.domain(),
                    });
                }
                entries.push(v.clone());
            }
        }
        Ok(LinearMap {
            domain,
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// Builds a matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(domain: Domain, rows: usize, columns: &[Vector]) -> Result<Self> {
        Ok(Self::from_rows(domain, rows, columns)?.transpose())
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triples(
        domain: Domain,
        rows: usize,
        cols: usize,
        triples: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut m = Self::zeros(domain, rows, cols);
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::Format(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            let cur = &m.entries[r * cols + c] + &v;
            m.entries[r * cols + c] = cur;
        }
        Ok(m)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Codomain dimension.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Domain dimension.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.domain(), self.domain);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.domain, self.cols, self.rows, |r, c| {
            self.get(c, r).clone()
        })
    }

    fn check_domain(&self, other: &LinearMap) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch {
                left: self.domain,
                right: other.domain,
            });
        }
        Ok(())
    }

    /// Applies the map to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match domain");
        let mut out = vec![self.domain.zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let e = self.get(r, c);
                if !e.is_zero() {
                    *o = &*o + &(e * x);
                }
            }
        }
        out
    }

    /// Matrix product `self * rhs`, i.e. the composite "first rhs, then self".
    pub fn compose(&self, rhs: &LinearMap) -> Result<Self> {
        self.check_domain(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.domain, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let idx = r * rhs.cols + c;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &LinearMap) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &LinearMap) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &LinearMap, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Self> {
        self.check_domain(rhs)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(LinearMap {
            domain: self.domain,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        LinearMap {
            domain: self.domain,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    /// Matrix of `a ⊗ b` with the left factor's index varying slowest.
    pub fn kronecker(&self, rhs: &LinearMap) -> Result<Self> {
        self.check_domain(rhs)?;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(self.domain, rows, cols);
        for ar in 0..self.rows {
            for ac in 0..self.cols {
                let a = self.get(ar, ac);
                if a.is_zero() {
                    continue;
                }
                for br in 0..rhs.rows {
                    for bc in 0..rhs.cols {
                        let b = rhs.get(br, bc);
                        if !b.is_zero() {
                            out.entries[(ar * rhs.rows + br) * cols + ac * rhs.cols + bc] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(domain: Domain, cols: usize, blocks: &[LinearMap]) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.domain != domain {
                return Err(Error::DomainMismatch {
                    left: domain,
                    right: b.domain,
                });
            }
            if b.cols != cols {
                return Err(Error::Dimension(format!(
                    "vstack block has {} columns, expected {cols}",
                    b.cols
                )));
            }
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Ok(LinearMap {
            domain,
            rows,
            cols,
            entries,
        })
    }

    /// Places matrices side by side.
    pub fn hstack(domain: Domain, rows: usize, blocks: &[LinearMap]) -> Result<Self> {
        let transposed: Vec<_> = blocks.iter().map(LinearMap::transpose).collect();
        Ok(Self::vstack(domain, rows, &transposed)?.transpose())
    }

    /// Block-diagonal sum `a ⊕ b`.
    pub fn direct_sum(&self, rhs: &LinearMap) -> Result<Self> {
        self.check_domain(rhs)?;
        let mut out = Self::zeros(self.domain, self.rows + rhs.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..rhs.rows {
            for c in 0..rhs.cols {
                out.set(self.rows + r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form: leftmost nonzero column first, topmost
    /// available row as pivot, pivots scaled to 1.
    pub fn echelon(&self) -> Result<Echelon> {
        self.domain.require_field("echelon form")?;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("nonzero in a field");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let sub = &factor * m.get(row, c);
                    if !sub.is_zero() {
                        let v = m.get(r, c) - &sub;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok(Echelon { reduced: m, pivots })
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.echelon()?.pivots.len())
    }

    /// Canonical basis of the null space, returned as the rows of its
    /// reduced echelon form.
    pub fn kernel_basis(&self) -> Result<Vec<Vector>> {
        let raw = self.null_vectors()?;
        echelon_rows(self.domain, self.cols, &raw)
    }

    fn null_vectors(&self) -> Result<Vec<Vector>> {
        let Echelon { reduced, pivots } = self.echelon()?;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.domain.zero(); self.cols];
            v[free] = self.domain.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, free);
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Echelon basis of the column space.
    pub fn image_basis(&self) -> Result<Vec<Vector>> {
        let e = self.transpose().echelon()?;
        Ok((0..e.pivots.len())
            .map(|r| e.reduced.row(r).to_vec())
            .collect())
    }

    pub fn is_invertible(&self) -> Result<bool> {
        Ok(self.is_square() && self.rank()? == self.rows)
    }

    pub fn invert(&self) -> Result<Self> {
        self.domain.require_field("inversion")?;
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = Self::hstack(
            self.domain,
            n,
            &[self.clone(), Self::identity(self.domain, n)],
        )?;
        let e = aug.echelon()?;
        let rank = e.pivots.iter().filter(|&&p| p < n).count();
        if rank < n {
            return Err(Error::Singular { rank, size: n });
        }
        Ok(Self::from_fn(self.domain, n, n, |r, c| {
            e.reduced.get(r, n + c).clone()
        }))
    }

    /// A solution of `self · x = b` with all free variables set to zero, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let rhs = Self::from_columns(self.domain, self.rows, &[b.to_vec()])?;
        let aug = Self::hstack(self.domain, self.rows, &[self.clone(), rhs])?;
        let e = aug.echelon()?;
        if e.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.domain.zero(); self.cols];
        for (r, &p) in e.pivots.iter().enumerate() {
            x[p] = e.reduced.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Determinant over a field by elimination.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Dimension(
                "determinant of a non-square matrix".into(),
            ));
        }
        if self.domain == Domain::Integer {
            return Ok(Scalar::Integer(crate::linalg::integer::determinant(self)?));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = self.domain.one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(self.domain.zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = &det * &pivot;
            let inv = pivot.inverse().expect("field");
            for r in col + 1..n {
                let f = m.get(r, col) * &inv;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &(&f * m.get(col, c));
                    m.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Reinterprets integer or residue entries as rationals.
    pub fn to_rational(&self) -> Self {
        LinearMap {
            domain: Domain::Rational,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| Scalar::Rational(e.to_rational()))
                .collect(),
        }
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Nonzero rows of the reduced echelon form of the given vectors.
pub fn echelon_rows(domain: Domain, len: usize, vectors: &[Vector]) -> Result<Vec<Vector>> {
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let e = LinearMap::from_rows(domain, len, vectors)?.echelon()?;
    Ok((0..e.pivots.len())
        .map(|r| e.reduced.row(r).to_vec())
        .collect())
}

/// Sum of two vectors of equal length.
pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Scalar], s: &Scalar) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn vec_is_zero(a: &[Scalar]) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Tensor product of two vectors, left index slowest.
pub fn vec_kron(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vector(domain: Domain, n: usize, i: usize) -> Vector {
    let mut v = vec![domain.zero(); n];
    v[i] = domain.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> LinearMap {
        mat(Domain::Rational, rows)
    }

    fn mat(d: Domain, rows: &[&[i64]]) -> LinearMap {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vector> = rows
            .iter()
            .map(|r| r.iter().map(|&x| d.from_i64(x)).collect())
            .collect();
        LinearMap::from_rows(d, cols, &rows).unwrap()
    }

    #[test]
    fn kernel_of_all_ones() {
        let k = q(&[&[1, 1], &[1, 1]]).kernel_basis().unwrap();
        assert_eq!(
            k,
            vec![vec![Domain::Rational.one(), Domain::Rational.from_i64(-1)]]
        );
        let f2 = Domain::prime(2).unwrap();
        let k2 = mat(f2, &[&[1, 1], &[1, 1]]).kernel_basis().unwrap();
        assert_eq!(k2, vec![vec![f2.one(), f2.one()]]);
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let f5 = Domain::prime(5).unwrap();
        assert!(LinearMap::identity(f5, 3)
            .kernel_basis()
            .unwrap()
            .is_empty());
        assert_eq!(LinearMap::identity(f5, 3).rank().unwrap(), 3);
        assert_eq!(LinearMap::zeros(f5, 3, 4).rank().unwrap(), 0);
    }

    #[test]
    fn integer_kernel_is_rejected() {
        let m = mat(Domain::Integer, &[&[1, 2]]);
        assert!(matches!(
            m.kernel_basis(),
            Err(Error::UnsupportedDomain { .. })
        ));
    }

    #[test]
    fn inverses() {
        let d = q(&[&[2, 0], &[0, 3]]);
        let inv = d.invert().unwrap();
        assert_eq!(
            inv.get(0, 0),
            &Domain::Rational.parse_scalar("1/2").unwrap()
        );
        assert_eq!(
            inv.get(1, 1),
            &Domain::Rational.parse_scalar("1/3").unwrap()
        );
        let f5 = Domain::prime(5).unwrap();
        assert_eq!(mat(f5, &[&[2]]).invert().unwrap(), mat(f5, &[&[3]]));
        match q(&[&[1, 2], &[2, 4]]).invert() {
            Err(Error::Singular { rank, size }) => assert_eq!((rank, size), (1, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn kronecker_examples() {
        let d = Domain::Rational;
        let i6 = LinearMap::identity(d, 2)
            .kronecker(&LinearMap::identity(d, 3))
            .unwrap();
        assert_eq!(i6, LinearMap::identity(d, 6));
        let z = LinearMap::zeros(d, 2, 2)
            .kronecker(&q(&[&[1, 2], &[3, 4]]))
            .unwrap();
        assert!(z.is_zero());
        let k = q(&[&[1, 0], &[0, 2]])
            .kronecker(&q(&[&[1, 0], &[0, 3]]))
            .unwrap();
        assert_eq!(
            k,
            q(&[&[1, 0, 0, 0], &[0, 3, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 6]])
        );
        assert!(LinearMap::identity(d, 1)
            .kronecker(&LinearMap::identity(Domain::Integer, 1))
            .is_err());
    }

    #[test]
    fn solve_picks_zero_free_variables() {
        let f2 = Domain::prime(2).unwrap();
        let m = mat(f2, &[&[1, 1], &[1, 1]]);
        let x = m.solve(&[f2.one(), f2.one()]).unwrap().unwrap();
        assert_eq!(x, vec![f2.one(), f2.zero()]);
        assert!(m.solve(&[f2.one(), f2.zero()]).unwrap().is_none());
    }

    #[test]
    fn determinants() {
        assert_eq!(
            q(&[&[1, 2], &[3, 4]]).determinant().unwrap(),
            Domain::Rational.from_i64(-2)
        );
        assert_eq!(
            mat(Domain::Integer, &[&[1, 1], &[1, -1]])
                .determinant()
                .unwrap(),
            Domain::Integer.from_i64(-2)
        );
    }
}
