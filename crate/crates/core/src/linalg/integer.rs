//! Integer-matrix normal forms.
//!
//! All routines work on matrices over [`Domain::Integer`] with arbitrary
//! precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Domain, LinearMap, Scalar};

type Grid = Vec<Vec<BigInt>>;

fn to_grid(m: &LinearMap) -> Result<Grid> {
    if m.domain() != Domain::Integer {
        return Err(Error::UnsupportedDomain {
            operation: "integer normal form".into(),
            domain: m.domain(),
        });
    }
    Ok((0..m.rows())
        .map(|r| {
            m.row(r)
                .iter()
                .map(|s| s.as_integer().expect("integer domain").clone())
                .collect()
        })
        .collect())
}

fn from_grid(rows: usize, cols: usize, g: &Grid) -> LinearMap {
    LinearMap::from_fn(Domain::Integer, rows, cols, |r, c| {
        Scalar::Integer(g[r][c].clone())
    })
}

/// Row-style Hermite normal form.
///
/// Returns `(h, u)` with `h = u · m`, `u` unimodular, `h` in row echelon form
/// with positive pivots, every entry above a pivot reduced into
/// `[0, pivot)`, and zero rows at the bottom. The row lattice of `m` is
/// preserved.
pub fn hermite_normal_form(m: &LinearMap) -> Result<(LinearMap, LinearMap)> {
    let mut h = to_grid(m)?;
    let rows = m.rows();
    let cols = m.cols();
    let mut u: Grid = (0..rows)
        .map(|r| {
            (0..rows)
                .map(|c| {
                    if r == c {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();

    let mut prow = 0;
    for col in 0..cols {
        if prow == rows {
            break;
        }
        // gcd-combine every lower row into the pivot row
        for r in prow + 1..rows {
            if h[r][col].is_zero() {
                continue;
            }
            if h[prow][col].is_zero() {
                h.swap(prow, r);
                u.swap(prow, r);
                continue;
            }
            let a = h[prow][col].clone();
            let b = h[r][col].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let a_g = &a / &g;
            let b_g = &b / &g;
            // [x y; -b/g a/g] has determinant 1
            combine(&mut h, prow, r, &x, &y, &b_g, &a_g);
            combine(&mut u, prow, r, &x, &y, &b_g, &a_g);
        }
        if h[prow][col].is_zero() {
            continue;
        }
        if h[prow][col].is_negative() {
            negate(&mut h[prow]);
            negate(&mut u[prow]);
        }
        let pivot = h[prow][col].clone();
        for r in 0..prow {
            let q = h[r][col].div_floor(&pivot);
            if !q.is_zero() {
                sub_multiple(&mut h, r, prow, &q);
                sub_multiple(&mut u, r, prow, &q);
            }
        }
        prow += 1;
    }
    Ok((from_grid(rows, cols, &h), from_grid(rows, rows, &u)))
}

fn combine(g: &mut Grid, i: usize, j: usize, x: &BigInt, y: &BigInt, bg: &BigInt, ag: &BigInt) {
    let n = g[i].len();
    for c in 0..n {
        let ri = &g[i][c] * x + &g[j][c] * y;
        let rj = &g[j][c] * ag - &g[i][c] * bg;
        g[i][c] = ri;
        g[j][c] = rj;
    }
}

fn negate(row: &mut [BigInt]) {
    for v in row {
        *v = -&*v;
    }
}

fn sub_multiple(g: &mut Grid, target: usize, source: usize, q: &BigInt) {
    let n = g[target].len();
    for c in 0..n {
        let v = &g[source][c] * q;
        g[target][c] -= v;
    }
}

/// Invariant factors `d_1 | d_2 | … | d_k` of the Smith normal form, with
/// `k = min(rows, cols)` and zeros trailing for rank deficiency.
pub fn smith_normal_form(m: &LinearMap) -> Result<Vec<BigInt>> {
    let mut a = to_grid(m)?;
    let rows = m.rows();
    let cols = m.cols();
    let k = rows.min(cols);
    let mut t = 0;
    while t < k {
        // smallest nonzero entry of the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c].is_zero() {
                    continue;
                }
                if best.is_none_or(|(br, bc)| a[r][c].abs() < a[br][bc].abs()) {
                    best = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = best else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t].clone();
            let mut dirty = false;
            for r in t + 1..rows {
                let q = a[r][t].div_floor(&p);
                if !q.is_zero() {
                    sub_multiple(&mut a, r, t, &q);
                }
                if !a[r][t].is_zero() {
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                let q = a[t][c].div_floor(&p);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let v = &row[t] * &q;
                        row[c] -= v;
                    }
                }
                if !a[t][c].is_zero() {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
            // move a smaller remainder into pivot position and retry
            let mut best = (t, t);
            for r in t..rows {
                if !a[r][t].is_zero() && a[r][t].abs() < a[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if !a[t][c].is_zero() && a[t][c].abs() < a[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        t += 1;
    }
    let mut diag: Vec<BigInt> = (0..k).map(|i| a[i][i].abs()).collect();
    // enforce the divisibility chain on the nonzero part
    let nz = diag.iter().filter(|d| !d.is_zero()).count();
    diag.sort_by(|x, y| match (x.is_zero(), y.is_zero()) {
        (true, false) => std::cmp::Ordering::Greater,
        (false, true) => std::cmp::Ordering::Less,
        _ => std::cmp::Ordering::Equal,
    });
    for i in 0..nz {
        for j in i + 1..nz {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    Ok(diag)
}

/// Exact integer determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &LinearMap) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(
            "determinant of a non-square matrix".into(),
        ));
    }
    let mut a = to_grid(m)?;
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}

/// A ℤ-basis of `{ y ∈ ℤ^cols : m · y = 0 }`, in Hermite normal form.
pub fn integer_kernel(m: &LinearMap) -> Result<Vec<Vec<BigInt>>> {
    let (h, u) = hermite_normal_form(&m.transpose())?;
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for r in 0..h.rows() {
        if h.row(r).iter().all(Scalar::is_zero) {
            basis.push(
                u.row(r)
                    .iter()
                    .map(|s| s.as_integer().unwrap().clone())
                    .collect(),
            );
        }
    }
    if basis.is_empty() {
        return Ok(basis);
    }
    let cols = m.cols();
    let rows: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|r| r.iter().map(|v| Scalar::Integer(v.clone())).collect())
        .collect();
    let (h, _) = hermite_normal_form(&LinearMap::from_rows(Domain::Integer, cols, &rows)?)?;
    Ok((0..h.rows())
        .filter(|&r| !h.row(r).iter().all(Scalar::is_zero))
        .map(|r| {
            h.row(r)
                .iter()
                .map(|s| s.as_integer().unwrap().clone())
                .collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> LinearMap {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Domain::Integer.from_i64(x)).collect())
            .collect();
        LinearMap::from_rows(Domain::Integer, cols, &rows).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_examples() {
        let id = LinearMap::identity(Domain::Integer, 2);
        let (h, u) = hermite_normal_form(&id).unwrap();
        assert_eq!((h, u), (id.clone(), id));

        let (h, _) = hermite_normal_form(&z(&[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(h, z(&[&[2, 0], &[0, 2]]));

        let m = z(&[&[1, 1], &[1, -1]]);
        let (h, u) = hermite_normal_form(&m).unwrap();
        assert_eq!(h, z(&[&[1, 1], &[0, 2]]));
        assert_eq!(u.compose(&m).unwrap(), h);
        assert_eq!(determinant(&u).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn snf_examples() {
        assert_eq!(
            smith_normal_form(&LinearMap::identity(Domain::Integer, 2)).unwrap(),
            ints(&[1, 1])
        );
        assert_eq!(smith_normal_form(&z(&[&[2]])).unwrap(), ints(&[2]));
        assert_eq!(
            smith_normal_form(&z(&[&[2, 0], &[0, 3]])).unwrap(),
            ints(&[1, 6])
        );
        assert_eq!(
            smith_normal_form(&z(&[&[2, 4], &[1, 2]])).unwrap(),
            ints(&[1, 0])
        );
        assert_eq!(
            smith_normal_form(&z(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).unwrap(),
            ints(&[2, 6, 12])
        );
    }

    #[test]
    fn rational_input_is_rejected() {
        assert!(hermite_normal_form(&LinearMap::identity(Domain::Rational, 2)).is_err());
    }

    #[test]
    fn integer_kernel_basis() {
        let k = integer_kernel(&z(&[&[2, 4, 6]])).unwrap();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s: BigInt = &v[0] * 2 + &v[1] * 4 + &v[2] * 6;
            assert!(s.is_zero());
        }
        assert_eq!(k, vec![ints(&[1, 1, -1]), ints(&[0, 3, -2])]);
        assert!(integer_kernel(&LinearMap::identity(Domain::Integer, 3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(
            determinant(&z(&[&[2, 1, 3], &[0, 4, 1], &[5, 2, 0]])).unwrap(),
            BigInt::from(-59)
        );
        assert_eq!(
            determinant(&z(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
    }
}
