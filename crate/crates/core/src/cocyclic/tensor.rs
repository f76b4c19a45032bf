//! Index bookkeeping for tensor powers, flattened lexicographically with
//! the leftmost factor slowest.

use crate::linalg::{Domain, LinearMap, Scalar, Vector};

pub(crate) fn split_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut parts = vec![0; dims.len()];
    for f in (0..dims.len()).rev() {
        parts[f] = flat % dims[f];
        flat /= dims[f];
    }
    parts
}

/// `out += coeff · (parts[0] ⊗ parts[1] ⊗ ⋯)`.
pub(crate) fn add_kron(out: &mut [Scalar], parts: &[&[Scalar]], coeff: &Scalar) {
    let mut acc: Vec<(usize, Scalar)> = vec![(0, coeff.clone())];
    for part in parts {
        let mut next = Vec::with_capacity(acc.len());
        for (idx, c) in &acc {
            for (k, v) in part.iter().enumerate() {
                if !v.is_zero() {
                    next.push((idx * part.len() + k, c * v));
                }
            }
        }
        acc = next;
    }
    for (idx, c) in acc {
        out[idx] = &out[idx] + &c;
    }
}

/// Builds the matrix whose column for the input basis tuple is produced by
/// `column(tuple, out)`, which accumulates into a zeroed output vector.
pub(crate) fn build_operator(
    domain: Domain,
    in_dims: &[usize],
    out_len: usize,
    column: impl Fn(&[usize], &mut Vector),
) -> LinearMap {
    let in_len: usize = in_dims.iter().product();
    let mut m = LinearMap::zeros(domain, out_len, in_len);
    let mut out = vec![domain.zero(); out_len];
    for c in 0..in_len {
        out.iter_mut().for_each(|x| *x = domain.zero());
        column(&split_index(in_dims, c), &mut out);
        for (r, v) in out.iter().enumerate() {
            if !v.is_zero() {
                m.set(r, c, v.clone());
            }
        }
    }
    m
}

/// Nonzero entries of a matrix column, as `(row, value)`.
pub(crate) fn column_support(m: &LinearMap, c: usize) -> Vec<(usize, Scalar)> {
    (0..m.rows())
        .filter_map(|r| {
            let v = m.get(r, c);
            (!v.is_zero()).then(|| (r, v.clone()))
        })
        .collect()
}
