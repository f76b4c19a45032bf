use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::LinearMap;

/// `C_0 ← C_1 ← ⋯ ← C_N` with `differentials[n - 1] = b_n : C_n → C_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    differentials: Vec<LinearMap>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSummary {
    pub dims: Vec<usize>,
    pub square_zero: bool,
    /// `dim H_n` for `n` below the top degree.
    pub homology: Vec<usize>,
}

impl ChainComplex {
    /// Checks shapes and `b ∘ b = 0`.
    pub fn new(dims: Vec<usize>, differentials: Vec<LinearMap>) -> Result<Self> {
        if differentials.len() + 1 != dims.len() {
            return Err(Error::Dimension(format!(
                "{} differentials for {} degrees",
                differentials.len(),
                dims.len()
            )));
        }
        for (i, b) in differentials.iter().enumerate() {
            if b.cols() != dims[i + 1] || b.rows() != dims[i] {
                return Err(Error::Dimension(format!(
                    "b_{} is {}x{}, expected {}x{}",
                    i + 1,
                    b.rows(),
                    b.cols(),
                    dims[i],
                    dims[i + 1]
                )));
            }
        }
        let c = ChainComplex {
            dims,
            differentials,
        };
        if let Some(n) = c.first_nonzero_square() {
            return Err(Error::Inconsistent(format!(
                "b_{} ∘ b_{} ≠ 0; the module data is not compatible",
                n - 1,
                n
            )));
        }
        Ok(c)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn differential(&self, n: usize) -> &LinearMap {
        &self.differentials[n - 1]
    }

    fn first_nonzero_square(&self) -> Option<usize> {
        (2..=self.top_degree()).find(|&n| {
            !self.differentials[n - 2]
                .compose(&self.differentials[n - 1])
                .expect("shape")
                .is_zero()
        })
    }

    pub fn square_zero(&self) -> bool {
        self.first_nonzero_square().is_none()
    }

    /// `dim ker b_n − rank b_{n+1}` for `0 ≤ n < N`.
    pub fn homology_dims(&self) -> Result<Vec<usize>> {
        let ranks = self
            .differentials
            .iter()
            .map(|b| b.rank())
            .collect::<Result<Vec<_>>>()?;
        Ok((0..self.top_degree())
            .map(|n| {
                let out = if n == 0 { 0 } else { ranks[n - 1] };
                self.dims[n] - out - ranks[n]
            })
            .collect())
    }

    pub fn summary(&self) -> Result<ComplexSummary> {
        Ok(ComplexSummary {
            dims: self.dims.clone(),
            square_zero: self.square_zero(),
            homology: self.homology_dims()?,
        })
    }
}
