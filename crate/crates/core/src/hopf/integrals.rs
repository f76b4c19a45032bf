use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::{LinearMap, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// The space of left (`hλ = ε(h)λ`) or right (`λh = ε(h)λ`) integrals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralSpace {
    pub side: Side,
    pub basis: Vec<Vector>,
}

impl IntegralSpace {
    /// The spanning integral; over a field the space is a line.
    pub fn generator(&self) -> &Vector {
        &self.basis[0]
    }
}

impl HopfAlgebra {
    pub fn left_integrals(&self) -> Result<IntegralSpace> {
        self.integrals(Side::Left)
    }

    pub fn right_integrals(&self) -> Result<IntegralSpace> {
        self.integrals(Side::Right)
    }

    fn integrals(&self, side: Side) -> Result<IntegralSpace> {
        let d = self.domain();
        d.require_field("integral computation")?;
        let n = self.dim();
        let mut blocks = Vec::with_capacity(n);
        for h in 0..n {
            let eh = self.basis_vector(h);
            let mul = match side {
                Side::Left => self.algebra().left_mul_matrix(&eh),
                Side::Right => self.algebra().right_mul_matrix(&eh),
            };
            let shift = LinearMap::identity(d, n).scale(&self.counit()[h]);
            blocks.push(mul.sub(&shift)?);
        }
        let stacked = LinearMap::vstack(d, n, &blocks)?;
        let basis = stacked.kernel_basis()?;
        if basis.len() != 1 {
            return Err(Error::Inconsistent(format!(
                "{side:?} integral space has dimension {} (expected 1); Hopf data is corrupted",
                basis.len()
            )));
        }
        Ok(IntegralSpace { side, basis })
    }

    /// Maschke criterion: semisimple iff ε(Λ) ≠ 0 for a nonzero left integral Λ.
    pub fn is_semisimple(&self) -> Result<bool> {
        let l = self.left_integrals()?;
        Ok(!self.counit_of(l.generator()).is_zero())
    }
}
