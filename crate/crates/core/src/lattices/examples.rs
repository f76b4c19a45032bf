//! Classical rings of integers with the conjugation action of `C2`.

use num_rational::BigRational;

use crate::actions::examples::{eisenstein, gaussian};
use crate::error::Result;
use crate::hopf::builtins::group_algebra;
use crate::hopf::groups::cyclic;
use crate::lattices::lattice::rationals;
use crate::lattices::{Lattice, ModuleLattice, Order};
use crate::linalg::{Domain, Scalar};

/// `ℤ[i]` on the basis `1, i` with `σ` complex conjugation.
pub fn gaussian_integers() -> Result<ModuleLattice> {
    ModuleLattice::standard(gaussian(Domain::Rational)?.module().clone())
}

/// `ℤ[ζ3]` on the basis `1, ζ` with `σ(ζ) = −1 − ζ`.
pub fn eisenstein_integers() -> Result<ModuleLattice> {
    ModuleLattice::standard(eisenstein(Domain::Rational)?.module().clone())
}

/// `ℤC2 ⊂ ℚC2`.
pub fn group_ring_c2() -> Result<Order> {
    Order::standard(group_algebra(&cyclic(2), Domain::Rational, None)?)
}

/// `ℤ⟨1, (1+σ)/2⟩ ⊂ ℚC2`.
pub fn half_trace_order() -> Result<Order> {
    let half = Scalar::Rational(BigRational::new(1.into(), 2.into()));
    let e = vec![half.clone(), half];
    let lattice = Lattice::new(2, &[rationals(&[1, 0]), e])?;
    Order::new(group_algebra(&cyclic(2), Domain::Rational, None)?, lattice)
}
