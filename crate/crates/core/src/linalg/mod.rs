//! Exact scalars, dense matrices, subspaces and integer normal forms.

pub mod integer;
mod matrix;
mod scalar;
mod subspace;

pub use integer::{determinant, hermite_normal_form, integer_kernel, smith_normal_form};
pub use matrix::{
    echelon_rows, unit_vector, vec_add, vec_is_zero, vec_kron, vec_scale, vec_sub, Echelon,
    LinearMap, Vector,
};
pub use scalar::{Domain, Scalar};
pub use subspace::Subspace;
