//! Module algebras over Hopf algebras: invariants, smash products, the
//! Galois maps `j` and `γ`, tameness and total integrals.

pub mod examples;
mod extension;
mod module;
mod module_algebra;

pub use extension::{Classification, ExtensionReport, GaloisForm, TotalIntegral};
pub use module::{HomologyReport, HopfModule};
pub use module_algebra::ModuleAlgebra;

pub(crate) use module::first_differing_column;
