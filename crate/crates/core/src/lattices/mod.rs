//! ℤ-lattices: associated orders, Hopf orders, integral lattices and
//! tameness over ℤ.

pub mod examples;
mod lattice;
mod order;

pub use lattice::Lattice;
pub use order::{
    associated_order, free_rank_one_generator, tame_check_integral, LatticeTameReport,
    ModuleLattice, Order,
};
