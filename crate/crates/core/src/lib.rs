#![allow(clippy::needless_range_loop)]

pub mod actions;
pub mod cli;
pub mod cocyclic;
pub mod error;
pub mod hopf;
pub mod io;
pub mod lattices;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
