use thiserror::Error;

use crate::linalg::Domain;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{operation} is not supported over {domain}")]
    UnsupportedDomain { operation: String, domain: Domain },

    #[error("scalar domains differ: {left} vs {right}")]
    DomainMismatch { left: Domain, right: Domain },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular (rank {rank} of {size})")]
    Singular { rank: usize, size: usize },

    #[error("malformed input: {0}")]
    Format(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("{0} is not a primitive root of unity of the requested order (q^{1} = 1)")]
    NotPrimitive(String, u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("axiom failure: {0}")]
    Axiom(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("resource bound exceeded: {0}")]
    Resource(String),
}

pub type Result<T> = std::result::Result<T, Error>;
