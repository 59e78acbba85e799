//! Root systems of lattices with totally positive definite Gram matrices.
//!
//! Vectors are written in coordinates over a fixed basis of simple roots;
//! the pairing is `x·y = xᵀ G y`.

mod diagram;
mod enumerate;
mod gram;
mod simple;
mod types;
mod validate;

pub use diagram::{diagram_of, recognize_type, DiagramGraph};
pub use enumerate::{enumerate_roots, expected_roots_classical, reflect, RootSet};
pub use gram::{decompose, GramMatrix, RootVec};
pub use simple::{
    default_functional, functional_from_ints, fundamental_system, pair_label, positive_system,
};
pub use types::{gram_of_type, CoxeterType};
pub use validate::{validate_root_lattice, Check, ValidationReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("inadmissible Coxeter type: {0}")]
    InadmissibleType(String),
    #[error("invalid Gram matrix: {0}")]
    InvalidGram(String),
    #[error("root enumeration exceeded the cap of {cap} roots")]
    CapExceeded { cap: usize },
    #[error("functional vanishes on root {root}")]
    NonGenericFunctional { root: String },
    #[error("fundamental system verification failed: {0}")]
    VerificationFailure(String),
    #[error("pairing {0} is not of the form -2cos(pi/m)")]
    InvalidRootPair(String),
    #[error("unrecognized diagram: {0}")]
    UnrecognizedDiagram(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}
