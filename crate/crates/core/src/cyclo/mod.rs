//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `{ζ_N^i : 0 ≤ i < φ(N)}` modulo
//! `Φ_N`. The ring of integers of `Q(ζ_N)` is `Z[ζ_N]`, and the power basis is
//! an integral basis for it, so an element is an algebraic integer exactly
//! when all its coordinates are integers.

mod context;
mod elem;
pub mod kronecker;
pub mod poly;
pub mod real;

pub use context::cyclotomic_polynomial;
pub use elem::CycElem;
pub use kronecker::{conjugate_bound_leq, kronecker_classify, Bound, KroneckerClass, SmallValue};
pub use poly::{chebyshev_q, cyclotomic_unit_c, minimal_polynomial};
pub use real::{eval_real, sign, Dyadic, RealInterval};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycloError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{u} is not a unit modulo {modulus}")]
    NotCoprime { u: i64, modulus: u64 },
    #[error("element is not real")]
    NotReal,
    #[error("element is not an algebraic integer")]
    NotAlgebraicInteger,
}
