//! Buchberger's algorithm for ideals generated by pure difference binomials,
//! with elimination, homogenization and initial ideals.
//!
//! S-binomials of pure difference binomials are again pure differences, and
//! reducing `a - b` amounts to rewriting each side separately, so the whole
//! computation never leaves the class `{0} ∪ {m - m'}` and is valid over any
//! coefficient field.

mod basis;
mod buchberger;
mod transform;

pub use basis::BinomialBasis;
pub use buchberger::buchberger;
pub use transform::{dehomogenize, eliminate, homogenize, homogenize_with, initial_ideal};

use alloc::string::String;

use crate::algebra::AlgebraError;

/// Name given to the homogenizing variable.
pub const HOMOGENIZING_VARIABLE: &str = "t";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("order {order} does not eliminate the first {front} variables")]
    NotElimination { front: usize, order: String },
    #[error("homogenization needs a degree-compatible order, found {0}")]
    NotGraded(String),
    #[error("cannot eliminate {front} of {nvars} variables")]
    FrontTooLarge { front: usize, nvars: usize },
}
