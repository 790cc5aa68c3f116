//! Walk reachability on `Z^m` with a finite step set `W`.
//!
//! `f(d)` counts the endpoints of walks with exactly `d` steps and `g(d)` the
//! points at distance exactly `d`. With `S = K[y_1..y_N]` mapped onto the
//! Laurent monomials `x^{w_i}`, and `κ` the kernel of that map:
//!
//! * `f(d) = dim (S/H)_d` where `H` is the largest homogeneous subideal of `κ`;
//! * `g(d) = dim (S/in κ)_d` for any degree-compatible order.
//!
//! Both are Hilbert functions of standard graded quotients, hence equal to
//! polynomials for large `d`. [`analyze`] derives those closed forms and
//! checks them against the sumset [`oracle`].

mod kernel;
mod oracle;
mod report;
mod steps;

pub use kernel::{
    largest_homogeneous_subideal, presentation_ideal, toric_kernel, HomogeneousPart, Presentation, ToricKernel,
};
pub use oracle::{homogeneous_quotient_dims, oracle, OracleRow};
pub use report::{analyze, verify_soundness, Quantity, WalkConfig, WalkCountReport};
pub use steps::StepSet;

use alloc::string::String;
use num_bigint::BigInt;

use crate::algebra::AlgebraError;
use crate::groebner::GroebnerError;
use crate::hilbert::HilbertError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("step set must have dimension at least 1")]
    ZeroDimension,
    #[error("step set is empty")]
    NoSteps,
    #[error("step {index} has {found} coordinates, expected {expected}")]
    StepLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("step {0} is the zero vector")]
    ZeroStep(usize),
    #[error("step {0} duplicates step {1}")]
    DuplicateStep(usize, usize),
    #[error("{0} is not a degree-compatible order")]
    OrderNotGraded(String),
    #[error("oracle exceeded its cap of {0} stored points")]
    OracleCap(usize),
    #[error("{quantity} mismatch at d = {degree}: algebra gives {algebraic}, oracle gives {oracle}")]
    Mismatch {
        quantity: Quantity,
        degree: u64,
        algebraic: BigInt,
        oracle: BigInt,
    },
    #[error("unsound basis: {0}")]
    Unsound(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}
