//! Monomials, multigradings and term orders.

mod binomial;
mod grading;
mod monomial;
mod order;
mod text;
mod vars;

pub use binomial::DifferenceBinomial;
pub use grading::{Grading, MultiDegree};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use text::{parse_binomial, parse_monomial};
pub use vars::VariableSet;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("length mismatch: expected {expected} exponents, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("empty variable set")]
    NoVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("malformed term `{0}`")]
    Syntax(String),
    #[error("grading has rank {rank} but a degree has {found} components")]
    GradingRank { rank: usize, found: usize },
}
