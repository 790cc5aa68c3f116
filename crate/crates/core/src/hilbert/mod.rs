//! Hilbert series, Hilbert functions and Hilbert polynomials of quotients of
//! a polynomial ring by a monomial ideal, under an arbitrary positive
//! multigrading.

mod closed_form;
mod count;
mod ideal;
mod numerator;
mod poly;
mod series;

pub use closed_form::HilbertClosedForm;
pub use count::standard_monomial_count;
pub use ideal::MonomialIdeal;
pub use numerator::{hilbert_numerator, hilbert_numerator_with, HilbertOptions};
pub use poly::MultiPoly;
pub use series::{DenseSeries, HilbertSeries};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HilbertError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("grading covers {grading} variables, ideal lives in {ideal}")]
    GradingMismatch { grading: usize, ideal: usize },
    #[error("variable {0} has degree zero; graded pieces are infinite")]
    ZeroDegree(usize),
    #[error("operation needs a univariate series, grading has rank {0}")]
    NotUnivariate(usize),
    #[error("denominator factor (1 - t^{0}) has no closed form as a power of (1 - t)")]
    NonUnitDenominator(u32),
    #[error("degree has rank {found}, series has rank {expected}")]
    RankMismatch { expected: usize, found: usize },
    #[error("hilbert recursion exceeded its budget of {0} subproblems")]
    Budget(u64),
}
