use core::fmt;

use alloc::format;
use alloc::vec::Vec;
use num_bigint::BigInt;

use super::{
    homogeneous_quotient_dims, largest_homogeneous_subideal, oracle, toric_kernel, HomogeneousPart, OracleRow, StepSet,
    ToricKernel, WalkError,
};
use crate::algebra::{Grading, MultiDegree, TermOrder};
use crate::groebner::{buchberger, initial_ideal, BinomialBasis};
use crate::hilbert::{hilbert_numerator_with, HilbertClosedForm, HilbertOptions, HilbertSeries, MonomialIdeal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Endpoints of walks with exactly `d` steps.
    F,
    /// Points at distance exactly `d`.
    G,
    /// `dim (S/H)_d` against `dim (S/in H)_d`.
    Macaulay,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quantity::F => "f",
            Quantity::G => "g",
            Quantity::Macaulay => "dim(S/H) vs dim(S/in H)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkConfig {
    /// Degrees `0..=cross_check_limit` are compared against the oracle.
    pub cross_check_limit: u64,
    /// Order on the y-block while eliminating `u, x`.
    pub kernel_inner: TermOrder,
    /// Order on the y's while eliminating the homogenizing variable.
    pub homogeneous_inner: TermOrder,
    /// Degree-compatible order whose initial ideal of the kernel yields `g`.
    pub g_order: TermOrder,
    pub oracle_cap: usize,
    pub hilbert: HilbertOptions,
    /// Run the full pairwise Buchberger check on every basis.
    pub verify_bases: bool,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            cross_check_limit: 10,
            kernel_inner: TermOrder::Lex,
            homogeneous_inner: TermOrder::Lex,
            g_order: TermOrder::GradedLex,
            oracle_cap: 1 << 26,
            hilbert: HilbertOptions::default(),
            verify_bases: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct WalkCountReport {
    pub steps: StepSet,
    pub kernel: ToricKernel,
    /// Kernel basis under `g_order`.
    pub g_basis: BinomialBasis,
    pub homogeneous: HomogeneousPart,
    pub kernel_initial: MonomialIdeal,
    pub homogeneous_initial: MonomialIdeal,
    /// Canonical Hilbert series of `S / in(H)`.
    pub f_series: HilbertSeries,
    /// Canonical Hilbert series of `S / in(κ)`.
    pub g_series: HilbertSeries,
    pub f_closed: HilbertClosedForm,
    pub g_closed: HilbertClosedForm,
    pub oracle_prefix: Vec<OracleRow>,
    /// `dim (S/H)_d` by class counting, for `d <= cross_check_limit`.
    pub homogeneous_dims: Vec<u64>,
    pub cross_check_limit: u64,
}

/// Runs the whole pipeline for `steps` and cross-checks every derived value
/// up to `config.cross_check_limit` against the sumset oracle.
pub fn analyze(steps: &StepSet, config: &WalkConfig) -> Result<WalkCountReport, WalkError> {
    if !config.g_order.is_graded() {
        return Err(WalkError::OrderNotGraded(config.g_order.name()));
    }
    let kernel = toric_kernel(steps, config.kernel_inner.clone())?;
    let homogeneous = largest_homogeneous_subideal(&kernel.kernel, config.homogeneous_inner.clone())?;

    let g_basis = if config.g_order == *kernel.kernel.order() {
        kernel.kernel.clone()
    } else {
        buchberger(
            kernel.kernel.vars().clone(),
            config.g_order.clone(),
            kernel.kernel.elements(),
        )?
    };

    let n = steps.len();
    let grading = Grading::standard(n);
    let homogeneous_initial = initial_ideal(&homogeneous.basis);
    let kernel_initial = initial_ideal(&g_basis);
    let f_series = hilbert_numerator_with(&homogeneous_initial, &grading, &config.hilbert)?.canonicalize()?;
    let g_series = hilbert_numerator_with(&kernel_initial, &grading, &config.hilbert)?.canonicalize()?;
    let f_closed = f_series.closed_form()?;
    let g_closed = g_series.closed_form()?;

    let limit = config.cross_check_limit;
    let oracle_prefix = oracle(steps, limit, config.oracle_cap)?;
    for row in &oracle_prefix {
        for (quantity, closed, expected) in [(Quantity::F, &f_closed, row.f), (Quantity::G, &g_closed, row.g)] {
            let algebraic = closed.value(row.d);
            if algebraic != BigInt::from(expected) {
                return Err(WalkError::Mismatch {
                    quantity,
                    degree: row.d,
                    algebraic,
                    oracle: BigInt::from(expected),
                });
            }
        }
    }

    let homogeneous_dims = homogeneous_quotient_dims(n, homogeneous.basis.elements(), limit);
    let initial_dims = f_series.expand(&MultiDegree::from_slice(&[limit as u32]))?;
    for (d, (&by_classes, by_series)) in homogeneous_dims.iter().zip(initial_dims.univariate()).enumerate() {
        if BigInt::from(by_classes) != *by_series {
            return Err(WalkError::Mismatch {
                quantity: Quantity::Macaulay,
                degree: d as u64,
                algebraic: by_series.clone(),
                oracle: BigInt::from(by_classes),
            });
        }
    }

    let report = WalkCountReport {
        steps: steps.clone(),
        kernel,
        g_basis,
        homogeneous,
        kernel_initial,
        homogeneous_initial,
        f_series,
        g_series,
        f_closed,
        g_closed,
        oracle_prefix,
        homogeneous_dims,
        cross_check_limit: limit,
    };
    verify_soundness(&report, config.verify_bases)?;
    Ok(report)
}

/// Structural checks on the bases of a report:
///
/// * every kernel element has equal endpoints on both sides;
/// * every element of `H` is homogeneous and reduces to zero against the kernel basis;
/// * every presentation generator reduces to zero against its basis;
/// * with `full`, every reduced basis satisfies Buchberger's criterion on all pairs.
pub fn verify_soundness(report: &WalkCountReport, full: bool) -> Result<(), WalkError> {
    let unsound = |msg: alloc::string::String| Err(WalkError::Unsound(msg));
    let steps = &report.steps;
    let kernel = &report.kernel;

    for basis in [&kernel.kernel, &report.g_basis, &kernel.eliminated] {
        for e in basis.elements() {
            if steps.endpoint(e.lead()) != steps.endpoint(e.trail()) {
                return unsound(format!("kernel element {} is unbalanced", e.display(basis.vars())));
            }
        }
    }
    for g in &kernel.presentation.generators {
        if !kernel
            .presentation_basis
            .reduces_to_zero(&g.reorder(kernel.presentation_basis.order()))
        {
            return unsound(format!(
                "generator {} not in its basis ideal",
                g.display(&kernel.presentation.vars)
            ));
        }
    }
    for e in kernel.eliminated.elements() {
        if !kernel.kernel.reduces_to_zero(&e.reorder(kernel.kernel.order())) {
            return unsound(format!(
                "eliminated element {} not in kernel",
                e.display(kernel.eliminated.vars())
            ));
        }
    }
    for e in report.homogeneous.basis.elements() {
        if !e.is_homogeneous() {
            return unsound(format!(
                "element {} of H is not homogeneous",
                e.display(report.homogeneous.basis.vars())
            ));
        }
        if !kernel.kernel.reduces_to_zero(&e.reorder(kernel.kernel.order())) {
            return unsound(format!(
                "element {} of H is not in the kernel",
                e.display(report.homogeneous.basis.vars())
            ));
        }
    }
    if full {
        let bases = [
            ("presentation", &kernel.presentation_basis),
            ("eliminated", &kernel.eliminated),
            ("kernel", &kernel.kernel),
            ("g-order kernel", &report.g_basis),
            ("homogenized", &report.homogeneous.homogenized),
            ("homogeneous", &report.homogeneous.basis),
        ];
        for (name, basis) in bases {
            if let Err((i, j)) = basis.check_buchberger_criterion() {
                return unsound(format!("{name} basis fails Buchberger's criterion on pair ({i}, {j})"));
            }
            if !basis.is_reduced() || !basis.is_normalized() {
                return unsound(format!("{name} basis is not reduced"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn line_report() {
        let w = StepSet::new(2, vec![vec![1, 0], vec![-1, 0]]).unwrap();
        let r = analyze(&w, &WalkConfig::default()).unwrap();
        assert_eq!(alloc::format!("{}", r.f_closed.display_polynomial()), "d + 1");
        assert_eq!(r.f_closed.stable_from(), 0);
        assert_eq!(alloc::format!("{}", r.g_closed.display_polynomial()), "2");
        assert_eq!(r.g_closed.stable_from(), 1);
        assert_eq!(r.g_closed.value(0), BigInt::from(1));
    }

    #[test]
    fn rejects_ungraded_g_order() {
        let config = WalkConfig {
            g_order: TermOrder::Lex,
            ..WalkConfig::default()
        };
        assert!(matches!(
            analyze(&StepSet::king(), &config),
            Err(WalkError::OrderNotGraded(_))
        ));
    }
}
