use alloc::vec::Vec;

use super::{StepSet, WalkError};
use crate::algebra::{DifferenceBinomial, Monomial, TermOrder, VariableSet};
use crate::groebner::{buchberger, eliminate, homogenize_with, BinomialBasis};

/// Generators of the presentation ideal in `K[u, x1..xm, y1..yN]`.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub vars: VariableSet,
    /// Eliminates `u, x1..xm` with lex on that block and `inner` on the y's.
    pub order: TermOrder,
    pub generators: Vec<DifferenceBinomial>,
    /// Number of eliminated variables, `1 + m`.
    pub front: usize,
}

/// `u x1...xm - 1` together with `y_i x^{w_i^-} - x^{w_i^+}` for every step,
/// where `w^+` and `w^-` are the positive and negative parts of `w`.
pub fn presentation_ideal(steps: &StepSet, inner: TermOrder) -> Presentation {
    let m = steps.dimension();
    let n = steps.len();
    let vars = VariableSet::new(["u"])
        .and_then(|u| u.concat(&VariableSet::indexed("x", m)))
        .and_then(|ux| ux.concat(&VariableSet::indexed("y", n)))
        .expect("distinct block names");
    let order = TermOrder::elimination(1 + m, TermOrder::Lex, inner);
    let total = 1 + m + n;

    let mut generators = Vec::with_capacity(1 + n);
    let mut saturation = alloc::vec![1u32; 1 + m];
    saturation.resize(total, 0);
    generators.push(
        DifferenceBinomial::new(Monomial::from_exponents(&saturation), Monomial::one(total), &order)
            .expect("nonconstant"),
    );
    for (i, w) in steps.steps().iter().enumerate() {
        let mut left = alloc::vec![0u32; total];
        let mut right = alloc::vec![0u32; total];
        left[1 + m + i] = 1;
        for (j, &c) in w.iter().enumerate() {
            let e = u32::try_from(c.unsigned_abs()).expect("step coordinate too large");
            if c < 0 {
                left[1 + j] = e;
            } else {
                right[1 + j] = e;
            }
        }
        generators.push(
            DifferenceBinomial::new(
                Monomial::from_exponents(&left),
                Monomial::from_exponents(&right),
                &order,
            )
            .expect("y-side and x-side differ"),
        );
    }
    Presentation {
        vars,
        order,
        generators,
        front: 1 + m,
    }
}

/// The stages of the kernel computation.
#[derive(Debug, Clone)]
pub struct ToricKernel {
    pub presentation: Presentation,
    /// Reduced Gröbner basis of the presentation ideal.
    pub presentation_basis: BinomialBasis,
    /// Its y-only part, a Gröbner basis of the kernel under `inner`.
    pub eliminated: BinomialBasis,
    /// Reduced Gröbner basis of the kernel under graded lex.
    pub kernel: BinomialBasis,
}

/// Kernel of `y_i -> x^{w_i}` by eliminating `u, x1..xm` from the
/// presentation ideal, then recomputed under graded lex on the y's.
pub fn toric_kernel(steps: &StepSet, inner: TermOrder) -> Result<ToricKernel, WalkError> {
    let presentation = presentation_ideal(steps, inner);
    let presentation_basis = buchberger(
        presentation.vars.clone(),
        presentation.order.clone(),
        &presentation.generators,
    )?;
    let eliminated = eliminate(&presentation_basis, presentation.front)?;
    let kernel = buchberger(eliminated.vars().clone(), TermOrder::GradedLex, eliminated.elements())?;
    Ok(ToricKernel {
        presentation,
        presentation_basis,
        eliminated,
        kernel,
    })
}

#[derive(Debug, Clone)]
pub struct HomogeneousPart {
    /// Reduced Gröbner basis of the homogenized kernel in `K[t, y]`,
    /// under an order eliminating `t`.
    pub homogenized: BinomialBasis,
    /// Gröbner basis of `H`, the `t`-free elements of `homogenized`.
    pub basis: BinomialBasis,
}

/// Largest homogeneous subideal of the kernel: homogenize a graded-order
/// Gröbner basis with `t`, eliminate `t`.
pub fn largest_homogeneous_subideal(kernel: &BinomialBasis, inner: TermOrder) -> Result<HomogeneousPart, WalkError> {
    let homogenized_gens = homogenize_with(kernel, inner)?;
    let homogenized = buchberger(
        homogenized_gens.vars().clone(),
        homogenized_gens.order().clone(),
        homogenized_gens.elements(),
    )?;
    let basis = eliminate(&homogenized, 1)?;
    if let Some(e) = basis.elements().iter().find(|e| !e.is_homogeneous()) {
        return Err(WalkError::Unsound(alloc::format!(
            "non-homogeneous element {} in H",
            e.display(basis.vars())
        )));
    }
    Ok(HomogeneousPart { homogenized, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::String;
    use alloc::vec;

    fn render(p: &Presentation) -> Vec<String> {
        p.generators.iter().map(|g| format!("{}", g.display(&p.vars))).collect()
    }

    #[test]
    fn presentation_generators() {
        let w = StepSet::new(2, vec![vec![1, 2]]).unwrap();
        let p = presentation_ideal(&w, TermOrder::Lex);
        assert_eq!(render(&p), ["u*x1*x2 - 1", "x1*x2^2 - y1"]);

        let w = StepSet::new(2, vec![vec![-2, 1]]).unwrap();
        assert_eq!(render(&presentation_ideal(&w, TermOrder::Lex))[1], "x1^2*y1 - x2");

        let w = StepSet::new(1, vec![vec![1]]).unwrap();
        assert_eq!(render(&presentation_ideal(&w, TermOrder::Lex)), ["u*x1 - 1", "x1 - y1"]);
    }

    #[test]
    fn kernel_of_single_step_is_zero() {
        let w = StepSet::new(1, vec![vec![1]]).unwrap();
        let k = toric_kernel(&w, TermOrder::Lex).unwrap();
        assert!(k.kernel.is_empty());
        let h = largest_homogeneous_subideal(&k.kernel, TermOrder::Lex).unwrap();
        assert!(h.basis.is_empty());
    }

    #[test]
    fn line_kernel_and_homogeneous_part() {
        let w = StepSet::new(2, vec![vec![1, 0], vec![-1, 0]]).unwrap();
        let k = toric_kernel(&w, TermOrder::Lex).unwrap();
        let rendered: Vec<String> = k
            .kernel
            .elements()
            .iter()
            .map(|e| format!("{}", e.display(k.kernel.vars())))
            .collect();
        assert_eq!(rendered, ["y1*y2 - 1"]);
        let h = largest_homogeneous_subideal(&k.kernel, TermOrder::Lex).unwrap();
        assert!(h.basis.is_empty());
    }
}
