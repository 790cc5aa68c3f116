use alloc::vec::Vec;

use super::{BinomialBasis, GroebnerError, HOMOGENIZING_VARIABLE};
use crate::algebra::{DifferenceBinomial, TermOrder};
use crate::hilbert::MonomialIdeal;

/// Elements free of the first `front` variables, restricted to the
/// remaining ones. For a Gröbner basis under an order eliminating that
/// block this is a Gröbner basis of the elimination ideal, under the order
/// induced on the trailing block.
pub fn eliminate(basis: &BinomialBasis, front: usize) -> Result<BinomialBasis, GroebnerError> {
    let n = basis.vars().len();
    if front == 0 {
        return Ok(basis.clone());
    }
    if front >= n {
        return Err(GroebnerError::FrontTooLarge { front, nvars: n });
    }
    let order = basis.order();
    if !order.eliminates(front) {
        return Err(GroebnerError::NotElimination {
            front,
            order: order.name(),
        });
    }
    let inner = match order {
        TermOrder::Elimination { back_order, .. } => (**back_order).clone(),
        _ => TermOrder::Lex,
    };
    let elements = basis
        .elements()
        .iter()
        .filter(|e| e.supported_in(front..n))
        .map(|e| {
            DifferenceBinomial::new(e.lead().restrict(front..n), e.trail().restrict(front..n), &inner)
                .expect("restriction keeps sides distinct")
        })
        .collect();
    Ok(BinomialBasis::from_parts_unchecked(
        basis.vars().suffix(front)?,
        inner,
        elements,
        basis.is_flagged_reduced(),
    ))
}

/// [`homogenize_with`] using lex on the original variables.
pub fn homogenize(basis: &BinomialBasis) -> Result<BinomialBasis, GroebnerError> {
    homogenize_with(basis, TermOrder::Lex)
}

/// Homogenizes every element with a new variable `t` placed first.
///
/// An element `x^a - x^b` with `deg a = p >= q = deg b` becomes
/// `x^a - t^(p-q) x^b`. Starting from a Gröbner basis under a
/// degree-compatible order, the output generates the homogenization of the
/// ideal. It is returned under the order that eliminates `t` with `inner`
/// on the old variables, ready for the next Buchberger run; under that order
/// the `t`-side may become the lead.
pub fn homogenize_with(basis: &BinomialBasis, inner: TermOrder) -> Result<BinomialBasis, GroebnerError> {
    if !basis.order().is_graded() {
        return Err(GroebnerError::NotGraded(basis.order().name()));
    }
    let name = if basis.vars().index_of(HOMOGENIZING_VARIABLE).is_none() {
        HOMOGENIZING_VARIABLE
    } else {
        "t_h"
    };
    let vars = basis.vars().prepend(name)?;
    let order = TermOrder::elimination(1, TermOrder::Lex, inner);
    let elements = basis
        .elements()
        .iter()
        .map(|e| {
            let (p, q) = (e.lead().degree(), e.trail().degree());
            debug_assert!(p >= q);
            let gap = u32::try_from(p - q).expect("degree gap overflow");
            DifferenceBinomial::new(e.lead().extend_front(&[0]), e.trail().extend_front(&[gap]), &order)
                .expect("homogenization keeps sides distinct")
        })
        .collect();
    Ok(BinomialBasis::from_parts_unchecked(vars, order, elements, false))
}

/// Sets the first variable to 1 and normalizes under `order`. Elements
/// collapsing to zero are dropped.
pub fn dehomogenize(basis: &BinomialBasis, order: TermOrder) -> Result<BinomialBasis, GroebnerError> {
    let n = basis.vars().len();
    if n < 2 {
        return Err(GroebnerError::FrontTooLarge { front: 1, nvars: n });
    }
    let elements: Vec<DifferenceBinomial> = basis
        .elements()
        .iter()
        .filter_map(|e| DifferenceBinomial::new(e.lead().restrict(1..n), e.trail().restrict(1..n), &order))
        .collect();
    Ok(BinomialBasis::from_parts_unchecked(
        basis.vars().suffix(1)?,
        order,
        elements,
        false,
    ))
}

/// Monomial ideal generated by the leads.
pub fn initial_ideal(basis: &BinomialBasis) -> MonomialIdeal {
    MonomialIdeal::minimalize(
        basis.vars().clone(),
        basis.elements().iter().map(|e| e.lead().clone()).collect(),
    )
    .expect("leads live in the basis ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, VariableSet};
    use crate::groebner::buchberger;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn line_kernel() -> BinomialBasis {
        let order = TermOrder::GradedLex;
        let g = DifferenceBinomial::new(m(&[1, 1]), m(&[0, 0]), &order).unwrap();
        buchberger(VariableSet::indexed("y", 2), order, &[g]).unwrap()
    }

    #[test]
    fn homogenize_line_kernel() {
        let h = homogenize(&line_kernel()).unwrap();
        assert_eq!(h.vars().names(), ["t", "y1", "y2"]);
        let e = &h.elements()[0];
        // {y1*y2, t^2}; t dominates under the t-eliminating order.
        assert_eq!(e.lead(), &m(&[2, 0, 0]));
        assert_eq!(e.trail(), &m(&[0, 1, 1]));
        let back = dehomogenize(&h, TermOrder::GradedLex).unwrap();
        assert_eq!(back.elements(), line_kernel().elements());
    }

    #[test]
    fn homogeneous_elements_get_no_t() {
        let order = TermOrder::GradedLex;
        let g = DifferenceBinomial::new(m(&[2, 0]), m(&[1, 1]), &order).unwrap();
        let b = BinomialBasis::from_elements(VariableSet::indexed("y", 2), order, vec![g]).unwrap();
        let h = homogenize(&b).unwrap();
        assert_eq!(h.elements()[0].lead(), &m(&[0, 2, 0]));
        assert_eq!(h.elements()[0].trail(), &m(&[0, 1, 1]));
    }

    #[test]
    fn homogenize_requires_graded_order() {
        let b = BinomialBasis::empty(VariableSet::indexed("y", 2), TermOrder::Lex);
        assert!(matches!(homogenize(&b), Err(GroebnerError::NotGraded(_))));
    }

    #[test]
    fn eliminate_contracts() {
        let kernel = line_kernel();
        assert_eq!(eliminate(&kernel, 0).unwrap(), kernel);
        assert!(matches!(
            eliminate(&kernel, 1),
            Err(GroebnerError::NotElimination { .. })
        ));

        // A lex basis in which every element touches the front block.
        let order = TermOrder::Lex;
        let g = DifferenceBinomial::new(m(&[1, 1]), m(&[0, 0]), &order).unwrap();
        let b = buchberger(VariableSet::indexed("x", 2), order, &[g]).unwrap();
        assert!(eliminate(&b, 1).unwrap().is_empty());
    }

    #[test]
    fn initial_ideal_of_leads() {
        let i = initial_ideal(&line_kernel());
        assert_eq!(i.generators(), &[m(&[1, 1])]);
        let empty = BinomialBasis::empty(VariableSet::indexed("y", 2), TermOrder::GradedLex);
        assert!(initial_ideal(&empty).is_zero());
    }
}
