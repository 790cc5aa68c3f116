use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::basis::{reduce_with, s_binomial};
use super::{BinomialBasis, GroebnerError};
use crate::algebra::{AlgebraError, DifferenceBinomial, TermOrder, VariableSet};

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Pairs are processed by the normal strategy (smallest lcm degree first,
/// ties by index pair), pairs with coprime leads are skipped, and reduction
/// always uses the lowest-index applicable element, so the run is fully
/// deterministic. The result is interreduced and sorted by increasing lead.
pub fn buchberger(
    vars: VariableSet,
    order: TermOrder,
    generators: &[DifferenceBinomial],
) -> Result<BinomialBasis, GroebnerError> {
    if let Some(bad) = generators.iter().find(|g| g.nvars() != vars.len()) {
        return Err(AlgebraError::LengthMismatch {
            expected: vars.len(),
            found: bad.nvars(),
        }
        .into());
    }

    let mut basis: Vec<DifferenceBinomial> = Vec::new();
    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    for g in generators {
        let g = g.reorder(&order);
        let reduced = DifferenceBinomial::new(reduce_with(&basis, g.lead()), reduce_with(&basis, g.trail()), &order);
        if let Some(r) = reduced {
            push(&mut basis, &mut pairs, r);
        }
    }

    while let Some((_, i, j)) = pairs.pop_first() {
        let Some(s) = s_binomial(&basis[i], &basis[j], &order) else {
            continue;
        };
        let a = reduce_with(&basis, s.lead());
        let b = reduce_with(&basis, s.trail());
        if let Some(r) = DifferenceBinomial::new(a, b, &order) {
            push(&mut basis, &mut pairs, r);
        }
    }

    let elements = interreduce(basis, &order);
    Ok(BinomialBasis::from_parts_unchecked(vars, order, elements, true))
}

fn push(basis: &mut Vec<DifferenceBinomial>, pairs: &mut BTreeSet<(u64, usize, usize)>, element: DifferenceBinomial) {
    let k = basis.len();
    for (i, e) in basis.iter().enumerate() {
        if e.lead().is_coprime(element.lead()) {
            continue;
        }
        pairs.insert((e.lead().lcm(element.lead()).degree(), i, k));
    }
    basis.push(element);
}

/// Minimal basis with fully reduced trails, sorted by lead.
fn interreduce(basis: Vec<DifferenceBinomial>, order: &TermOrder) -> Vec<DifferenceBinomial> {
    let mut minimal: Vec<DifferenceBinomial> = Vec::new();
    for (i, e) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(j, o)| j != i && o.lead().divides(e.lead()) && (o.lead() != e.lead() || j < i));
        if !redundant {
            minimal.push(e.clone());
        }
    }
    let mut out: Vec<DifferenceBinomial> = minimal
        .iter()
        .map(|e| {
            let trail = reduce_with(&minimal, e.trail());
            DifferenceBinomial::new(e.lead().clone(), trail, order).expect("a reduced trail stays below its lead")
        })
        .collect();
    out.sort_by(|a, b| order.compare(a.lead(), b.lead()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let vars = VariableSet::indexed("y", 2);
        let order = TermOrder::GradedLex;
        let g = DifferenceBinomial::new(m(&[1, 1]), m(&[0, 0]), &order).unwrap();
        let b = buchberger(vars, order, core::slice::from_ref(&g)).unwrap();
        assert_eq!(b.elements(), &[g]);
        assert!(b.check_buchberger_criterion().is_ok());
        assert!(b.is_reduced());
    }

    #[test]
    fn empty_input() {
        let b = buchberger(VariableSet::indexed("y", 2), TermOrder::Lex, &[]).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn twisted_cubic() {
        // ker(y1,y2,y3,y4 -> s^3, s^2 t, s t^2, t^3) under grevlex is
        // generated by y2^2 - y1y3, y2y3 - y1y4, y3^2 - y2y4.
        let order = TermOrder::GradedRevLex;
        let vars = VariableSet::indexed("y", 4);
        let gens = [
            DifferenceBinomial::new(m(&[0, 2, 0, 0]), m(&[1, 0, 1, 0]), &order).unwrap(),
            DifferenceBinomial::new(m(&[0, 1, 1, 0]), m(&[1, 0, 0, 1]), &order).unwrap(),
            DifferenceBinomial::new(m(&[0, 0, 2, 0]), m(&[0, 1, 0, 1]), &order).unwrap(),
        ];
        let b = buchberger(vars, order, &gens).unwrap();
        assert_eq!(b.len(), 3);
        assert!(b.check_buchberger_criterion().is_ok());
        assert!(b.is_reduced());
        // Under lex, an extra generator y1*y3^3 - y2^3*y4 ... appears.
        let lex = buchberger(VariableSet::indexed("y", 4), TermOrder::Lex, &gens).unwrap();
        assert!(lex.check_buchberger_criterion().is_ok());
        assert!(lex.is_reduced());
        for g in &gens {
            assert!(lex.reduces_to_zero(&g.reorder(&TermOrder::Lex)));
        }
    }

    #[test]
    fn length_mismatch() {
        let order = TermOrder::Lex;
        let g = DifferenceBinomial::new(m(&[1, 1]), m(&[0, 0]), &order).unwrap();
        assert!(matches!(
            buchberger(VariableSet::indexed("y", 3), order, &[g]),
            Err(GroebnerError::Algebra(AlgebraError::LengthMismatch { .. }))
        ));
    }

    #[test]
    fn deterministic_output() {
        let order = TermOrder::GradedLex;
        let gens = vec![
            DifferenceBinomial::new(m(&[2, 0, 1]), m(&[0, 1, 0]), &order).unwrap(),
            DifferenceBinomial::new(m(&[1, 2, 0]), m(&[0, 0, 1]), &order).unwrap(),
        ];
        let a = buchberger(VariableSet::indexed("y", 3), order.clone(), &gens).unwrap();
        let b = buchberger(VariableSet::indexed("y", 3), order, &gens).unwrap();
        assert_eq!(a, b);
        assert!(a.check_buchberger_criterion().is_ok());
    }
}
