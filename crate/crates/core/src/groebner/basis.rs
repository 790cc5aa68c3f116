use core::cmp::Ordering;

use alloc::vec::Vec;

use crate::algebra::{AlgebraError, DifferenceBinomial, Monomial, TermOrder, VariableSet};

/// A set of binomials over a fixed ring and order, usually a Gröbner basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasis {
    vars: VariableSet,
    order: TermOrder,
    elements: Vec<DifferenceBinomial>,
    reduced: bool,
}

impl BinomialBasis {
    pub fn empty(vars: VariableSet, order: TermOrder) -> Self {
        Self {
            vars,
            order,
            elements: Vec::new(),
            reduced: true,
        }
    }

    /// Wraps `elements` as given, re-normalizing each under `order`.
    /// Nothing is claimed about the Gröbner property.
    pub fn from_elements(
        vars: VariableSet,
        order: TermOrder,
        elements: Vec<DifferenceBinomial>,
    ) -> Result<Self, AlgebraError> {
        if let Some(bad) = elements.iter().find(|e| e.nvars() != vars.len()) {
            return Err(AlgebraError::LengthMismatch {
                expected: vars.len(),
                found: bad.nvars(),
            });
        }
        let elements = elements.iter().map(|e| e.reorder(&order)).collect();
        Ok(Self {
            vars,
            order,
            elements,
            reduced: false,
        })
    }

    pub(crate) fn from_parts_unchecked(
        vars: VariableSet,
        order: TermOrder,
        elements: Vec<DifferenceBinomial>,
        reduced: bool,
    ) -> Self {
        Self {
            vars,
            order,
            elements,
            reduced,
        }
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[DifferenceBinomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Set by [`crate::groebner::buchberger`] on the interreduced output.
    pub fn is_flagged_reduced(&self) -> bool {
        self.reduced
    }

    /// Rewrites `m` by the lowest-index element whose lead divides it until
    /// no lead does.
    pub fn reduce_monomial(&self, m: &Monomial) -> Monomial {
        reduce_with(&self.elements, m)
    }

    /// Normal form of `f`; `None` means zero. When the basis is a Gröbner
    /// basis this is `None` exactly when `f` lies in the ideal.
    pub fn normal_form(&self, f: &DifferenceBinomial) -> Option<DifferenceBinomial> {
        let a = self.reduce_monomial(f.lead());
        let b = self.reduce_monomial(f.trail());
        DifferenceBinomial::new(a, b, &self.order)
    }

    pub fn reduces_to_zero(&self, f: &DifferenceBinomial) -> bool {
        self.normal_form(f).is_none()
    }

    /// Buchberger's criterion over every pair, coprime ones included. Returns
    /// the first pair whose S-binomial has a nonzero normal form.
    pub fn check_buchberger_criterion(&self) -> Result<(), (usize, usize)> {
        for j in 0..self.elements.len() {
            for i in 0..j {
                if let Some(s) = s_binomial(&self.elements[i], &self.elements[j], &self.order) {
                    if !self.reduces_to_zero(&s) {
                        return Err((i, j));
                    }
                }
            }
        }
        Ok(())
    }

    /// Leads form an antichain and no trail is divisible by any lead.
    pub fn is_reduced(&self) -> bool {
        let els = &self.elements;
        els.iter().enumerate().all(|(i, e)| {
            els.iter()
                .enumerate()
                .all(|(j, o)| !o.lead().divides(e.trail()) && (i == j || !o.lead().divides(e.lead())))
        })
    }

    /// Every element is normalized under the basis order.
    pub fn is_normalized(&self) -> bool {
        self.elements
            .iter()
            .all(|e| self.order.compare(e.lead(), e.trail()) == Ordering::Greater)
    }
}

pub(crate) fn reduce_with(elements: &[DifferenceBinomial], m: &Monomial) -> Monomial {
    let mut current = m.clone();
    'outer: loop {
        for e in elements {
            if e.lead().divides(&current) {
                current = rewrite(&current, e);
                continue 'outer;
            }
        }
        return current;
    }
}

/// `m / lead * trail`, assuming `lead | m`.
fn rewrite(m: &Monomial, e: &DifferenceBinomial) -> Monomial {
    let exps: smallvec::SmallVec<[u32; 16]> = m
        .exponents()
        .iter()
        .zip(e.lead().exponents())
        .zip(e.trail().exponents())
        .map(|((&x, &l), &t)| {
            (x - l)
                .checked_add(t)
                .unwrap_or_else(|| panic!("exponent overflow reducing {m:?}"))
        })
        .collect();
    Monomial::from_exponents(&exps)
}

/// `(L / lead_f) trail_f - (L / lead_g) trail_g` with `L = lcm(lead_f, lead_g)`.
pub(crate) fn s_binomial(
    f: &DifferenceBinomial,
    g: &DifferenceBinomial,
    order: &TermOrder,
) -> Option<DifferenceBinomial> {
    let l = f.lead().lcm(g.lead());
    let a = f.lead().quotient_unchecked(&l).mul(f.trail());
    let b = g.lead().quotient_unchecked(&l).mul(g.trail());
    DifferenceBinomial::new(a, b, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn empty_basis_is_identity() {
        let vars = VariableSet::indexed("y", 2);
        let b = BinomialBasis::empty(vars, TermOrder::GradedLex);
        let f = DifferenceBinomial::new(m(&[2, 0]), m(&[1, 1]), &TermOrder::GradedLex).unwrap();
        assert_eq!(b.normal_form(&f), Some(f));
    }

    #[test]
    fn hand_reduction() {
        // y1^2 - y1*y2 against {y1 - y2}: both sides rewrite to y2^2.
        let order = TermOrder::Lex;
        let vars = VariableSet::indexed("y", 2);
        let g = DifferenceBinomial::new(m(&[1, 0]), m(&[0, 1]), &order).unwrap();
        let b = BinomialBasis::from_elements(vars, order.clone(), vec![g]).unwrap();
        let f = DifferenceBinomial::new(m(&[2, 0]), m(&[1, 1]), &order).unwrap();
        assert!(b.reduces_to_zero(&f));
        assert_eq!(b.reduce_monomial(&m(&[2, 3])), m(&[0, 5]));
    }

    #[test]
    fn lowest_index_reducer_wins() {
        let order = TermOrder::GradedLex;
        let vars = VariableSet::indexed("y", 3);
        let g1 = DifferenceBinomial::new(m(&[1, 1, 0]), m(&[0, 0, 1]), &order).unwrap();
        let g2 = DifferenceBinomial::new(m(&[1, 0, 0]), m(&[0, 0, 0]), &order).unwrap();
        let b = BinomialBasis::from_elements(vars, order, vec![g1, g2]).unwrap();
        // x1*x2 -> x3 by g1 (index 0) even though g2 also divides.
        assert_eq!(b.reduce_monomial(&m(&[1, 1, 0])), m(&[0, 0, 1]));
    }
}
