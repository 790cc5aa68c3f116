use core::cmp::Ordering;

use super::{Monomial, TermOrder};

/// A pure difference binomial `lead - trail` with `lead > trail` in the
/// order it was built with. The zero binomial is never represented: a
/// difference of two equal monomials is `None` wherever one could arise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DifferenceBinomial {
    lead: Monomial,
    trail: Monomial,
}

impl DifferenceBinomial {
    /// `a - b` normalized under `order` (up to sign), or `None` if `a == b`.
    pub fn new(a: Monomial, b: Monomial, order: &TermOrder) -> Option<Self> {
        assert_eq!(a.nvars(), b.nvars(), "binomial sides live in different rings");
        match order.compare(&a, &b) {
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn nvars(&self) -> usize {
        self.lead.nvars()
    }

    pub fn into_parts(self) -> (Monomial, Monomial) {
        (self.lead, self.trail)
    }

    /// Re-normalizes under a different order.
    pub fn reorder(&self, order: &TermOrder) -> DifferenceBinomial {
        Self::new(self.lead.clone(), self.trail.clone(), order).expect("sides are distinct")
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    /// Whether all exponents outside `range` vanish on both sides.
    pub fn supported_in(&self, range: core::ops::Range<usize>) -> bool {
        let outside = |m: &Monomial| {
            m.exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| e > 0 && !range.contains(&i))
        };
        !outside(&self.lead) && !outside(&self.trail)
    }
}
