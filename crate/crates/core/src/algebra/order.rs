use core::cmp::Ordering;

use alloc::boxed::Box;

use super::{AlgebraError, Monomial};

/// A monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TermOrder {
    /// Lexicographic, `x1 > x2 > ...`.
    Lex,
    /// Total degree first, lex to break ties.
    GradedLex,
    /// Total degree first, then the monomial with the smaller exponent in
    /// the last differing variable is larger.
    GradedRevLex,
    /// Product order: the first `front` variables are compared with
    /// `front_order` and dominate; ties fall through to `back_order` on the
    /// remaining variables.
    Elimination {
        front: usize,
        front_order: Box<TermOrder>,
        back_order: Box<TermOrder>,
    },
}

impl TermOrder {
    pub fn elimination(front: usize, front_order: TermOrder, back_order: TermOrder) -> Self {
        TermOrder::Elimination {
            front,
            front_order: Box::new(front_order),
            back_order: Box::new(back_order),
        }
    }

    /// Whether the order refines total degree.
    pub fn is_graded(&self) -> bool {
        matches!(self, TermOrder::GradedLex | TermOrder::GradedRevLex)
    }

    /// Whether every monomial involving one of the first `front` variables
    /// exceeds every monomial free of them.
    pub fn eliminates(&self, front: usize) -> bool {
        match self {
            TermOrder::Lex => true,
            TermOrder::Elimination { front: f, .. } => *f == front || front == 0,
            _ => front == 0,
        }
    }

    pub fn name(&self) -> alloc::string::String {
        use alloc::format;
        match self {
            TermOrder::Lex => "lex".into(),
            TermOrder::GradedLex => "grlex".into(),
            TermOrder::GradedRevLex => "grevlex".into(),
            TermOrder::Elimination {
                front,
                front_order,
                back_order,
            } => format!("elim({front}; {}, {})", front_order.name(), back_order.name()),
        }
    }

    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, AlgebraError> {
        a.check_len(b)?;
        Ok(self.compare(a, b))
    }

    /// Compares two monomials of the same ambient ring.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        self.cmp_slices(a.exponents(), b.exponents())
    }

    fn cmp_slices(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GradedLex => total(a).cmp(&total(b)).then_with(|| a.cmp(b)),
            TermOrder::GradedRevLex => total(a).cmp(&total(b)).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            TermOrder::Elimination {
                front,
                front_order,
                back_order,
            } => {
                let f = (*front).min(a.len());
                front_order
                    .cmp_slices(&a[..f], &b[..f])
                    .then_with(|| back_order.cmp_slices(&a[f..], &b[f..]))
            }
        }
    }
}

fn total(e: &[u32]) -> u64 {
    e.iter().map(|&x| u64::from(x)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn all_orders() -> [TermOrder; 5] {
        [
            TermOrder::Lex,
            TermOrder::GradedLex,
            TermOrder::GradedRevLex,
            TermOrder::elimination(2, TermOrder::Lex, TermOrder::Lex),
            TermOrder::elimination(1, TermOrder::GradedLex, TermOrder::GradedRevLex),
        ]
    }

    #[test]
    fn basic_comparisons() {
        assert_eq!(TermOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(
            TermOrder::GradedLex.compare(&m(&[0, 3]), &m(&[2, 0])),
            Ordering::Greater
        );
        for o in all_orders() {
            assert_eq!(o.compare(&m(&[1, 2]), &m(&[1, 2])), Ordering::Equal);
        }
        // grevlex: x1*x3 < x2^2 in three variables.
        assert_eq!(
            TermOrder::GradedRevLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
        assert_eq!(
            TermOrder::GradedLex.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])),
            Ordering::Greater
        );
        assert!(TermOrder::Lex.try_compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, n).prop_map(|v| Monomial::from_exponents(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn order_axioms(a in mono(4), b in mono(4), c in mono(4)) {
            for o in all_orders() {
                let ab = o.compare(&a, &b);
                prop_assert_eq!(ab, o.compare(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
                }
                prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.compare(&Monomial::one(4), &a), Ordering::Greater);
            }
        }

        #[test]
        fn elimination_front_dominates(a in mono(4), b in mono(4)) {
            let o = TermOrder::elimination(2, TermOrder::Lex, TermOrder::GradedLex);
            let front_a = a.exponent(0) + a.exponent(1) > 0;
            let mut bb = b.into_vec();
            bb[0] = 0;
            bb[1] = 0;
            let b = Monomial::from_exponents(&bb);
            if front_a {
                prop_assert_eq!(o.compare(&a, &b), Ordering::Greater);
            }
        }
    }
}
