use monocount_core::algebra::{DifferenceBinomial, Monomial, TermOrder, VariableSet};
use monocount_core::groebner::{buchberger, dehomogenize, eliminate, homogenize};
use proptest::prelude::*;

fn binomial_strategy(n: usize) -> impl Strategy<Value = (Vec<u32>, Vec<u32>)> {
    (prop::collection::vec(0u32..=2, n), prop::collection::vec(0u32..=2, n))
}

fn order_strategy() -> impl Strategy<Value = TermOrder> {
    prop_oneof![
        Just(TermOrder::Lex),
        Just(TermOrder::GradedLex),
        Just(TermOrder::GradedRevLex),
        Just(TermOrder::elimination(1, TermOrder::Lex, TermOrder::GradedRevLex)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn output_is_reduced_groebner_basis(
        raw in prop::collection::vec(binomial_strategy(4), 1..=3),
        order in order_strategy(),
    ) {
        let gens: Vec<DifferenceBinomial> = raw
            .iter()
            .filter_map(|(a, b)| {
                DifferenceBinomial::new(Monomial::from_exponents(a), Monomial::from_exponents(b), &order)
            })
            .collect();
        let b = buchberger(VariableSet::indexed("x", 4), order.clone(), &gens).unwrap();
        prop_assert!(b.check_buchberger_criterion().is_ok());
        prop_assert!(b.is_reduced());
        prop_assert!(b.is_normalized());
        for g in &gens {
            prop_assert!(b.reduces_to_zero(g));
        }
        // Reduced bases are unique: rerunning on the output is a fixed point.
        let again = buchberger(VariableSet::indexed("x", 4), order, b.elements()).unwrap();
        prop_assert_eq!(again.elements(), b.elements());
    }

    #[test]
    fn homogenize_round_trip(raw in prop::collection::vec(binomial_strategy(3), 1..=3)) {
        let order = TermOrder::GradedLex;
        let gens: Vec<DifferenceBinomial> = raw
            .iter()
            .filter_map(|(a, b)| {
                DifferenceBinomial::new(Monomial::from_exponents(a), Monomial::from_exponents(b), &order)
            })
            .collect();
        let b = buchberger(VariableSet::indexed("y", 3), order.clone(), &gens).unwrap();
        let h = homogenize(&b).unwrap();
        prop_assert!(h.elements().iter().all(DifferenceBinomial::is_homogeneous));
        let back = dehomogenize(&h, order).unwrap();
        prop_assert_eq!(back.elements(), b.elements());
    }
}

#[test]
fn elimination_finds_lattice_ideal() {
    // y1 -> s^2, y2 -> s^3 under lex with s first: kernel y1^3 - y2^2.
    let order = TermOrder::elimination(1, TermOrder::Lex, TermOrder::GradedLex);
    let vars = VariableSet::new(["s", "y1", "y2"]).unwrap();
    let m = |e: &[u32]| Monomial::from_exponents(e);
    let gens = [
        DifferenceBinomial::new(m(&[2, 0, 0]), m(&[0, 1, 0]), &order).unwrap(),
        DifferenceBinomial::new(m(&[3, 0, 0]), m(&[0, 0, 1]), &order).unwrap(),
    ];
    let b = buchberger(vars, order, &gens).unwrap();
    let k = eliminate(&b, 1).unwrap();
    assert_eq!(k.vars().names(), ["y1", "y2"]);
    assert_eq!(k.len(), 1);
    let e = &k.elements()[0];
    assert_eq!(e.lead(), &m(&[3, 0]));
    assert_eq!(e.trail(), &m(&[0, 2]));
}
