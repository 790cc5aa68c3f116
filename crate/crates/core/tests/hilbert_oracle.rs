use monocount_core::algebra::{Grading, Monomial, MultiDegree, VariableSet};
use monocount_core::hilbert::{hilbert_numerator, standard_monomial_count, MonomialIdeal};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

fn ideal_strategy() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=5).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=4, n), 0..=6).prop_map(move |gens| {
            let gens = gens.iter().map(|e| Monomial::from_exponents(e)).collect();
            MonomialIdeal::minimalize(VariableSet::indexed("x", n), gens).unwrap()
        })
    })
}

fn permuted(ideal: &MonomialIdeal, perm: &[usize]) -> MonomialIdeal {
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let e: Vec<u32> = perm.iter().map(|&i| g.exponent(i)).collect();
            Monomial::from_exponents(&e)
        })
        .collect();
    MonomialIdeal::minimalize(ideal.vars().clone(), gens).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn series_matches_enumeration(ideal in ideal_strategy()) {
        let n = ideal.nvars();
        let grading = Grading::standard(n);
        let series = hilbert_numerator(&ideal, &grading).unwrap();
        let dense = series.expand(&MultiDegree::from_slice(&[10])).unwrap();
        for d in 0..=10u32 {
            let direct = standard_monomial_count(&ideal, &MultiDegree::from_slice(&[d]), &grading).unwrap();
            prop_assert_eq!(dense.get(&[d]), BigInt::from(direct), "degree {}", d);
        }

        let canonical = series.canonicalize().unwrap();
        let p1 = canonical.numerator().eval_at_one();
        let unit_ideal = ideal.generators().iter().any(Monomial::is_one);
        prop_assert_eq!(p1.is_zero(), unit_ideal);
        let closed = canonical.closed_form().unwrap();
        for d in 0..=15u64 {
            prop_assert_eq!(closed.value(d), series.hf_at(&MultiDegree::from_slice(&[d as u32])).unwrap());
        }
        prop_assert!(closed.deviations().keys().all(|&d| d < closed.stable_from()));
    }

    #[test]
    fn bigraded_series_matches_enumeration(ideal in ideal_strategy(), split in 0usize..=5) {
        let n = ideal.nvars();
        let first = split.min(n);
        let grading = Grading::bigraded(first, n - first);
        let series = hilbert_numerator(&ideal, &grading).unwrap();
        let dense = series.expand(&MultiDegree::from_slice(&[5, 5])).unwrap();
        for a in 0..=5u32 {
            for b in 0..=5u32 {
                let deg = MultiDegree::from_slice(&[a, b]);
                let direct = standard_monomial_count(&ideal, &deg, &grading).unwrap();
                prop_assert_eq!(dense.get(&[a, b]), BigInt::from(direct));
            }
        }
    }

    #[test]
    fn numerator_ignores_variable_order(ideal in ideal_strategy(), seed in any::<u64>()) {
        let n = ideal.nvars();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let grading = Grading::standard(n);
        let a = hilbert_numerator(&ideal, &grading).unwrap().canonicalize().unwrap();
        let b = hilbert_numerator(&permuted(&ideal, &perm), &grading).unwrap().canonicalize().unwrap();
        prop_assert_eq!(a.numerator(), b.numerator());
        prop_assert_eq!(a.denominator(), b.denominator());
    }
}

#[test]
fn weighted_grading() {
    // x weight 1, y weight 2, ideal (x*y): HF(d) = 1 + [d even].
    let vars = VariableSet::indexed("x", 2);
    let ideal = MonomialIdeal::minimalize(vars, vec![Monomial::from_exponents(&[1, 1])]).unwrap();
    let grading = Grading::new(1, vec![MultiDegree::from_slice(&[1]), MultiDegree::from_slice(&[2])]).unwrap();
    let series = hilbert_numerator(&ideal, &grading).unwrap();
    for d in 0..=12u32 {
        let deg = MultiDegree::from_slice(&[d]);
        let expected = 1 + u64::from(d % 2 == 0 && d > 0);
        assert_eq!(series.hf_at(&deg).unwrap(), BigInt::from(expected));
        assert_eq!(standard_monomial_count(&ideal, &deg, &grading).unwrap(), expected);
    }
    assert!(series.canonicalize().is_err());
}

#[test]
fn polynomial_ring() {
    let ideal = MonomialIdeal::zero(VariableSet::indexed("x", 8));
    let s = hilbert_numerator(&ideal, &Grading::standard(8))
        .unwrap()
        .canonicalize()
        .unwrap();
    assert_eq!(s.to_string(), "1 / (1-t)^8");
}
