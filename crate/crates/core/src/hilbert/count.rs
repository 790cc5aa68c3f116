use super::{HilbertError, MonomialIdeal};
use crate::algebra::{Grading, MultiDegree};

/// Number of monomials of multidegree `degree` outside `ideal`, by direct
/// enumeration. Shares no code with the series computation.
pub fn standard_monomial_count(
    ideal: &MonomialIdeal,
    degree: &MultiDegree,
    grading: &Grading,
) -> Result<u64, HilbertError> {
    if grading.nvars() != ideal.nvars() {
        return Err(HilbertError::GradingMismatch {
            grading: grading.nvars(),
            ideal: ideal.nvars(),
        });
    }
    if degree.rank() != grading.rank() {
        return Err(HilbertError::RankMismatch {
            expected: grading.rank(),
            found: degree.rank(),
        });
    }
    if let Some(i) = grading.degrees().iter().position(MultiDegree::is_zero) {
        return Err(HilbertError::ZeroDegree(i));
    }
    let mut exps = alloc::vec![0u32; ideal.nvars()];
    let mut remaining: alloc::vec::Vec<u32> = degree.components().to_vec();
    let mut count = 0u64;
    walk(ideal, grading, 0, &mut exps, &mut remaining, &mut count);
    Ok(count)
}

fn walk(
    ideal: &MonomialIdeal,
    grading: &Grading,
    var: usize,
    exps: &mut [u32],
    remaining: &mut [u32],
    count: &mut u64,
) {
    if var == exps.len() {
        if remaining.iter().all(|&r| r == 0) {
            let divisible = ideal
                .generators()
                .iter()
                .any(|g| g.exponents().iter().zip(exps.iter()).all(|(a, b)| a <= b));
            if !divisible {
                *count += 1;
            }
        }
        return;
    }
    let d = grading.var_degree(var).components();
    let mut e = 0u32;
    loop {
        exps[var] = e;
        walk(ideal, grading, var + 1, exps, remaining, count);
        if remaining.iter().zip(d).any(|(&r, &c)| r < c) {
            break;
        }
        for (r, &c) in remaining.iter_mut().zip(d) {
            *r -= c;
        }
        e += 1;
    }
    for (r, &c) in remaining.iter_mut().zip(d) {
        *r += c * e;
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Monomial, VariableSet};
    use alloc::vec;

    #[test]
    fn free_ring_and_powers() {
        let i = MonomialIdeal::zero(VariableSet::indexed("x", 3));
        let c = standard_monomial_count(&i, &MultiDegree::from_slice(&[4]), &Grading::standard(3));
        assert_eq!(c, Ok(15));
        let i = MonomialIdeal::minimalize(VariableSet::indexed("x", 1), vec![Monomial::from_exponents(&[2])]).unwrap();
        let c = standard_monomial_count(&i, &MultiDegree::from_slice(&[5]), &Grading::standard(1));
        assert_eq!(c, Ok(0));
    }

    #[test]
    fn zero_degree_is_rejected() {
        let i = MonomialIdeal::zero(VariableSet::indexed("x", 2));
        let g = Grading::new(
            2,
            vec![MultiDegree::from_slice(&[1, 0]), MultiDegree::from_slice(&[0, 0])],
        )
        .unwrap();
        assert_eq!(
            standard_monomial_count(&i, &MultiDegree::from_slice(&[1, 0]), &g),
            Err(HilbertError::ZeroDegree(1))
        );
    }
}
