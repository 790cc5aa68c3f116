use core::fmt;

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::write_power;
use super::{HilbertClosedForm, HilbertError, MultiPoly};
use crate::algebra::{Grading, MultiDegree};

/// `numerator / prod_{d in denominator} (1 - t^d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    grading: Grading,
    numerator: MultiPoly,
    denominator: Vec<MultiDegree>,
}

impl HilbertSeries {
    pub fn new(grading: Grading, numerator: MultiPoly, mut denominator: Vec<MultiDegree>) -> Self {
        denominator.sort();
        Self {
            grading,
            numerator,
            denominator,
        }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn rank(&self) -> usize {
        self.grading.rank()
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &[MultiDegree] {
        &self.denominator
    }

    /// Number of `(1 - t)` factors when the series is univariate and every
    /// factor has degree one.
    pub fn unit_denominator_exponent(&self) -> Option<usize> {
        (self.rank() == 1 && self.denominator.iter().all(|d| d.components() == [1])).then_some(self.denominator.len())
    }

    /// Power series coefficients of every degree in the box `[0, bound]`.
    pub fn expand(&self, bound: &MultiDegree) -> Result<DenseSeries, HilbertError> {
        if bound.rank() != self.rank() {
            return Err(HilbertError::RankMismatch {
                expected: self.rank(),
                found: bound.rank(),
            });
        }
        let mut dense = DenseSeries::zeros(bound.clone());
        for (deg, c) in self.numerator.terms() {
            if deg.le(bound) {
                let idx = dense.index(deg.components());
                dense.data[idx] = c.clone();
            }
        }
        // Division by (1 - t^d) is a running sum along d, walked in
        // increasing order so earlier entries are already updated.
        for d in &self.denominator {
            for idx in 0..dense.data.len() {
                let here = dense.degree_at(idx);
                if let Some(prev) = MultiDegree::from_slice(&here).checked_sub(d) {
                    let pidx = dense.index(prev.components());
                    let add = dense.data[pidx].clone();
                    dense.data[idx] += add;
                }
            }
        }
        Ok(dense)
    }

    /// Value of the Hilbert function at `degree`.
    pub fn hf_at(&self, degree: &MultiDegree) -> Result<BigInt, HilbertError> {
        let dense = self.expand(degree)?;
        Ok(dense.get(degree.components()))
    }

    /// Univariate form `P(t) / (1 - t)^D` with `P(1) != 0` (unless the
    /// quotient is the zero ring, where `P = 0` and `D = 0`).
    pub fn canonicalize(&self) -> Result<HilbertSeries, HilbertError> {
        if self.rank() != 1 {
            return Err(HilbertError::NotUnivariate(self.rank()));
        }
        if let Some(d) = self.denominator.iter().find(|d| d.components() != [1]) {
            return Err(HilbertError::NonUnitDenominator(d.components()[0]));
        }
        let numerator = &self.numerator;
        let mut exponent = self.denominator.len();
        if numerator.is_zero() {
            exponent = 0;
        }
        let mut coeffs = numerator.univariate_coeffs();
        while exponent > 0 && coeffs.iter().sum::<BigInt>().is_zero() {
            // P = (1 - t) Q  =>  Q is the running sum of P's coefficients.
            let mut acc = BigInt::zero();
            for c in coeffs.iter_mut() {
                acc += &*c;
                *c = acc.clone();
            }
            debug_assert!(coeffs.last().is_some_and(Zero::is_zero));
            coeffs.pop();
            exponent -= 1;
        }
        Ok(HilbertSeries::new(
            self.grading.clone(),
            MultiPoly::from_coeffs(&coeffs),
            (0..exponent).map(|_| MultiDegree::from_slice(&[1])).collect(),
        ))
    }

    /// Hilbert polynomial with the finitely many exceptional values below
    /// the degree where it becomes exact.
    pub fn closed_form(&self) -> Result<HilbertClosedForm, HilbertError> {
        let canonical = self.canonicalize()?;
        let dim = canonical.denominator.len();
        Ok(HilbertClosedForm::from_numerator(
            &canonical.numerator.univariate_coeffs(),
            dim,
        ))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        if self.numerator.terms().count() > 1 {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        f.write_str(" / ")?;
        if let Some(d) = self.unit_denominator_exponent() {
            return if d == 1 {
                f.write_str("(1-t)")
            } else {
                write!(f, "(1-t)^{d}")
            };
        }
        // Group equal factors.
        let mut i = 0;
        let mut first = true;
        while i < self.denominator.len() {
            let mut j = i;
            while j < self.denominator.len() && self.denominator[j] == self.denominator[i] {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str("(1-")?;
            write_power(f, &self.denominator[i])?;
            f.write_str(")")?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// Series coefficients on a box `[0, bound]`, row-major with the last
/// component varying fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSeries {
    bound: MultiDegree,
    data: Vec<BigInt>,
}

impl DenseSeries {
    fn zeros(bound: MultiDegree) -> Self {
        let len = bound.components().iter().map(|&b| b as usize + 1).product();
        Self {
            bound,
            data: alloc::vec![BigInt::zero(); len],
        }
    }

    pub fn bound(&self) -> &MultiDegree {
        &self.bound
    }

    fn index(&self, degree: &[u32]) -> usize {
        let mut idx = 0usize;
        for (&c, &b) in degree.iter().zip(self.bound.components()) {
            idx = idx * (b as usize + 1) + c as usize;
        }
        idx
    }

    fn degree_at(&self, mut idx: usize) -> smallvec::SmallVec<[u32; 4]> {
        let mut out = smallvec::SmallVec::from_elem(0, self.bound.rank());
        for (slot, &b) in out.iter_mut().zip(self.bound.components()).rev() {
            let w = b as usize + 1;
            *slot = (idx % w) as u32;
            idx /= w;
        }
        out
    }

    /// Coefficient at `degree`; zero outside the box.
    pub fn get(&self, degree: &[u32]) -> BigInt {
        if degree.len() != self.bound.rank() || degree.iter().zip(self.bound.components()).any(|(d, b)| d > b) {
            return BigInt::zero();
        }
        self.data[self.index(degree)].clone()
    }

    /// Univariate coefficients `0..=bound`.
    pub fn univariate(&self) -> &[BigInt] {
        assert_eq!(self.bound.rank(), 1);
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;
    use num_traits::One;

    fn deg(c: &[u32]) -> MultiDegree {
        MultiDegree::from_slice(c)
    }

    fn binomial(n: u64, k: u64) -> BigInt {
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * (n - i) / (i + 1);
        }
        r
    }

    #[test]
    fn free_ring_counts() {
        for n in 1..6usize {
            let hs = HilbertSeries::new(Grading::standard(n), MultiPoly::one(1), vec![deg(&[1]); n]);
            let dense = hs.expand(&deg(&[9])).unwrap();
            for a in 0..=9u64 {
                assert_eq!(dense.univariate()[a as usize], binomial(a + n as u64 - 1, a));
            }
            assert_eq!(hs.hf_at(&deg(&[0])).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn canonical_cancellation() {
        let num = MultiPoly::one(1).times_one_minus(&deg(&[1]));
        let hs = HilbertSeries::new(Grading::standard(2), num, vec![deg(&[1]); 2]);
        let c = hs.canonicalize().unwrap();
        assert_eq!(c.numerator(), &MultiPoly::one(1));
        assert_eq!(c.unit_denominator_exponent(), Some(1));
        assert_eq!(format!("{c}"), "1 / (1-t)");
        // Already canonical.
        let again = c.canonicalize().unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn non_unit_denominators_are_rejected() {
        let hs = HilbertSeries::new(
            Grading::new(1, vec![deg(&[2])]).unwrap(),
            MultiPoly::one(1),
            vec![deg(&[2])],
        );
        assert_eq!(hs.canonicalize(), Err(HilbertError::NonUnitDenominator(2)));
        assert_eq!(hs.hf_at(&deg(&[3])).unwrap(), BigInt::zero());
        assert_eq!(hs.hf_at(&deg(&[4])).unwrap(), BigInt::one());
    }

    #[test]
    fn bigraded_rendering_and_values() {
        let num = MultiPoly::one(2).times_one_minus(&deg(&[1, 1]));
        let hs = HilbertSeries::new(Grading::bigraded(1, 1), num, vec![deg(&[1, 0]), deg(&[0, 1])]);
        assert_eq!(format!("{hs}"), "(1 - t1*t2) / (1-t2)*(1-t1)");
        let dense = hs.expand(&deg(&[4, 4])).unwrap();
        for a in 0..=4u32 {
            for b in 0..=4u32 {
                let expect = if a == 0 || b == 0 { 1 } else { 0 };
                assert_eq!(dense.get(&[a, b]), BigInt::from(expect));
            }
        }
        assert!(hs.canonicalize().is_err());
    }
}
