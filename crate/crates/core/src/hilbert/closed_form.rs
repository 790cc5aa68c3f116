use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A function of `d` that equals a polynomial from `stable_from` on and is
/// given explicitly below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertClosedForm {
    /// Ascending coefficients in `d`.
    polynomial: Vec<BigRational>,
    exceptions: BTreeMap<u64, BigInt>,
    stable_from: u64,
    dimension: usize,
}

impl HilbertClosedForm {
    /// From the numerator `P` of `P(t) / (1 - t)^dimension`.
    ///
    /// `HP(d) = sum_i p_i * C(d - i + D - 1, D - 1)`, valid for
    /// `d >= deg P - D + 1`; smaller degrees are read off the series.
    pub fn from_numerator(numerator: &[BigInt], dimension: usize) -> Self {
        let top = numerator.len().saturating_sub(1) as i64;
        let stable_from = (top - dimension as i64 + 1).max(0) as u64;

        let mut polynomial = Vec::new();
        if dimension > 0 {
            polynomial = alloc::vec![BigRational::zero(); dimension];
            let mut factorial = BigInt::one();
            for j in 1..dimension as i64 {
                factorial *= j;
            }
            for (i, p) in numerator.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                // prod_{j=1}^{D-1} (d - i + j)
                let mut basis: Vec<BigInt> = alloc::vec![BigInt::one()];
                for j in 1..dimension as i64 {
                    let shift = BigInt::from(j - i as i64);
                    let mut next = alloc::vec![BigInt::zero(); basis.len() + 1];
                    for (k, c) in basis.iter().enumerate() {
                        next[k] += c * &shift;
                        next[k + 1] += c;
                    }
                    basis = next;
                }
                for (k, c) in basis.into_iter().enumerate() {
                    polynomial[k] += BigRational::new(c * p, factorial.clone());
                }
            }
            while polynomial.last().is_some_and(Zero::is_zero) {
                polynomial.pop();
            }
        }

        let exceptions = (0..stable_from)
            .map(|d| (d, series_coefficient(numerator, dimension, d)))
            .collect();
        Self {
            polynomial,
            exceptions,
            stable_from,
            dimension,
        }
    }

    /// Ascending rational coefficients of the Hilbert polynomial.
    pub fn polynomial(&self) -> &[BigRational] {
        &self.polynomial
    }

    /// Explicit values for every `d < stable_from`.
    pub fn exceptions(&self) -> &BTreeMap<u64, BigInt> {
        &self.exceptions
    }

    pub fn stable_from(&self) -> u64 {
        self.stable_from
    }

    /// Pole order of the series at `t = 1`, the Krull dimension.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn polynomial_at(&self, d: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(d));
        self.polynomial
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn value(&self, d: u64) -> BigInt {
        match self.exceptions.get(&d) {
            Some(v) => v.clone(),
            None => {
                let v = self.polynomial_at(d as i64);
                debug_assert!(v.is_integer());
                v.to_integer()
            }
        }
    }

    /// Exceptional degrees where the value differs from the polynomial,
    /// with `value - polynomial`.
    pub fn deviations(&self) -> BTreeMap<u64, BigInt> {
        self.exceptions
            .iter()
            .filter_map(|(&d, v)| {
                let diff = BigRational::from_integer(v.clone()) - self.polynomial_at(d as i64);
                (!diff.is_zero()).then(|| (d, diff.to_integer()))
            })
            .collect()
    }

    /// Whether every coefficient of the polynomial is an integer.
    pub fn has_integer_coefficients(&self) -> bool {
        self.polynomial.iter().all(|c| c.is_integer())
    }

    pub fn display_polynomial(&self) -> PolynomialDisplay<'_> {
        PolynomialDisplay(&self.polynomial)
    }
}

/// Coefficient of `t^d` in `P(t) / (1 - t)^D`.
fn series_coefficient(numerator: &[BigInt], dimension: usize, d: u64) -> BigInt {
    let mut total = BigInt::zero();
    for (i, p) in numerator.iter().enumerate() {
        let i = i as u64;
        if i > d {
            break;
        }
        total += p * free_count(d - i, dimension);
    }
    total
}

/// Monomials of degree `a` in `n` variables.
fn free_count(a: u64, n: usize) -> BigInt {
    if n == 0 {
        return if a == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let mut r = BigInt::one();
    for i in 0..(n as u64 - 1) {
        r = r * (a + i + 1) / (i + 1);
    }
    r
}

/// Renders like `7d^2 + 4d + 1`, highest degree first.
pub struct PolynomialDisplay<'a>(&'a [BigRational]);

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let coeff = if abs.is_integer() {
                alloc::format!("{}", abs.to_integer())
            } else {
                alloc::format!("({abs})")
            };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !abs.is_one() {
                        f.write_str(&coeff)?;
                    }
                    f.write_str("d")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn one_over_one_minus_t() {
        let c = HilbertClosedForm::from_numerator(&ints(&[1]), 1);
        assert_eq!(c.stable_from(), 0);
        assert!(c.exceptions().is_empty());
        assert_eq!(format!("{}", c.display_polynomial()), "1");
        assert_eq!(c.value(17), BigInt::one());
    }

    #[test]
    fn finite_quotient() {
        // 1 + 2t + t^2 over (1-t)^0
        let c = HilbertClosedForm::from_numerator(&ints(&[1, 2, 1]), 0);
        assert_eq!(c.stable_from(), 3);
        assert_eq!(c.value(1), BigInt::from(2));
        assert_eq!(c.value(5), BigInt::zero());
        assert_eq!(format!("{}", c.display_polynomial()), "0");
    }

    #[test]
    fn rational_coefficients() {
        // 1/(1-t)^3: C(d+2, 2) = d^2/2 + 3d/2 + 1
        let c = HilbertClosedForm::from_numerator(&ints(&[1]), 3);
        assert_eq!(format!("{}", c.display_polynomial()), "(1/2)d^2 + (3/2)d + 1");
        assert!(!c.has_integer_coefficients());
        assert_eq!(c.value(4), BigInt::from(15));
    }

    #[test]
    fn negative_display() {
        let c = HilbertClosedForm::from_numerator(&ints(&[-20, 48]), 2);
        assert_eq!(format!("{}", c.display_polynomial()), "28d - 20");
    }
}
