use core::fmt;

use alloc::format;
use alloc::vec::Vec;
use smallvec::SmallVec;

use super::AlgebraError;

pub(crate) type Exponents = SmallVec<[u32; 16]>;

/// A monomial, stored as its exponent vector over an ambient variable set.
///
/// Exponents are machine-width; an operation that would overflow one panics
/// with a diagnostic instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Self {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree under the standard grading.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    /// Indices of variables with a nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    /// `Some(i)` when the monomial is exactly the variable `x_i`.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub(crate) fn check_len(&self, other: &Monomial) -> Result<(), AlgebraError> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(AlgebraError::LengthMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            })
        }
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_len(other)?;
        Ok(self.mul(other))
    }

    /// Product. Panics on length mismatch or exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial length mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                a.checked_add(b)
                    .unwrap_or_else(|| panic!("exponent overflow multiplying {self:?} by {other:?}"))
            })
            .collect();
        Monomial { exps }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, failing when `self` does not divide `other`.
    pub fn divide_into(&self, other: &Monomial) -> Result<Monomial, AlgebraError> {
        self.check_len(other)?;
        if !self.divides(other) {
            return Err(AlgebraError::NotDivisible {
                divisor: format!("{self:?}"),
                dividend: format!("{other:?}"),
            });
        }
        Ok(self.quotient_unchecked(other))
    }

    /// `self / divisor`.
    pub fn divide(&self, divisor: &Monomial) -> Result<Monomial, AlgebraError> {
        divisor.divide_into(self)
    }

    pub(crate) fn quotient_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| b - a).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial length mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars(), "monomial length mismatch");
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Monomial `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Keeps the variables in `range`.
    pub fn restrict(&self, range: core::ops::Range<usize>) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(&self.exps[range]),
        }
    }

    /// Prepends `extra` variables with the given exponents.
    pub fn extend_front(&self, front: &[u32]) -> Monomial {
        let mut exps: Exponents = SmallVec::with_capacity(front.len() + self.exps.len());
        exps.extend_from_slice(front);
        exps.extend_from_slice(&self.exps);
        Monomial { exps }
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.exps.into_vec()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "v{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
