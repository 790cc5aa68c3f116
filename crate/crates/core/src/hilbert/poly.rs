use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::MultiDegree;

/// Polynomial in `t_1, ..., t_rank` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    rank: usize,
    terms: BTreeMap<MultiDegree, BigInt>,
}

impl MultiPoly {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::term(MultiDegree::zero(rank), BigInt::one())
    }

    pub fn term(degree: MultiDegree, coeff: BigInt) -> Self {
        let mut p = Self::zero(degree.rank());
        p.add_term(degree, coeff);
        p
    }

    /// Univariate polynomial from ascending coefficients.
    pub fn from_coeffs(coeffs: &[BigInt]) -> Self {
        let mut p = Self::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(MultiDegree::from_slice(&[i as u32]), c.clone());
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiDegree, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, degree: &MultiDegree) -> BigInt {
        self.terms.get(degree).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, degree: MultiDegree, coeff: BigInt) {
        debug_assert_eq!(degree.rank(), self.rank);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(degree) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultiPoly) {
        for (d, c) in &other.terms {
            self.add_term(d.clone(), c.clone());
        }
    }

    /// `t^shift * self`.
    pub fn shifted(&self, shift: &MultiDegree) -> MultiPoly {
        MultiPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(d, c)| (d + shift, c.clone())).collect(),
        }
    }

    /// `self * (1 - t^d)`.
    pub fn times_one_minus(&self, d: &MultiDegree) -> MultiPoly {
        let mut out = self.clone();
        for (deg, c) in &self.terms {
            out.add_term(deg + d, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.rank);
        for (da, ca) in &self.terms {
            for (db, cb) in &other.terms {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }

    /// Total degree in the univariate case.
    pub fn univariate_degree(&self) -> Option<usize> {
        debug_assert_eq!(self.rank, 1);
        self.terms.keys().next_back().map(|d| d.components()[0] as usize)
    }

    /// Dense ascending coefficients of a univariate polynomial.
    pub fn univariate_coeffs(&self) -> Vec<BigInt> {
        assert_eq!(self.rank, 1, "not univariate");
        let len = self.univariate_degree().map_or(0, |d| d + 1);
        let mut out = alloc::vec![BigInt::zero(); len];
        for (d, c) in &self.terms {
            out[d.components()[0] as usize] = c.clone();
        }
        out
    }

    /// Sum of all coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (deg, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if deg.is_zero() {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write_power(f, deg)?;
        }
        Ok(())
    }
}

/// `t^3` for rank one, `t1^2*t2` otherwise.
pub(crate) fn write_power(f: &mut fmt::Formatter<'_>, deg: &MultiDegree) -> fmt::Result {
    let mut first = true;
    for (j, &e) in deg.components().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if deg.rank() == 1 {
            f.write_str("t")?;
        } else {
            write!(f, "t{}", j + 1)?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}
