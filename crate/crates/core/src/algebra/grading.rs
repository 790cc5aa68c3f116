use core::ops::Add;

use alloc::vec::Vec;
use smallvec::SmallVec;

use super::{AlgebraError, Monomial};

/// An element of `N^rank`, the target of a multigrading.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub SmallVec<[u32; 4]>);

impl MultiDegree {
    pub fn zero(rank: usize) -> Self {
        Self(SmallVec::from_elem(0, rank))
    }

    pub fn from_slice(components: &[u32]) -> Self {
        Self(SmallVec::from_slice(components))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, other: &MultiDegree, factor: u32) -> MultiDegree {
        debug_assert_eq!(self.rank(), other.rank());
        MultiDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| {
                    b.checked_mul(factor)
                        .and_then(|p| a.checked_add(p))
                        .expect("degree overflow")
                })
                .collect(),
        )
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &MultiDegree) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiDegree) -> Option<MultiDegree> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<SmallVec<_>>>()
            .map(MultiDegree)
    }
}

impl Add for &MultiDegree {
    type Output = MultiDegree;

    fn add(self, rhs: &MultiDegree) -> MultiDegree {
        self.add_scaled(rhs, 1)
    }
}

/// Assignment of a multidegree to every variable of a ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    rank: usize,
    degrees: Vec<MultiDegree>,
}

impl Grading {
    pub fn new(rank: usize, degrees: Vec<MultiDegree>) -> Result<Self, AlgebraError> {
        if let Some(bad) = degrees.iter().find(|d| d.rank() != rank) {
            return Err(AlgebraError::GradingRank {
                rank,
                found: bad.rank(),
            });
        }
        Ok(Self { rank, degrees })
    }

    /// Every variable in degree 1 of `N`.
    pub fn standard(nvars: usize) -> Self {
        Self {
            rank: 1,
            degrees: (0..nvars).map(|_| MultiDegree::from_slice(&[1])).collect(),
        }
    }

    /// The first `first` variables in degree `(1,0)`, the remaining
    /// `second` in degree `(0,1)`.
    pub fn bigraded(first: usize, second: usize) -> Self {
        let mut degrees = Vec::with_capacity(first + second);
        degrees.extend((0..first).map(|_| MultiDegree::from_slice(&[1, 0])));
        degrees.extend((0..second).map(|_| MultiDegree::from_slice(&[0, 1])));
        Self { rank: 2, degrees }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[MultiDegree] {
        &self.degrees
    }

    pub fn var_degree(&self, index: usize) -> &MultiDegree {
        &self.degrees[index]
    }

    /// True when every variable has a nonzero degree, so each graded piece
    /// is finite dimensional.
    pub fn is_positive(&self) -> bool {
        self.degrees.iter().all(|d| !d.is_zero())
    }

    pub fn degree_of(&self, m: &Monomial) -> Result<MultiDegree, AlgebraError> {
        if m.nvars() != self.nvars() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.nvars(),
                found: m.nvars(),
            });
        }
        Ok(self.degree_unchecked(m))
    }

    pub(crate) fn degree_unchecked(&self, m: &Monomial) -> MultiDegree {
        let mut acc = MultiDegree::zero(self.rank);
        for i in m.support() {
            acc = acc.add_scaled(&self.degrees[i], m.exponent(i));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigraded_degree() {
        // x_{11} y_{23} on a 3x3 board: x's are variables 0..9, y's 9..18.
        let g = Grading::bigraded(9, 9);
        let mut e = [0u32; 18];
        e[0] = 1;
        e[9 + 5] = 1;
        let d = g.degree_of(&Monomial::from_exponents(&e)).unwrap();
        assert_eq!(d.components(), &[1, 1]);
        assert!(g.degree_of(&Monomial::one(18)).unwrap().is_zero());
    }

    #[test]
    fn standard_degree() {
        let g = Grading::standard(2);
        let d = g.degree_of(&Monomial::from_exponents(&[3, 0])).unwrap();
        assert_eq!(d.components(), &[3]);
        assert!(g.degree_of(&Monomial::one(3)).is_err());
    }

    #[test]
    fn rank_checked() {
        assert!(Grading::new(2, alloc::vec![MultiDegree::from_slice(&[1])]).is_err());
    }
}
