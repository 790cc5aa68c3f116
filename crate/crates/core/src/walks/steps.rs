use alloc::vec::Vec;

use super::WalkError;
use crate::algebra::Monomial;

/// A finite set of distinct nonzero steps in `Z^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSet {
    dimension: usize,
    steps: Vec<Vec<i64>>,
}

impl StepSet {
    pub fn new(dimension: usize, steps: Vec<Vec<i64>>) -> Result<Self, WalkError> {
        if dimension == 0 {
            return Err(WalkError::ZeroDimension);
        }
        if steps.is_empty() {
            return Err(WalkError::NoSteps);
        }
        for (i, s) in steps.iter().enumerate() {
            if s.len() != dimension {
                return Err(WalkError::StepLength {
                    index: i,
                    expected: dimension,
                    found: s.len(),
                });
            }
            if s.iter().all(|&c| c == 0) {
                return Err(WalkError::ZeroStep(i));
            }
            if let Some(j) = steps[..i].iter().position(|o| o == s) {
                return Err(WalkError::DuplicateStep(i, j));
            }
        }
        Ok(Self { dimension, steps })
    }

    /// The eight knight moves, in the order `(1,2), (2,1), (-1,2), (-2,1),
    /// (1,-2), (2,-1), (-1,-2), (-2,-1)`.
    pub fn knight() -> Self {
        let steps = [[1, 2], [2, 1], [-1, 2], [-2, 1], [1, -2], [2, -1], [-1, -2], [-2, -1]];
        Self::new(2, steps.iter().map(|s| s.to_vec()).collect()).expect("valid knight moves")
    }

    /// The eight king moves.
    pub fn king() -> Self {
        let mut steps = Vec::new();
        for dx in -1..=1i64 {
            for dy in -1..=1i64 {
                if (dx, dy) != (0, 0) {
                    steps.push(alloc::vec![dx, dy]);
                }
            }
        }
        Self::new(2, steps).expect("valid king moves")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn steps(&self) -> &[Vec<i64>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Lattice point reached by the walk whose step multiplicities are the
    /// exponents of `m`.
    pub fn endpoint(&self, m: &Monomial) -> Vec<i64> {
        debug_assert_eq!(m.nvars(), self.len());
        let mut p = alloc::vec![0i64; self.dimension];
        for i in m.support() {
            let e = i64::from(m.exponent(i));
            for (c, &w) in p.iter_mut().zip(&self.steps[i]) {
                *c += e * w;
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn validation() {
        assert_eq!(StepSet::new(0, vec![]), Err(WalkError::ZeroDimension));
        assert_eq!(StepSet::new(2, vec![]), Err(WalkError::NoSteps));
        assert_eq!(StepSet::new(2, vec![vec![0, 0]]), Err(WalkError::ZeroStep(0)));
        assert_eq!(
            StepSet::new(2, vec![vec![1, 0], vec![1, 0]]),
            Err(WalkError::DuplicateStep(1, 0))
        );
        assert!(matches!(
            StepSet::new(2, vec![vec![1]]),
            Err(WalkError::StepLength { .. })
        ));
    }

    #[test]
    fn endpoints() {
        let k = StepSet::knight();
        // y1*y7: (1,2) + (-1,-2)
        let mut e = [0u32; 8];
        e[0] = 1;
        e[6] = 1;
        assert_eq!(k.endpoint(&Monomial::from_exponents(&e)), vec![0, 0]);
        assert_eq!(StepSet::king().len(), 8);
    }
}
