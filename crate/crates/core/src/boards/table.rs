use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::Zero;

/// Dense table of counts indexed by `(k, u)` for `k` in `kmin..=kmax` and
/// `u` in `0..=umax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kmin: usize,
    kmax: usize,
    umax: usize,
    cells: Vec<BigUint>,
}

impl CountTable {
    pub fn zeros(kmin: usize, kmax: usize, umax: usize) -> Self {
        assert!(kmin <= kmax, "empty k range");
        Self {
            kmin,
            kmax,
            umax,
            cells: alloc::vec![BigUint::zero(); (kmax - kmin + 1) * (umax + 1)],
        }
    }

    pub fn kmin(&self) -> usize {
        self.kmin
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn umax(&self) -> usize {
        self.umax
    }

    fn index(&self, k: usize, u: usize) -> usize {
        assert!(
            (self.kmin..=self.kmax).contains(&k) && u <= self.umax,
            "cell ({k}, {u}) out of range"
        );
        (k - self.kmin) * (self.umax + 1) + u
    }

    pub fn get(&self, k: usize, u: usize) -> &BigUint {
        &self.cells[self.index(k, u)]
    }

    pub fn set(&mut self, k: usize, u: usize, value: BigUint) {
        let i = self.index(k, u);
        self.cells[i] = value;
    }

    pub fn row(&self, k: usize) -> &[BigUint] {
        let start = self.index(k, 0);
        &self.cells[start..start + self.umax + 1]
    }

    pub fn row_sum(&self, k: usize) -> BigUint {
        self.row(k).iter().sum()
    }

    /// Same table cut down to `u <= umax`.
    pub fn truncated(&self, umax: usize) -> CountTable {
        let umax = umax.min(self.umax);
        let mut out = CountTable::zeros(self.kmin, self.kmax, umax);
        for k in self.kmin..=self.kmax {
            for u in 0..=umax {
                out.set(k, u, self.get(k, u).clone());
            }
        }
        out
    }
}

/// Rows `0..=n` of Pascal's triangle.
#[derive(Debug, Clone)]
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = Vec::with_capacity(i + 1);
            for j in 0..=i {
                if j == 0 || j == i {
                    row.push(BigUint::from(1u8));
                } else {
                    row.push(&rows[i - 1][j - 1] + &rows[i - 1][j]);
                }
            }
            rows.push(row);
        }
        Self { rows }
    }

    /// `C(n, k)`, zero for `k > n`.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.rows[n][k].clone()
    }

    pub fn get_ref(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.rows.get(n).and_then(|r| r.get(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal() {
        let b = Binomials::new(64);
        assert_eq!(b.get(64, 32), BigUint::from(1_832_624_140_942_590_534u64));
        assert_eq!(b.get(3, 5), BigUint::zero());
    }

    #[test]
    fn table_cells() {
        let mut t = CountTable::zeros(2, 3, 4);
        t.set(3, 4, BigUint::from(7u8));
        assert_eq!(t.row(3)[4], BigUint::from(7u8));
        assert_eq!(t.row_sum(2), BigUint::zero());
        assert_eq!(t.truncated(2).umax(), 2);
    }
}
