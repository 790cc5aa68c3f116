/// Fixed-width bit set, one `u64` per 64 vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Bits<const W: usize>(pub(crate) [u64; W]);

impl<const W: usize> Bits<W> {
    /// Complement of `words` within the first `n` bits.
    pub(crate) fn complement(words: &[u64], n: usize) -> Self {
        let mut a = Self::ones(n).0;
        for (x, w) in a.iter_mut().zip(words) {
            *x &= !w;
        }
        Self(a)
    }

    pub(crate) fn ones(n: usize) -> Self {
        let mut a = [0; W];
        for (i, x) in a.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *x = u64::MAX;
            } else if n > lo {
                *x = (1u64 << (n - lo)) - 1;
            }
        }
        Self(a)
    }

    #[inline(always)]
    pub(crate) fn and(self, other: Self) -> Self {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(other.0) {
            *x &= y;
        }
        Self(a)
    }

    #[inline(always)]
    pub(crate) fn count(self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
}

/// Largest vertex count the fixed-width kernels handle.
pub const MAX_VERTICES: usize = 16 * 64;

/// Calls `$f::<W>($args)` for the smallest supported width `W >= $words`.
macro_rules! with_width {
    ($words:expr, $f:ident ( $($args:expr),* )) => {
        match $words {
            0 | 1 => $f::<1>($($args),*),
            2 => $f::<2>($($args),*),
            3 | 4 => $f::<4>($($args),*),
            5..=8 => $f::<8>($($args),*),
            9..=16 => $f::<16>($($args),*),
            _ => unreachable!("width checked by the caller"),
        }
    };
}
pub(crate) use with_width;
