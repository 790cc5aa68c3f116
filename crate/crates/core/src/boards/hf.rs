use alloc::vec::Vec;
use num_bigint::BigUint;
use num_traits::Zero;

use super::bits::{with_width, Bits};
use super::budget::CHUNK;
use super::profile::check_width;
use super::{Binomials, BoardError, CountTable, FreeProfile, IncompatibilityGraph, WorkBudget};

/// For each target-set size `u <= umax`, how many `u`-sets of targets are
/// compatible with exactly `c` placements, for every `c`.
#[derive(Debug, Clone)]
pub struct TargetHistogram {
    placements: usize,
    counts: Vec<Vec<BigUint>>,
}

impl TargetHistogram {
    /// `HF(k, u) = sum_c hist[u][c] C(c, k)`.
    pub fn hf(&self, k: usize, u: usize, binom: &Binomials) -> BigUint {
        self.counts[u]
            .iter()
            .enumerate()
            .filter(|(c, n)| *c >= k && !n.is_zero())
            .map(|(c, n)| n * binom.get(c, k))
            .sum()
    }

    pub fn umax(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn placements(&self) -> usize {
        self.placements
    }
}

/// Enumerates target sets `B` with `|B| <= umax`, tracking the placements
/// compatible with all of `B`. Once none are left, the remaining supersets
/// are counted by a binomial instead of visited.
pub fn target_histogram(
    graph: &IncompatibilityGraph,
    umax: usize,
    budget: &WorkBudget,
) -> Result<TargetHistogram, BoardError> {
    check_width(graph)?;
    let umax = umax.min(graph.targets());
    let binom = Binomials::new(graph.targets());
    let mut raw = alloc::vec![alloc::vec![0u64; graph.placements() + 1]; umax + 1];
    let mut dead = alloc::vec![BigUint::zero(); umax + 1];
    let ok = with_width!(
        graph.col_words(),
        histogram(graph, umax, &binom, &mut raw, &mut dead, budget)
    );
    if !ok {
        return Err(BoardError::Budget {
            limit: budget.limit().unwrap_or(u64::MAX),
        });
    }
    let counts = raw
        .into_iter()
        .zip(dead)
        .map(|(row, zero_extra)| {
            let mut row: Vec<BigUint> = row.into_iter().map(BigUint::from).collect();
            row[0] += zero_extra;
            row
        })
        .collect();
    Ok(TargetHistogram {
        placements: graph.placements(),
        counts,
    })
}

fn histogram<const W: usize>(
    graph: &IncompatibilityGraph,
    umax: usize,
    binom: &Binomials,
    raw: &mut [Vec<u64>],
    dead: &mut [BigUint],
    budget: &WorkBudget,
) -> bool {
    struct Walk<'a, const W: usize> {
        allow: Vec<Bits<W>>,
        umax: usize,
        binom: &'a Binomials,
        raw: &'a mut [Vec<u64>],
        dead: &'a mut [BigUint],
        budget: &'a WorkBudget,
        pending: u64,
        aborted: bool,
    }
    impl<const W: usize> Walk<'_, W> {
        fn go(&mut self, start: usize, size: usize, allowed: Bits<W>) {
            let t = self.allow.len();
            for i in start..t {
                let a = allowed.and(self.allow[i]);
                let c = a.count() as usize;
                self.raw[size + 1][c] += 1;
                self.pending += 1;
                if self.pending >= CHUNK {
                    if !self.budget.charge(self.pending) {
                        self.aborted = true;
                    }
                    self.pending = 0;
                }
                if self.aborted {
                    return;
                }
                if size + 1 == self.umax {
                    continue;
                }
                if c == 0 {
                    // Every extension by later targets stays incompatible.
                    let rest = t - i - 1;
                    for extra in 1..=(self.umax - size - 1).min(rest) {
                        self.dead[size + 1 + extra] += self.binom.get(rest, extra);
                    }
                    continue;
                }
                self.go(i + 1, size + 1, a);
            }
        }
    }

    let p = graph.placements();
    let mut walk = Walk::<W> {
        allow: (0..graph.targets())
            .map(|t| Bits::complement(graph.col(t), p))
            .collect(),
        umax,
        binom,
        raw,
        dead,
        budget,
        pending: 1,
        aborted: false,
    };
    walk.raw[0][p] += 1;
    if umax > 0 {
        walk.go(0, 0, Bits::ones(p));
    }
    !walk.aborted && budget.charge(walk.pending)
}

/// `HF(k, u)` for one cell, from the target side.
pub fn hf_bigraded(
    graph: &IncompatibilityGraph,
    k: usize,
    u: usize,
    budget: &WorkBudget,
) -> Result<BigUint, BoardError> {
    if u > graph.targets() {
        return Ok(BigUint::zero());
    }
    let hist = target_histogram(graph, u, budget)?;
    Ok(hist.hf(k, u, &Binomials::new(graph.placements())))
}

/// `HF(k, u)` over `k in kmin..=kmax`, `u <= umax`, from the target side.
pub fn hf_table(
    graph: &IncompatibilityGraph,
    kmin: usize,
    kmax: usize,
    umax: usize,
    budget: &WorkBudget,
) -> Result<CountTable, BoardError> {
    let hist = target_histogram(graph, umax, budget)?;
    let binom = Binomials::new(graph.placements());
    let mut table = CountTable::zeros(kmin, kmax, umax);
    for k in kmin..=kmax {
        for u in 0..=hist.umax() {
            table.set(k, u, hist.hf(k, u, &binom));
        }
    }
    Ok(table)
}

/// `HF(k, u) = sum_s c_{k,s} C(s, u)` for `u <= umax`.
pub fn hf_from_profile(profile: &FreeProfile, umax: usize, binom: &Binomials) -> Vec<BigUint> {
    (0..=umax)
        .map(|u| {
            profile
                .iter()
                .filter(|&(s, _)| s >= u)
                .map(|(s, c)| BigUint::from(c) * binom.get(s, u))
                .sum()
        })
        .collect()
}
