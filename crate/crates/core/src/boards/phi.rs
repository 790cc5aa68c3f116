use alloc::vec::Vec;
use core::ops::RangeInclusive;
use num_bigint::BigUint;
use num_traits::Zero;

use super::hf::{hf_from_profile, target_histogram};
use super::route::{hf_table_from_series, hilbert_route};
use super::{
    free_profile_with_budget, Binomials, BoardError, CountTable, FreeProfile, IncompatibilityGraph, ProfileOptions,
    WorkBudget,
};
use crate::hilbert::HilbertOptions;

/// Where the `HF(k, u)` values fed to the inversion come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HfSource {
    /// Targets when that enumeration is small enough, otherwise Profile.
    #[default]
    Auto,
    /// Enumeration over sets of targets.
    Targets,
    /// `sum_s c_{k,s} C(s, u)` from the free profiles.
    Profile,
    /// The bigraded Hilbert series of the board ideal.
    Hilbert,
}

impl HfSource {
    pub fn name(self) -> &'static str {
        match self {
            HfSource::Auto => "auto",
            HfSource::Targets => "targets",
            HfSource::Profile => "profile",
            HfSource::Hilbert => "hilbert",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiOptions {
    pub profile: ProfileOptions,
    pub hf_source: HfSource,
    pub hilbert: HilbertOptions,
    /// Largest target enumeration [`HfSource::Auto`] accepts.
    pub auto_target_nodes: u64,
}

impl Default for PhiOptions {
    fn default() -> Self {
        Self {
            profile: ProfileOptions::default(),
            hf_source: HfSource::Auto,
            hilbert: HilbertOptions::default(),
            auto_target_nodes: 1 << 24,
        }
    }
}

/// `Phi(k, u)` and `HF(k, u)` for a range of `k` and all `u <= T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiTable {
    pub phi: CountTable,
    pub hf: CountTable,
    /// `mu(k)` per row, `None` when no placement exists.
    pub mu: Vec<Option<usize>>,
    /// Source the inversion was fed from.
    pub hf_source: HfSource,
    /// Rows holding enumerated values.
    pub rows_done: usize,
    /// Rows whose inversion was compared with the enumeration.
    pub rows_checked: usize,
    pub budget_exhausted: bool,
}

impl PhiTable {
    pub fn mu(&self, k: usize) -> Option<usize> {
        self.mu[k - self.phi.kmin()]
    }

    pub fn is_complete(&self) -> bool {
        !self.budget_exhausted && self.rows_checked == self.mu.len()
    }
}

/// Recovers `Phi(k, .)` from `HF(k, .)` by
/// `Phi(k, u) = HF(k, u) - sum_{v > u} C(v, u) Phi(k, v)`, from the top
/// nonzero `u` down.
pub fn invert_hf_row(hf: &[BigUint], binom: &Binomials) -> Result<Vec<BigUint>, BoardError> {
    let mut phi = alloc::vec![BigUint::zero(); hf.len()];
    let Some(top) = hf.iter().rposition(|v| !v.is_zero()) else {
        return Ok(phi);
    };
    for u in (0..=top).rev() {
        let mut correction = BigUint::zero();
        for (v, count) in phi.iter().enumerate().take(top + 1).skip(u + 1) {
            if !count.is_zero() {
                correction += binom.get(v, u) * count;
            }
        }
        if correction > hf[u] {
            return Err(BoardError::Unsound(alloc::format!(
                "inversion gives a negative count at u = {u}"
            )));
        }
        phi[u] = &hf[u] - correction;
    }
    Ok(phi)
}

/// [`phi_table_with`] using the single-threaded profile enumerator.
pub fn phi_table(
    graph: &IncompatibilityGraph,
    ks: RangeInclusive<usize>,
    options: &PhiOptions,
) -> Result<PhiTable, BoardError> {
    let budget = WorkBudget::new(options.profile.node_budget);
    phi_table_with(graph, ks, options, &budget, |k, opts| {
        free_profile_with_budget(graph, k, opts, &budget)
    })
}

/// Builds the table two ways and insists they agree: `Phi(k, u)` read
/// directly off the free profiles, and the inversion of `HF(k, u)` taken
/// from `options.hf_source`. Each row must also sum to `C(P, k)`.
///
/// Budget exhaustion is not an error: the rows finished so far are kept
/// and the table is flagged.
pub fn phi_table_with<F>(
    graph: &IncompatibilityGraph,
    ks: RangeInclusive<usize>,
    options: &PhiOptions,
    budget: &WorkBudget,
    mut profile: F,
) -> Result<PhiTable, BoardError>
where
    F: FnMut(usize, &ProfileOptions) -> Result<FreeProfile, BoardError>,
{
    let (kmin, kmax) = (*ks.start(), *ks.end());
    if kmin > kmax {
        return Err(BoardError::EmptyRange);
    }
    let t = graph.targets();
    let p = graph.placements();
    let binom = Binomials::new(p.max(t));
    let profile_options = ProfileOptions {
        min_free: 0,
        ..options.profile.clone()
    };

    let mut table = PhiTable {
        phi: CountTable::zeros(kmin, kmax, t),
        hf: CountTable::zeros(kmin, kmax, t),
        mu: alloc::vec![None; kmax - kmin + 1],
        hf_source: options.hf_source,
        rows_done: 0,
        rows_checked: 0,
        budget_exhausted: false,
    };
    let mut profiles = Vec::new();
    for k in kmin..=kmax {
        match profile(k, &profile_options) {
            Ok(prof) => {
                for (s, c) in prof.iter() {
                    table.phi.set(k, s, BigUint::from(c));
                }
                table.mu[k - kmin] = prof.max_free();
                profiles.push(prof);
                table.rows_done += 1;
            }
            Err(BoardError::Budget { .. }) => {
                table.budget_exhausted = true;
                break;
            }
            Err(e) => return Err(e),
        }
    }
    if profiles.is_empty() {
        return Ok(table);
    }

    // Cells above the largest mu are zero; one extra column checks that.
    let top = profiles.iter().filter_map(FreeProfile::max_free).max().unwrap_or(0);
    let depth = (top + 1).min(t);
    let source = match options.hf_source {
        HfSource::Auto => {
            let nodes: BigUint = (0..=depth).map(|u| binom.get(t, u)).sum();
            if nodes <= BigUint::from(options.auto_target_nodes) {
                HfSource::Targets
            } else {
                HfSource::Profile
            }
        }
        other => other,
    };
    table.hf_source = source;
    let k_done = kmin + profiles.len() - 1;
    let hf_rows: Vec<Vec<BigUint>> = match source {
        HfSource::Targets => match target_histogram(graph, depth, budget) {
            Ok(hist) => (kmin..=k_done)
                .map(|k| (0..=depth).map(|u| hist.hf(k, u, &binom)).collect())
                .collect(),
            Err(BoardError::Budget { .. }) => {
                table.budget_exhausted = true;
                return Ok(table);
            }
            Err(e) => return Err(e),
        },
        HfSource::Hilbert => {
            let series = match hilbert_route(graph, &options.hilbert) {
                Ok(s) => s,
                Err(BoardError::Hilbert(crate::hilbert::HilbertError::Budget(_))) => {
                    table.budget_exhausted = true;
                    return Ok(table);
                }
                Err(e) => return Err(e),
            };
            let hf = hf_table_from_series(&series, kmin, k_done, depth)?;
            (kmin..=k_done).map(|k| hf.row(k).to_vec()).collect()
        }
        HfSource::Profile | HfSource::Auto => profiles
            .iter()
            .map(|prof| hf_from_profile(prof, depth, &binom))
            .collect(),
    };

    for (prof, hf) in profiles.iter().zip(&hf_rows) {
        let k = prof.k();
        for (u, v) in hf.iter().enumerate() {
            table.hf.set(k, u, v.clone());
        }
        let inverted = invert_hf_row(hf, &binom)?;
        for u in 0..=t {
            let direct = table.phi.get(k, u);
            let via_hf = inverted.get(u).cloned().unwrap_or_default();
            if *direct != via_hf {
                return Err(BoardError::Mismatch {
                    k,
                    u,
                    route: source.name(),
                    direct: direct.clone(),
                    inverted: via_hf,
                });
            }
        }
        let sum = table.phi.row_sum(k);
        let expected = binom.get(p, k);
        if sum != expected {
            return Err(BoardError::Unsound(alloc::format!(
                "row k = {k} sums to {sum}, expected C({p}, {k}) = {expected}"
            )));
        }
        table.rows_checked += 1;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{attack_graph, BoardSpec, Piece};

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn inversion_small() {
        let b = Binomials::new(8);
        // Phi = {1: 1, 3: 8} gives HF(u) = 25 at u = 1.
        let hf = [n(9), n(25), n(24), n(8), n(0)];
        assert_eq!(invert_hf_row(&hf, &b).unwrap(), [n(0), n(1), n(0), n(8), n(0)]);
        assert!(invert_hf_row(&[n(0), n(1), n(1)], &b).is_err());
    }

    #[test]
    fn queen_three_all_sources() {
        let g = attack_graph(&BoardSpec::new(3, Piece::Queen)).unwrap();
        for source in [HfSource::Auto, HfSource::Targets, HfSource::Profile, HfSource::Hilbert] {
            let opts = PhiOptions {
                hf_source: source,
                ..PhiOptions::default()
            };
            let t = phi_table(&g, 0..=9, &opts).unwrap();
            assert!(t.is_complete());
            assert_eq!(t.phi.get(0, 9), &n(1));
            assert_eq!(t.phi.get(1, 3), &n(8));
            assert_eq!(t.phi.get(1, 1), &n(1));
            assert_eq!(t.mu(1), Some(3));
            assert_eq!(t.hf.get(1, 1), &n(25));
            assert_ne!(t.hf_source, HfSource::Auto);
        }
    }

    #[test]
    fn budget_keeps_finished_rows() {
        let g = attack_graph(&BoardSpec::new(5, Piece::Queen)).unwrap();
        let mut opts = PhiOptions::default();
        opts.profile.node_budget = Some(2000);
        let t = phi_table(&g, 0..=6, &opts).unwrap();
        assert!(t.budget_exhausted);
        assert!(t.rows_done >= 2 && t.rows_done < 7);
        assert!(!t.is_complete());
    }
}
