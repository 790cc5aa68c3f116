use alloc::vec::Vec;

use super::bits::{with_width, Bits, MAX_VERTICES};
use super::budget::CHUNK;
use super::symmetry::{board_automorphisms, orbits};
use super::{BoardError, IncompatibilityGraph, WorkBudget};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileOptions {
    /// Enumerate one representative per orbit of the board symmetries.
    pub symmetry: bool,
    /// Placements leaving fewer free targets are pruned and not counted.
    pub min_free: usize,
    pub node_budget: Option<u64>,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        Self {
            symmetry: true,
            min_free: 0,
            node_budget: None,
        }
    }
}

/// `c_{k,s}`: the number of `k`-subsets of placements leaving exactly `s`
/// targets free, for `s >= min_free`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeProfile {
    k: usize,
    min_free: usize,
    counts: Vec<u64>,
}

impl FreeProfile {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn min_free(&self) -> usize {
        self.min_free
    }

    pub fn targets(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, s: usize) -> u64 {
        self.counts.get(s).copied().unwrap_or(0)
    }

    /// Largest `s` with a nonzero count.
    pub fn max_free(&self) -> Option<usize> {
        self.counts.iter().rposition(|&c| c > 0)
    }

    /// Nonzero entries by increasing `s`.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|e| *e.1 > 0)
            .map(|(s, &c)| (s, c))
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| u128::from(c)).sum()
    }
}

#[derive(Debug, Clone)]
struct Layer {
    rep: usize,
    orbit_size: usize,
    /// Placements allowed beside `rep`, by increasing index.
    candidates: Vec<usize>,
    /// 1 where the candidate lies in `rep`'s orbit.
    in_orbit: Vec<u8>,
}

/// Independent unit of profile work: all sets whose smallest orbit is the
/// layer's, containing its representative and, when `k >= 2`, the given
/// candidate as second-smallest element.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProfileTask {
    layer: usize,
    second: Option<usize>,
}

/// Raw counts of one task, indexed by (members of the layer orbit, free count).
#[derive(Debug, Clone)]
pub struct TaskCounts {
    layer: usize,
    counts: Vec<u64>,
}

/// Enumeration plan shared by every task of one `free_profile` run.
///
/// Sets are split by their smallest orbit `O` (orbits ranked largest first)
/// and enumerated only when they contain the orbit representative. A class
/// with `j` members in `O` is then seen `j` times per `|O|` sets, so its
/// true count is `count * |O| / j`, an exact division.
#[derive(Debug, Clone)]
pub struct ProfilePlan<'g> {
    graph: &'g IncompatibilityGraph,
    k: usize,
    min_free: usize,
    layers: Vec<Layer>,
}

impl<'g> ProfilePlan<'g> {
    pub fn new(graph: &'g IncompatibilityGraph, k: usize, options: &ProfileOptions) -> Result<Self, BoardError> {
        check_width(graph)?;
        let p = graph.placements();
        let perms = if options.symmetry {
            board_automorphisms(graph)
        } else {
            alloc::vec![(0..p).collect()]
        };
        let orbit_list = orbits(p, &perms);
        let mut rank = alloc::vec![0; p];
        for (i, o) in orbit_list.iter().enumerate() {
            for &s in o {
                rank[s] = i;
            }
        }
        let layers = orbit_list
            .iter()
            .enumerate()
            .map(|(l, o)| {
                let rep = o[0];
                let candidates: Vec<usize> = (0..p).filter(|&s| s != rep && rank[s] >= l).collect();
                let in_orbit = candidates.iter().map(|&s| u8::from(rank[s] == l)).collect();
                Layer {
                    rep,
                    orbit_size: o.len(),
                    candidates,
                    in_orbit,
                }
            })
            .collect();
        Ok(Self {
            graph,
            k,
            min_free: options.min_free,
            layers,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of symmetry classes the placements fall into.
    pub fn orbit_count(&self) -> usize {
        self.layers.len()
    }

    pub fn tasks(&self) -> Vec<ProfileTask> {
        let mut out = Vec::new();
        if self.k == 0 || self.k > self.graph.placements() {
            return out;
        }
        for (l, layer) in self.layers.iter().enumerate() {
            if self.k == 1 {
                out.push(ProfileTask { layer: l, second: None });
                continue;
            }
            let Some(last) = (layer.candidates.len() + 2).checked_sub(self.k) else {
                continue;
            };
            out.extend((0..last).map(|i| ProfileTask {
                layer: l,
                second: Some(i),
            }));
        }
        out
    }

    /// Runs one task; `Err` once the shared budget is exhausted.
    pub fn run(&self, task: ProfileTask, budget: &WorkBudget) -> Result<TaskCounts, BoardError> {
        let stride = self.graph.targets() + 1;
        let mut counts = alloc::vec![0u64; (self.k + 1) * stride];
        let ok = with_width!(self.graph.row_words(), run_task(self, task, &mut counts, budget));
        if !ok {
            return Err(BoardError::Budget {
                limit: budget.limit().unwrap_or(u64::MAX),
            });
        }
        Ok(TaskCounts {
            layer: task.layer,
            counts,
        })
    }

    /// Combines the counts of every task of this plan.
    pub fn finish<I>(&self, parts: I) -> Result<FreeProfile, BoardError>
    where
        I: IntoIterator<Item = TaskCounts>,
    {
        let t = self.graph.targets();
        let stride = t + 1;
        let mut counts = alloc::vec![0u64; stride];
        if self.k == 0 {
            if t >= self.min_free {
                counts[t] = 1;
            }
            return Ok(self.profile(counts));
        }
        let mut per_layer = alloc::vec![alloc::vec![0u64; (self.k + 1) * stride]; self.layers.len()];
        for part in parts {
            for (acc, c) in per_layer[part.layer].iter_mut().zip(&part.counts) {
                *acc += c;
            }
        }
        for (layer, raw) in self.layers.iter().zip(&per_layer) {
            for j in 1..=self.k {
                for s in 0..stride {
                    let c = u128::from(raw[j * stride + s]);
                    if c == 0 {
                        continue;
                    }
                    let scaled = c * layer.orbit_size as u128;
                    if !scaled.is_multiple_of(j as u128) {
                        return Err(BoardError::Unsound(alloc::format!(
                            "orbit weight {scaled}/{j} is not integral"
                        )));
                    }
                    counts[s] += u64::try_from(scaled / j as u128).expect("count exceeds u64");
                }
            }
        }
        Ok(self.profile(counts))
    }

    fn profile(&self, counts: Vec<u64>) -> FreeProfile {
        FreeProfile {
            k: self.k,
            min_free: self.min_free,
            counts,
        }
    }
}

pub(crate) fn check_width(graph: &IncompatibilityGraph) -> Result<(), BoardError> {
    let largest = graph.placements().max(graph.targets());
    if largest > MAX_VERTICES {
        return Err(BoardError::TooLarge {
            vertices: largest,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Free-target mask left by each placement.
fn keep_masks<const W: usize>(graph: &IncompatibilityGraph) -> Vec<Bits<W>> {
    (0..graph.placements())
        .map(|p| Bits::complement(graph.row(p), graph.targets()))
        .collect()
}

struct Dfs<'a, const W: usize> {
    cands: &'a [Bits<W>],
    in_orbit: &'a [u8],
    min_free: u32,
    stride: usize,
    counts: &'a mut [u64],
    budget: &'a WorkBudget,
    pending: u64,
    aborted: bool,
}

impl<const W: usize> Dfs<'_, W> {
    fn flush(&mut self) {
        if !self.budget.charge(self.pending) {
            self.aborted = true;
        }
        self.pending = 0;
    }

    /// Adds `left` more candidates from `start..` to a set with free mask
    /// `free` and `j` orbit members.
    fn go(&mut self, start: usize, left: usize, free: Bits<W>, j: usize) {
        let n = self.cands.len();
        if start + left > n || self.aborted {
            return;
        }
        if left == 1 {
            self.pending += (n - start) as u64;
            for i in start..n {
                let s = free.and(self.cands[i]).count();
                debug_assert!(s <= free.count());
                if s >= self.min_free {
                    self.counts[(j + self.in_orbit[i] as usize) * self.stride + s as usize] += 1;
                }
            }
            if self.pending >= CHUNK {
                self.flush();
            }
            return;
        }
        for i in start..=n - left {
            let f = free.and(self.cands[i]);
            let s = f.count();
            debug_assert!(s <= free.count());
            self.pending += 1;
            if s < self.min_free {
                continue;
            }
            self.go(i + 1, left - 1, f, j + self.in_orbit[i] as usize);
            if self.aborted {
                return;
            }
        }
    }
}

fn run_task<const W: usize>(
    plan: &ProfilePlan<'_>,
    task: ProfileTask,
    counts: &mut [u64],
    budget: &WorkBudget,
) -> bool {
    let g = plan.graph;
    let layer = &plan.layers[task.layer];
    let keep = keep_masks::<W>(g);
    let cands: Vec<Bits<W>> = layer.candidates.iter().map(|&c| keep[c]).collect();
    let stride = g.targets() + 1;
    let min_free = plan.min_free as u32;
    let free = Bits::<W>::ones(g.targets()).and(keep[layer.rep]);

    let mut dfs = Dfs {
        cands: &cands,
        in_orbit: &layer.in_orbit,
        min_free,
        stride,
        counts,
        budget,
        pending: 1,
        aborted: false,
    };
    match task.second {
        None => {
            let s = free.count();
            if s >= min_free {
                dfs.counts[stride + s as usize] += 1;
            }
        }
        Some(i) => {
            let f = free.and(cands[i]);
            let s = f.count();
            let j = 1 + layer.in_orbit[i] as usize;
            if plan.k == 2 {
                if s >= min_free {
                    dfs.counts[j * stride + s as usize] += 1;
                }
            } else if s >= min_free {
                dfs.go(i + 1, plan.k - 2, f, j);
            }
        }
    }
    dfs.flush();
    !dfs.aborted
}

/// Single-threaded [`ProfilePlan`] run.
pub fn free_profile(
    graph: &IncompatibilityGraph,
    k: usize,
    options: &ProfileOptions,
) -> Result<FreeProfile, BoardError> {
    let budget = WorkBudget::new(options.node_budget);
    free_profile_with_budget(graph, k, options, &budget)
}

pub fn free_profile_with_budget(
    graph: &IncompatibilityGraph,
    k: usize,
    options: &ProfileOptions,
    budget: &WorkBudget,
) -> Result<FreeProfile, BoardError> {
    let plan = ProfilePlan::new(graph, k, options)?;
    let parts = plan
        .tasks()
        .into_iter()
        .map(|t| plan.run(t, budget))
        .collect::<Result<Vec<_>, _>>()?;
    plan.finish(parts)
}

/// `mu(k)`: the most targets any `k` placements leave free, by
/// branch and bound over the same orbit decomposition. `None` when
/// `k` exceeds the number of placements.
pub fn mu(graph: &IncompatibilityGraph, k: usize, options: &ProfileOptions) -> Result<Option<usize>, BoardError> {
    let plan = ProfilePlan::new(graph, k, options)?;
    let budget = WorkBudget::new(options.node_budget);
    if k > graph.placements() {
        return Ok(None);
    }
    if k == 0 {
        return Ok(Some(graph.targets()));
    }
    let best = with_width!(graph.row_words(), best_free(&plan, &budget));
    match best {
        Some(b) => Ok(Some(b as usize)),
        None => Err(BoardError::Budget {
            limit: budget.limit().unwrap_or(u64::MAX),
        }),
    }
}

fn best_free<const W: usize>(plan: &ProfilePlan<'_>, budget: &WorkBudget) -> Option<u32> {
    struct Search<'a, const W: usize> {
        cands: &'a [Bits<W>],
        best: Option<u32>,
        pending: u64,
        budget: &'a WorkBudget,
        aborted: bool,
    }
    impl<const W: usize> Search<'_, W> {
        fn go(&mut self, start: usize, left: usize, free: Bits<W>) {
            if left == 0 {
                self.best = self.best.max(Some(free.count()));
                return;
            }
            let n = self.cands.len();
            if start + left > n {
                return;
            }
            for i in start..=n - left {
                let f = free.and(self.cands[i]);
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
                if self.best.is_some_and(|b| f.count() <= b) {
                    continue;
                }
                self.go(i + 1, left - 1, f);
            }
        }
    }

    let g = plan.graph;
    let keep = keep_masks::<W>(g);
    let mut best = None;
    for layer in &plan.layers {
        let cands: Vec<Bits<W>> = layer.candidates.iter().map(|&c| keep[c]).collect();
        let mut search = Search {
            cands: &cands,
            best,
            pending: 0,
            budget,
            aborted: false,
        };
        let free = Bits::<W>::ones(g.targets()).and(keep[layer.rep]);
        if best.is_none_or(|b| free.count() > b) {
            search.go(0, plan.k - 1, free);
        }
        if search.aborted || !budget.charge(search.pending) {
            return None;
        }
        best = search.best;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::{attack_graph, BoardSpec, OwnSquareMode, Piece};

    fn brute(g: &IncompatibilityGraph, k: usize) -> Vec<u64> {
        let p = g.placements();
        let mut counts = alloc::vec![0u64; g.targets() + 1];
        for set in 0u32..1 << p {
            if set.count_ones() as usize != k {
                continue;
            }
            let free = (0..g.targets())
                .filter(|&t| (0..p).all(|q| set >> q & 1 == 0 || !g.forbids(q, t)))
                .count();
            counts[free] += 1;
        }
        counts
    }

    #[test]
    fn queen_three_single() {
        let g = attack_graph(&BoardSpec::new(3, Piece::Queen)).unwrap();
        let prof = free_profile(&g, 1, &ProfileOptions::default()).unwrap();
        assert_eq!(prof.iter().collect::<Vec<_>>(), [(1, 1), (3, 8)]);
        assert_eq!(mu(&g, 1, &ProfileOptions::default()).unwrap(), Some(3));
    }

    #[test]
    fn matches_brute_force_with_and_without_symmetry() {
        for piece in [Piece::Queen, Piece::Rook, Piece::Knight, Piece::Bishop, Piece::King] {
            for mode in [OwnSquareMode::PaperLiteral, OwnSquareMode::ExcludeOccupied] {
                let g = attack_graph(&BoardSpec::new(4, piece.clone()).with_mode(mode)).unwrap();
                for k in 0..=5 {
                    let expected = brute(&g, k);
                    for symmetry in [false, true] {
                        let opts = ProfileOptions {
                            symmetry,
                            ..ProfileOptions::default()
                        };
                        let prof = free_profile(&g, k, &opts).unwrap();
                        assert_eq!(prof.counts, expected, "{piece:?} {mode:?} k={k} sym={symmetry}");
                        let m = mu(&g, k, &opts).unwrap();
                        assert_eq!(m, expected.iter().rposition(|&c| c > 0));
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_keeps_upper_counts() {
        let g = attack_graph(&BoardSpec::new(4, Piece::Queen)).unwrap();
        let full = free_profile(&g, 3, &ProfileOptions::default()).unwrap();
        let opts = ProfileOptions {
            min_free: 4,
            ..ProfileOptions::default()
        };
        let cut = free_profile(&g, 3, &opts).unwrap();
        for s in 0..=16 {
            assert_eq!(cut.count(s), if s >= 4 { full.count(s) } else { 0 });
        }
    }

    #[test]
    fn budget_stops_enumeration() {
        let g = attack_graph(&BoardSpec::new(6, Piece::Queen)).unwrap();
        let opts = ProfileOptions {
            node_budget: Some(10),
            ..ProfileOptions::default()
        };
        assert!(matches!(
            free_profile(&g, 6, &opts),
            Err(BoardError::Budget { limit: 10 })
        ));
    }

    #[test]
    fn too_many_pieces() {
        let g = attack_graph(&BoardSpec::new(2, Piece::Queen)).unwrap();
        let prof = free_profile(&g, 5, &ProfileOptions::default()).unwrap();
        assert_eq!(prof.total(), 0);
        assert_eq!(mu(&g, 5, &ProfileOptions::default()).unwrap(), None);
    }
}
