//! Multi-threaded profile enumeration.

use rayon::prelude::*;

use monocount_core::boards::{BoardError, FreeProfile, IncompatibilityGraph, ProfileOptions, ProfilePlan, WorkBudget};

/// Same result as the core's sequential `free_profile_with_budget`, with
/// tasks spread over the current rayon pool. Task results are merged by
/// summation, so the worker count never changes the output.
pub fn free_profile_parallel(
    graph: &IncompatibilityGraph,
    k: usize,
    options: &ProfileOptions,
    budget: &WorkBudget,
) -> Result<FreeProfile, BoardError> {
    let plan = ProfilePlan::new(graph, k, options)?;
    let parts = plan
        .tasks()
        .into_par_iter()
        .map(|task| plan.run(task, budget))
        .collect::<Result<Vec<_>, _>>()?;
    plan.finish(parts)
}

/// Runs `f` on a pool with `threads` workers, or on the global pool for 0.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    if threads == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monocount_core::boards::{attack_graph, free_profile, BoardSpec, Piece};

    #[test]
    fn agrees_with_sequential() {
        let g = attack_graph(&BoardSpec::new(5, Piece::Queen)).unwrap();
        for k in 0..=5 {
            let opts = ProfileOptions::default();
            let seq = free_profile(&g, k, &opts).unwrap();
            for threads in [1, 3] {
                let par = with_threads(threads, || {
                    free_profile_parallel(&g, k, &opts, &WorkBudget::unlimited()).unwrap()
                });
                assert_eq!(par, seq);
            }
        }
    }
}
