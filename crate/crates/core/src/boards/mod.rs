//! Placements on a bipartite incompatibility relation, counted by the
//! number of targets they leave free.
//!
//! For a relation between placements `P` and targets `T`, `Phi(k, u)` is the
//! number of `k`-subsets of `P` leaving exactly `u` targets compatible with
//! every chosen placement. The bigraded Hilbert function of the board ideal
//! satisfies `HF(k, u) = sum_v C(v, u) Phi(k, v)`, which is inverted from the
//! top. The engine computes `Phi` directly by bitset enumeration and checks
//! it against that inversion fed from an independent source.

mod bits;
mod board;
mod budget;
mod graph;
mod hf;
mod phi;
mod profile;
mod route;
mod symmetry;
mod table;

pub use bits::MAX_VERTICES;
pub use board::{attack_graph, BoardSpec, OwnSquareMode, Piece};
pub use budget::WorkBudget;
pub use graph::IncompatibilityGraph;
pub use hf::{hf_bigraded, hf_from_profile, hf_table, target_histogram, TargetHistogram};
pub use phi::{invert_hf_row, phi_table, phi_table_with, HfSource, PhiOptions, PhiTable};
pub use profile::{
    free_profile, free_profile_with_budget, mu, FreeProfile, ProfileOptions, ProfilePlan, ProfileTask, TaskCounts,
};
pub use route::{board_ideal, hf_table_from_series, hilbert_route};
pub use symmetry::{board_automorphisms, orbits};
pub use table::{Binomials, CountTable};

use alloc::string::String;
use num_bigint::BigUint;

use crate::hilbert::HilbertError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoardError {
    #[error("graph needs at least one placement and one target")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("operation needs equal placement and target sets")]
    NotSquare,
    #[error("move {0:?} does not move the piece")]
    InvalidMove((i32, i32)),
    #[error("{vertices} vertices exceed the supported {max}")]
    TooLarge { vertices: usize, max: usize },
    #[error("empty range of k")]
    EmptyRange,
    #[error("work budget of {limit} nodes exhausted")]
    Budget { limit: u64 },
    #[error("Phi({k}, {u}): enumeration gives {direct}, inversion from {route} gives {inverted}")]
    Mismatch {
        k: usize,
        u: usize,
        route: &'static str,
        direct: BigUint,
        inverted: BigUint,
    },
    #[error("{0}")]
    Unsound(String),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}
