use core::sync::atomic::{AtomicU64, Ordering};

/// Shared node counter with an optional cap. Workers charge it in chunks
/// and stop once it is exceeded.
#[derive(Debug, Default)]
pub struct WorkBudget {
    limit: Option<u64>,
    used: AtomicU64,
}

impl WorkBudget {
    pub fn new(limit: Option<u64>) -> Self {
        Self {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(None)
    }

    pub fn limit(&self) -> Option<u64> {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Records `nodes` more nodes; false once the cap is exceeded.
    pub fn charge(&self, nodes: u64) -> bool {
        let total = self.used.fetch_add(nodes, Ordering::Relaxed).saturating_add(nodes);
        self.limit.is_none_or(|l| total <= l)
    }

    pub fn exhausted(&self) -> bool {
        self.limit.is_some_and(|l| self.used() > l)
    }
}

/// Nodes visited between two charges.
pub(crate) const CHUNK: u64 = 1 << 16;
