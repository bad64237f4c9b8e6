/// Node budget shared by the exhaustive searches.
///
/// Searches call [`Budget::tick`] once per explored node and give up (with an
/// explicit inconclusive or error result) once the limit is reached, so that
/// results never depend on wall-clock time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    limit: u64,
    used: u64,
}

/// Default node limit used by the CLI and the audits.
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Consumes one node. Returns `false` once the budget is exhausted.
    #[inline]
    pub fn tick(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_NODE_BUDGET)
    }
}
