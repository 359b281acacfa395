use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Default cap on elementary membership tests per verification run.
pub const DEFAULT_MAX_OPS: u64 = 10_000_000;

/// Shared operation counter. Enumerations charge it before doing work, so a
/// runaway input fails with `ResourceLimit` instead of hanging.
#[derive(Debug)]
pub struct Budget {
    max_ops: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(max_ops: u64) -> Self {
        Budget {
            max_ops,
            used: AtomicU64::new(0),
        }
    }

    pub fn max_ops(&self) -> u64 {
        self.max_ops
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, ops: u64) -> Result<()> {
        let before = self.used.fetch_add(ops, Ordering::Relaxed);
        if before.saturating_add(ops) > self.max_ops {
            return Err(Error::ResourceLimit(format!(
                "operation budget of {} exhausted",
                self.max_ops
            )));
        }
        Ok(())
    }

    /// Fail up front if a projected count cannot fit in the remaining budget.
    pub fn ensure_room(&self, projected: u128, what: &str) -> Result<()> {
        let remaining = self.max_ops.saturating_sub(self.used()) as u128;
        if projected > remaining {
            return Err(Error::ResourceLimit(format!(
                "{what}: projected {projected} exceeds remaining budget {remaining}"
            )));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_MAX_OPS)
    }
}
