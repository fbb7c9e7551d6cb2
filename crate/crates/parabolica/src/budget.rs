//! A shared work budget for combinatorial enumerations.
//!
//! Counts monomial/permutation visits across an operation and aborts with
//! [`BudgetExceeded`] once the configured limit is reached, so that large
//! instances fail fast instead of running away.

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

pub const DEFAULT_BUDGET: u64 = 10_000_000;
pub const MIN_BUDGET: u64 = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("term budget of {limit} visits exceeded")]
pub struct BudgetExceeded {
    pub limit: u64,
}

#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    /// Unlimited budget, for small fixed-size tests.
    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn charge(&self, amount: u64) -> Result<(), BudgetExceeded> {
        let before = self.used.fetch_add(amount, Ordering::Relaxed);
        if before.saturating_add(amount) > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
