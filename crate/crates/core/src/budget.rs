use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Caps on enumeration work; every exhaustive routine charges one of these up front.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Entry evaluations for weight enumeration.
    pub work: u128,
    /// Size of any single enumerated point set (vectors of F_q^m, defining sets).
    pub enumeration: u128,
    /// Codewords swept by matrix-backed checks.
    pub codewords: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            work: 100_000_000,
            enumeration: 1 << 24,
            codewords: 1 << 20,
        }
    }
}

fn charge(needed: u128, limit: u128) -> Result<()> {
    if needed <= limit {
        Ok(())
    } else {
        Err(Error::BudgetExceeded { needed, limit })
    }
}

impl Budget {
    /// Same caps with the work limit replaced.
    pub fn with_work(work: u128) -> Self {
        Budget {
            work,
            ..Budget::default()
        }
    }

    pub fn work(&self, needed: u128) -> Result<()> {
        charge(needed, self.work)
    }

    pub fn enumeration(&self, needed: u128) -> Result<()> {
        charge(needed, self.enumeration)
    }

    pub fn codewords(&self, needed: u128) -> Result<()> {
        charge(needed, self.codewords)
    }
}
