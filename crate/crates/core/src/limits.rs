use std::time::{Duration, Instant};

use crate::error::{Error, Result};

pub const DEFAULT_TOUGHNESS_MAX_N: usize = 24;
pub const DEFAULT_SOLVER_MAX_N: usize = 32;

/// Resource guards for the exponential kernels.
#[derive(Clone, Debug)]
pub struct Limits {
    pub toughness_max_n: usize,
    pub solver_max_n: usize,
    /// Searches poll this every few thousand steps and fail with
    /// [`Error::Timeout`] once it has passed.
    pub deadline: Option<Instant>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            toughness_max_n: DEFAULT_TOUGHNESS_MAX_N,
            solver_max_n: DEFAULT_SOLVER_MAX_N,
            deadline: None,
        }
    }
}

impl Limits {
    /// Both caps set to `max_n`.
    pub fn with_max_n(max_n: usize) -> Self {
        Limits { toughness_max_n: max_n, solver_max_n: max_n, deadline: None }
    }

    pub fn with_timeout(mut self, timeout: Duration) -> Self {
        self.deadline = Some(Instant::now() + timeout);
        self
    }

    pub(crate) fn check_deadline(&self, operation: &'static str) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(Error::Timeout { operation }),
            _ => Ok(()),
        }
    }
}
