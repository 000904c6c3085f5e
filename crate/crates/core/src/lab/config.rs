use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameters of a LAB run. Defaults: 4 groups of 5, 100 iterations,
/// stall window 20 with epsilon 1e-6, unconditional replacement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabConfig {
    pub num_groups: usize,
    pub group_size: usize,
    pub max_iterations: usize,
    /// Iterations over which "no significant improvement" is judged.
    pub stall_window: usize,
    pub stall_epsilon: f64,
    /// Keep the better of old and new position per individual instead of
    /// replacing unconditionally.
    pub greedy_acceptance: bool,
    pub seed: u64,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            num_groups: 4,
            group_size: 5,
            max_iterations: 100,
            stall_window: 20,
            stall_epsilon: 1e-6,
            greedy_acceptance: false,
            seed: 0,
        }
    }
}

impl LabConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn population(&self) -> usize {
        self.num_groups * self.group_size
    }

    /// Evaluations spent when the run goes the full `max_iterations`.
    pub fn max_evaluations(&self) -> u64 {
        (self.population() * (self.max_iterations + 1)) as u64
    }

    pub fn validate(&self) -> Result<()> {
        if self.group_size < 3 {
            return Err(Error::Config(format!(
                "group_size must be at least 3 (leader, advocate, believer), got {}",
                self.group_size
            )));
        }
        if self.num_groups < 2 {
            return Err(Error::Config(format!(
                "num_groups must be at least 2, got {}",
                self.num_groups
            )));
        }
        if self.stall_window == 0 {
            return Err(Error::Config("stall_window must be positive".into()));
        }
        if !(self.stall_epsilon >= 0.0 && self.stall_epsilon.is_finite()) {
            return Err(Error::Config(format!(
                "stall_epsilon must be a non-negative finite number, got {}",
                self.stall_epsilon
            )));
        }
        Ok(())
    }
}
