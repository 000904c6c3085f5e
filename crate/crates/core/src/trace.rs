//! Per-run convergence records shared by every optimizer.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::problem::Sense;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TerminationReason {
    MaxIterations,
    Stalled,
    BudgetExhausted,
}

impl fmt::Display for TerminationReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TerminationReason::MaxIterations => "MaxIterations",
            TerminationReason::Stalled => "Stalled",
            TerminationReason::BudgetExhausted => "BudgetExhausted",
        })
    }
}

impl std::str::FromStr for TerminationReason {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "MaxIterations" => Ok(TerminationReason::MaxIterations),
            "Stalled" => Ok(TerminationReason::Stalled),
            "BudgetExhausted" => Ok(TerminationReason::BudgetExhausted),
            other => Err(format!("unknown termination reason `{other}`")),
        }
    }
}

/// One row of a trace. Iteration 0 is the initial population.
///
/// All objective values are in the problem's own sense.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Best member of the current population (the global leader for LAB).
    pub global_best: f64,
    /// Best value evaluated so far in the run.
    pub best_so_far: f64,
    /// Leader value of each group in ranked order. Empty for baselines.
    pub leaders: Vec<f64>,
    pub best_position: Vec<f64>,
    /// Wall time since the run started. Not persisted in trace files.
    pub elapsed_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: String,
    pub problem: String,
    pub sense: Sense,
    pub seed: u64,
    pub records: Vec<IterationRecord>,
    pub best_fitness: f64,
    pub best_position: Vec<f64>,
    pub function_evaluations: u64,
    pub termination: TerminationReason,
}

impl RunTrace {
    /// Number of iterations executed after initialization.
    pub fn iterations(&self) -> usize {
        self.records.len().saturating_sub(1)
    }

    pub fn elapsed_seconds(&self) -> f64 {
        self.records.last().map_or(0.0, |r| r.elapsed_seconds)
    }

    pub fn best_so_far(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.best_so_far)
    }

    /// Number of groups recorded per row, zero for baselines.
    pub fn num_leaders(&self) -> usize {
        self.records.first().map_or(0, |r| r.leaders.len())
    }

    /// Zeroes wall-clock fields so traces from separate executions compare equal.
    pub fn without_timing(mut self) -> Self {
        for r in &mut self.records {
            r.elapsed_seconds = 0.0;
        }
        self
    }
}

/// Tracks the best point seen so far in minimization orientation.
#[derive(Debug, Clone)]
pub(crate) struct BestSoFar {
    pub cost: f64,
    pub position: Vec<f64>,
}

impl BestSoFar {
    pub fn new(cost: f64, position: &[f64]) -> Self {
        Self {
            cost,
            position: position.to_vec(),
        }
    }

    pub fn offer(&mut self, cost: f64, position: &[f64]) {
        if cost < self.cost {
            self.cost = cost;
            self.position.clear();
            self.position.extend_from_slice(position);
        }
    }
}
