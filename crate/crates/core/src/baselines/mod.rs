//! Reference optimizers: uniform random search, simulated annealing and
//! particle swarm optimization, all driven by an exact evaluation budget
//! and producing the same [`RunTrace`] shape as LAB.

mod pso;
mod random;
mod sa;

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Problem;
use crate::trace::{BestSoFar, IterationRecord, RunTrace, TerminationReason};

pub use pso::run_pso;
pub use random::run_random_search;
pub use sa::{run_sa, run_sa_with_stats, SaStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaselineKind {
    RandomSearch,
    #[serde(rename = "SA")]
    SimulatedAnnealing,
    #[serde(rename = "PSO")]
    ParticleSwarm,
}

impl BaselineKind {
    pub fn name(self) -> &'static str {
        match self {
            BaselineKind::RandomSearch => "RandomSearch",
            BaselineKind::SimulatedAnnealing => "SA",
            BaselineKind::ParticleSwarm => "PSO",
        }
    }
}

impl fmt::Display for BaselineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SaParams {
    /// Uniform points drawn before annealing; the best one is the start.
    pub initial_sample: usize,
    /// `None` means 10% of the fitness range of the initial sample.
    pub initial_temperature: Option<f64>,
    /// Geometric factor applied after every batch of moves.
    pub cooling: f64,
    pub moves_per_temperature: usize,
    /// Gaussian step standard deviation as a fraction of each box width.
    pub step_fraction: f64,
}

impl Default for SaParams {
    fn default() -> Self {
        Self {
            initial_sample: 20,
            initial_temperature: None,
            cooling: 0.95,
            moves_per_temperature: 20,
            step_fraction: 0.1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PsoParams {
    pub swarm_size: usize,
    pub inertia: f64,
    pub cognitive: f64,
    pub social: f64,
    /// Velocity limit as a fraction of each box width.
    pub max_velocity_fraction: f64,
}

impl Default for PsoParams {
    fn default() -> Self {
        Self {
            swarm_size: 20,
            inertia: 0.72,
            cognitive: 1.49,
            social: 1.49,
            max_velocity_fraction: 0.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineConfig {
    pub kind: BaselineKind,
    /// Total objective evaluations.
    pub budget: u64,
    pub seed: u64,
    /// Evaluations per trace row for random search.
    pub batch_size: usize,
    pub sa: SaParams,
    pub pso: PsoParams,
}

impl BaselineConfig {
    pub fn new(kind: BaselineKind, budget: u64, seed: u64) -> Self {
        Self {
            kind,
            budget,
            seed,
            batch_size: 20,
            sa: SaParams::default(),
            pso: PsoParams::default(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.budget == 0 {
            return bad("budget must be positive".into());
        }
        if self.batch_size == 0 {
            return bad("batch_size must be positive".into());
        }
        let sa = &self.sa;
        if sa.initial_sample == 0 || sa.moves_per_temperature == 0 {
            return bad("SA sample and batch sizes must be positive".into());
        }
        if !(sa.cooling > 0.0 && sa.cooling < 1.0) {
            return bad(format!("SA cooling must be in (0, 1), got {}", sa.cooling));
        }
        if !(sa.step_fraction > 0.0 && sa.step_fraction.is_finite()) {
            return bad(format!("SA step fraction must be positive, got {}", sa.step_fraction));
        }
        if let Some(t) = sa.initial_temperature {
            if !(t >= 0.0 && t.is_finite()) {
                return bad(format!("SA initial temperature must be >= 0, got {t}"));
            }
        }
        let pso = &self.pso;
        if pso.swarm_size == 0 {
            return bad("PSO swarm size must be positive".into());
        }
        if !(0.0..=1.0).contains(&pso.inertia) {
            return bad(format!("PSO inertia must be in [0, 1], got {}", pso.inertia));
        }
        if !(pso.cognitive >= 0.0 && pso.social >= 0.0) {
            return bad("PSO coefficients must be non-negative".into());
        }
        if !(pso.max_velocity_fraction > 0.0) {
            return bad("PSO velocity limit must be positive".into());
        }
        Ok(())
    }
}

pub fn run_baseline(problem: &Problem, config: &BaselineConfig) -> Result<RunTrace> {
    match config.kind {
        BaselineKind::RandomSearch => run_random_search(problem, config),
        BaselineKind::SimulatedAnnealing => run_sa(problem, config),
        BaselineKind::ParticleSwarm => run_pso(problem, config),
    }
}

/// Shared bookkeeping: budget, best-so-far and trace rows.
struct Recorder<'p> {
    problem: &'p Problem,
    budget: u64,
    used: u64,
    best: Option<BestSoFar>,
    records: Vec<IterationRecord>,
    started: Instant,
}

impl<'p> Recorder<'p> {
    fn new(problem: &'p Problem, budget: u64) -> Self {
        Self {
            problem,
            budget,
            used: 0,
            best: None,
            records: Vec::new(),
            started: Instant::now(),
        }
    }

    fn remaining(&self) -> u64 {
        self.budget - self.used
    }

    fn evaluate(&mut self, x: &[f64], rng: &mut dyn rand::RngCore) -> Result<f64> {
        debug_assert!(self.used < self.budget);
        let cost = self.problem.cost(x, rng)?;
        self.used += 1;
        match &mut self.best {
            Some(b) => b.offer(cost, x),
            None => self.best = Some(BestSoFar::new(cost, x)),
        }
        Ok(cost)
    }

    /// Appends a row whose `global_best` is `current_cost`.
    fn record(&mut self, current_cost: f64) {
        let sense = self.problem.sense();
        let best = self.best.as_ref().expect("record after an evaluation");
        self.records.push(IterationRecord {
            iteration: self.records.len(),
            global_best: sense.to_value(current_cost),
            best_so_far: sense.to_value(best.cost),
            leaders: Vec::new(),
            best_position: best.position.clone(),
            elapsed_seconds: self.started.elapsed().as_secs_f64(),
        });
    }

    fn finish(self, algorithm: &str, seed: u64) -> RunTrace {
        let sense = self.problem.sense();
        let best = self.best.expect("budget is positive");
        RunTrace {
            algorithm: algorithm.to_string(),
            problem: self.problem.name().to_string(),
            sense,
            seed,
            records: self.records,
            best_fitness: sense.to_value(best.cost),
            best_position: best.position,
            function_evaluations: self.used,
            termination: TerminationReason::BudgetExhausted,
        }
    }
}
