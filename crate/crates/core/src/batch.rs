//! Repeated runs over consecutive seeds. Runs are independent, so the
//! batch is data-parallel across seeds when the `parallel` feature is on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baselines::{run_baseline, BaselineConfig, BaselineKind};
use crate::error::{Error, Result};
use crate::lab::{self, LabConfig};
use crate::problem::Problem;
use crate::trace::RunTrace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "LAB")]
    Lab,
    RandomSearch,
    #[serde(rename = "SA")]
    SimulatedAnnealing,
    #[serde(rename = "PSO")]
    ParticleSwarm,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Lab,
        Algorithm::RandomSearch,
        Algorithm::SimulatedAnnealing,
        Algorithm::ParticleSwarm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lab => lab::ALGORITHM_NAME,
            Algorithm::RandomSearch => BaselineKind::RandomSearch.name(),
            Algorithm::SimulatedAnnealing => BaselineKind::SimulatedAnnealing.name(),
            Algorithm::ParticleSwarm => BaselineKind::ParticleSwarm.name(),
        }
    }

    fn baseline(self) -> Option<BaselineKind> {
        match self {
            Algorithm::Lab => None,
            Algorithm::RandomSearch => Some(BaselineKind::RandomSearch),
            Algorithm::SimulatedAnnealing => Some(BaselineKind::SimulatedAnnealing),
            Algorithm::ParticleSwarm => Some(BaselineKind::ParticleSwarm),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lab" => Ok(Algorithm::Lab),
            "random" | "randomsearch" | "rs" => Ok(Algorithm::RandomSearch),
            "sa" | "annealing" => Ok(Algorithm::SimulatedAnnealing),
            "pso" => Ok(Algorithm::ParticleSwarm),
            other => Err(Error::Argument(format!(
                "unknown algorithm `{other}` (expected lab, random, sa or pso)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchConfig {
    pub algorithm: Algorithm,
    pub runs: usize,
    pub base_seed: u64,
    pub lab: LabConfig,
    /// Baseline parameters; `kind` and `seed` are set per run.
    pub baseline: BaselineConfig,
}

impl BatchConfig {
    /// LAB defaults; baselines get LAB's full-length evaluation budget.
    pub fn new(algorithm: Algorithm, runs: usize, base_seed: u64) -> Self {
        let lab = LabConfig::default();
        let budget = lab.max_evaluations();
        Self {
            algorithm,
            runs,
            base_seed,
            baseline: BaselineConfig::new(
                algorithm.baseline().unwrap_or(BaselineKind::RandomSearch),
                budget,
                base_seed,
            ),
            lab,
        }
    }

    /// Sets LAB parameters and resets the baseline budget to match them.
    pub fn with_lab(mut self, lab: LabConfig) -> Self {
        self.baseline.budget = lab.max_evaluations();
        self.lab = lab;
        self
    }

    pub fn seeds(&self) -> Vec<u64> {
        (0..self.runs as u64).map(|i| self.base_seed + i).collect()
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        match self.algorithm {
            Algorithm::Lab => self.lab.validate(),
            _ => self.baseline.validate(),
        }
    }

    /// Executes the run for one seed.
    pub fn run_one(&self, problem: &Problem, seed: u64) -> Result<RunTrace> {
        match self.algorithm.baseline() {
            None => lab::run(problem, &self.lab.clone().with_seed(seed)),
            Some(kind) => {
                let mut c = self.baseline.clone().with_seed(seed);
                c.kind = kind;
                run_baseline(problem, &c)
            }
        }
    }

    /// Settings as JSON for the summary file.
    pub fn settings_json(&self) -> serde_json::Value {
        match self.algorithm {
            Algorithm::Lab => serde_json::to_value(&self.lab),
            _ => serde_json::to_value(&self.baseline),
        }
        .expect("config serializes")
    }
}

/// Applies `f` to every seed in order on the current thread.
pub fn map_seeds_sequential<T, F>(seeds: &[u64], f: F) -> Result<Vec<T>>
where
    F: Fn(u64) -> Result<T>,
{
    seeds.iter().map(|&s| f(s)).collect()
}

/// Applies `f` to every seed on the rayon pool; output keeps seed order.
#[cfg(feature = "parallel")]
pub fn map_seeds_parallel<T, F>(seeds: &[u64], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    use rayon::prelude::*;
    seeds.par_iter().map(|&s| f(s)).collect()
}

pub fn map_seeds<T, F>(seeds: &[u64], f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64) -> Result<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        map_seeds_parallel(seeds, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_seeds_sequential(seeds, f)
    }
}

pub fn run_batch_sequential(problem: &Problem, config: &BatchConfig) -> Result<Vec<RunTrace>> {
    config.validate()?;
    map_seeds_sequential(&config.seeds(), |s| config.run_one(problem, s))
}

#[cfg(feature = "parallel")]
pub fn run_batch_parallel(problem: &Problem, config: &BatchConfig) -> Result<Vec<RunTrace>> {
    config.validate()?;
    map_seeds_parallel(&config.seeds(), |s| config.run_one(problem, s))
}

/// Runs `config.runs` seeds, in parallel when the feature is enabled.
/// Traces come back in seed order either way.
pub fn run_batch(problem: &Problem, config: &BatchConfig) -> Result<Vec<RunTrace>> {
    config.validate()?;
    map_seeds(&config.seeds(), |s| config.run_one(problem, s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Sense;

    fn sphere() -> Problem {
        Problem::uniform_box("sphere", 2, -5.0, 5.0, Sense::Minimize, |x| {
            x.iter().map(|v| v * v).sum()
        })
        .unwrap()
    }

    #[test]
    fn parse_algorithms() {
        assert_eq!("LAB".parse::<Algorithm>().unwrap(), Algorithm::Lab);
        assert_eq!("random".parse::<Algorithm>().unwrap(), Algorithm::RandomSearch);
        assert!("ga".parse::<Algorithm>().is_err());
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
    }

    #[test]
    fn seeds_are_consecutive() {
        let c = BatchConfig::new(Algorithm::Lab, 3, 40);
        assert_eq!(c.seeds(), vec![40, 41, 42]);
    }

    #[test]
    fn baseline_budget_matches_lab() {
        let c = BatchConfig::new(Algorithm::ParticleSwarm, 2, 0);
        assert_eq!(c.baseline.budget, 2020);
        let t = run_batch(&sphere(), &c).unwrap();
        assert!(t.iter().all(|t| t.function_evaluations == 2020 && t.algorithm == "PSO"));
    }

    #[test]
    fn sequential_equals_default() {
        for algo in Algorithm::ALL {
            let c = BatchConfig::new(algo, 4, 9);
            let a: Vec<_> = run_batch_sequential(&sphere(), &c)
                .unwrap()
                .into_iter()
                .map(RunTrace::without_timing)
                .collect();
            let b: Vec<_> = run_batch(&sphere(), &c)
                .unwrap()
                .into_iter()
                .map(RunTrace::without_timing)
                .collect();
            assert_eq!(a, b);
            assert_eq!(a.iter().map(|t| t.seed).collect::<Vec<_>>(), vec![9, 10, 11, 12]);
        }
    }

    #[test]
    fn zero_runs_rejected() {
        let c = BatchConfig::new(Algorithm::Lab, 0, 0);
        assert!(run_batch(&sphere(), &c).is_err());
    }
}
