use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Sense;
use crate::trace::RunTrace;

/// Descriptive statistics of the final best values of repeated runs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSummary {
    pub problem: String,
    pub algorithm: String,
    pub sense: Sense,
    pub num_runs: usize,
    pub best: f64,
    pub mean: f64,
    /// Sample standard deviation (denominator `n - 1`, zero for one run).
    pub std_dev: f64,
    pub median: f64,
    pub worst: f64,
    pub mean_runtime_seconds: f64,
    pub mean_function_evaluations: f64,
    pub mean_iterations: f64,
    /// Seed of each run, aligned with `finals`.
    pub seeds: Vec<u64>,
    /// Final best-so-far value of each run.
    pub finals: Vec<f64>,
}

pub fn mean(xs: &[f64]) -> f64 {
    xs.iter().sum::<f64>() / xs.len() as f64
}

pub fn sample_std(xs: &[f64]) -> f64 {
    if xs.len() < 2 {
        return 0.0;
    }
    let m = mean(xs);
    let ss: f64 = xs.iter().map(|x| (x - m).powi(2)).sum();
    (ss / (xs.len() - 1) as f64).sqrt()
}

pub fn median(xs: &[f64]) -> f64 {
    quantile(xs, 0.5)
}

/// Linear-interpolation quantile (type 7) of an unsorted sample.
pub fn quantile(xs: &[f64], q: f64) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let h = (v.len() - 1) as f64 * q;
    let (lo, hi) = (h.floor() as usize, h.ceil() as usize);
    v[lo] + (h - lo as f64) * (v[hi] - v[lo])
}

pub fn summarize(runs: &[RunTrace]) -> Result<RunSummary> {
    let first = runs
        .first()
        .ok_or_else(|| Error::Argument("cannot summarize zero runs".into()))?;
    if let Some(odd) = runs.iter().find(|r| {
        r.problem != first.problem || r.algorithm != first.algorithm || r.sense != first.sense
    }) {
        return Err(Error::Argument(format!(
            "mixed runs: {}/{} and {}/{}",
            first.algorithm, first.problem, odd.algorithm, odd.problem
        )));
    }
    let sense = first.sense;
    let finals: Vec<f64> = runs.iter().map(|r| r.best_fitness).collect();
    let pick = |better: bool| {
        finals
            .iter()
            .copied()
            .reduce(|a, b| if sense.better(b, a) == better { b } else { a })
            .expect("non-empty")
    };
    let n = runs.len() as f64;
    Ok(RunSummary {
        problem: first.problem.clone(),
        algorithm: first.algorithm.clone(),
        sense,
        num_runs: runs.len(),
        best: pick(true),
        mean: mean(&finals),
        std_dev: sample_std(&finals),
        median: median(&finals),
        worst: pick(false),
        mean_runtime_seconds: runs.iter().map(|r| r.elapsed_seconds()).sum::<f64>() / n,
        mean_function_evaluations: runs.iter().map(|r| r.function_evaluations as f64).sum::<f64>()
            / n,
        mean_iterations: runs.iter().map(|r| r.iterations() as f64).sum::<f64>() / n,
        seeds: runs.iter().map(|r| r.seed).collect(),
        finals,
    })
}
