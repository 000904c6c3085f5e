//! Box-constrained objective functions.

use std::fmt;
use std::sync::Arc;

use rand::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Minimize,
    Maximize,
}

impl Sense {
    /// Maps a user-sense objective value to a cost that is always minimized.
    pub fn to_cost(self, value: f64) -> f64 {
        match self {
            Sense::Minimize => value,
            Sense::Maximize => -value,
        }
    }

    /// Inverse of [`Sense::to_cost`].
    pub fn to_value(self, cost: f64) -> f64 {
        self.to_cost(cost)
    }

    /// True when `a` is strictly better than `b` under this sense.
    pub fn better(self, a: f64, b: f64) -> bool {
        match self {
            Sense::Minimize => a < b,
            Sense::Maximize => a > b,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sense::Minimize => "minimize",
            Sense::Maximize => "maximize",
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sense {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimize" | "min" => Ok(Sense::Minimize),
            "maximize" | "max" => Ok(Sense::Maximize),
            other => Err(Error::Argument(format!("unknown sense `{other}`"))),
        }
    }
}

type ObjectiveFn = dyn Fn(&[f64], &mut dyn RngCore) -> f64 + Send + Sync;

/// An objective over a box `[lower, upper]`.
///
/// The objective receives a random source so that noisy functions stay
/// reproducible under a seeded run; deterministic objectives ignore it.
#[derive(Clone)]
pub struct Problem {
    name: String,
    lower: Vec<f64>,
    upper: Vec<f64>,
    sense: Sense,
    objective: Arc<ObjectiveFn>,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("lower", &self.lower)
            .field("upper", &self.upper)
            .field("sense", &self.sense)
            .finish_non_exhaustive()
    }
}

impl Problem {
    pub fn new<F>(
        name: impl Into<String>,
        lower: Vec<f64>,
        upper: Vec<f64>,
        sense: Sense,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::with_rng(name, lower, upper, sense, move |x, _| objective(x))
    }

    /// Builds a problem whose objective draws from the run's random source.
    pub fn with_rng<F>(
        name: impl Into<String>,
        lower: Vec<f64>,
        upper: Vec<f64>,
        sense: Sense,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64], &mut dyn RngCore) -> f64 + Send + Sync + 'static,
    {
        let name = name.into();
        if lower.is_empty() {
            return Err(Error::Config(format!("problem `{name}` has zero dimension")));
        }
        if lower.len() != upper.len() {
            return Err(Error::Dimension {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Config(format!(
                    "problem `{name}`: bound {i} is [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self {
            name,
            lower,
            upper,
            sense,
            objective: Arc::new(objective),
        })
    }

    /// Uniform bounds on every coordinate.
    pub fn uniform_box<F>(
        name: impl Into<String>,
        dim: usize,
        lower: f64,
        upper: f64,
        sense: Sense,
        objective: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::new(name, vec![lower; dim], vec![upper; dim], sense, objective)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Raw objective value in the problem's own sense. No checks.
    pub fn value(&self, x: &[f64], rng: &mut dyn RngCore) -> f64 {
        (self.objective)(x, rng)
    }

    /// Objective value oriented for minimization, rejecting wrong
    /// dimensions and non-finite results.
    pub fn cost(&self, x: &[f64], rng: &mut dyn RngCore) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                actual: x.len(),
            });
        }
        let value = self.value(x, rng);
        if !value.is_finite() {
            return Err(Error::Evaluation {
                position: x.to_vec(),
                value,
            });
        }
        Ok(self.sense.to_cost(value))
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Clips every coordinate into its bound.
    pub fn clamp(&self, x: &mut [f64]) {
        for ((v, lo), hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            *v = v.clamp(*lo, *hi);
        }
    }

    pub fn widths(&self) -> impl Iterator<Item = f64> + '_ {
        self.lower.iter().zip(&self.upper).map(|(lo, hi)| hi - lo)
    }

    /// A point drawn uniformly from the box.
    pub fn sample<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| rng.random_range(*lo..=*hi))
            .collect()
    }
}

/// Returns `x` clipped into the problem box.
pub fn clamp_to_bounds(x: &[f64], problem: &Problem) -> Vec<f64> {
    let mut out = x.to_vec();
    problem.clamp(&mut out);
    out
}
