//! Resolution of problem selectors used by the command line.
//!
//! Accepted forms, comma-separated and case-insensitive:
//! benchmark ids (`F10`), resized scalable benchmarks (`F44-d5`),
//! machining ids (`awjm:kerf`, `drilling-bh-0.5mm`), `all-benchmarks`,
//! `all-machining` and `all`.

use serde::{Deserialize, Serialize};

use crate::benchmarks;
use crate::error::{Error, Result};
use crate::machining;
use crate::problem::Problem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemFamily {
    Benchmark,
    Machining,
}

#[derive(Clone)]
pub struct ResolvedProblem {
    pub family: ProblemFamily,
    pub problem: Problem,
}

impl ResolvedProblem {
    pub fn id(&self) -> &str {
        self.problem.name()
    }
}

fn benchmark(id: &str) -> Option<Problem> {
    if let Some(spec) = benchmarks::lookup(id) {
        return Some(spec.problem);
    }
    let lower = id.to_ascii_lowercase();
    let (base, dim) = lower.rsplit_once("-d")?;
    let dim: usize = dim.parse().ok()?;
    benchmarks::lookup(base)?.resized(dim).map(|s| s.problem)
}

fn one(selector: &str) -> Result<Vec<ResolvedProblem>> {
    let wrap = |family| move |problem| ResolvedProblem { family, problem };
    let benches = || {
        benchmarks::registry()
            .into_iter()
            .map(|s| s.problem)
            .map(wrap(ProblemFamily::Benchmark))
    };
    let machines = || {
        machining::machining_registry()
            .into_iter()
            .map(|s| s.problem)
            .map(wrap(ProblemFamily::Machining))
    };
    match selector.to_ascii_lowercase().as_str() {
        "all-benchmarks" => return Ok(benches().collect()),
        "all-machining" => return Ok(machines().collect()),
        "all" => return Ok(benches().chain(machines()).collect()),
        _ => {}
    }
    if let Some(p) = benchmark(selector) {
        return Ok(vec![wrap(ProblemFamily::Benchmark)(p)]);
    }
    if let Some(s) = machining::lookup(selector) {
        return Ok(vec![wrap(ProblemFamily::Machining)(s.problem)]);
    }
    Err(Error::UnknownProblem(selector.to_string()))
}

/// Expands a selector into problems, keeping order and dropping repeats.
pub fn resolve(selector: &str) -> Result<Vec<ResolvedProblem>> {
    let mut out: Vec<ResolvedProblem> = Vec::new();
    for part in selector.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        for r in one(part)? {
            if !out.iter().any(|o| o.id() == r.id()) {
                out.push(r);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownProblem(selector.to_string()));
    }
    Ok(out)
}
