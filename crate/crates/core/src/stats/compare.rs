use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::summary::{mean, RunSummary};
use super::wilcoxon::{wilcoxon, Method, Verdict, WilcoxonResult};
use crate::error::{Error, Result};
use crate::problem::Sense;

/// How per-problem results are paired in the across-problem test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairingMode {
    /// One pair per problem: the mean of each algorithm's final bests.
    AveragedBests,
    /// One pair per (problem, run index).
    RawPairs,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub plus: usize,
    pub minus: usize,
    pub equal: usize,
}

impl Counts {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Plus => self.plus += 1,
            Verdict::Minus => self.minus += 1,
            Verdict::Equal => self.equal += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.plus + self.minus + self.equal
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemComparison {
    pub problem: String,
    pub algorithm_a: String,
    pub algorithm_b: String,
    pub mean_a: f64,
    pub mean_b: f64,
    pub test: WilcoxonResult,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseRow {
    pub algorithm_a: String,
    pub algorithm_b: String,
    pub pairs: usize,
    pub test: WilcoxonResult,
    /// Algorithm with the larger favorable rank sum, regardless of
    /// significance. `None` on a tie.
    pub favored: Option<String>,
    /// Per-problem verdicts of `b` against `a`.
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonTable {
    pub alpha: f64,
    pub mode: PairingMode,
    pub algorithms: Vec<String>,
    pub problems: Vec<String>,
    pub per_problem: Vec<ProblemComparison>,
    pub pairs: Vec<PairwiseRow>,
}

/// Signed-rank comparison of every algorithm pair `(a, b)`, `a` before `b`
/// in first-appearance order. Values of maximized problems are negated so
/// that smaller is better throughout the across-problem test.
pub fn pairwise_compare(
    summaries: &[RunSummary],
    alpha: f64,
    mode: PairingMode,
) -> Result<ComparisonTable> {
    let mut algorithms: Vec<String> = Vec::new();
    let mut problems: Vec<String> = Vec::new();
    let mut cells: BTreeMap<(&str, &str), &RunSummary> = BTreeMap::new();
    for s in summaries {
        if !algorithms.contains(&s.algorithm) {
            algorithms.push(s.algorithm.clone());
        }
        if !problems.contains(&s.problem) {
            problems.push(s.problem.clone());
        }
        if cells.insert((&s.problem, &s.algorithm), s).is_some() {
            return Err(Error::Argument(format!(
                "duplicate result for {} on {}",
                s.algorithm, s.problem
            )));
        }
    }
    if algorithms.len() < 2 {
        return Err(Error::Argument(
            "need results from at least two algorithms".into(),
        ));
    }
    let missing: Vec<String> = problems
        .iter()
        .flat_map(|p| algorithms.iter().map(move |a| (p, a)))
        .filter(|(p, a)| !cells.contains_key(&(p.as_str(), a.as_str())))
        .map(|(p, a)| format!("{a} on {p}"))
        .collect();
    if !missing.is_empty() {
        return Err(Error::Argument(format!(
            "missing results: {}",
            missing.join(", ")
        )));
    }
    for p in &problems {
        let senses: BTreeSet<&str> = algorithms
            .iter()
            .map(|a| cells[&(p.as_str(), a.as_str())].sense.as_str())
            .collect();
        if senses.len() > 1 {
            return Err(Error::Argument(format!("conflicting senses for {p}")));
        }
    }

    let mut per_problem = Vec::new();
    let mut pairs = Vec::new();
    for (i, a) in algorithms.iter().enumerate() {
        for b in &algorithms[i + 1..] {
            let mut counts = Counts::default();
            let (mut xs, mut ys) = (Vec::new(), Vec::new());
            for p in &problems {
                let ca = cells[&(p.as_str(), a.as_str())];
                let cb = cells[&(p.as_str(), b.as_str())];
                let test = wilcoxon(&ca.finals, &cb.finals, alpha, ca.sense, Method::Auto)
                    .map_err(|e| Error::Argument(format!("{p}: {a} vs {b}: {e}")))?;
                counts.add(test.verdict);
                let cost = |v: f64| ca.sense.to_cost(v);
                match mode {
                    PairingMode::AveragedBests => {
                        xs.push(cost(mean(&ca.finals)));
                        ys.push(cost(mean(&cb.finals)));
                    }
                    PairingMode::RawPairs => {
                        xs.extend(ca.finals.iter().map(|&v| cost(v)));
                        ys.extend(cb.finals.iter().map(|&v| cost(v)));
                    }
                }
                per_problem.push(ProblemComparison {
                    problem: p.clone(),
                    algorithm_a: a.clone(),
                    algorithm_b: b.clone(),
                    mean_a: mean(&ca.finals),
                    mean_b: mean(&cb.finals),
                    test,
                });
            }
            let test = wilcoxon(&xs, &ys, alpha, Sense::Minimize, Method::Auto)?;
            let favored = if test.t_plus > test.t_minus {
                Some(b.clone())
            } else if test.t_minus > test.t_plus {
                Some(a.clone())
            } else {
                None
            };
            pairs.push(PairwiseRow {
                algorithm_a: a.clone(),
                algorithm_b: b.clone(),
                pairs: xs.len(),
                test,
                favored,
                counts,
            });
        }
    }
    Ok(ComparisonTable {
        alpha,
        mode,
        algorithms,
        problems,
        per_problem,
        pairs,
    })
}

fn csv_string<T: Serialize>(rows: impl IntoIterator<Item = T>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("flush to vec")).expect("utf-8 csv")
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ProblemCsvRow {
    pub problem: String,
    pub algorithm_a: String,
    pub algorithm_b: String,
    pub mean_a: f64,
    pub mean_b: f64,
    pub t_plus: f64,
    pub t_minus: f64,
    pub n_effective: usize,
    pub p_value: f64,
    pub significant: bool,
    pub verdict: char,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PairCsvRow {
    pub algorithm_a: String,
    pub algorithm_b: String,
    pub pairs: usize,
    pub t_plus: f64,
    pub t_minus: f64,
    pub n_effective: usize,
    pub p_value: f64,
    pub verdict: char,
    pub favored: String,
    pub plus: usize,
    pub minus: usize,
    pub equal: usize,
}

impl ComparisonTable {
    pub fn problem_rows(&self) -> Vec<ProblemCsvRow> {
        self.per_problem
            .iter()
            .map(|c| ProblemCsvRow {
                problem: c.problem.clone(),
                algorithm_a: c.algorithm_a.clone(),
                algorithm_b: c.algorithm_b.clone(),
                mean_a: c.mean_a,
                mean_b: c.mean_b,
                t_plus: c.test.t_plus,
                t_minus: c.test.t_minus,
                n_effective: c.test.n_effective,
                p_value: c.test.p_value,
                significant: c.test.p_value < self.alpha,
                verdict: c.test.verdict.symbol(),
            })
            .collect()
    }

    pub fn pair_rows(&self) -> Vec<PairCsvRow> {
        self.pairs
            .iter()
            .map(|r| PairCsvRow {
                algorithm_a: r.algorithm_a.clone(),
                algorithm_b: r.algorithm_b.clone(),
                pairs: r.pairs,
                t_plus: r.test.t_plus,
                t_minus: r.test.t_minus,
                n_effective: r.test.n_effective,
                p_value: r.test.p_value,
                verdict: r.test.verdict.symbol(),
                favored: r.favored.clone().unwrap_or_default(),
                plus: r.counts.plus,
                minus: r.counts.minus,
                equal: r.counts.equal,
            })
            .collect()
    }

    pub fn per_problem_csv(&self) -> String {
        csv_string(self.problem_rows())
    }

    pub fn pairwise_csv(&self) -> String {
        csv_string(self.pair_rows())
    }

    /// Aligned plain-text report ending with a `+/-/=` counts line per pair.
    pub fn text_report(&self) -> String {
        let mut out = String::new();
        let pw = self.problems.iter().map(String::len).max().unwrap_or(7).max(7);
        let _ = writeln!(
            out,
            "Two-sided Wilcoxon signed-rank test, alpha = {}",
            self.alpha
        );
        for pair in &self.pairs {
            let (a, b) = (&pair.algorithm_a, &pair.algorithm_b);
            let _ = writeln!(out, "\n{b} vs {a}  (+: {b} better, -: {b} worse)");
            let _ = writeln!(
                out,
                "{:<pw$}  {:>14}  {:>14}  {:>8}  {:>8}  {:>10}  v",
                "problem", a, b, "T+", "T-", "p"
            );
            for c in self
                .per_problem
                .iter()
                .filter(|c| &c.algorithm_a == a && &c.algorithm_b == b)
            {
                let _ = writeln!(
                    out,
                    "{:<pw$}  {:>14.6e}  {:>14.6e}  {:>8}  {:>8}  {:>10.4e}  {}",
                    c.problem,
                    c.mean_a,
                    c.mean_b,
                    c.test.t_plus,
                    c.test.t_minus,
                    c.test.p_value,
                    c.test.verdict.symbol()
                );
            }
            let _ = writeln!(
                out,
                "+/-/= : {}/{}/{}",
                pair.counts.plus, pair.counts.minus, pair.counts.equal
            );
            let _ = writeln!(
                out,
                "across problems ({:?}, {} pairs): T+ = {}, T- = {}, p = {:.4e}, verdict {}{}",
                self.mode,
                pair.pairs,
                pair.test.t_plus,
                pair.test.t_minus,
                pair.test.p_value,
                pair.test.verdict.symbol(),
                match &pair.favored {
                    Some(f) => format!(", favors {f}"),
                    None => String::new(),
                }
            );
        }
        out
    }
}
