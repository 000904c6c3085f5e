//! On-disk formats: trace CSV with a `# key=value` preamble, JSON
//! summaries and oracle records, and plot-ready convergence tables.
//!
//! Floats are written in their shortest round-trip form, so every file
//! parses back to the exact values it was written from. Wall-clock time is
//! kept out of trace files so reruns are byte-identical; it goes to
//! `timings.csv` and the summary instead.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Sense;
use crate::stats::{quantile, RunSummary};
use crate::trace::{IterationRecord, RunTrace};

pub const SUMMARY_FILE: &str = "summary.json";
pub const CONVERGENCE_FILE: &str = "convergence.csv";
pub const CONVERGENCE_STATS_FILE: &str = "convergence_stats.csv";
pub const TIMINGS_FILE: &str = "timings.csv";

pub fn trace_file_name(seed: u64) -> String {
    format!("trace_seed{seed}.csv")
}

/// Directory name for a problem id; `:` is not portable in file names.
pub fn problem_dir_name(problem: &str) -> String {
    problem.replace([':', '/', '\\'], "-")
}

/// Shortest representation that parses back to the same bits; uses
/// exponent notation for very large or small magnitudes.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|&x| fmt_f64(x)).collect::<Vec<_>>().join(";")
}

fn split(s: &str) -> std::result::Result<Vec<f64>, std::num::ParseFloatError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(str::parse).collect()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
    }
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

/// Renders a trace as CSV. Columns: `iteration, global_best, best_so_far,
/// leader_g1..leader_gG, x1..xN` where `x` is the best-so-far position.
pub fn trace_to_csv(trace: &RunTrace) -> String {
    let mut out = String::new();
    let meta = [
        ("problem", trace.problem.clone()),
        ("algorithm", trace.algorithm.clone()),
        ("seed", trace.seed.to_string()),
        ("sense", trace.sense.to_string()),
        ("evaluations", trace.function_evaluations.to_string()),
        ("termination", trace.termination.to_string()),
        ("best", fmt_f64(trace.best_fitness)),
        ("best_position", join(&trace.best_position)),
    ];
    for (k, v) in meta {
        out.push_str(&format!("# {k}={v}\n"));
    }
    let groups = trace.num_leaders();
    let dim = trace.best_position.len();
    let mut header = vec!["iteration".to_string(), "global_best".into(), "best_so_far".into()];
    header.extend((1..=groups).map(|g| format!("leader_g{g}")));
    header.extend((1..=dim).map(|i| format!("x{i}")));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in &trace.records {
        let mut row = vec![
            r.iteration.to_string(),
            fmt_f64(r.global_best),
            fmt_f64(r.best_so_far),
        ];
        row.extend(r.leaders.iter().map(|&x| fmt_f64(x)));
        row.extend(r.best_position.iter().map(|&x| fmt_f64(x)));
        w.write_record(&row).expect("in-memory write");
    }
    out.push_str(&String::from_utf8(w.into_inner().expect("flush")).expect("utf-8"));
    out
}

pub fn trace_from_csv(text: &str, path: &Path) -> Result<RunTrace> {
    let bad = |reason: String| Error::format(path, reason);
    let mut meta = std::collections::HashMap::new();
    let mut body = String::new();
    for line in text.lines() {
        if let Some(kv) = line.strip_prefix("# ") {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| bad(format!("preamble line `{line}`")))?;
            meta.insert(k.to_string(), v.to_string());
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    let get = |k: &str| {
        meta.get(k)
            .map(String::as_str)
            .ok_or_else(|| bad(format!("missing `{k}` in preamble")))
    };
    let num = |k: &str| -> Result<f64> { get(k)?.parse().map_err(|e| bad(format!("{k}: {e}"))) };
    let int = |k: &str| -> Result<u64> { get(k)?.parse().map_err(|e| bad(format!("{k}: {e}"))) };

    let mut reader = csv::Reader::from_reader(body.as_bytes());
    let header = reader.headers().map_err(|e| bad(e.to_string()))?.clone();
    let groups = header.iter().filter(|h| h.starts_with("leader_g")).count();
    let dim = header.iter().filter(|h| h.starts_with('x')).count();
    if header.len() != 3 + groups + dim {
        return Err(bad(format!("unexpected columns {header:?}")));
    }
    let mut records = Vec::new();
    for row in reader.records() {
        let row = row.map_err(|e| bad(e.to_string()))?;
        let f = |i: usize| -> Result<f64> {
            row[i].parse().map_err(|e| bad(format!("column {}: {e}", i + 1)))
        };
        let floats = |from: usize, n: usize| (from..from + n).map(f).collect::<Result<Vec<_>>>();
        records.push(IterationRecord {
            iteration: row[0].parse().map_err(|e| bad(format!("iteration: {e}")))?,
            global_best: f(1)?,
            best_so_far: f(2)?,
            leaders: floats(3, groups)?,
            best_position: floats(3 + groups, dim)?,
            elapsed_seconds: 0.0,
        });
    }
    Ok(RunTrace {
        algorithm: get("algorithm")?.to_string(),
        problem: get("problem")?.to_string(),
        sense: get("sense")?.parse()?,
        seed: int("seed")?,
        records,
        best_fitness: num("best")?,
        best_position: split(get("best_position")?).map_err(|e| bad(e.to_string()))?,
        function_evaluations: int("evaluations")?,
        termination: get("termination")?.parse().map_err(bad)?,
    })
}

pub fn write_trace(trace: &RunTrace, path: &Path) -> Result<()> {
    write_file(path, &trace_to_csv(trace))
}

pub fn read_trace(path: &Path) -> Result<RunTrace> {
    trace_from_csv(&read_file(path)?, path)
}

pub fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::format(path, e))?;
    s.push('\n');
    write_file(path, &s)
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    serde_json::from_str(&read_file(path)?).map_err(|e| Error::format(path, e))
}

/// Long-format convergence table: one row per (seed, iteration), i.e.
/// `iterations + 1` rows per run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub seed: u64,
    pub iteration: usize,
    pub global_best: f64,
    pub best_so_far: f64,
}

/// Per-iteration quantiles of best-so-far across runs. Runs that stopped
/// early contribute their final value to later iterations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceStatsRow {
    pub iteration: usize,
    pub runs_active: usize,
    pub min: f64,
    pub q25: f64,
    pub median: f64,
    pub q75: f64,
    pub max: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimingRow {
    pub seed: u64,
    pub iterations: usize,
    pub evaluations: u64,
    pub termination: String,
    pub best: f64,
    pub elapsed_s: f64,
}

pub fn convergence_rows(traces: &[RunTrace]) -> Vec<ConvergenceRow> {
    traces
        .iter()
        .flat_map(|t| {
            t.records.iter().map(|r| ConvergenceRow {
                seed: t.seed,
                iteration: r.iteration,
                global_best: r.global_best,
                best_so_far: r.best_so_far,
            })
        })
        .collect()
}

pub fn convergence_stats(traces: &[RunTrace]) -> Vec<ConvergenceStatsRow> {
    let len = traces.iter().map(|t| t.records.len()).max().unwrap_or(0);
    (0..len)
        .map(|i| {
            let vals: Vec<f64> = traces
                .iter()
                .filter_map(|t| t.records.get(i).or(t.records.last()))
                .map(|r| r.best_so_far)
                .collect();
            ConvergenceStatsRow {
                iteration: i,
                runs_active: traces.iter().filter(|t| i < t.records.len()).count(),
                min: quantile(&vals, 0.0),
                q25: quantile(&vals, 0.25),
                median: quantile(&vals, 0.5),
                q75: quantile(&vals, 0.75),
                max: quantile(&vals, 1.0),
            }
        })
        .collect()
}

pub fn timing_rows(traces: &[RunTrace]) -> Vec<TimingRow> {
    traces
        .iter()
        .map(|t| TimingRow {
            seed: t.seed,
            iterations: t.iterations(),
            evaluations: t.function_evaluations,
            termination: t.termination.to_string(),
            best: t.best_fitness,
            elapsed_s: t.elapsed_seconds(),
        })
        .collect()
}

pub fn write_csv<T: Serialize>(rows: &[T], path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| Error::format(path, e))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::format(path, e))?;
    write_file(path, &String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn read_csv<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let text = read_file(path)?;
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<T>, _>>()
        .map_err(|e| Error::format(path, e))
}

/// Parameters recorded next to a summary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSetInfo {
    pub algorithm: String,
    pub problem: String,
    pub sense: Sense,
    pub base_seed: u64,
    pub runs: usize,
    /// Algorithm settings as given on the command line or in code.
    pub settings: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryFile {
    pub info: RunSetInfo,
    pub summary: RunSummary,
}

/// Files written for one (algorithm, problem) batch.
#[derive(Debug, Clone)]
pub struct RunSetPaths {
    pub dir: PathBuf,
    pub traces: Vec<PathBuf>,
    pub summary: PathBuf,
    pub convergence: PathBuf,
    pub convergence_stats: PathBuf,
    pub timings: PathBuf,
}

/// Writes traces, summary, convergence tables and timings under
/// `root/<problem>/`.
pub fn write_run_set(
    root: &Path,
    traces: &[RunTrace],
    summary: &RunSummary,
    info: &RunSetInfo,
) -> Result<RunSetPaths> {
    let dir = root.join(problem_dir_name(&summary.problem));
    fs::create_dir_all(&dir).map_err(|e| Error::io(&dir, e))?;
    let mut trace_paths = Vec::with_capacity(traces.len());
    for t in traces {
        let p = dir.join(trace_file_name(t.seed));
        write_trace(t, &p)?;
        trace_paths.push(p);
    }
    let paths = RunSetPaths {
        summary: dir.join(SUMMARY_FILE),
        convergence: dir.join(CONVERGENCE_FILE),
        convergence_stats: dir.join(CONVERGENCE_STATS_FILE),
        timings: dir.join(TIMINGS_FILE),
        traces: trace_paths,
        dir,
    };
    write_json(
        &SummaryFile {
            info: info.clone(),
            summary: summary.clone(),
        },
        &paths.summary,
    )?;
    write_csv(&convergence_rows(traces), &paths.convergence)?;
    write_csv(&convergence_stats(traces), &paths.convergence_stats)?;
    write_csv(&timing_rows(traces), &paths.timings)?;
    Ok(paths)
}

/// Reads every `*/summary.json` directly under `root`, sorted by problem.
pub fn read_result_set(root: &Path) -> Result<Vec<SummaryFile>> {
    let entries = fs::read_dir(root).map_err(|e| Error::io(root, e))?;
    let mut out = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| Error::io(root, e))?;
        let path = entry.path().join(SUMMARY_FILE);
        if path.is_file() {
            out.push(read_json::<SummaryFile>(&path)?);
        }
    }
    if out.is_empty() {
        return Err(Error::Argument(format!(
            "no {SUMMARY_FILE} found under {}",
            root.display()
        )));
    }
    out.sort_by(|a, b| a.summary.problem.cmp(&b.summary.problem));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trace::TerminationReason;

    fn sample() -> RunTrace {
        RunTrace {
            algorithm: "LAB".into(),
            problem: "milling:ra:0.7mm".into(),
            sense: Sense::Minimize,
            seed: 7,
            records: vec![
                IterationRecord {
                    iteration: 0,
                    global_best: 0.1 + 0.2,
                    best_so_far: 0.1 + 0.2,
                    leaders: vec![0.30000000000000004, 1e-300],
                    best_position: vec![1500.0, 1.0 / 3.0],
                    elapsed_seconds: 0.0,
                },
                IterationRecord {
                    iteration: 1,
                    global_best: -2.5e-12,
                    best_so_far: -2.5e-12,
                    leaders: vec![-2.5e-12, 7.0],
                    best_position: vec![2500.0, 3.0],
                    elapsed_seconds: 0.0,
                },
            ],
            best_fitness: -2.5e-12,
            best_position: vec![2500.0, 3.0],
            function_evaluations: 40,
            termination: TerminationReason::MaxIterations,
        }
    }

    #[test]
    fn trace_round_trip() {
        let t = sample();
        let text = trace_to_csv(&t);
        assert!(text.starts_with("# problem=milling:ra:0.7mm\n"));
        assert!(text.contains("iteration,global_best,best_so_far,leader_g1,leader_g2,x1,x2\n"));
        let back = trace_from_csv(&text, Path::new("t.csv")).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn baseline_trace_round_trip() {
        let mut t = sample();
        for r in &mut t.records {
            r.leaders.clear();
        }
        let back = trace_from_csv(&trace_to_csv(&t), Path::new("t.csv")).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn malformed_preamble() {
        let err = trace_from_csv("# nonsense\niteration\n", Path::new("bad.csv")).unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
    }

    #[test]
    fn convergence_shapes() {
        let mut short = sample();
        short.records.truncate(1);
        short.seed = 8;
        let ts = [sample(), short];
        assert_eq!(convergence_rows(&ts).len(), 3);
        let stats = convergence_stats(&ts);
        assert_eq!(stats.len(), 2);
        assert_eq!(stats[1].runs_active, 1);
        assert_eq!(stats[1].min, -2.5e-12);
        assert_eq!(stats[1].max, 0.1 + 0.2);
    }

    #[test]
    fn dir_names() {
        assert_eq!(problem_dir_name("drilling:bh:0.5mm"), "drilling-bh-0.5mm");
        assert_eq!(problem_dir_name("F10"), "F10");
    }
}
