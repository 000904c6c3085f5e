//! `lab` — run LAB and the baseline optimizers on the benchmark and
//! machining problems, compare result sets and compute grid oracles.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lab_core::io::{self, RunSetInfo};
use lab_core::machining::{self, grid_oracle};
use lab_core::selector::{resolve, ProblemFamily};
use lab_core::stats::{self, pairwise_compare, PairingMode, RunSummary};
use lab_core::{benchmarks, run_batch, Algorithm, BatchConfig, LabConfig};

/// Root for outputs when `--out` is not given.
const OUT_ENV: &str = "LAB_OUT_DIR";
const DEFAULT_OUT: &str = "results";

#[derive(Parser)]
#[command(name = "lab", version, about = "Leader-Advocate-Believer optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the benchmark and machining problems.
    ListProblems {
        #[arg(long, value_enum, default_value_t = ProblemSet::All)]
        set: ProblemSet,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run one algorithm on one or more problems over consecutive seeds.
    Run(RunArgs),
    /// Signed-rank comparison of two or more result directories.
    Compare {
        /// Result directories written by `run`, one per algorithm. Each is
        /// labelled by its directory name.
        #[arg(required = true, num_args = 2..)]
        dirs: Vec<PathBuf>,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
        /// Pair every run of every problem instead of per-problem mean bests.
        #[arg(long)]
        raw_pairs: bool,
        /// Report directory [default: $LAB_OUT_DIR/comparison].
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive grid optimum of machining problems.
    Oracle {
        /// Machining selector: `turning:fb`, comma lists or `all-machining`.
        #[arg(long)]
        problem: String,
        /// Grid points per axis, bounds included.
        #[arg(long, default_value_t = 51)]
        points: usize,
        /// Output directory [default: $LAB_OUT_DIR/oracle].
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    /// Problem selector: `F10`, `F44-d5`, `awjm:kerf`, comma lists,
    /// `all-benchmarks`, `all-machining` or `all`.
    #[arg(long)]
    problem: String,
    /// lab, random, sa or pso.
    #[arg(long, default_value = "lab")]
    algo: Algorithm,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    /// First seed; run i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 4)]
    groups: usize,
    #[arg(long, default_value_t = 5)]
    group_size: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 20)]
    stall_window: usize,
    #[arg(long, default_value_t = 1e-6)]
    stall_epsilon: f64,
    /// Keep the better of old and new position instead of always moving.
    #[arg(long)]
    greedy: bool,
    /// Evaluation budget for baselines [default: groups * group_size * (iters + 1)].
    #[arg(long)]
    budget: Option<u64>,
    /// Result directory [default: $LAB_OUT_DIR/<ALGO>].
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProblemSet {
    Benchmarks,
    Machining,
    All,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

/// Writes to stdout; a closed pipe (`lab ... | head`) ends the process quietly.
fn emit(text: &str) -> Result<()> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    match stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => std::process::exit(0),
        r => Ok(r?),
    }
}

macro_rules! out {
    ($($t:tt)*) => { emit(&format!($($t)*))? };
}

macro_rules! outln {
    ($($t:tt)*) => { emit(&format!("{}\n", format_args!($($t)*)))? };
}

fn out_root() -> PathBuf {
    std::env::var_os(OUT_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
}

fn csv_string<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn join(xs: &[f64]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

#[derive(Serialize)]
struct CatalogRow {
    id: String,
    family: &'static str,
    name: String,
    dim: usize,
    lower: Vec<f64>,
    upper: Vec<f64>,
    sense: String,
    /// Benchmark type tag, or the machining variables.
    kind: String,
    known_best: Option<f64>,
}

#[derive(Serialize)]
struct FlatCatalogRow<'a> {
    id: &'a str,
    family: &'a str,
    name: &'a str,
    dim: usize,
    lower: String,
    upper: String,
    sense: &'a str,
    kind: &'a str,
    known_best: Option<f64>,
}

fn catalog(set: ProblemSet) -> Vec<CatalogRow> {
    let mut rows = Vec::new();
    if !matches!(set, ProblemSet::Machining) {
        for s in benchmarks::registry() {
            rows.push(CatalogRow {
                id: s.id.to_string(),
                family: "benchmark",
                name: s.name.to_string(),
                dim: s.dim,
                lower: s.problem.lower().to_vec(),
                upper: s.problem.upper().to_vec(),
                sense: s.problem.sense().to_string(),
                kind: s.type_tag(),
                known_best: s.known_best,
            });
        }
    }
    if !matches!(set, ProblemSet::Benchmarks) {
        for s in machining::machining_registry() {
            let e = s.catalog_entry();
            let name = match &e.tool_variant {
                Some(t) => format!("{} {} ({t})", s.process, e.response),
                None => format!("{} {}", s.process, e.response),
            };
            rows.push(CatalogRow {
                id: e.id,
                family: "machining",
                name,
                dim: s.dim(),
                lower: e.lower,
                upper: e.upper,
                sense: e.sense.to_string(),
                kind: e.variables.join("; "),
                known_best: None,
            });
        }
    }
    rows
}

fn list_problems(set: ProblemSet, format: Format) -> Result<()> {
    let rows = catalog(set);
    match format {
        Format::Json => outln!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Csv => {
            let flat: Vec<_> = rows
                .iter()
                .map(|r| FlatCatalogRow {
                    id: &r.id,
                    family: r.family,
                    name: &r.name,
                    dim: r.dim,
                    lower: join(&r.lower),
                    upper: join(&r.upper),
                    sense: &r.sense,
                    kind: &r.kind,
                    known_best: r.known_best,
                })
                .collect();
            out!("{}", csv_string(&flat)?);
        }
        Format::Text => {
            outln!("{:<20} {:<10} {:<34} {:>3}  {:<8}  bounds", "id", "family", "name", "dim", "sense");
            for r in &rows {
                let bounds = if r.lower.iter().all(|&l| l == r.lower[0])
                    && r.upper.iter().all(|&u| u == r.upper[0])
                {
                    format!("[{}, {}]", r.lower[0], r.upper[0])
                } else {
                    r.lower
                        .iter()
                        .zip(&r.upper)
                        .map(|(l, u)| format!("[{l}, {u}]"))
                        .collect::<Vec<_>>()
                        .join(" x ")
                };
                outln!(
                    "{:<20} {:<10} {:<34} {:>3}  {:<8}  {bounds}",
                    r.id, r.family, r.name, r.dim, r.sense
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SummaryRow<'a> {
    problem: &'a str,
    algorithm: &'a str,
    runs: usize,
    best: f64,
    mean: f64,
    std_dev: f64,
    median: f64,
    worst: f64,
    mean_evaluations: f64,
    mean_runtime_s: f64,
    dir: String,
}

fn run(args: RunArgs) -> Result<()> {
    let lab = LabConfig {
        num_groups: args.groups,
        group_size: args.group_size,
        max_iterations: args.iters,
        stall_window: args.stall_window,
        stall_epsilon: args.stall_epsilon,
        greedy_acceptance: args.greedy,
        seed: args.seed,
    };
    let mut cfg = BatchConfig::new(args.algo, args.runs, args.seed).with_lab(lab);
    if let Some(b) = args.budget {
        cfg.baseline.budget = b;
    }
    cfg.validate()?;
    let problems = resolve(&args.problem)?;
    let out = args.out.unwrap_or_else(|| out_root().join(args.algo.name()));

    let mut written: Vec<(RunSummary, PathBuf)> = Vec::new();
    for rp in &problems {
        let started = Instant::now();
        let traces = run_batch(&rp.problem, &cfg)
            .with_context(|| format!("running {} on {}", args.algo, rp.id()))?;
        let summary = stats::summarize(&traces)?;
        let info = RunSetInfo {
            algorithm: args.algo.name().to_string(),
            problem: rp.id().to_string(),
            sense: rp.problem.sense(),
            base_seed: args.seed,
            runs: args.runs,
            settings: cfg.settings_json(),
        };
        let paths = io::write_run_set(&out, &traces, &summary, &info)?;
        if args.format == Format::Text {
            outln!(
                "{:<20} {:<12} best {:<14.8e} mean {:<14.8e} std {:<10.3e} ({} runs, {:.2}s) -> {}",
                rp.id(),
                args.algo.name(),
                summary.best,
                summary.mean,
                summary.std_dev,
                summary.num_runs,
                started.elapsed().as_secs_f64(),
                paths.dir.display()
            );
        }
        written.push((summary, paths.dir));
    }
    let rows: Vec<SummaryRow> = written
        .iter()
        .map(|(s, dir)| SummaryRow {
            problem: &s.problem,
            algorithm: &s.algorithm,
            runs: s.num_runs,
            best: s.best,
            mean: s.mean,
            std_dev: s.std_dev,
            median: s.median,
            worst: s.worst,
            mean_evaluations: s.mean_function_evaluations,
            mean_runtime_s: s.mean_runtime_seconds,
            dir: dir.display().to_string(),
        })
        .collect();
    match args.format {
        Format::Text => {}
        Format::Csv => out!("{}", csv_string(&rows)?),
        Format::Json => outln!("{}", serde_json::to_string_pretty(&rows)?),
    }
    Ok(())
}

fn label(dir: &Path) -> Result<String> {
    let canonical = dir
        .canonicalize()
        .with_context(|| format!("result directory {}", dir.display()))?;
    Ok(canonical
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| canonical.display().to_string()))
}

fn compare(
    dirs: &[PathBuf],
    alpha: f64,
    raw_pairs: bool,
    out: Option<PathBuf>,
    format: Format,
) -> Result<()> {
    let mut sets: Vec<(String, Vec<RunSummary>)> = Vec::new();
    for dir in dirs {
        let name = label(dir)?;
        if sets.iter().any(|(n, _)| *n == name) {
            bail!("two result directories are both named `{name}`; rename one to tell them apart");
        }
        let summaries = io::read_result_set(dir)?
            .into_iter()
            .map(|f| RunSummary {
                algorithm: name.clone(),
                ..f.summary
            })
            .collect();
        sets.push((name, summaries));
    }

    let problems = |s: &[RunSummary]| s.iter().map(|r| r.problem.clone()).collect::<BTreeSet<_>>();
    let all: BTreeSet<String> = sets.iter().flat_map(|(_, s)| problems(s)).collect();
    let mut gaps = Vec::new();
    for (name, s) in &sets {
        let have = problems(s);
        let missing: Vec<_> = all.difference(&have).cloned().collect();
        if !missing.is_empty() {
            gaps.push(format!("{name} lacks {}", missing.join(", ")));
        }
    }
    if !gaps.is_empty() {
        bail!("result sets cover different problems: {}", gaps.join("; "));
    }

    let mode = if raw_pairs {
        PairingMode::RawPairs
    } else {
        PairingMode::AveragedBests
    };
    let flat: Vec<RunSummary> = sets.into_iter().flat_map(|(_, s)| s).collect();
    let table = pairwise_compare(&flat, alpha, mode)?;

    let out = out.unwrap_or_else(|| out_root().join("comparison"));
    fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
    let report = table.text_report();
    io::write_csv(&table.problem_rows(), &out.join("per_problem.csv"))?;
    io::write_csv(&table.pair_rows(), &out.join("pairwise.csv"))?;
    io::write_json(&table, &out.join("comparison.json"))?;
    fs::write(out.join("report.txt"), &report)?;
    match format {
        Format::Text => out!("{report}"),
        Format::Csv => out!("{}", table.pairwise_csv()),
        Format::Json => outln!("{}", serde_json::to_string_pretty(&table)?),
    }
    Ok(())
}

fn oracle(selector: &str, points: usize, out: Option<PathBuf>, format: Format) -> Result<()> {
    let problems = resolve(selector)?;
    if let Some(p) = problems.iter().find(|p| p.family != ProblemFamily::Machining) {
        bail!("`{}` is not a machining problem; grid oracles cover machining models only", p.id());
    }
    let out = out.unwrap_or_else(|| out_root().join("oracle"));
    let mut results = Vec::new();
    for p in &problems {
        let spec = machining::lookup(p.id()).expect("resolved machining id");
        let r = grid_oracle(&spec, points)?;
        let path = out.join(format!("{}_{points}.json", io::problem_dir_name(p.id())));
        io::write_json(&r, &path)?;
        if format == Format::Text {
            outln!(
                "{:<20} {:<8} {:.10e} at {:?} ({} points) -> {}",
                r.problem,
                spec.sense,
                r.value,
                r.point,
                r.evaluations,
                path.display()
            );
        }
        results.push(r);
    }
    match format {
        Format::Text => {}
        Format::Json => outln!("{}", serde_json::to_string_pretty(&results)?),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row<'a> {
                problem: &'a str,
                value: f64,
                point: String,
                points_per_axis: usize,
                evaluations: u64,
            }
            let rows: Vec<Row> = results
                .iter()
                .map(|r| Row {
                    problem: &r.problem,
                    value: r.value,
                    point: join(&r.point),
                    points_per_axis: r.points_per_axis,
                    evaluations: r.evaluations,
                })
                .collect();
            out!("{}", csv_string(&rows)?);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::ListProblems { set, format } => list_problems(set, format),
        Command::Run(args) => run(args),
        Command::Compare {
            dirs,
            alpha,
            raw_pairs,
            out,
            format,
        } => compare(&dirs, alpha, raw_pairs, out, format),
        Command::Oracle {
            problem,
            points,
            out,
            format,
        } => oracle(&problem, points, out, format),
    }
}
