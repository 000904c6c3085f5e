use std::fs;

use lab_core::io::{self, ConvergenceRow, ConvergenceStatsRow, RunSetInfo, SummaryFile, TimingRow};
use lab_core::stats::summarize;
use lab_core::{benchmarks, machining, run_batch, Algorithm, BatchConfig, LabConfig, Problem};

fn write_set(root: &std::path::Path, problem: &Problem, cfg: &BatchConfig) -> io::RunSetPaths {
    let traces = run_batch(problem, cfg).unwrap();
    let summary = summarize(&traces).unwrap();
    let info = RunSetInfo {
        algorithm: cfg.algorithm.name().into(),
        problem: problem.name().into(),
        sense: problem.sense(),
        base_seed: cfg.base_seed,
        runs: cfg.runs,
        settings: cfg.settings_json(),
    };
    io::write_run_set(root, &traces, &summary, &info).unwrap()
}

#[test]
fn run_set_layout_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let problem = machining::lookup("drilling:bh:0.5mm").unwrap().problem;
    let cfg = BatchConfig::new(Algorithm::Lab, 4, 100);
    let paths = write_set(dir.path(), &problem, &cfg);
    assert_eq!(paths.dir, dir.path().join("drilling-bh-0.5mm"));
    let names: Vec<String> = paths
        .traces
        .iter()
        .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
        .collect();
    assert_eq!(names, ["trace_seed100.csv", "trace_seed101.csv", "trace_seed102.csv", "trace_seed103.csv"]);

    let traces = run_batch(&problem, &cfg).unwrap();
    for (t, p) in traces.iter().zip(&paths.traces) {
        assert_eq!(io::read_trace(p).unwrap(), t.clone().without_timing());
        let text = fs::read_to_string(p).unwrap();
        assert!(text.contains("\niteration,global_best,best_so_far,leader_g1,leader_g2,leader_g3,leader_g4,x1,x2\n"));
    }

    let conv: Vec<ConvergenceRow> = io::read_csv(&paths.convergence).unwrap();
    let expected: usize = traces.iter().map(|t| t.iterations() + 1).sum();
    assert_eq!(conv.len(), expected);
    for t in &traces {
        let rows = conv.iter().filter(|r| r.seed == t.seed).count();
        assert_eq!(rows, t.iterations() + 1);
    }
    let stats: Vec<ConvergenceStatsRow> = io::read_csv(&paths.convergence_stats).unwrap();
    let longest = traces.iter().map(|t| t.iterations()).max().unwrap();
    assert_eq!(stats.len(), longest + 1);
    assert!(stats.iter().all(|r| r.min <= r.q25 && r.q25 <= r.median && r.median <= r.q75 && r.q75 <= r.max));
    let timings: Vec<TimingRow> = io::read_csv(&paths.timings).unwrap();
    assert_eq!(timings.len(), 4);
    assert!(timings.iter().all(|t| t.elapsed_s >= 0.0));

    let sets = io::read_result_set(dir.path()).unwrap();
    assert_eq!(sets.len(), 1);
    let SummaryFile { info, summary } = &sets[0];
    assert_eq!(info.runs, 4);
    assert_eq!(summary.seeds, vec![100, 101, 102, 103]);
    assert_eq!(summary.finals, traces.iter().map(|t| t.best_fitness).collect::<Vec<_>>());
    let back: LabConfig = serde_json::from_value(info.settings.clone()).unwrap();
    assert_eq!(back, cfg.lab);
}

#[test]
fn single_seed_reruns_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let problem = benchmarks::lookup("F32").unwrap().problem;
    for algo in Algorithm::ALL {
        let cfg = BatchConfig::new(algo, 1, 5);
        let pa = write_set(a.path(), &problem, &cfg);
        let pb = write_set(b.path(), &problem, &cfg);
        for (x, y) in [(&pa.traces[0], &pb.traces[0]), (&pa.convergence, &pb.convergence)] {
            assert_eq!(fs::read(x).unwrap(), fs::read(y).unwrap(), "{algo}");
        }
    }
}

#[test]
fn baseline_traces_have_no_leader_columns() {
    let dir = tempfile::tempdir().unwrap();
    let problem = machining::lookup("edm:mrr").unwrap().problem;
    let paths = write_set(dir.path(), &problem, &BatchConfig::new(Algorithm::ParticleSwarm, 1, 0));
    let text = fs::read_to_string(&paths.traces[0]).unwrap();
    assert!(text.contains("# sense=maximize\n"));
    assert!(text.contains("\niteration,global_best,best_so_far,x1,x2,x3,x4\n"));
    let t = io::read_trace(&paths.traces[0]).unwrap();
    assert_eq!(t.num_leaders(), 0);
    assert_eq!(t.function_evaluations, 2020);
}

#[test]
fn malformed_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.csv");
    fs::write(&p, "# problem=F1\niteration,global_best\n0,1.0\n").unwrap();
    assert!(io::read_trace(&p).is_err());
    fs::write(&p, "not json").unwrap();
    assert!(io::read_json::<SummaryFile>(&p).is_err());
    assert!(io::read_result_set(dir.path()).is_err());
    assert!(io::read_trace(&dir.path().join("missing.csv")).is_err());
}

#[test]
fn problem_dir_names_are_path_safe() {
    assert_eq!(io::problem_dir_name("milling:ra:0.7mm"), "milling-ra-0.7mm");
    assert_eq!(io::problem_dir_name("F44-d5"), "F44-d5");
    assert_eq!(io::trace_file_name(42), "trace_seed42.csv");
}
