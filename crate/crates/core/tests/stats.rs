use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lab_core::stats::{
    pairwise_compare, summarize, two_sided, wilcoxon, wilcoxon_two_sided, Method, PairingMode,
    RunSummary, Verdict,
};
use lab_core::trace::{RunTrace, TerminationReason};
use lab_core::Sense;

/// Mid-ranks of |d| for nonzero differences, computed by counting.
fn naive_ranks(d: &[f64]) -> Vec<(f64, bool)> {
    let nz: Vec<f64> = d.iter().copied().filter(|&x| x != 0.0).collect();
    nz.iter()
        .map(|&x| {
            let below = nz.iter().filter(|y| y.abs() < x.abs()).count() as f64;
            let equal = nz.iter().filter(|y| y.abs() == x.abs()).count() as f64;
            (below + (equal + 1.0) / 2.0, x > 0.0)
        })
        .collect()
}

/// Two-sided p from all 2^n sign assignments of the observed ranks.
fn enumerate_p(d: &[f64]) -> f64 {
    let ranks = naive_ranks(d);
    let n = ranks.len();
    let t: f64 = ranks.iter().filter(|r| r.1).map(|r| r.0).sum();
    let (mut lo, mut hi) = (0u64, 0u64);
    for mask in 0u32..(1 << n) {
        let s: f64 = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| ranks[i].0).sum();
        lo += (s <= t + 1e-9) as u64;
        hi += (s >= t - 1e-9) as u64;
    }
    two_sided(lo, hi, n)
}

#[test]
fn hand_case_of_six() {
    let b = [0.0; 6];
    let a = [1.0, -2.0, 3.0, -4.0, 5.0, 6.0];
    let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
    assert_eq!((r.t_plus, r.t_minus), (15.0, 6.0));
    // 14 of the 64 sign patterns have a positive rank sum <= 6.
    assert_eq!(r.p_value, 28.0 / 64.0);
    assert!(r.exact);
    assert_eq!(r.verdict, Verdict::Equal);
}

#[test]
fn exact_matches_enumeration_with_ties() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.random_range(1..=12);
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(0..5) as f64).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(0..5) as f64).collect();
        let d: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        let r = wilcoxon(&a, &b, 0.05, Sense::Minimize, Method::Exact).unwrap();
        if r.n_effective == 0 {
            assert_eq!(r.p_value, 1.0);
            continue;
        }
        assert_eq!(r.p_value, enumerate_p(&d), "{d:?}");
        let tp: f64 = naive_ranks(&d).iter().filter(|r| r.1).map(|r| r.0).sum();
        assert_eq!(r.t_plus, tp);
    }
}

#[test]
fn normal_approximation_matches_reference() {
    // Reference: scipy.stats.wilcoxon(zero_method="wilcox", correction=True,
    // method="approx") -> statistic 46.5, p 0.005354741323075154.
    let a = [3., 5., 2., 8., 7., 7., 1., 4., 6., 9., 2., 5., 3., 8., 4., 6., 7., 1., 9., 5., 4., 3., 2., 6., 8.];
    let b = [1., 5., 4., 3., 2., 7., 3., 1., 2., 4., 6., 2., 2., 3., 1., 7., 2., 3., 1., 2., 6., 1., 4., 2., 3.];
    let r = wilcoxon(&a, &b, 0.05, Sense::Minimize, Method::Normal).unwrap();
    assert_eq!(r.t_plus.min(r.t_minus), 46.5);
    assert!((r.p_value - 0.005354741323075154).abs() < 1e-12, "{}", r.p_value);
    // a - b is mostly positive: b is smaller, hence better when minimizing.
    assert_eq!(r.verdict, Verdict::Plus);
    let m = wilcoxon(&a, &b, 0.05, Sense::Maximize, Method::Normal).unwrap();
    assert_eq!(m.verdict, Verdict::Minus);
}

#[test]
fn identical_and_shifted_samples() {
    let a: Vec<f64> = (0..10).map(|i| i as f64 * 0.3).collect();
    let r = wilcoxon_two_sided(&a, &a, 0.05).unwrap();
    assert_eq!((r.n_effective, r.verdict, r.p_value), (0, Verdict::Equal, 1.0));
    assert!(r.insufficient);

    let b: Vec<f64> = a.iter().map(|v| v + 1.0).collect();
    let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
    assert_eq!(r.t_plus, 0.0);
    assert_eq!(r.p_value, 2.0 / 1024.0);
    assert_eq!(r.verdict, Verdict::Minus);
}

#[test]
fn length_mismatch_is_an_error() {
    assert!(wilcoxon_two_sided(&[1.0, 2.0], &[1.0], 0.05).is_err());
}

fn trace(best: f64, seed: u64, sense: Sense) -> RunTrace {
    RunTrace {
        algorithm: "A".into(),
        problem: "P".into(),
        sense,
        seed,
        records: vec![],
        best_fitness: best,
        best_position: vec![best],
        function_evaluations: 100,
        termination: TerminationReason::MaxIterations,
    }
}

#[test]
fn summary_examples() {
    let s = summarize(&[trace(1.0, 0, Sense::Minimize), trace(2.0, 1, Sense::Minimize), trace(3.0, 2, Sense::Minimize)])
        .unwrap();
    assert_eq!((s.best, s.mean, s.std_dev, s.num_runs), (1.0, 2.0, 1.0, 3));
    let s = summarize(&[trace(4.0, 0, Sense::Maximize)]).unwrap();
    assert_eq!((s.best, s.mean, s.std_dev), (4.0, 4.0, 0.0));
    let s = summarize(&[5.0, 5.0, 5.0].map(|v| trace(v, 0, Sense::Minimize))).unwrap();
    assert_eq!((s.best, s.std_dev), (5.0, 0.0));
    let s = summarize(&[1.0, 9.0, 4.0].map(|v| trace(v, 0, Sense::Maximize))).unwrap();
    assert_eq!((s.best, s.worst), (9.0, 1.0));
    assert!(s.best >= s.mean);
    assert!(summarize(&[]).is_err());
}

fn cell(problem: &str, algorithm: &str, finals: Vec<f64>) -> RunSummary {
    let traces: Vec<RunTrace> = finals
        .iter()
        .enumerate()
        .map(|(i, &v)| RunTrace {
            problem: problem.into(),
            algorithm: algorithm.into(),
            ..trace(v, i as u64, Sense::Minimize)
        })
        .collect();
    summarize(&traces).unwrap()
}

#[test]
fn planted_advantage_is_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    let mut summaries = Vec::new();
    for p in 0..27 {
        let problem = format!("P{p}");
        let scale = 10f64.powi(p % 5);
        let base: Vec<f64> = (0..30).map(|_| scale * (1.0 + rng.random::<f64>())).collect();
        // B is 20% better everywhere, plus its own noise.
        let better: Vec<f64> = base
            .iter()
            .map(|v| 0.8 * v + 0.05 * scale * rng.random::<f64>())
            .collect();
        let noisy: Vec<f64> = base.iter().map(|v| v + 0.01 * scale * rng.random::<f64>()).collect();
        summaries.push(cell(&problem, "A", base.clone()));
        summaries.push(cell(&problem, "B", better));
        summaries.push(cell(&problem, "C", noisy));
    }
    let t = pairwise_compare(&summaries, 0.05, PairingMode::AveragedBests).unwrap();
    assert_eq!(t.algorithms, ["A", "B", "C"]);
    let ab = &t.pairs[0];
    assert_eq!((ab.algorithm_a.as_str(), ab.algorithm_b.as_str()), ("A", "B"));
    assert_eq!(ab.test.verdict, Verdict::Plus);
    assert_eq!(ab.favored.as_deref(), Some("B"));
    assert_eq!(ab.counts.plus, 27);
    let bc = &t.pairs[2];
    assert_eq!(bc.test.verdict, Verdict::Minus);
    assert_eq!(bc.counts.total(), 27);
    let raw = pairwise_compare(&summaries, 0.05, PairingMode::RawPairs).unwrap();
    assert_eq!(raw.pairs[0].pairs, 27 * 30);
    assert_eq!(raw.pairs[0].test.verdict, Verdict::Plus);
    assert!(t.text_report().contains("+/-/="));
}

#[test]
fn self_comparison_is_all_equal() {
    let mut s = Vec::new();
    for p in ["P1", "P2", "P3"] {
        let finals: Vec<f64> = (0..30).map(|i| (i * i % 11) as f64).collect();
        s.push(cell(p, "LAB", finals.clone()));
        s.push(cell(p, "LAB2", finals));
    }
    let t = pairwise_compare(&s, 0.05, PairingMode::AveragedBests).unwrap();
    assert_eq!(t.pairs[0].counts.equal, 3);
    assert_eq!(t.pairs[0].test.verdict, Verdict::Equal);
}

#[test]
fn missing_cells_are_listed() {
    let s = vec![
        cell("P1", "A", vec![1.0; 5]),
        cell("P2", "A", vec![1.0; 5]),
        cell("P1", "B", vec![2.0; 5]),
    ];
    let err = pairwise_compare(&s, 0.05, PairingMode::AveragedBests)
        .unwrap_err()
        .to_string();
    assert!(err.contains("B on P2"), "{err}");
}
