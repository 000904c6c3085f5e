use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lab_core::benchmarks::{self, BenchmarkOptions, Separability};
use lab_core::grid::grid_search;
use lab_core::lab::{
    self, advocate_move, believer_move, leader_move, sample_weights, Group, Individual,
    LabEngine, Role, RoleWeights,
};
use lab_core::machining;
use lab_core::stats::{wilcoxon, wilcoxon_two_sided, Method, SignedRanks};
use lab_core::{clamp_to_bounds, LabConfig, Problem, Sense};

fn problems() -> Vec<Problem> {
    let mut v: Vec<Problem> = ["F1", "F10", "F19", "F21", "F35", "F43", "F50"]
        .iter()
        .map(|id| benchmarks::lookup(id).unwrap().problem)
        .collect();
    v.extend(
        ["edm:mrr", "awjm:ra", "mql:l"]
            .iter()
            .map(|id| machining::lookup(id).unwrap().problem),
    );
    v
}

fn config() -> impl Strategy<Value = LabConfig> {
    (2usize..6, 3usize..7, any::<bool>(), any::<u64>()).prop_map(|(g, n, greedy, seed)| {
        LabConfig {
            num_groups: g,
            group_size: n,
            max_iterations: 30,
            greedy_acceptance: greedy,
            seed,
            ..LabConfig::default()
        }
    })
}

fn sample_of(len: usize) -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (
        prop::collection::vec(-50.0f64..50.0, len),
        prop::collection::vec(-50.0f64..50.0, len),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn society_invariants_hold_every_step(cfg in config(), which in 0usize..10) {
        let problem = &problems()[which];
        let sense = problem.sense();
        let p = cfg.population() as u64;
        let mut engine = LabEngine::new(problem, cfg.clone()).unwrap();
        let mut previous_leader = engine.society().global_best().cost;
        for t in 1..=cfg.max_iterations as u64 {
            engine.step().unwrap();
            let s = engine.society();
            prop_assert_eq!(s.evaluations, p * (t + 1));
            prop_assert_eq!(s.groups.len(), cfg.num_groups);
            prop_assert!(s.is_globally_ranked());
            for g in &s.groups {
                prop_assert_eq!(g.len(), cfg.group_size);
                prop_assert!(g.is_ranked());
                for m in &g.members {
                    prop_assert!(problem.contains(&m.position));
                    let mut rng = ChaCha8Rng::seed_from_u64(0);
                    prop_assert_eq!(sense.to_cost(problem.value(&m.position, &mut rng)), m.cost);
                }
            }
            let leader = s.global_best().cost;
            if cfg.greedy_acceptance {
                prop_assert!(leader <= previous_leader);
            }
            previous_leader = leader;
        }
    }

    #[test]
    fn runs_are_deterministic_and_accounted(cfg in config(), which in 0usize..10) {
        let problem = &problems()[which];
        let a = lab::run(problem, &cfg).unwrap().without_timing();
        let b = lab::run(problem, &cfg).unwrap().without_timing();
        prop_assert_eq!(&a, &b);
        let p = cfg.population() as u64;
        prop_assert_eq!(a.function_evaluations, p + a.iterations() as u64 * p);
        let best: Vec<f64> = a.best_so_far().collect();
        for w in best.windows(2) {
            prop_assert!(!problem.sense().better(w[0], w[1]));
        }
        // Running extreme over the global-best column.
        let mut run = a.records[0].global_best;
        for r in &a.records {
            if problem.sense().better(r.global_best, run) {
                run = r.global_best;
            }
            prop_assert!(!problem.sense().better(r.global_best, r.best_so_far));
        }
        prop_assert_eq!(run, a.best_fitness);
    }

    #[test]
    fn weights_satisfy_contract(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for role in [Role::Leader, Role::Advocate, Role::Believer] {
            for _ in 0..50 {
                let w = sample_weights(role, &mut rng);
                prop_assert!(w.is_valid(), "{:?}", w);
                prop_assert_eq!(w.w3.is_some(), role == Role::Leader);
            }
        }
    }

    #[test]
    fn collapsed_group_is_a_fixed_point(
        x in prop::collection::vec(-10.0f64..10.0, 1..6),
        n in 3usize..7,
        seed in any::<u64>(),
    ) {
        let members = (0..n).map(|id| Individual::new(id, x.clone(), 1.0)).collect();
        let g = Group::new(1, members);
        let global = Individual::new(n, x.clone(), 0.0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wl = sample_weights(Role::Leader, &mut rng);
        let wa = sample_weights(Role::Advocate, &mut rng);
        let wb = sample_weights(Role::Believer, &mut rng);
        for y in [leader_move(&g, &global, &wl), advocate_move(&g, &wa), believer_move(&g, &wb)] {
            for (a, b) in y.iter().zip(&x) {
                prop_assert!((a - b).abs() <= 4.0 * f64::EPSILON * b.abs().max(1.0));
            }
        }
    }

    #[test]
    fn believer_move_is_between_anchors(
        l in prop::collection::vec(-10.0f64..10.0, 3),
        a in prop::collection::vec(-10.0f64..10.0, 3),
        u in 0.5f64..1.0,
    ) {
        let members = vec![
            Individual::new(0, l.clone(), 0.0),
            Individual::new(1, a.clone(), 1.0),
            Individual::new(2, vec![0.0; 3], 2.0),
        ];
        let g = Group::new(1, members);
        let w = RoleWeights { w1: u, w2: 1.0 - u, w3: None };
        let y = believer_move(&g, &w);
        for j in 0..3 {
            let (lo, hi) = (l[j].min(a[j]), l[j].max(a[j]));
            prop_assert!(y[j] >= lo - 1e-12 && y[j] <= hi + 1e-12);
        }
    }

    #[test]
    fn clamp_lands_in_box_and_is_idempotent(x in prop::collection::vec(-1e3f64..1e3, 4)) {
        let p = machining::lookup("awjm:kerf").unwrap().problem;
        let c = clamp_to_bounds(&x, &p);
        prop_assert!(p.contains(&c));
        prop_assert_eq!(clamp_to_bounds(&c, &p), c.clone());
        for (i, (xi, ci)) in x.iter().zip(&c).enumerate() {
            if p.lower()[i] <= *xi && *xi <= p.upper()[i] {
                prop_assert_eq!(xi, ci);
            }
        }
    }

    #[test]
    fn wilcoxon_is_antisymmetric(len in 1usize..40, seed in any::<u64>()) {
        let (a, b) = pair(len, seed);
        let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
        let s = wilcoxon_two_sided(&b, &a, 0.05).unwrap();
        prop_assert_eq!(r.t_plus, s.t_minus);
        prop_assert_eq!(r.t_minus, s.t_plus);
        prop_assert_eq!(r.p_value, s.p_value);
        prop_assert_eq!(r.verdict, s.verdict.flipped());
        let m = r.n_effective as f64;
        prop_assert_eq!(r.t_plus + r.t_minus, m * (m + 1.0) / 2.0);
        prop_assert!((0.0..=1.0).contains(&r.p_value));
    }

    #[test]
    fn wilcoxon_verdict_is_scale_invariant(
        (a, b) in sample_of(15),
        k in prop::sample::select(vec![0.5, 2.0, 4.0, 1024.0]),
    ) {
        let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
        let sa: Vec<f64> = a.iter().map(|v| v * k).collect();
        let sb: Vec<f64> = b.iter().map(|v| v * k).collect();
        let s = wilcoxon_two_sided(&sa, &sb, 0.05).unwrap();
        prop_assert_eq!(r.t_plus, s.t_plus);
        prop_assert_eq!(r.t_minus, s.t_minus);
        prop_assert_eq!(r.verdict, s.verdict);
        prop_assert_eq!(r.p_value, s.p_value);
    }

    #[test]
    fn grid_refinement_never_worsens(which in 0usize..23, m in 2usize..9) {
        let spec = &machining::machining_registry()[which];
        // m -> 2m - 1 keeps every coarse node on the fine grid.
        let coarse = grid_search(&spec.problem, m).unwrap();
        let fine = grid_search(&spec.problem, 2 * m - 1).unwrap();
        prop_assert!(!spec.sense.better(coarse.value, fine.value));
    }
}

fn pair(len: usize, seed: u64) -> (Vec<f64>, Vec<f64>) {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coarse = rng.random_bool(0.5);
    let mut draw = || {
        if coarse {
            rng.random_range(0..5) as f64
        } else {
            rng.random_range(-1.0..1.0)
        }
    };
    let a: Vec<f64> = (0..len).map(|_| draw()).collect();
    let b: Vec<f64> = (0..len).map(|_| draw()).collect();
    (a, b)
}

#[test]
fn exact_and_normal_agree_for_moderate_n() {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut worst: f64 = 0.0;
    let mut checked = 0;
    while checked < 100 {
        let n = rng.random_range(10..=12);
        let a: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let b: Vec<f64> = (0..n).map(|_| rng.random_range(-0.8..1.2)).collect();
        let sr = SignedRanks::new(&a, &b).unwrap();
        if !(10..=12).contains(&sr.n()) {
            continue;
        }
        let exact = wilcoxon(&a, &b, 0.05, Sense::Minimize, Method::Exact).unwrap();
        let normal = wilcoxon(&a, &b, 0.05, Sense::Minimize, Method::Normal).unwrap();
        worst = worst.max((exact.p_value - normal.p_value).abs());
        checked += 1;
    }
    assert!(worst <= 0.02, "largest exact/normal gap {worst}");
}

#[test]
fn benchmarks_are_finite_on_uniform_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(10_000);
    for spec in benchmarks::registry() {
        for _ in 0..10_000 {
            let x = spec.problem.sample(&mut rng);
            let v = spec.problem.value(&x, &mut rng);
            assert!(v.is_finite(), "{} at {x:?}", spec.id);
        }
    }
}

#[test]
fn separable_tags_decompose() {
    use rand::Rng;
    let opts = BenchmarkOptions { quartic_noise: false };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut zero = ChaCha8Rng::seed_from_u64(0);
    let mut checked = 0;
    for spec in benchmarks::registry_with(&opts) {
        // Booth and Foxholes carry an S tag but couple their variables.
        if spec.separability != Separability::Separable || ["F1", "F10"].contains(&spec.id) {
            continue;
        }
        let p = &spec.problem;
        for _ in 0..3 {
            let i = rng.random_range(0..spec.dim);
            let (x, y) = (p.sample(&mut rng), p.sample(&mut rng));
            let (a, b) = (rng.random_range(spec.lower..spec.upper), rng.random_range(spec.lower..spec.upper));
            let mut f = |base: &[f64], v: f64| {
                let mut z = base.to_vec();
                z[i] = v;
                p.value(&z, &mut zero)
            };
            let dx = f(&x, a) - f(&x, b);
            let dy = f(&y, a) - f(&y, b);
            let scale = f(&x, a).abs().max(f(&y, a).abs()).max(1.0);
            assert!((dx - dy).abs() <= 1e-9 * scale, "{}: {dx} vs {dy}", spec.id);
        }
        checked += 1;
    }
    assert_eq!(checked, 6);
}
