use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::lab::{eval_rng, search_rng};
use crate::problem::Problem;
use crate::trace::RunTrace;

use super::{BaselineConfig, BaselineKind, Recorder};

/// Move counts from an annealing run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SaStats {
    pub proposed: u64,
    pub accepted: u64,
}

pub fn run_sa(problem: &Problem, config: &BaselineConfig) -> Result<RunTrace> {
    run_sa_with_stats(problem, config).map(|(t, _)| t)
}

/// Metropolis simulated annealing with Gaussian steps and geometric
/// cooling. Row 0 covers the initial sample; each further row is one
/// temperature level, with `global_best` the current state's value.
pub fn run_sa_with_stats(problem: &Problem, config: &BaselineConfig) -> Result<(RunTrace, SaStats)> {
    config.validate()?;
    let params = &config.sa;
    let mut search = search_rng(config.seed);
    let mut eval = eval_rng(config.seed);
    let mut rec = Recorder::new(problem, config.budget);
    let mut stats = SaStats::default();

    let n0 = rec.remaining().min(params.initial_sample as u64);
    let mut current: Option<(f64, Vec<f64>)> = None;
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for _ in 0..n0 {
        let x = problem.sample(&mut search);
        let c = rec.evaluate(&x, &mut eval)?;
        lo = lo.min(c);
        hi = hi.max(c);
        if current.as_ref().is_none_or(|(best, _)| c < *best) {
            current = Some((c, x));
        }
    }
    let (mut cur_cost, mut cur) = current.expect("budget is positive");
    rec.record(cur_cost);

    let mut temperature = params.initial_temperature.unwrap_or(0.1 * (hi - lo));
    let sd: Vec<f64> = problem.widths().map(|w| params.step_fraction * w).collect();
    while rec.remaining() > 0 {
        let n = rec.remaining().min(params.moves_per_temperature as u64);
        for _ in 0..n {
            let mut cand: Vec<f64> = cur
                .iter()
                .zip(&sd)
                .map(|(x, s)| x + s * search.sample::<f64, _>(StandardNormal))
                .collect();
            problem.clamp(&mut cand);
            let c = rec.evaluate(&cand, &mut eval)?;
            let delta = c - cur_cost;
            let accept = delta <= 0.0
                || (temperature > 0.0 && search.random::<f64>() < (-delta / temperature).exp());
            stats.proposed += 1;
            if accept {
                stats.accepted += 1;
                cur = cand;
                cur_cost = c;
            }
        }
        temperature *= params.cooling;
        rec.record(cur_cost);
    }
    Ok((rec.finish(BaselineKind::SimulatedAnnealing.name(), config.seed), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::Sense;

    #[test]
    fn constant_objective_accepts_everything() {
        let p = Problem::uniform_box("const", 3, -1.0, 1.0, Sense::Minimize, |_| 4.25).unwrap();
        let c = BaselineConfig::new(BaselineKind::SimulatedAnnealing, 300, 5);
        let (t, s) = run_sa_with_stats(&p, &c).unwrap();
        assert_eq!(s.proposed, 280);
        assert_eq!(s.accepted, s.proposed);
        assert_eq!(t.best_fitness, 4.25);
    }

    #[test]
    fn improves_on_sphere() {
        let p = Problem::uniform_box("sphere", 2, -5.0, 5.0, Sense::Minimize, |x| {
            x.iter().map(|v| v * v).sum()
        })
        .unwrap();
        let c = BaselineConfig::new(BaselineKind::SimulatedAnnealing, 2000, 2);
        let t = run_sa(&p, &c).unwrap();
        assert!(t.best_fitness < 1e-2, "{}", t.best_fitness);
    }
}
