use rand::Rng;

use crate::error::Result;
use crate::lab::{eval_rng, search_rng};
use crate::problem::Problem;
use crate::trace::RunTrace;

use super::{BaselineConfig, BaselineKind, Recorder};

/// Global-best PSO with inertia weight. Positions leaving the box are
/// clamped and the offending velocity component zeroed. The swarm best
/// used in an iteration is the one known at its start.
pub fn run_pso(problem: &Problem, config: &BaselineConfig) -> Result<RunTrace> {
    config.validate()?;
    let params = &config.pso;
    let mut search = search_rng(config.seed);
    let mut eval = eval_rng(config.seed);
    let mut rec = Recorder::new(problem, config.budget);
    let dim = problem.dim();
    let vmax: Vec<f64> = problem
        .widths()
        .map(|w| params.max_velocity_fraction * w)
        .collect();

    let size = rec.remaining().min(params.swarm_size as u64) as usize;
    let mut pos = Vec::with_capacity(size);
    let mut vel = Vec::with_capacity(size);
    let mut cost = Vec::with_capacity(size);
    for _ in 0..size {
        let x = problem.sample(&mut search);
        let v: Vec<f64> = vmax.iter().map(|m| search.random_range(-m..=*m)).collect();
        cost.push(rec.evaluate(&x, &mut eval)?);
        pos.push(x);
        vel.push(v);
    }
    let mut pbest = pos.clone();
    let mut pbest_cost = cost.clone();
    let mut g = argmin(&pbest_cost);
    rec.record(cost.iter().copied().fold(f64::INFINITY, f64::min));

    while rec.remaining() > 0 {
        let gbest = pbest[g].clone();
        let movers = rec.remaining().min(size as u64) as usize;
        for i in 0..movers {
            for j in 0..dim {
                let r1: f64 = search.random();
                let r2: f64 = search.random();
                let v = params.inertia * vel[i][j]
                    + params.cognitive * r1 * (pbest[i][j] - pos[i][j])
                    + params.social * r2 * (gbest[j] - pos[i][j]);
                vel[i][j] = v.clamp(-vmax[j], vmax[j]);
                let x = pos[i][j] + vel[i][j];
                let (lo, hi) = (problem.lower()[j], problem.upper()[j]);
                if x < lo || x > hi {
                    pos[i][j] = x.clamp(lo, hi);
                    vel[i][j] = 0.0;
                } else {
                    pos[i][j] = x;
                }
            }
            cost[i] = rec.evaluate(&pos[i], &mut eval)?;
            if cost[i] < pbest_cost[i] {
                pbest_cost[i] = cost[i];
                pbest[i].clone_from(&pos[i]);
            }
        }
        g = argmin(&pbest_cost);
        rec.record(cost.iter().copied().fold(f64::INFINITY, f64::min));
    }
    Ok(rec.finish(BaselineKind::ParticleSwarm.name(), config.seed))
}

fn argmin(v: &[f64]) -> usize {
    v.iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("non-empty swarm")
}
