use crate::error::Result;
use crate::lab::{eval_rng, search_rng};
use crate::problem::Problem;
use crate::trace::RunTrace;

use super::{BaselineConfig, Recorder};

/// Uniform sampling of the box in batches of `batch_size`; each batch is
/// one trace row whose `global_best` is the batch minimum.
pub fn run_random_search(problem: &Problem, config: &BaselineConfig) -> Result<RunTrace> {
    config.validate()?;
    let mut search = search_rng(config.seed);
    let mut eval = eval_rng(config.seed);
    let mut rec = Recorder::new(problem, config.budget);
    while rec.remaining() > 0 {
        let n = rec.remaining().min(config.batch_size as u64);
        let mut batch_best = f64::INFINITY;
        for _ in 0..n {
            let x = problem.sample(&mut search);
            batch_best = batch_best.min(rec.evaluate(&x, &mut eval)?);
        }
        rec.record(batch_best);
    }
    Ok(rec.finish(super::BaselineKind::RandomSearch.name(), config.seed))
}
