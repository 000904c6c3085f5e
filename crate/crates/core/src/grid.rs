//! Exhaustive uniform-grid search over a box.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Problem;

/// Upper limit on the number of grid points in one search.
pub const MAX_GRID_POINTS: usize = 1 << 32;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridResult {
    pub problem: String,
    /// Best objective value in the problem's own sense.
    pub value: f64,
    pub point: Vec<f64>,
    pub points_per_axis: usize,
    pub evaluations: u64,
}

/// Coordinate `k` of `m` evenly spaced points on `[lo, hi]`, with both
/// endpoints hit exactly.
pub fn grid_coordinate(lo: f64, hi: f64, k: usize, m: usize) -> f64 {
    if k + 1 == m {
        hi
    } else {
        lo + (hi - lo) * k as f64 / (m - 1) as f64
    }
}

fn check(problem: &Problem, m: usize) -> Result<usize> {
    if m < 2 {
        return Err(Error::Argument(format!(
            "points per axis must be at least 2, got {m}"
        )));
    }
    let d = problem.dim() as u32;
    m.checked_pow(d)
        .filter(|&n| n <= MAX_GRID_POINTS)
        .ok_or_else(|| Error::Argument(format!("grid of {m}^{d} points is too large")))
}

/// Best `(cost, flat index, point)` in the slab whose first coordinate has
/// grid index `i0`. Ties go to the lowest flat index.
fn scan_slab(problem: &Problem, m: usize, i0: usize) -> (f64, usize, Vec<f64>) {
    let d = problem.dim();
    let (lo, hi) = (problem.lower(), problem.upper());
    let slab = m.pow(d as u32 - 1);
    // Deterministic objectives ignore this; noisy ones get a per-slab stream.
    let mut rng = ChaCha8Rng::seed_from_u64(i0 as u64);
    let sense = problem.sense();

    let mut idx = vec![0usize; d];
    idx[0] = i0;
    let mut x: Vec<f64> = (0..d).map(|j| grid_coordinate(lo[j], hi[j], idx[j], m)).collect();
    let mut best = (f64::INFINITY, usize::MAX, x.clone());
    for offset in 0..slab {
        if offset > 0 {
            // Odometer increment over axes 1..d, last axis fastest.
            let mut j = d - 1;
            loop {
                idx[j] += 1;
                if idx[j] < m {
                    x[j] = grid_coordinate(lo[j], hi[j], idx[j], m);
                    break;
                }
                idx[j] = 0;
                x[j] = lo[j];
                j -= 1;
            }
        }
        let v = problem.value(&x, &mut rng);
        let cost = if v.is_nan() {
            f64::INFINITY
        } else {
            sense.to_cost(v)
        };
        let flat = i0 * slab + offset;
        if cost < best.0 || best.1 == usize::MAX {
            best = (cost, flat, x.clone());
        }
    }
    best
}

fn pick(a: (f64, usize, Vec<f64>), b: (f64, usize, Vec<f64>)) -> (f64, usize, Vec<f64>) {
    match a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)) {
        std::cmp::Ordering::Greater => b,
        _ => a,
    }
}

fn finish(problem: &Problem, m: usize, total: usize, best: (f64, usize, Vec<f64>)) -> GridResult {
    GridResult {
        problem: problem.name().to_string(),
        value: problem.sense().to_value(best.0),
        point: best.2,
        points_per_axis: m,
        evaluations: total as u64,
    }
}

/// Single-threaded grid search.
pub fn grid_search_sequential(problem: &Problem, points_per_axis: usize) -> Result<GridResult> {
    let total = check(problem, points_per_axis)?;
    let best = (0..points_per_axis)
        .map(|i0| scan_slab(problem, points_per_axis, i0))
        .reduce(pick)
        .expect("at least two slabs");
    Ok(finish(problem, points_per_axis, total, best))
}

/// Grid search with one task per first-axis slab.
#[cfg(feature = "parallel")]
pub fn grid_search_parallel(problem: &Problem, points_per_axis: usize) -> Result<GridResult> {
    use rayon::prelude::*;
    let total = check(problem, points_per_axis)?;
    let best = (0..points_per_axis)
        .into_par_iter()
        .map(|i0| scan_slab(problem, points_per_axis, i0))
        .reduce_with(pick)
        .expect("at least two slabs");
    Ok(finish(problem, points_per_axis, total, best))
}

/// Parallel when the `parallel` feature is on, sequential otherwise. Both
/// give identical results.
pub fn grid_search(problem: &Problem, points_per_axis: usize) -> Result<GridResult> {
    #[cfg(feature = "parallel")]
    {
        grid_search_parallel(problem, points_per_axis)
    }
    #[cfg(not(feature = "parallel"))]
    {
        grid_search_sequential(problem, points_per_axis)
    }
}
