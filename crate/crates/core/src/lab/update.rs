//! Role-specific search directions. Each is a convex combination of
//! members of the society, so results stay inside the box; the clamp only
//! absorbs floating-point drift.

use super::society::{Group, Individual};
use super::weights::RoleWeights;
use crate::problem::Problem;

/// Coordinate-wise mean of the group's `n - 2` believers.
pub fn believer_mean(group: &Group) -> Vec<f64> {
    let believers = group.believers();
    let dim = group.leader().position.len();
    let mut mean = vec![0.0; dim];
    for b in believers {
        for (m, x) in mean.iter_mut().zip(&b.position) {
            *m += x;
        }
    }
    let count = believers.len() as f64;
    for m in &mut mean {
        *m /= count;
    }
    mean
}

/// Weighted sum of anchor points, no clamping.
pub fn combine(anchors: &[(&[f64], f64)]) -> Vec<f64> {
    let dim = anchors[0].0.len();
    let mut out = vec![0.0; dim];
    for (point, weight) in anchors {
        for (o, x) in out.iter_mut().zip(point.iter()) {
            *o += weight * x;
        }
    }
    out
}

/// Raw leader move: `w1 * global + w2 * advocate + w3 * believer_mean`.
pub fn leader_move(group: &Group, global_leader: &Individual, weights: &RoleWeights) -> Vec<f64> {
    let w3 = weights
        .w3
        .expect("leader update requires three weights");
    let mean = believer_mean(group);
    combine(&[
        (&global_leader.position, weights.w1),
        (&group.advocate().position, weights.w2),
        (&mean, w3),
    ])
}

/// Raw advocate move: `w1 * leader + w2 * believer_mean`.
pub fn advocate_move(group: &Group, weights: &RoleWeights) -> Vec<f64> {
    let mean = believer_mean(group);
    combine(&[(&group.leader().position, weights.w1), (&mean, weights.w2)])
}

/// Raw believer move: `w1 * leader + w2 * advocate`.
pub fn believer_move(group: &Group, weights: &RoleWeights) -> Vec<f64> {
    combine(&[
        (&group.leader().position, weights.w1),
        (&group.advocate().position, weights.w2),
    ])
}

pub fn update_leader(
    group: &Group,
    global_leader: &Individual,
    weights: &RoleWeights,
    problem: &Problem,
) -> Vec<f64> {
    let mut x = leader_move(group, global_leader, weights);
    problem.clamp(&mut x);
    x
}

pub fn update_advocate(group: &Group, weights: &RoleWeights, problem: &Problem) -> Vec<f64> {
    let mut x = advocate_move(group, weights);
    problem.clamp(&mut x);
    x
}

pub fn update_believer(group: &Group, weights: &RoleWeights, problem: &Problem) -> Vec<f64> {
    let mut x = believer_move(group, weights);
    problem.clamp(&mut x);
    x
}
