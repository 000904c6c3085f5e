//! Standard definitions of the test functions. Coefficient tables follow the
//! usual literature sources (Shekel foxholes, Hartman 3/6, Kowalik,
//! Langermann with the first five rows of the Shekel-10 matrix).

use std::f64::consts::{E, PI};

use rand::{Rng, RngCore};

use super::fletcher_data::*;

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

pub fn sum_squares(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v * v)
        .sum()
}

pub fn step2(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| (v / ((i + 1) as f64).sqrt()).cos())
        .product();
    sum - prod + 1.0
}

pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut partial = 0.0;
    let mut total = 0.0;
    for v in x {
        partial += v;
        total += partial * partial;
    }
    total
}

pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

pub fn zakharov(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    let lin: f64 = x
        .iter()
        .enumerate()
        .map(|(i, v)| 0.5 * (i + 1) as f64 * v)
        .sum();
    sq + lin.powi(2) + lin.powi(4)
}

pub fn dixon_price(x: &[f64]) -> f64 {
    let head = (x[0] - 1.0).powi(2);
    head + x
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
        .sum::<f64>()
}

/// `x_i = 2^-((2^i - 2) / 2^i)` for `i = 1..n`.
pub fn dixon_price_minimizer(dim: usize) -> Vec<f64> {
    (1..=dim as i32)
        .map(|i| {
            let p = 2f64.powi(i);
            2f64.powf(-(p - 2.0) / p)
        })
        .collect()
}

/// Sum of `i * x_i^4` without the noise term.
pub fn quartic_clean(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

/// Quartic with the uniform [0, 1) noise term drawn from `rng`.
pub fn quartic_noisy(x: &[f64], rng: &mut dyn RngCore) -> f64 {
    quartic_clean(x) + rng.random::<f64>()
}

pub fn booth(x: &[f64]) -> f64 {
    (x[0] + 2.0 * x[1] - 7.0).powi(2) + (2.0 * x[0] + x[1] - 5.0).powi(2)
}

pub fn matyas(x: &[f64]) -> f64 {
    0.26 * (x[0] * x[0] + x[1] * x[1]) - 0.48 * x[0] * x[1]
}

pub fn bohachevsky1(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0]).cos() - 0.4 * (4.0 * PI * x[1]).cos()
        + 0.7
}

pub fn bohachevsky2(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0]).cos() * (4.0 * PI * x[1]).cos()
        + 0.3
}

pub fn bohachevsky3(x: &[f64]) -> f64 {
    x[0] * x[0] + 2.0 * x[1] * x[1] - 0.3 * (3.0 * PI * x[0] + 4.0 * PI * x[1]).cos() + 0.3
}

pub fn schaffer(x: &[f64]) -> f64 {
    let r2 = x[0] * x[0] + x[1] * x[1];
    0.5 + (r2.sqrt().sin().powi(2) - 0.5) / (1.0 + 0.001 * r2).powi(2)
}

pub fn six_hump_camelback(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    4.0 * a * a - 2.1 * a.powi(4) + a.powi(6) / 3.0 + a * b - 4.0 * b * b + 4.0 * b.powi(4)
}

const FOXHOLE_GRID: [f64; 5] = [-32.0, -16.0, 0.0, 16.0, 32.0];

/// Shekel's foxholes (De Jong F5).
pub fn foxholes(x: &[f64]) -> f64 {
    let mut sum = 1.0 / 500.0;
    for j in 0..25 {
        let a0 = FOXHOLE_GRID[j % 5];
        let a1 = FOXHOLE_GRID[j / 5];
        let d = (x[0] - a0).powi(6) + (x[1] - a1).powi(6);
        sum += 1.0 / ((j + 1) as f64 + d);
    }
    1.0 / sum
}

const KOWALIK_A: [f64; 11] = [
    0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246,
];
const KOWALIK_B_INV: [f64; 11] = [0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0];

pub fn kowalik(x: &[f64]) -> f64 {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .map(|(a, binv)| {
            let b = 1.0 / binv;
            let model = x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
            (a - model).powi(2)
        })
        .sum()
}

const HARTMAN_C: [f64; 4] = [1.0, 1.2, 3.0, 3.2];

const HARTMAN3_A: [[f64; 3]; 4] = [
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
    [3.0, 10.0, 30.0],
    [0.1, 10.0, 35.0],
];
const HARTMAN3_P: [[f64; 3]; 4] = [
    [0.3689, 0.1170, 0.2673],
    [0.4699, 0.4387, 0.7470],
    [0.1091, 0.8732, 0.5547],
    [0.03815, 0.5743, 0.8828],
];

const HARTMAN6_A: [[f64; 6]; 4] = [
    [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
    [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
    [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
    [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
];
const HARTMAN6_P: [[f64; 6]; 4] = [
    [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
    [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
    [0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650],
    [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
];

fn hartman<const D: usize>(x: &[f64], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> f64 {
    -(0..4)
        .map(|i| {
            let inner: f64 = (0..D).map(|j| a[i][j] * (x[j] - p[i][j]).powi(2)).sum();
            HARTMAN_C[i] * (-inner).exp()
        })
        .sum::<f64>()
}

pub fn hartman3(x: &[f64]) -> f64 {
    hartman(x, &HARTMAN3_A, &HARTMAN3_P)
}

pub fn hartman6(x: &[f64]) -> f64 {
    hartman(x, &HARTMAN6_A, &HARTMAN6_P)
}

const LANGERMANN_A: [[f64; 10]; 5] = [
    [9.681, 0.667, 4.783, 9.095, 3.517, 9.325, 6.544, 0.211, 5.122, 2.020],
    [9.400, 2.041, 3.788, 7.931, 2.882, 2.672, 3.568, 1.284, 7.033, 7.374],
    [8.025, 9.152, 5.114, 7.621, 4.564, 4.711, 2.996, 6.126, 0.734, 4.982],
    [2.196, 0.415, 5.649, 6.979, 9.510, 9.166, 6.304, 6.054, 9.377, 1.426],
    [8.074, 8.777, 3.467, 1.863, 6.708, 6.349, 4.534, 0.276, 7.633, 1.567],
];
const LANGERMANN_C: [f64; 5] = [0.806, 0.517, 0.1, 0.908, 0.965];

/// Langermann with five terms; uses the leading `x.len()` columns of the
/// coefficient matrix (at most 10).
pub fn langermann(x: &[f64]) -> f64 {
    -LANGERMANN_A
        .iter()
        .zip(LANGERMANN_C)
        .map(|(row, c)| {
            let d: f64 = x.iter().zip(row).map(|(v, a)| (v - a).powi(2)).sum();
            c * (-d / PI).exp() * (PI * d).cos()
        })
        .sum::<f64>()
}

fn fletcher_powell<const D: usize>(
    x: &[f64],
    a: &[[f64; D]; D],
    b: &[[f64; D]; D],
    alpha: &[f64; D],
) -> f64 {
    (0..D)
        .map(|i| {
            let target: f64 = (0..D)
                .map(|j| a[i][j] * alpha[j].sin() + b[i][j] * alpha[j].cos())
                .sum();
            let at_x: f64 = (0..D)
                .map(|j| a[i][j] * x[j].sin() + b[i][j] * x[j].cos())
                .sum();
            (target - at_x).powi(2)
        })
        .sum()
}

pub fn fletcher_powell2(x: &[f64]) -> f64 {
    fletcher_powell(x, &A2, &B2, &ALPHA2)
}

pub fn fletcher_powell5(x: &[f64]) -> f64 {
    fletcher_powell(x, &A5, &B5, &ALPHA5)
}

pub fn fletcher_powell10(x: &[f64]) -> f64 {
    fletcher_powell(x, &A10, &B10, &ALPHA10)
}

/// The frozen `alpha` vector, which is the global minimizer (value 0).
pub fn fletcher_powell_alpha(dim: usize) -> Option<Vec<f64>> {
    match dim {
        2 => Some(ALPHA2.to_vec()),
        5 => Some(ALPHA5.to_vec()),
        10 => Some(ALPHA10.to_vec()),
        _ => None,
    }
}
