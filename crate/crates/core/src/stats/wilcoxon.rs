use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};
use crate::problem::Sense;

/// Largest effective sample size for which the exact null distribution is
/// used under [`Method::Auto`].
pub const EXACT_LIMIT: usize = 12;

/// Smallest effective sample size for which a verdict other than `Equal`
/// is issued.
pub const MIN_EFFECTIVE: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    /// The second sample is significantly better.
    Plus,
    /// The second sample is significantly worse.
    Minus,
    Equal,
}

impl Verdict {
    pub fn symbol(self) -> char {
        match self {
            Verdict::Plus => '+',
            Verdict::Minus => '-',
            Verdict::Equal => '=',
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Verdict::Plus => Verdict::Minus,
            Verdict::Minus => Verdict::Plus,
            Verdict::Equal => Verdict::Equal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    /// Exact for `n_effective <= EXACT_LIMIT`, normal otherwise.
    Auto,
    Exact,
    Normal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WilcoxonResult {
    pub t_plus: f64,
    pub t_minus: f64,
    pub n_effective: usize,
    pub p_value: f64,
    pub exact: bool,
    pub verdict: Verdict,
    /// Fewer than [`MIN_EFFECTIVE`] nonzero differences; verdict forced to `Equal`.
    pub insufficient: bool,
}

/// Absolute nonzero differences `a - b` with their signs and mid-ranks.
#[derive(Debug, Clone, PartialEq)]
pub struct SignedRanks {
    /// `(rank, positive)` per nonzero difference.
    pub ranks: Vec<(f64, bool)>,
    /// Sizes of tie groups among the absolute differences.
    pub ties: Vec<usize>,
}

impl SignedRanks {
    pub fn new(a: &[f64], b: &[f64]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::Argument(format!(
                "paired samples differ in length: {} vs {}",
                a.len(),
                b.len()
            )));
        }
        let mut d: Vec<f64> = a
            .iter()
            .zip(b)
            .map(|(x, y)| x - y)
            .filter(|v| *v != 0.0)
            .collect();
        if let Some(bad) = d.iter().find(|v| v.is_nan()) {
            return Err(Error::Argument(format!("difference {bad} is not a number")));
        }
        d.sort_by(|x, y| x.abs().total_cmp(&y.abs()));
        let mut ranks = Vec::with_capacity(d.len());
        let mut ties = Vec::new();
        let mut i = 0;
        while i < d.len() {
            let mut j = i + 1;
            while j < d.len() && d[j].abs() == d[i].abs() {
                j += 1;
            }
            // Ranks i+1..=j share their average.
            let rank = (i + 1 + j) as f64 / 2.0;
            ranks.extend(d[i..j].iter().map(|v| (rank, *v > 0.0)));
            ties.push(j - i);
            i = j;
        }
        Ok(Self { ranks, ties })
    }

    pub fn n(&self) -> usize {
        self.ranks.len()
    }

    pub fn t_plus(&self) -> f64 {
        self.ranks.iter().filter(|r| r.1).fold(0.0, |t, r| t + r.0)
    }

    pub fn t_minus(&self) -> f64 {
        self.ranks.iter().filter(|r| !r.1).fold(0.0, |t, r| t + r.0)
    }

    /// Ranks doubled, which makes mid-ranks integral.
    pub fn doubled(&self) -> Vec<u64> {
        self.ranks.iter().map(|r| (2.0 * r.0) as u64).collect()
    }

    /// Two-sided p-value from the exact permutation distribution of
    /// `T+` given these ranks (every sign pattern equally likely).
    pub fn exact_p(&self) -> f64 {
        let ranks = self.doubled();
        let total: u64 = ranks.iter().sum();
        // counts[s]: number of sign patterns whose positive ranks sum to s.
        let mut counts = vec![0u64; total as usize + 1];
        counts[0] = 1;
        let mut reach = 0usize;
        for &r in &ranks {
            let r = r as usize;
            for s in (0..=reach).rev() {
                if counts[s] > 0 {
                    counts[s + r] += counts[s];
                }
            }
            reach += r;
        }
        let observed = (2.0 * self.t_plus()).round() as usize;
        let lower: u64 = counts[..=observed].iter().sum();
        let upper: u64 = counts[observed..].iter().sum();
        two_sided(lower, upper, self.n())
    }

    /// Two-sided p-value from the normal approximation with tie and
    /// continuity corrections.
    pub fn normal_p(&self) -> f64 {
        let n = self.n() as f64;
        let mean = n * (n + 1.0) / 4.0;
        let tie: f64 = self
            .ties
            .iter()
            .map(|&t| {
                let t = t as f64;
                t * t * t - t
            })
            .sum();
        let var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie / 48.0;
        if var <= 0.0 {
            return 1.0;
        }
        let z = ((self.t_plus() - mean).abs() - 0.5).max(0.0) / var.sqrt();
        let std = Normal::standard();
        (2.0 * (1.0 - std.cdf(z))).min(1.0)
    }
}

/// `min(1, 2 * min(lower, upper) / 2^n)`.
pub fn two_sided(lower: u64, upper: u64, n: usize) -> f64 {
    let tail = lower.min(upper) as f64 / 2f64.powi(n as i32);
    (2.0 * tail).min(1.0)
}

/// Two-sided signed-rank test of `a` against `b` for minimized values.
pub fn wilcoxon_two_sided(a: &[f64], b: &[f64], alpha: f64) -> Result<WilcoxonResult> {
    wilcoxon(a, b, alpha, Sense::Minimize, Method::Auto)
}

/// Two-sided signed-rank test on the paired differences `a - b`.
///
/// `Plus` means `b` is significantly better under `sense`.
pub fn wilcoxon(
    a: &[f64],
    b: &[f64],
    alpha: f64,
    sense: Sense,
    method: Method,
) -> Result<WilcoxonResult> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Argument(format!("alpha must be in (0, 1), got {alpha}")));
    }
    let sr = SignedRanks::new(a, b)?;
    let n = sr.n();
    let exact = match method {
        Method::Auto => n <= EXACT_LIMIT,
        Method::Exact => {
            if n > 60 {
                return Err(Error::Argument(format!(
                    "exact distribution limited to 60 differences, got {n}"
                )));
            }
            true
        }
        Method::Normal => false,
    };
    let p_value = if n == 0 {
        1.0
    } else if exact {
        sr.exact_p()
    } else {
        sr.normal_p()
    };
    let (t_plus, t_minus) = (sr.t_plus(), sr.t_minus());
    let insufficient = n < MIN_EFFECTIVE;
    let verdict = if insufficient || p_value >= alpha || t_plus == t_minus {
        Verdict::Equal
    } else {
        // Positive differences mean a > b, i.e. b is smaller.
        let b_smaller = t_plus > t_minus;
        let b_better = match sense {
            Sense::Minimize => b_smaller,
            Sense::Maximize => !b_smaller,
        };
        if b_better {
            Verdict::Plus
        } else {
            Verdict::Minus
        }
    };
    Ok(WilcoxonResult {
        t_plus,
        t_minus,
        n_effective: n,
        p_value,
        exact,
        verdict,
        insufficient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_samples_are_equal() {
        let a = [1.0, 2.0, 3.0, 4.0, 5.0, 6.0];
        let r = wilcoxon_two_sided(&a, &a, 0.05).unwrap();
        assert_eq!(r.n_effective, 0);
        assert_eq!(r.verdict, Verdict::Equal);
        assert_eq!(r.p_value, 1.0);
    }

    #[test]
    fn constant_shift() {
        let b: Vec<f64> = (0..10).map(|i| i as f64 * 0.37).collect();
        let a: Vec<f64> = b.iter().map(|v| v + 2.0).collect();
        let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
        assert_eq!(r.t_minus, 0.0);
        assert_eq!(r.t_plus, 55.0);
        assert_eq!(r.p_value, 2.0 / 1024.0);
        assert_eq!(r.verdict, Verdict::Plus);
        let r = wilcoxon_two_sided(&b, &a, 0.05).unwrap();
        assert_eq!(r.verdict, Verdict::Minus);
    }

    #[test]
    fn hand_case_six() {
        // Differences 1, -2, 3, -4, 5, 6.
        let a = [1.0, 0.0, 3.0, 0.0, 5.0, 6.0];
        let b = [0.0, 2.0, 0.0, 4.0, 0.0, 0.0];
        let r = wilcoxon_two_sided(&a, &b, 0.05).unwrap();
        assert_eq!(r.t_plus, 15.0);
        assert_eq!(r.t_minus, 6.0);
        // 14 of the 64 sign patterns give T+ >= 15, so p = 28 / 64.
        assert_eq!(r.p_value, 28.0 / 64.0);
        assert_eq!(r.verdict, Verdict::Equal);
    }

    #[test]
    fn mid_ranks() {
        let sr = SignedRanks::new(&[1.0, -1.0, 2.0, 0.0], &[0.0; 4]).unwrap();
        assert_eq!(sr.ranks, vec![(1.5, true), (1.5, false), (3.0, true)]);
        assert_eq!(sr.ties, vec![2, 1]);
    }

    #[test]
    fn small_sample_flag() {
        let r = wilcoxon_two_sided(&[5.0, 6.0, 7.0, 8.0], &[0.0; 4], 0.05).unwrap();
        assert!(r.insufficient);
        assert_eq!(r.verdict, Verdict::Equal);
    }

    #[test]
    fn maximization_flips_direction() {
        let b: Vec<f64> = (0..8).map(|i| i as f64).collect();
        let a: Vec<f64> = b.iter().map(|v| v + 1.0).collect();
        let r = wilcoxon(&a, &b, 0.05, Sense::Maximize, Method::Auto).unwrap();
        assert_eq!(r.verdict, Verdict::Minus);
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            wilcoxon_two_sided(&[1.0], &[1.0, 2.0], 0.05),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn normal_agrees_with_known_value() {
        // n = 20, T+ = 210 - 10 = 200 (one negative of rank 10)
        let a: Vec<f64> = (1..=20).map(|i| if i == 10 { -(i as f64) } else { i as f64 }).collect();
        let sr = SignedRanks::new(&a, &[0.0; 20]).unwrap();
        assert_eq!(sr.t_plus(), 200.0);
        let mean = 105.0;
        let sd = (20.0 * 21.0 * 41.0 / 24.0f64).sqrt();
        let z = (200.0 - mean - 0.5) / sd;
        let p = 2.0 * (1.0 - Normal::standard().cdf(z));
        assert!((sr.normal_p() - p).abs() < 1e-15);
    }
}
