use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    Leader,
    Advocate,
    Believer,
}

/// Ordered random convex weights. Leaders use three, advocates and
/// believers two.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RoleWeights {
    pub w1: f64,
    pub w2: f64,
    pub w3: Option<f64>,
}

impl RoleWeights {
    pub fn sum(&self) -> f64 {
        self.w1 + self.w2 + self.w3.unwrap_or(0.0)
    }

    /// Strictly descending, inside [0, 1], summing to one within 1e-12.
    pub fn is_valid(&self) -> bool {
        let in_unit = |w: f64| (0.0..=1.0).contains(&w);
        let ordered = match self.w3 {
            Some(w3) => self.w1 > self.w2 && self.w2 > w3 && in_unit(w3),
            None => self.w1 > self.w2,
        };
        ordered && in_unit(self.w1) && in_unit(self.w2) && (self.sum() - 1.0).abs() <= 1e-12
    }
}

/// Draws weights for one role update.
///
/// Leader: three open-interval uniforms, normalized to unit sum and sorted
/// descending; ties are redrawn. Advocate and believer: `u` uniform on
/// (0.5, 1) paired with `1 - u`.
pub fn sample_weights<R: Rng + ?Sized>(role: Role, rng: &mut R) -> RoleWeights {
    match role {
        Role::Leader => loop {
            let mut w = [open_unit(rng), open_unit(rng), open_unit(rng)];
            let total: f64 = w.iter().sum();
            for v in &mut w {
                *v /= total;
            }
            w.sort_by(|a, b| b.total_cmp(a));
            if w[0] > w[1] && w[1] > w[2] {
                return RoleWeights {
                    w1: w[0],
                    w2: w[1],
                    w3: Some(w[2]),
                };
            }
        },
        Role::Advocate | Role::Believer => loop {
            let u: f64 = rng.random_range(0.5..1.0);
            if u > 0.5 {
                return RoleWeights {
                    w1: u,
                    w2: 1.0 - u,
                    w3: None,
                };
            }
        },
    }
}

fn open_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}
