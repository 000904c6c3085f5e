use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::problem::Sense;

/// A member of the society. `cost` is the objective value oriented for
/// minimization (negated for maximization problems).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Individual {
    pub id: usize,
    pub position: Vec<f64>,
    pub cost: f64,
}

impl Individual {
    pub fn new(id: usize, position: Vec<f64>, cost: f64) -> Self {
        Self { id, position, cost }
    }

    /// Builds an individual from a user-sense objective value.
    pub fn from_value(id: usize, position: Vec<f64>, value: f64, sense: Sense) -> Self {
        Self::new(id, position, sense.to_cost(value))
    }

    pub fn value(&self, sense: Sense) -> f64 {
        sense.to_value(self.cost)
    }

    fn rank_cmp(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then(self.id.cmp(&other.id))
    }
}

/// A group of `n` members kept in rank order: leader, advocate, then the
/// `n - 2` believers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Group {
    /// Stable 1-based label assigned at initialization.
    pub label: usize,
    pub members: Vec<Individual>,
}

impl Group {
    pub fn new(label: usize, members: Vec<Individual>) -> Self {
        Self { label, members }
    }

    pub fn leader(&self) -> &Individual {
        &self.members[0]
    }

    pub fn advocate(&self) -> &Individual {
        &self.members[1]
    }

    pub fn believers(&self) -> &[Individual] {
        &self.members[2..]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_ranked(&self) -> bool {
        self.members
            .windows(2)
            .all(|w| w[0].rank_cmp(&w[1]) != Ordering::Greater)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Society {
    pub groups: Vec<Group>,
    pub iteration: usize,
    pub seed: u64,
    pub evaluations: u64,
}

impl Society {
    /// The leader of the first group after global ranking.
    pub fn global_best(&self) -> &Individual {
        self.groups[0].leader()
    }

    pub fn individuals(&self) -> impl Iterator<Item = &Individual> {
        self.groups.iter().flat_map(|g| g.members.iter())
    }

    pub fn population(&self) -> usize {
        self.groups.iter().map(Group::len).sum()
    }

    pub fn is_globally_ranked(&self) -> bool {
        self.groups
            .windows(2)
            .all(|w| w[0].leader().rank_cmp(w[1].leader()) != Ordering::Greater)
    }
}

/// Sorts members best-first; ties go to the lower id.
pub fn rank_group(group: &mut Group) {
    group.members.sort_by(Individual::rank_cmp);
}

/// Orders groups by leader quality so `groups[0]` holds the global best
/// leader. Expects every group to be locally ranked.
pub fn rank_global(society: &mut Society) {
    society
        .groups
        .sort_by(|a, b| a.leader().rank_cmp(b.leader()));
}
