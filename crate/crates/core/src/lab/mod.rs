//! Leader-Advocate-Believer optimizer.
//!
//! The population is dealt into `G` groups of `n`. Inside each group the
//! best member leads, the second best advocates and the rest believe. Each
//! iteration every member moves to a random convex combination of its
//! role's anchors:
//!
//! * leader: the global leader, its advocate and the believer mean,
//! * advocate: its leader and the believer mean,
//! * believer: its leader and advocate,
//!
//! after which groups are re-ranked and the group holding the best leader
//! becomes group 1.

mod config;
mod engine;
mod society;
mod update;
mod weights;

pub use config::LabConfig;
pub use engine::{
    initialize_society, run, LabEngine, StepReport, UpdateRecord, ALGORITHM_NAME,
};
pub use society::{rank_global, rank_group, Group, Individual, Society};
pub use update::{
    advocate_move, believer_mean, believer_move, combine, leader_move, update_advocate,
    update_believer, update_leader,
};
pub use weights::{sample_weights, Role, RoleWeights};
pub(crate) use engine::{eval_rng, search_rng};
