use std::time::Instant;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::config::LabConfig;
use super::society::{rank_global, rank_group, Group, Individual, Society};
use super::update::{advocate_move, believer_move, leader_move};
use super::weights::{sample_weights, Role, RoleWeights};
use crate::error::Result;
use crate::problem::Problem;
use crate::trace::{BestSoFar, IterationRecord, RunTrace, TerminationReason};

pub const ALGORITHM_NAME: &str = "LAB";

/// Stream id for objective noise, kept apart from the search stream so a
/// noisy objective does not perturb the sequence of search draws.
const EVAL_STREAM: u64 = 1;

pub(crate) fn search_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn eval_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(EVAL_STREAM);
    rng
}

/// One proposed move, kept for inspection when update recording is on.
#[derive(Debug, Clone)]
pub struct UpdateRecord {
    pub role: Role,
    pub group_label: usize,
    pub individual: usize,
    pub weights: RoleWeights,
    /// Points the move is a convex combination of.
    pub anchors: Vec<Vec<f64>>,
    /// Position before clamping.
    pub raw: Vec<f64>,
    /// Position after clamping.
    pub clamped: Vec<f64>,
}

#[derive(Debug, Clone, Default)]
pub struct StepReport {
    /// Coordinates the bound repair actually changed.
    pub clamped_coordinates: usize,
    pub updates: Vec<UpdateRecord>,
}

/// A LAB run in progress.
pub struct LabEngine<'p> {
    problem: &'p Problem,
    config: LabConfig,
    society: Society,
    search_rng: ChaCha8Rng,
    eval_rng: ChaCha8Rng,
    best: BestSoFar,
    record_updates: bool,
}

impl<'p> LabEngine<'p> {
    /// Samples and ranks the initial society using `config.seed`.
    pub fn new(problem: &'p Problem, config: LabConfig) -> Result<Self> {
        config.validate()?;
        let mut search = search_rng(config.seed);
        let mut eval = eval_rng(config.seed);
        let society = initialize_with(problem, &config, &mut search, &mut eval)?;
        let leader = society.global_best();
        let best = BestSoFar::new(leader.cost, &leader.position);
        Ok(Self {
            problem,
            config,
            society,
            search_rng: search,
            eval_rng: eval,
            best,
            record_updates: false,
        })
    }

    /// Keep every proposed move in the next step reports.
    pub fn record_updates(&mut self, on: bool) {
        self.record_updates = on;
    }

    pub fn society(&self) -> &Society {
        &self.society
    }

    pub fn config(&self) -> &LabConfig {
        &self.config
    }

    pub fn problem(&self) -> &Problem {
        self.problem
    }

    /// Best cost seen so far (minimization orientation) and its position.
    pub fn best(&self) -> (f64, &[f64]) {
        (self.best.cost, &self.best.position)
    }

    /// One synchronous iteration: every move is computed from the state at
    /// the start of the iteration, then all are evaluated and applied, then
    /// groups are re-ranked locally and globally.
    pub fn step(&mut self) -> Result<StepReport> {
        let mut report = StepReport::default();
        let snapshot = &self.society;
        let global = snapshot.global_best();

        let mut proposals: Vec<Vec<Vec<f64>>> = Vec::with_capacity(snapshot.groups.len());
        for group in &snapshot.groups {
            let mut moves = Vec::with_capacity(group.len());
            for (rank, member) in group.members.iter().enumerate() {
                let role = match rank {
                    0 => Role::Leader,
                    1 => Role::Advocate,
                    _ => Role::Believer,
                };
                let weights = sample_weights(role, &mut self.search_rng);
                let raw = match role {
                    Role::Leader => leader_move(group, global, &weights),
                    Role::Advocate => advocate_move(group, &weights),
                    Role::Believer => believer_move(group, &weights),
                };
                let mut clamped = raw.clone();
                self.problem.clamp(&mut clamped);
                report.clamped_coordinates +=
                    raw.iter().zip(&clamped).filter(|(a, b)| a != b).count();
                if self.record_updates {
                    report.updates.push(UpdateRecord {
                        role,
                        group_label: group.label,
                        individual: member.id,
                        weights,
                        anchors: anchors(role, group, global),
                        raw,
                        clamped: clamped.clone(),
                    });
                }
                moves.push(clamped);
            }
            proposals.push(moves);
        }

        let greedy = self.config.greedy_acceptance;
        for (group, moves) in self.society.groups.iter_mut().zip(proposals) {
            for (member, position) in group.members.iter_mut().zip(moves) {
                let cost = self.problem.cost(&position, &mut self.eval_rng)?;
                self.best.offer(cost, &position);
                if !greedy || cost <= member.cost {
                    member.position = position;
                    member.cost = cost;
                }
            }
        }

        for group in &mut self.society.groups {
            rank_group(group);
        }
        rank_global(&mut self.society);
        self.society.iteration += 1;
        self.society.evaluations += self.society.population() as u64;
        Ok(report)
    }

    fn record(&self, started: Instant) -> IterationRecord {
        let sense = self.problem.sense();
        let leader = self.society.global_best();
        IterationRecord {
            iteration: self.society.iteration,
            global_best: leader.value(sense),
            best_so_far: sense.to_value(self.best.cost),
            leaders: self
                .society
                .groups
                .iter()
                .map(|g| g.leader().value(sense))
                .collect(),
            best_position: leader.position.clone(),
            elapsed_seconds: started.elapsed().as_secs_f64(),
        }
    }

    /// Steps until the iteration cap or until neither the global best nor
    /// any group leader has improved by `stall_epsilon` over the last
    /// `stall_window` iterations.
    pub fn run(mut self) -> Result<RunTrace> {
        let started = Instant::now();
        let mut stall = StallMonitor::new(&self.society, self.best.cost);
        let mut records = vec![self.record(started)];
        let termination = loop {
            if self.society.iteration >= self.config.max_iterations {
                break TerminationReason::MaxIterations;
            }
            self.step()?;
            records.push(self.record(started));
            stall.push(&self.society, self.best.cost);
            if stall.stalled(self.config.stall_window, self.config.stall_epsilon) {
                break TerminationReason::Stalled;
            }
        };
        let sense = self.problem.sense();
        Ok(RunTrace {
            algorithm: ALGORITHM_NAME.to_string(),
            problem: self.problem.name().to_string(),
            sense,
            seed: self.config.seed,
            records,
            best_fitness: sense.to_value(self.best.cost),
            best_position: self.best.position,
            function_evaluations: self.society.evaluations,
            termination,
        })
    }
}

fn anchors(role: Role, group: &Group, global: &Individual) -> Vec<Vec<f64>> {
    let mean = super::update::believer_mean(group);
    match role {
        Role::Leader => vec![
            global.position.clone(),
            group.advocate().position.clone(),
            mean,
        ],
        Role::Advocate => vec![group.leader().position.clone(), mean],
        Role::Believer => vec![
            group.leader().position.clone(),
            group.advocate().position.clone(),
        ],
    }
}

/// Running-minimum histories of the global best and of each group's
/// leader, indexed by iteration (index 0 is the initial population).
struct StallMonitor {
    global: Vec<f64>,
    /// Per stable group label (1-based, stored at label - 1).
    leaders: Vec<Vec<f64>>,
}

impl StallMonitor {
    fn new(society: &Society, best: f64) -> Self {
        let mut leaders = vec![Vec::new(); society.groups.len()];
        for g in &society.groups {
            leaders[g.label - 1].push(g.leader().cost);
        }
        Self {
            global: vec![best],
            leaders,
        }
    }

    fn push(&mut self, society: &Society, best: f64) {
        self.global.push(best);
        for g in &society.groups {
            let history = &mut self.leaders[g.label - 1];
            let prev = *history.last().expect("seeded at construction");
            history.push(prev.min(g.leader().cost));
        }
    }

    /// The window covers post-initialization iterations only, so the
    /// earliest stop is after `window + 1` steps.
    fn stalled(&self, window: usize, epsilon: f64) -> bool {
        let t = self.global.len() - 1;
        if t < window + 1 {
            return false;
        }
        let flat = |h: &[f64]| h[t - window] - h[t] < epsilon;
        flat(&self.global) && self.leaders.iter().all(|h| flat(h))
    }
}

/// Samples `G * n` uniform individuals, evaluates them, deals them into
/// groups at random and ranks locally and globally.
pub fn initialize_society(problem: &Problem, config: &LabConfig, seed: u64) -> Result<Society> {
    config.validate()?;
    initialize_with(problem, config, &mut search_rng(seed), &mut eval_rng(seed)).map(|mut s| {
        s.seed = seed;
        s
    })
}

fn initialize_with(
    problem: &Problem,
    config: &LabConfig,
    search: &mut ChaCha8Rng,
    eval: &mut ChaCha8Rng,
) -> Result<Society> {
    let population = config.population();
    let mut individuals = Vec::with_capacity(population);
    for id in 0..population {
        let position = problem.sample(search);
        let cost = problem.cost(&position, eval)?;
        individuals.push(Individual::new(id, position, cost));
    }
    individuals.shuffle(search);

    let mut groups = Vec::with_capacity(config.num_groups);
    let mut rest = individuals.into_iter();
    for label in 1..=config.num_groups {
        let members: Vec<_> = rest.by_ref().take(config.group_size).collect();
        let mut group = Group::new(label, members);
        rank_group(&mut group);
        groups.push(group);
    }
    let mut society = Society {
        groups,
        iteration: 0,
        seed: config.seed,
        evaluations: population as u64,
    };
    rank_global(&mut society);
    Ok(society)
}

/// Runs LAB from a fresh society seeded with `config.seed`.
pub fn run(problem: &Problem, config: &LabConfig) -> Result<RunTrace> {
    LabEngine::new(problem, config.clone())?.run()
}
