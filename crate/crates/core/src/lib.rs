//! Leader-Advocate-Believer (LAB) optimization with benchmark and
//! machining objectives, reference baselines and signed-rank statistics.
//!
//! ```
//! use lab_core::{benchmarks, lab, LabConfig};
//!
//! let booth = benchmarks::lookup("F10").unwrap();
//! let trace = lab::run(&booth.problem, &LabConfig::default().with_seed(1)).unwrap();
//! assert!(trace.best_fitness < 1.0);
//! ```

pub mod baselines;
pub mod batch;
pub mod benchmarks;
pub mod error;
pub mod grid;
pub mod io;
pub mod lab;
pub mod machining;
pub mod problem;
pub mod selector;
pub mod stats;
pub mod trace;

pub use batch::{run_batch, Algorithm, BatchConfig};
pub use error::{Error, Result};
pub use lab::{LabConfig, LabEngine};
pub use problem::{clamp_to_bounds, Problem, Sense};
pub use trace::{IterationRecord, RunTrace, TerminationReason};
