//! Monte Carlo check of the limiting probabilities: sample `G(n, M)` in the
//! critical window, reduce to the kernel, and test cubicity, planarity and
//! series-parallelness.

mod experiment;
mod graph;
mod kernel;
mod planarity;
mod sample;
mod series_parallel;

pub use experiment::{
    analyze_graph, critical_edge_count, run_experiment, run_trial, simulate_outcomes,
    standard_error, trial_rng, ExperimentConfig, ExperimentReport, TrialOutcome,
    FULL_CHECK_MAX_N, MIN_EXPERIMENT_N,
};
pub use graph::{Adjacency, MultiGraph};
pub use kernel::{kernel, two_core, two_core_mask, KernelDecomposition};
pub use planarity::{is_planar, subdivide_to_simple};
pub use sample::{pair_from_index, sample_gnm};
pub use series_parallel::is_series_parallel;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulatorError {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{m} edges do not fit in a simple graph on {n} vertices")]
    TooManyEdges { n: usize, m: usize },
    #[error("vertex {vertex} has degree {degree}; the kernel needs minimum degree 2")]
    DegreeBelowTwo { vertex: usize, degree: usize },
    #[error("invalid experiment: {0}")]
    InvalidConfig(String),
    #[error("inconsistent decomposition: {0}")]
    InconsistentDecomposition(String),
    #[error("malformed report: {0}")]
    Format(String),
}
