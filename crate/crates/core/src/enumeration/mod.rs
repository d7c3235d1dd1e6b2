//! Exact weighted counts of cubic multigraph kernels.
//!
//! Every multigraph is weighted by its compensation factor
//! `2^-a 2^-b 6^-c` (`a` loops, `b` double edges, `c` triple edges), and the
//! counts are exponential: `h_r` is the weighted number of labelled kernels on
//! `2r` vertices divided by `(2r)!`.

mod cubic;
mod planar_system;
mod table;
mod trees;

pub use cubic::{
    all_cubic_weight, compensation_weight, pairing_oracle, CensusEntry, PairingCensus,
};
pub use planar_system::{
    nonic_polynomial, nonic_residual, solve_planar_system, solve_sp_system, PlanarSystemSolution,
    SystemVariant, NONIC_COEFFS,
};
pub use table::{cached_table, kernel_table, ClassTag, KernelWeightTable, DEFAULT_R_MAX};
pub use trees::{tree_series, TreeSeries};

use thiserror::Error;

use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("truncation order must be even and at least 2, got {order}")]
    InvalidOrder { order: usize },
    #[error("D + C has a nonzero constant term, so 3zG1' = D + C has no series solution")]
    NotIntegrable,
    #[error("requested rows through r = {requested} but only r <= {available} are available")]
    RowsExceedTruncation { requested: usize, available: usize },
    #[error("pairing oracle supports r in {{1, 2}}, got {r}")]
    OracleRange { r: u64 },
    #[error("invalid kernel table: {0}")]
    InvalidTable(String),
    #[error("no generating system for class {0:?}; supply its weights")]
    NoGenerator(String),
    #[error("csv line {line}: {reason}")]
    Csv { line: usize, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}
