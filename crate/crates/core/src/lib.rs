//! Limiting probabilities that the critical random graph
//! `G(n, M = n/2 (1 + lambda n^(-1/3)))` is planar, series-parallel, or lies in
//! another minor-closed class whose excluded minors are 3-connected.
//!
//! The pipeline runs in four layers:
//!
//! * [`series`]: exact power series over the rationals and a fixed-point
//!   solver for systems of series equations.
//! * [`enumeration`]: weighted counts of cubic kernels, i.e. all cubic
//!   multigraphs, the planar ones, and the series-parallel ones.
//! * [`airy`]: the Airy-type function `A(y, lambda)` that turns kernel counts
//!   into kernel-size probabilities.
//! * [`probability`]: kernel-size distributions and class probabilities.
//!
//! [`simulator`] samples `G(n, M)` directly, extracts the kernel and tests it,
//! giving an empirical check of the analytic numbers. [`cli`] wires all of it
//! to a command-line tool.

pub mod airy;
pub mod cli;
pub mod enumeration;
pub mod probability;
pub mod series;
pub mod simulator;
