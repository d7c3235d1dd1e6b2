//! Monte Carlo estimate of the planarity probability at the critical point.
//!
//! `cargo run --release --example simulate -- [n] [trials] [seed]`

use std::time::Instant;

use critical_planarity::probability::kernel_size_pmf;
use critical_planarity::simulator::{run_experiment, ExperimentConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let arg = |i: usize, default: u64| args.get(i).and_then(|s| s.parse().ok()).unwrap_or(default);
    let config = ExperimentConfig {
        lambda: 0.0,
        n: arg(1, 100_000) as usize,
        trials: arg(2, 100) as usize,
        seed: arg(3, 42),
    };
    let start = Instant::now();
    let report = run_experiment(&config).expect("valid configuration");
    println!("{}", report.to_json());
    let pmf = kernel_size_pmf(0.0, report.max_observed_r().max(5)).expect("lambda = 0 evaluates");
    println!("P(empty kernel) = {:.4}, predicted {:.4}", report.p_empty_kernel(), pmf.entries[0]);
    println!("total variation from the limit law = {:.4}", report.tv_distance(&pmf));
    println!("{:.1} s", start.elapsed().as_secs_f64());
}
