//! Analytic planarity probability against simulation at a few points of the
//! window.
//!
//! `cargo run --release --example compare -- [n] [trials]`

use critical_planarity::enumeration::{kernel_table, ClassTag};
use critical_planarity::probability::class_probability;
use critical_planarity::simulator::{run_experiment, standard_error, ExperimentConfig};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(50_000);
    let trials: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(200);
    let table = kernel_table(&ClassTag::Planar, 30).expect("standard class");
    println!("{:>6} {:>10} {:>10} {:>8}", "lambda", "analytic", "empirical", "z");
    for lambda in [-1.0, 0.0, 1.0, 2.0, 3.0] {
        let p = class_probability(&table, lambda).expect("lambda inside the envelope").p;
        let report = run_experiment(&ExperimentConfig { lambda, n, trials, seed: 1 }).expect("valid configuration");
        let se = standard_error(p, trials);
        println!("{lambda:>6.1} {p:>10.5} {:>10.5} {:>8.2}", report.p_planar, (report.p_planar - p) / se);
    }
}
