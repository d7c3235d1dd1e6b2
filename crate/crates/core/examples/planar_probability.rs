//! Probability that the critical random graph is planar, and series-parallel.
//!
//! `cargo run --example planar_probability -- [lambda]`

use critical_planarity::enumeration::{kernel_table, ClassTag};
use critical_planarity::probability::{class_probability, zero_lambda_partial_sums};

fn main() {
    let lambda: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.0);
    for class in [ClassTag::Planar, ClassTag::SeriesParallel] {
        let table = kernel_table(&class, 30).expect("standard class");
        let p = class_probability(&table, lambda).expect("lambda inside the envelope");
        println!(
            "{class}: p({lambda}) = {:.12} +- {:.1e}{}",
            p.p,
            p.error_bound,
            if p.certified { "" } else { " (not certified)" }
        );
        if lambda == 0.0 {
            let partial: Vec<String> = zero_lambda_partial_sums(&table).iter().take(6).map(|s| format!("{s:.5}")).collect();
            println!("  partial sums {}", partial.join(", "));
        }
    }
}
