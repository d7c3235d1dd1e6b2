//! Limiting distribution of the kernel size, 2r vertices with probability
//! sqrt(2 pi) e_r A(3r + 1/2, lambda).
//!
//! `cargo run --example kernel_pmf -- [lambda] [r_max]`

use critical_planarity::probability::kernel_size_pmf;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let lambda: f64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(0.0);
    let r_max: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(30);
    let pmf = kernel_size_pmf(lambda, r_max).expect("lambda inside the envelope");
    for (r, p) in pmf.entries.iter().enumerate().filter(|(_, p)| **p > 1e-12) {
        println!("{:>4} vertices  {p:.12}", 2 * r);
    }
    println!("total {:.12}, missing mass {:.2e}", pmf.total(), pmf.tail_mass_bound);
}
