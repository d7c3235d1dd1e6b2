//! Rooted trees, unrooted trees and unicyclic components.
//!
//! `cargo run --example trees`

use critical_planarity::enumeration::tree_series;

fn main() {
    let ts = tree_series(8).expect("order 8");
    println!("T     = {}", ts.t);
    println!("U     = {}", ts.u);
    println!("V     = {}", ts.v);
    println!("e^V   = {}", ts.exp_v);
    // n! [z^n] T = n^(n-1)
    for n in 1..=8usize {
        let factorial: u64 = (1..=n as u64).product();
        println!("rooted trees on {n} vertices: {}", ts.t.coeff(n) * num_bigint::BigInt::from(factorial));
    }
}
