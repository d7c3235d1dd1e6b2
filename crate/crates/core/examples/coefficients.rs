//! Exact coefficients of the planar and series-parallel systems.
//!
//! `cargo run --example coefficients -- [order]`

use critical_planarity::enumeration::{nonic_residual, solve_planar_system, solve_sp_system};

fn main() {
    let order = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let planar = solve_planar_system(order).expect("even order >= 2");
    let sp = solve_sp_system(order).expect("even order >= 2");
    println!("solved through z^{order} in {} sweeps", planar.sweeps);
    println!("C    = {}", planar.c);
    println!("G1   = {}", planar.g1);
    println!("G    = {}", planar.g);
    println!("G_sp = {}", sp.g);
    println!("G - G_sp = {}", &planar.g - &sp.g);
    match nonic_residual(&planar.c).valuation() {
        None => println!("nonic residual vanishes through z^{order}"),
        Some(k) => println!("nonic residual first nonzero at z^{k}"),
    }
}
