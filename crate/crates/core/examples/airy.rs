//! The function A(y, lambda) across the window, with its error bounds.
//!
//! `cargo run --example airy -- [y]`

use critical_planarity::airy::airy_a;

fn main() {
    let y: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.5);
    println!("{:>6} {:>24} {:>10} {:>6}", "lambda", "A", "rel err", "terms");
    for step in -12..=12 {
        let lambda = step as f64 * 0.5;
        match airy_a(y, lambda, 1e-13) {
            Ok(a) => println!("{lambda:>6.1} {:>24.16e} {:>10.1e} {:>6}", a.value, a.relative_error, a.terms_used),
            Err(e) => println!("{lambda:>6.1} {e}"),
        }
    }
}
