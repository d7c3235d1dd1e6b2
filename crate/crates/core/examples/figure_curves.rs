//! Planar and series-parallel probability curves on [-1, 4] as CSV, ready
//! for any plotting tool.
//!
//! `cargo run --example figure_curves > curves.csv`

use critical_planarity::enumeration::{kernel_table, ClassTag};
use critical_planarity::probability::{parse_grid, probability_curve};

fn main() {
    let grid = parse_grid("-1:4:0.1").expect("valid grid");
    let curve = |class| {
        let table = kernel_table(&class, 30).expect("standard class");
        probability_curve(&table, &grid).expect("grid inside the envelope")
    };
    let planar = curve(ClassTag::Planar);
    let sp = curve(ClassTag::SeriesParallel);
    println!("lambda,planar,sp");
    for (a, b) in planar.points.iter().zip(&sp.points) {
        println!("{},{:.10},{:.10}", a.lambda, a.p, b.p);
    }
    if !planar.certified() {
        eprintln!("some points are not certified at r_max 30");
    }
}
