//! A class given only by a short table of weights: outerplanar kernels
//! through eight vertices.
//!
//! `cargo run --example outerplanar`

use critical_planarity::enumeration::{kernel_table, ClassTag, KernelWeightTable};
use critical_planarity::probability::class_probability;

fn main() {
    let outer = KernelWeightTable::outerplanar();
    let sp = kernel_table(&ClassTag::SeriesParallel, outer.r_max()).expect("standard class");
    print!("{}", outer.to_csv_string());
    for lambda in [-1.0, 0.0, 1.0] {
        let p = class_probability(&outer, lambda).expect("lambda inside the envelope");
        let q = class_probability(&sp, lambda).expect("lambda inside the envelope");
        println!("lambda {lambda}: outerplanar {:.6} <= sp {:.6} (both truncated at r = {})", p.p, q.p, outer.r_max());
    }
    if let Some(note) = outer.note() {
        println!("note: {note}");
    }
}
