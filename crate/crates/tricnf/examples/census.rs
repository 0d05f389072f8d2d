//! Exact census of the n = 4 formula space, dual-verified where the budget
//! allows.
//!
//! ```bash
//! cargo run --release --example census
//! ```

use tricnf::census::{census_sweep, emit_census_csv, total_ins, Budget, WorkSplit};

fn main() {
    let budget = Budget::new(200_000_000, Some(120.0));
    let rows = census_sweep(4, 1, 13, &budget, WorkSplit::whole()).expect("desk-scale sweep");

    let mut csv = Vec::new();
    emit_census_csv(&rows, &mut csv).unwrap();
    print!("{}", String::from_utf8(csv).unwrap());

    println!();
    println!(
        "irreducible formulae total {} across m = 8..12; none exist outside that window",
        total_ins(&rows)
    );
    println!("method=both marks cells where enumeration and inclusion-exclusion were cross-checked");
}
