//! The full 32 x 16 falsifying-set incidence matrix for n = 4.
//!
//! Rows are clauses (variable triples ascending, polarities counted with the
//! first variable as the low bit); columns are assignments indexed
//! `i = x1 + 2*x2 + 4*x3 + 8*x4`. A `1` marks an assignment that falsifies
//! the clause; every row has exactly `2^(n-3) = 2` of them, forming an edge
//! of the 4-dimensional hypercube.
//!
//! ```bash
//! cargo run --example falsify_matrix
//! ```

use tricnf::Clause;

fn main() {
    let n = 4u8;
    println!("{:24}  0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15", "");
    for a in 1..=n - 2 {
        for b in a + 1..=n - 1 {
            for c in b + 1..=n {
                for k in 0..8u8 {
                    let clause = Clause::new(
                        n,
                        [(a, k & 1 != 0), (b, k & 2 != 0), (c, k & 4 != 0)],
                    )
                    .unwrap();
                    let set = clause.falsify_set();
                    let row: String = (0..16u32)
                        .map(|v| {
                            let cell = if set.contains(v) { '1' } else { '0' };
                            if v < 10 {
                                format!(" {cell}")
                            } else {
                                format!("  {cell}")
                            }
                        })
                        .collect();
                    println!("{:24} {row}", clause.to_string());
                }
            }
        }
    }
    println!();
    println!("A formula is unsatisfiable exactly when its rows cover every column.");
    println!("The first 8 rows do; any 7 rows cannot (7 * 2 < 16).");
}
