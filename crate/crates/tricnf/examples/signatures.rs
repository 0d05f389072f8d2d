//! Clause signatures and the canonical formula encoding.
//!
//! ```bash
//! cargo run --example signatures
//! ```

use tricnf::dimacs::{emit_dimacs, parse_dimacs, signature_line};

fn main() {
    let text = "c three clauses over four variables\n\
                p cnf 4 3\n\
                1 2 -3 0\n\
                -2 3 -4 0\n\
                -1 -3 4 0\n";
    let formula = parse_dimacs(text).expect("well-formed input");

    println!("formula: {formula}");
    println!();
    println!("literal-column matrix (x1 !x1 x2 !x2 x3 !x3 x4 !x4):");
    for clause in formula.clauses() {
        let sig = clause.signature();
        let bits: String = (0..8)
            .map(|col| {
                if sig.value() >> (7 - col) & 1 == 1 {
                    " 1"
                } else {
                    " 0"
                }
            })
            .collect();
        println!("  {bits}   = {sig:>3}   {clause}");
    }
    println!();
    println!("signature line (canonical, descending): {}", signature_line(&formula));
    println!();
    println!("canonical DIMACS:");
    print!("{}", emit_dimacs(&formula));
}
