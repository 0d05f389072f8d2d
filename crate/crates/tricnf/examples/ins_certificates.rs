//! Irreducible non-satisfiable formulae: pivot certificates, the deletion
//! oracle, and the clause-count window.
//!
//! ```bash
//! cargo run --example ins_certificates
//! ```

use tricnf::sat::first_pivotless_clause;
use tricnf::{ins_bounds, ins_certificate, is_ins_by_deletion, is_unsat_cover, Clause, Formula};

fn main() {
    let mut clauses: Vec<Clause> = (0..8u8)
        .map(|p| Clause::new(4, [(1, p & 1 != 0), (2, p & 2 != 0), (3, p & 4 != 0)]).unwrap())
        .collect();
    let block = Formula::new(4, clauses.clone()).unwrap();

    println!("block of 8 clauses over {{x1,x2,x3}}:");
    let cert = ins_certificate(&block).expect("the block is irreducible");
    println!("  irreducible: every clause owns a pivot assignment");
    print!("{}", indent(&cert.to_text()));
    assert!(is_ins_by_deletion(&block));
    println!("  deletion oracle agrees: removing any clause restores satisfiability");

    // Add a ninth clause whose two falsified assignments are already
    // covered: still unsatisfiable, no longer irreducible.
    clauses.push(Clause::from_dimacs_lits(4, [-1, -2, -4]).unwrap());
    let noisy = Formula::new(4, clauses).unwrap();
    println!();
    println!("same block plus (!x1 v !x2 v !x4):");
    assert!(is_unsat_cover(&noisy));
    assert!(ins_certificate(&noisy).is_none());
    let pivotless = first_pivotless_clause(&noisy).unwrap();
    println!(
        "  still unsatisfiable, but clause {} ({}) has no pivot -> reducible",
        pivotless + 1,
        noisy.clauses()[pivotless]
    );

    println!();
    for n in 4..=6u8 {
        let b = ins_bounds(n).unwrap();
        println!(
            "n={n}: irreducible formulae live in m = {}..={} (m_max = {} exactly)",
            b.m_min, b.m_max_int, b.m_max_real
        );
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}
