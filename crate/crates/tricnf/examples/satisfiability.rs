//! The covering unsatisfiability test against the exhaustive assignment
//! oracle.
//!
//! ```bash
//! cargo run --example satisfiability
//! ```

use tricnf::formula::clause_universe;
use tricnf::rng::SplitMix64;
use tricnf::{is_unsat_bruteforce, is_unsat_cover, Clause, Formula};

fn main() {
    // The eight clauses over {x1,x2,x3}: their falsifying sets tile all 16
    // assignments, so the conjunction is unsatisfiable.
    let block = Formula::new(
        4,
        (0..8u8)
            .map(|p| Clause::new(4, [(1, p & 1 != 0), (2, p & 2 != 0), (3, p & 4 != 0)]).unwrap())
            .collect(),
    )
    .unwrap();
    report(&block, "8-clause block over {x1,x2,x3}");

    let worked = Formula::from_signatures(4, &[164, 70, 25]).unwrap();
    report(&worked, "worked 3-clause example");

    // Both routes agree on seeded random formulae.
    let universe = clause_universe(5).unwrap();
    let mut rng = SplitMix64::new(2024);
    let mut unsat_seen = 0u32;
    for _ in 0..5_000 {
        let m = 1 + rng.below(20) as usize;
        let clauses: Vec<Clause> = rng
            .distinct_indices(universe.len(), m)
            .into_iter()
            .map(|i| universe[i])
            .collect();
        let f = Formula::new(5, clauses).unwrap();
        let cover = is_unsat_cover(&f);
        assert_eq!(cover, is_unsat_bruteforce(&f).unwrap());
        unsat_seen += u32::from(cover);
    }
    println!();
    println!("5000 random n=5 formulae: both routes agree everywhere ({unsat_seen} unsatisfiable)");
}

fn report(f: &Formula, label: &str) {
    let cover = is_unsat_cover(f);
    let brute = is_unsat_bruteforce(f).unwrap();
    assert_eq!(cover, brute);
    println!(
        "{label}: {} (cover test and assignment scan agree)",
        if cover { "UNSAT" } else { "SAT" }
    );
}
