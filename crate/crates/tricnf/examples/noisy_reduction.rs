//! Core recovery: bury an irreducible seed under random noise clauses, then
//! find some irreducible core again with both strategies.
//!
//! ```bash
//! cargo run --release --example noisy_reduction
//! ```

use tricnf::catalog::{build_catalog, is_subformula, CatalogKind};
use tricnf::census::Budget;
use tricnf::reduction::{
    adversarial_trend, emit_experiment_csv, gen_noisy, reduce_catalog_first, reduce_subsets_first,
    run_experiments,
};
use tricnf::{ins_certificate, Formula};

fn main() {
    let budget = Budget::nodes(500_000_000);
    let catalog = build_catalog(4, CatalogKind::Ins, 8, 12, &budget).unwrap();
    println!(
        "catalog holds {} irreducible formulae (m = 8..12)",
        catalog.header().count
    );

    let seed = Formula::from_signatures(4, &catalog.entries()[0]).unwrap();
    let instance = gen_noisy(&seed, 7).unwrap();
    println!();
    println!(
        "seed [{}] + 8 noise clauses -> combined m={}",
        seed
            .signature_values()
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
        instance.combined.m()
    );

    for result in [
        reduce_subsets_first(&instance, &catalog).unwrap(),
        reduce_catalog_first(&instance, &catalog).unwrap(),
    ] {
        let core = result.found.expect("a core is always recoverable here");
        assert!(is_subformula(&core, &instance.combined));
        assert!(ins_certificate(&core).is_some());
        println!(
            "  {}: found a verified core of size {} after visiting {} candidates",
            result.approach,
            core.m(),
            result.visited
        );
    }

    println!();
    println!("a small seeded experiment batch (3 instances per m, both strategies):");
    let records = run_experiments(&catalog, 8, 10, 3, 2024).unwrap();
    let mut csv = Vec::new();
    emit_experiment_csv(&records, &mut csv).unwrap();
    print!("{}", String::from_utf8(csv).unwrap());

    println!();
    println!("adversarial schedule (planted core served last, only hit):");
    println!("{:>3} {:>4} {:>12}", "m", "2m", "visited");
    for row in adversarial_trend(4, 8, 11, &budget).unwrap() {
        println!("{:>3} {:>4} {:>12}", row.m, row.combined_size, row.visited);
    }
    println!("visited counts grow with the instance size; no asymptotic claim is made.");
}
