//! Building, persisting, and querying a catalog of irreducible cores.
//!
//! ```bash
//! cargo run --example catalog
//! ```

use std::io::BufReader;

use tricnf::catalog::{build_catalog, Catalog, CatalogKind};
use tricnf::census::Budget;
use tricnf::Formula;

fn main() {
    let budget = Budget::nodes(100_000_000);
    let catalog = build_catalog(4, CatalogKind::Ins, 8, 8, &budget).unwrap();
    catalog.verify().expect("every stored entry re-checks");

    let bytes = catalog.to_bytes();
    println!("catalog file, first lines:");
    for line in String::from_utf8_lossy(&bytes).lines().take(4) {
        println!("  {line}");
    }
    println!("  ... ({} entries)", catalog.header().count);

    // Round trip through the byte form.
    let reloaded = Catalog::load(&mut BufReader::new(bytes.as_slice())).unwrap();
    assert_eq!(reloaded.to_bytes(), bytes);
    println!();
    println!("reload is byte-identical");

    // Query the pipeline: signatures, sort, ordered search.
    let member = Formula::from_signatures(4, &catalog.entries()[100]).unwrap();
    let (found, ops) = catalog.lookup(&member).unwrap();
    println!();
    println!("stored entry #100 -> {}", if found { "FOUND" } else { "NOT-FOUND" });
    println!(
        "  pipeline ops: signatures={} sort={} search={}",
        ops.signature_ops, ops.sort_comparisons, ops.search_comparisons
    );

    let outsider = Formula::from_signatures(4, &[164, 70, 25]).unwrap();
    let (found, _) = catalog.lookup(&outsider).unwrap();
    println!("worked satisfiable example -> {}", if found { "FOUND" } else { "NOT-FOUND" });
}
