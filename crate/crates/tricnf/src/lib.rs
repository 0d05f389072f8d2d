//! A combinatorial laboratory for the space of 3-CNF formulae.
//!
//! Everything revolves around one canonical encoding: a clause over `n`
//! variables is a row of a `2n`-column literal matrix, read as a binary
//! *signature*; a formula is its strictly descending signature tuple. On top
//! of that the crate offers:
//!
//! - [`formula`]: clauses, signatures, falsifying sets, sizes, and the
//!   clause universe; [`dimacs`] for file interchange.
//! - [`sat`]: the covering unsatisfiability test, an exhaustive assignment
//!   oracle, pivot certificates for irreducible non-satisfiable (INS)
//!   formulae, and the `[8, m_max]` clause-count bounds.
//! - [`census`]: exact per-`(n, m)` counts of all / unsatisfiable / INS
//!   formulae, cross-checked between enumeration and inclusion-exclusion.
//! - [`catalog`]: a persisted sorted store of INS formulae with a
//!   signature-pipeline membership query.
//! - [`reduction`]: noisy extensions of INS seeds and the two core-recovery
//!   strategies run against a catalog, instrumented with operation counts.
//!
//! The `examples/` directory shows one runnable program per capability; the
//! `tricnf` binary wires them into a single command-line tool.

pub mod catalog;
pub mod census;
pub mod cli;
pub mod dimacs;
pub mod error;
pub mod formula;
pub mod reduction;
pub mod rng;
pub mod sat;

pub use error::{Error, Result};
pub use formula::{clause_universe, Clause, FalsifySet, Formula, Signature, SizeMeasure};
pub use sat::{
    ins_bounds, ins_certificate, is_ins_by_deletion, is_unsat_bruteforce, is_unsat_cover,
};
