//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count n={n} out of supported range 3..={max}")]
    InvalidVarCount { n: usize, max: usize },

    #[error("variable x{var} repeated within a clause")]
    RepeatedVariable { var: u8 },

    #[error("variable x{var} out of range 1..={n}")]
    VariableOutOfRange { var: u8, n: u8 },

    #[error("value {value} is not a clause signature for n={n}: {reason}")]
    MalformedSignature {
        n: u8,
        value: u64,
        reason: &'static str,
    },

    #[error("duplicate clause (signature {signature})")]
    DuplicateClause { signature: u64 },

    #[error("a formula needs at least one clause")]
    EmptyFormula,

    #[error("clause built for n={clause_n} cannot join a formula with n={formula_n}")]
    MixedAmbient { clause_n: u8, formula_n: u8 },

    #[error("DIMACS parse error at line {line}: {msg}")]
    Dimacs { line: usize, msg: String },

    #[error("n={n} exceeds the exhaustive-scan cap of {max} variables")]
    NTooLarge { n: u8, max: u8 },

    #[error("m={m} out of range 0..={max} for n={n}")]
    MOutOfRange { n: u8, m: usize, max: usize },

    #[error("compute budget exceeded after {nodes} search nodes ({progress})")]
    BudgetExceeded { nodes: u64, progress: String },

    #[error("catalog format error at line {line}: {msg}")]
    CatalogFormat { line: usize, msg: String },

    #[error("catalog self-check failed at entry {entry}: {msg}")]
    CatalogVerify { entry: usize, msg: String },

    #[error("formula has n={formula_n} but catalog was built for n={catalog_n}")]
    NMismatch { formula_n: u8, catalog_n: u8 },

    #[error("catalog covers m in {mlow}..={mhigh} but the reduction needs {lo}..={hi}")]
    CatalogRange {
        mlow: usize,
        mhigh: usize,
        lo: usize,
        hi: usize,
    },

    #[error("seed formula is not irreducible non-satisfiable")]
    SeedNotIns,

    #[error("reduction requires an INS catalog, got kind {kind}")]
    WrongCatalogKind { kind: String },

    #[error("clause universe for n={n} has {universe} clauses, need at least {needed}")]
    UniverseTooSmall {
        n: u8,
        universe: usize,
        needed: usize,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
