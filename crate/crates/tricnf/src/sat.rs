//! Satisfiability and irreducibility decision procedures.
//!
//! Two independent routes decide satisfiability: the covering test (the
//! union of the clauses' falsifying sets must be all of `{0,1}^n`) and a
//! plain exhaustive assignment scan. Two independent routes decide
//! irreducibility: the pivot certificate (every clause owns an assignment
//! falsified by it alone) and one-clause-deletion minimality.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::formula::{FalsifySet, Formula};

/// Cap for the exhaustive `2^n` assignment scan.
pub const BRUTE_FORCE_MAX_VARS: u8 = 24;

/// The falsifying sets of a formula plus their running union.
#[derive(Debug, Clone)]
pub struct CoverState {
    pub union: FalsifySet,
    pub per_clause: Vec<FalsifySet>,
}

impl CoverState {
    pub fn of(formula: &Formula) -> Self {
        let per_clause: Vec<FalsifySet> =
            formula.clauses().iter().map(|c| c.falsify_set()).collect();
        let mut union = FalsifySet::empty(formula.n());
        for s in &per_clause {
            union.union_with(s);
        }
        CoverState { union, per_clause }
    }
}

/// Covering characterization: unsatisfiable iff the falsifying sets cover
/// every assignment.
pub fn is_unsat_cover(formula: &Formula) -> bool {
    CoverState::of(formula).union.is_full()
}

/// Exhaustive assignment scan; the oracle route, independent of falsifying
/// sets. Errors for `n` past [`BRUTE_FORCE_MAX_VARS`].
pub fn is_unsat_bruteforce(formula: &Formula) -> Result<bool> {
    if formula.n() > BRUTE_FORCE_MAX_VARS {
        return Err(Error::NTooLarge {
            n: formula.n(),
            max: BRUTE_FORCE_MAX_VARS,
        });
    }
    Ok(brute_unsat_skipping(formula, usize::MAX))
}

/// Assignment scan over the formula with clause `skip` deleted
/// (`skip >= m` scans the whole formula).
fn brute_unsat_skipping(formula: &Formula, skip: usize) -> bool {
    let clauses = formula.clauses();
    for v in 0..1u32 << formula.n() {
        let satisfied = clauses
            .iter()
            .enumerate()
            .all(|(j, c)| j == skip || c.satisfied_by(v));
        if satisfied {
            return false;
        }
    }
    true
}

/// The clauses of `formula` falsified by assignment `v`; at most `C(n,3)`.
pub fn covering_clauses(formula: &Formula, v: u32) -> Vec<usize> {
    assert!(v < 1u32 << formula.n(), "assignment index out of range");
    formula
        .clauses()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.satisfied_by(v))
        .map(|(j, _)| j)
        .collect()
}

/// Per-clause pivot witnesses: `pivots[j]` is an assignment falsified by
/// clause `j` and by no other clause of the formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsCertificate {
    pivots: Vec<u32>,
}

impl InsCertificate {
    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    /// Text form, one `clauseIndex:pivotIndex` per line. Clause indices are
    /// 1-based positions in the canonical order; pivots are assignment
    /// indices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (j, v) in self.pivots.iter().enumerate() {
            out.push_str(&format!("{}:{}\n", j + 1, v));
        }
        out
    }
}

/// Pivot-based irreducibility classifier: a certificate exists iff the
/// formula's falsifying sets cover `{0,1}^n` and every clause has a pivot.
/// Pivot search scans assignments in increasing order, so certificates are
/// deterministic.
pub fn ins_certificate(formula: &Formula) -> Option<InsCertificate> {
    let state = CoverState::of(formula);
    if !state.union.is_full() {
        return None;
    }
    let mut pivots = Vec::with_capacity(formula.m());
    for set in &state.per_clause {
        let pivot = set
            .ones()
            .find(|&v| state.per_clause.iter().filter(|s| s.contains(v)).count() == 1)?;
        pivots.push(pivot);
    }
    Some(InsCertificate { pivots })
}

/// First clause (canonical position) owning no pivot, if any. Only
/// meaningful for unsatisfiable formulae; used for diagnostics.
pub fn first_pivotless_clause(formula: &Formula) -> Option<usize> {
    let state = CoverState::of(formula);
    state.per_clause.iter().position(|set| {
        !set.ones()
            .any(|v| state.per_clause.iter().filter(|s| s.contains(v)).count() == 1)
    })
}

/// Deletion-based irreducibility oracle: unsatisfiable, and deleting any
/// single clause restores satisfiability. Runs entirely on the assignment
/// scan, independent of the pivot route.
pub fn is_ins_by_deletion(formula: &Formula) -> bool {
    if !brute_unsat_skipping(formula, usize::MAX) {
        return false;
    }
    (0..formula.m()).all(|j| !brute_unsat_skipping(formula, j))
}

/// Clause-count window outside which no formula can be irreducible
/// non-satisfiable.
#[derive(Debug, Clone, PartialEq)]
pub struct InsBounds {
    pub m_min: u64,
    pub m_max_real: BigRational,
    pub m_max_int: u64,
}

/// `m_min = 8` and `m_max = C(n,3) * 2^n / (2^(n-3) + C(n,3) - 1)`,
/// returned as an exact rational together with its floor.
pub fn ins_bounds(n: u8) -> Result<InsBounds> {
    if n < 3 {
        return Err(Error::InvalidVarCount {
            n: n as usize,
            max: crate::formula::MAX_VARS as usize,
        });
    }
    let triples = u64::from(n) * u64::from(n - 1) * u64::from(n - 2) / 6;
    let numerator = triples * (1u64 << n);
    let denominator = (1u64 << (n - 3)) + triples - 1;
    Ok(InsBounds {
        m_min: 8,
        m_max_real: BigRational::new(BigInt::from(numerator), BigInt::from(denominator)),
        m_max_int: numerator / denominator,
    })
}
