//! Exact counting of formulae, unsatisfiable formulae, and irreducible
//! non-satisfiable formulae per `(n, m)` cell.
//!
//! Unsatisfiable counts come from two independent routes that must agree:
//! canonical-order subset enumeration (descending-signature prefix DFS with
//! cover-feasibility pruning) and an inclusion-exclusion sum over uncovered
//! assignment sets. Irreducible counts come from the same DFS with
//! pivot-feasibility pruning. Exhaustive counting is desk scale only
//! (`n <= 4`); every walk carries an explicit node/wall-clock budget.

use std::io::Write;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::formula::{clause_universe, Clause};
use crate::sat::ins_bounds;

/// Largest `n` for which exhaustive per-cell counting is supported.
pub const CENSUS_MAX_VARS: u8 = 4;

/// Explicit compute budget for an enumeration walk. Exceeding it is an
/// error carrying partial progress, never silence.
#[derive(Debug, Clone)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_seconds: Option<f64>,
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_seconds: None,
        }
    }

    pub fn new(max_nodes: u64, max_seconds: Option<f64>) -> Self {
        Budget {
            max_nodes,
            max_seconds,
        }
    }
}

/// Work-split descriptor: partition `index` of `partitions` takes the
/// top-level DFS branches whose first clause index is congruent to `index`.
/// Partition counts merge by addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkSplit {
    pub partitions: u32,
    pub index: u32,
}

impl WorkSplit {
    pub fn whole() -> Self {
        WorkSplit {
            partitions: 1,
            index: 0,
        }
    }

    pub fn new(partitions: u32, index: u32) -> Self {
        assert!(partitions > 0 && index < partitions, "bad work split");
        WorkSplit { partitions, index }
    }

    fn is_whole(self) -> bool {
        self.partitions == 1
    }
}

/// Exact binomial coefficient, arbitrary precision.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::from(1u32);
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut res: u128 = 1;
    for i in 0..k {
        res = res * u128::from(n - i) / u128::from(i + 1);
    }
    res
}

/// Universe size `8 * C(n,3)`.
fn universe_len(n: u8) -> usize {
    let n = usize::from(n);
    8 * n * (n - 1) * (n - 2) / 6
}

/// `#Phi(n,m) = C(8 * C(n,3), m)`, the number of m-clause formulae.
pub fn count_total(n: u8, m: usize) -> Result<BigUint> {
    if !(3..=crate::formula::MAX_VARS).contains(&n) {
        return Err(Error::InvalidVarCount {
            n: n as usize,
            max: crate::formula::MAX_VARS as usize,
        });
    }
    let max = universe_len(n);
    if m > max {
        return Err(Error::MOutOfRange { n, m, max });
    }
    Ok(binomial(max as u64, m as u64))
}

/// Precomputed clause universe in canonical order, as falsify bit masks.
struct SearchSpace {
    masks: Vec<u64>,
    sigs: Vec<u64>,
    /// `suffix_or[i]` = union of `masks[i..]`.
    suffix_or: Vec<u64>,
    full: u64,
    /// Points covered by one clause: `2^(n-3)`.
    points_per_clause: u32,
}

impl SearchSpace {
    fn for_n(n: u8) -> Result<SearchSpace> {
        let universe = clause_universe(n)?;
        Ok(SearchSpace::from_universe(n, &universe))
    }

    fn from_universe(n: u8, universe: &[Clause]) -> SearchSpace {
        let masks: Vec<u64> = universe
            .iter()
            .map(|c| c.falsify_set().ones().fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        let sigs: Vec<u64> = universe.iter().map(|c| c.signature().value()).collect();
        let mut suffix_or = vec![0u64; masks.len() + 1];
        for i in (0..masks.len()).rev() {
            suffix_or[i] = suffix_or[i + 1] | masks[i];
        }
        let bits = 1u32 << n;
        let full = if bits == 64 {
            u64::MAX
        } else {
            (1u64 << bits) - 1
        };
        SearchSpace {
            masks,
            sigs,
            suffix_or,
            full,
            points_per_clause: 1 << (n - 3),
        }
    }
}

struct WalkState<'a> {
    budget: &'a Budget,
    started: Instant,
    nodes: u64,
    progress: String,
}

impl<'a> WalkState<'a> {
    fn new(budget: &'a Budget, progress: String) -> Self {
        WalkState {
            budget,
            started: Instant::now(),
            nodes: 0,
            progress,
        }
    }

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                progress: self.progress.clone(),
            });
        }
        if self.nodes & 0xffff == 0 {
            if let Some(limit) = self.budget.max_seconds {
                if self.started.elapsed().as_secs_f64() > limit {
                    return Err(Error::BudgetExceeded {
                        nodes: self.nodes,
                        progress: self.progress.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

fn unsat_dfs(
    space: &SearchSpace,
    walk: &mut WalkState,
    count: &mut u128,
    start: usize,
    depth: usize,
    m: usize,
    union: u64,
) -> Result<()> {
    walk.tick()?;
    if union == space.full {
        // Any completion of this prefix covers; count them in bulk.
        *count += binomial_u128((space.masks.len() - start) as u64, (m - depth) as u64);
        return Ok(());
    }
    if depth == m {
        return Ok(());
    }
    let slots = m - depth;
    let missing = (space.full ^ union).count_ones();
    if missing > slots as u32 * space.points_per_clause {
        return Ok(());
    }
    for i in start..=space.masks.len() - slots {
        if union | space.suffix_or[i] != space.full {
            // Clauses from here on can no longer reach the missing points.
            break;
        }
        unsat_dfs(space, walk, count, i + 1, depth + 1, m, union | space.masks[i])?;
    }
    Ok(())
}

fn unsat_count_over(
    space: &SearchSpace,
    m: usize,
    budget: &Budget,
    split: WorkSplit,
) -> Result<u128> {
    let mut walk = WalkState::new(budget, format!("unsat enumeration m={m}"));
    let mut count: u128 = 0;
    if m == 0 || m > space.masks.len() {
        return Ok(0);
    }
    for first in 0..=space.masks.len() - m {
        if first as u32 % split.partitions != split.index {
            continue;
        }
        if space.suffix_or[first] != space.full {
            break;
        }
        unsat_dfs(
            space,
            &mut walk,
            &mut count,
            first + 1,
            1,
            m,
            space.masks[first],
        )?;
    }
    Ok(count)
}

/// Exact count of m-clause formulae whose falsify sets cover `{0,1}^n`,
/// by canonical-order subset enumeration with cover-feasibility pruning.
pub fn count_unsat_enum(n: u8, m: usize, budget: &Budget, split: WorkSplit) -> Result<BigUint> {
    if !(3..=CENSUS_MAX_VARS).contains(&n) {
        return Err(Error::NTooLarge {
            n,
            max: CENSUS_MAX_VARS,
        });
    }
    let max = universe_len(n);
    if m > max {
        return Err(Error::MOutOfRange { n, m, max });
    }
    let space = SearchSpace::for_n(n)?;
    Ok(BigUint::from(unsat_count_over(&space, m, budget, split)?))
}

/// Signed weights for the inclusion-exclusion sum, indexed by the number of
/// clauses avoiding an assignment set: `w[a] = sum over nonempty point sets A
/// with avoid(A) = a of (-1)^(|A|+1)`.
struct IeWeights {
    weights: Vec<i64>,
    universe: usize,
}

impl IeWeights {
    fn for_n(n: u8) -> Result<IeWeights> {
        if !(3..=CENSUS_MAX_VARS).contains(&n) {
            return Err(Error::NTooLarge {
                n,
                max: CENSUS_MAX_VARS,
            });
        }
        let space = SearchSpace::for_n(n)?;
        let mut weights = vec![0i64; space.masks.len() + 1];
        let point_sets = 1u64 << (1u32 << n);
        for set in 1..point_sets {
            let avoid = space.masks.iter().filter(|&&mk| mk & set == 0).count();
            if set.count_ones() & 1 == 1 {
                weights[avoid] += 1;
            } else {
                weights[avoid] -= 1;
            }
        }
        Ok(IeWeights {
            weights,
            universe: space.masks.len(),
        })
    }

    /// `#satisfiable(n,m)` via inclusion-exclusion over uncovered points.
    fn satisfiable(&self, m: usize) -> BigInt {
        let mut sat = BigInt::zero();
        for (avoid, &w) in self.weights.iter().enumerate() {
            if w != 0 {
                sat += BigInt::from(w) * BigInt::from(binomial(avoid as u64, m as u64));
            }
        }
        sat
    }

    fn unsat(&self, m: usize) -> BigUint {
        let total = BigInt::from(binomial(self.universe as u64, m as u64));
        let unsat = total - self.satisfiable(m);
        assert!(!unsat.is_negative(), "inclusion-exclusion went negative");
        unsat.to_biguint().expect("count is non-negative")
    }
}

/// Exact unsatisfiable count by inclusion-exclusion; the independent oracle
/// for [`count_unsat_enum`]. Feasible only for `n <= 4` (`2^(2^n) - 1`
/// assignment sets).
pub fn count_unsat_ie(n: u8, m: usize) -> Result<BigUint> {
    let max = universe_len(n.max(3));
    if n >= 3 && m > max {
        return Err(Error::MOutOfRange { n, m, max });
    }
    Ok(IeWeights::for_n(n)?.unsat(m))
}

enum InsVisit<'v> {
    Count(&'v mut u128),
    Emit(&'v mut dyn FnMut(&[u64]) -> bool),
}

struct InsWalk<'a, 'v> {
    space: &'a SearchSpace,
    walk: WalkState<'a>,
    m: usize,
    chosen: Vec<usize>,
    pivots: Vec<u64>,
    visit: InsVisit<'v>,
    stopped: bool,
}

impl InsWalk<'_, '_> {
    fn dfs(&mut self, start: usize, union: u64) -> Result<()> {
        self.walk.tick()?;
        let depth = self.chosen.len();
        if depth == self.m {
            if union == self.space.full {
                match &mut self.visit {
                    InsVisit::Count(count) => **count += 1,
                    InsVisit::Emit(emit) => {
                        let sigs: Vec<u64> =
                            self.chosen.iter().map(|&i| self.space.sigs[i]).collect();
                        if !emit(&sigs) {
                            self.stopped = true;
                        }
                    }
                }
            }
            return Ok(());
        }
        let slots = self.m - depth;
        let missing = (self.space.full ^ union).count_ones();
        if missing > slots as u32 * self.space.points_per_clause {
            return Ok(());
        }
        for i in start..=self.space.masks.len() - slots {
            if self.stopped {
                return Ok(());
            }
            if union | self.space.suffix_or[i] != self.space.full {
                break;
            }
            let mask = self.space.masks[i];
            let own = mask & !union;
            if own == 0 {
                // Both falsified points already covered: this clause could
                // never earn a pivot.
                continue;
            }
            if self.pivots[..depth].iter().any(|&p| p & !mask == 0) {
                // Some chosen clause would lose its last pivot candidate.
                continue;
            }
            let saved: Vec<u64> = self.pivots[..depth].to_vec();
            for p in &mut self.pivots[..depth] {
                *p &= !mask;
            }
            self.pivots[depth] = own;
            self.chosen.push(i);
            self.dfs(i + 1, union | mask)?;
            self.chosen.pop();
            self.pivots[..depth].copy_from_slice(&saved);
        }
        Ok(())
    }

    fn run(&mut self, split: WorkSplit) -> Result<()> {
        if self.m == 0 || self.m > self.space.masks.len() {
            return Ok(());
        }
        for first in 0..=self.space.masks.len() - self.m {
            if self.stopped {
                return Ok(());
            }
            if first as u32 % split.partitions != split.index {
                continue;
            }
            if self.space.suffix_or[first] != self.space.full {
                break;
            }
            self.pivots[0] = self.space.masks[first];
            self.chosen.push(first);
            self.dfs(first + 1, self.space.masks[first])?;
            self.chosen.pop();
        }
        Ok(())
    }
}

fn ins_enum_guard(n: u8, m: usize) -> Result<Option<()>> {
    if !(3..=CENSUS_MAX_VARS).contains(&n) {
        return Err(Error::NTooLarge {
            n,
            max: CENSUS_MAX_VARS,
        });
    }
    let bounds = ins_bounds(n)?;
    if (m as u64) < bounds.m_min || m as u64 > bounds.m_max_int {
        return Ok(None);
    }
    Ok(Some(()))
}

/// Exact count of irreducible non-satisfiable m-clause formulae, by the
/// prefix DFS with pivot-feasibility pruning. Any `m` outside
/// `[8, floor(m_max)]` returns zero immediately by the clause-count window.
pub fn count_ins_enum(n: u8, m: usize, budget: &Budget, split: WorkSplit) -> Result<BigUint> {
    if ins_enum_guard(n, m)?.is_none() {
        return Ok(BigUint::zero());
    }
    let space = SearchSpace::for_n(n)?;
    let mut count: u128 = 0;
    let mut walk = InsWalk {
        space: &space,
        walk: WalkState::new(budget, format!("ins enumeration m={m}")),
        m,
        chosen: Vec::with_capacity(m),
        pivots: vec![0; m],
        visit: InsVisit::Count(&mut count),
        stopped: false,
    };
    walk.run(split)?;
    Ok(BigUint::from(count))
}

/// Walks every irreducible non-satisfiable formula of size `m` in canonical
/// order, handing its descending signature tuple to `visit`. `visit`
/// returning `false` stops the walk.
pub(crate) fn enumerate_ins(
    n: u8,
    m: usize,
    budget: &Budget,
    visit: &mut dyn FnMut(&[u64]) -> bool,
) -> Result<()> {
    if ins_enum_guard(n, m)?.is_none() {
        return Ok(());
    }
    let space = SearchSpace::for_n(n)?;
    let mut walk = InsWalk {
        space: &space,
        walk: WalkState::new(budget, format!("ins enumeration m={m}")),
        m,
        chosen: Vec::with_capacity(m),
        pivots: vec![0; m],
        visit: InsVisit::Emit(visit),
        stopped: false,
    };
    walk.run(WorkSplit::whole())
}

struct UnsatWalk<'a, 'v> {
    space: &'a SearchSpace,
    walk: WalkState<'a>,
    m: usize,
    chosen: Vec<usize>,
    visit: &'v mut dyn FnMut(&[u64]) -> bool,
    stopped: bool,
}

impl UnsatWalk<'_, '_> {
    fn dfs(&mut self, start: usize, union: u64) -> Result<()> {
        self.walk.tick()?;
        let depth = self.chosen.len();
        if depth == self.m {
            if union == self.space.full {
                let sigs: Vec<u64> = self.chosen.iter().map(|&i| self.space.sigs[i]).collect();
                if !(self.visit)(&sigs) {
                    self.stopped = true;
                }
            }
            return Ok(());
        }
        let slots = self.m - depth;
        let missing = (self.space.full ^ union).count_ones();
        if missing > slots as u32 * self.space.points_per_clause {
            return Ok(());
        }
        for i in start..=self.space.masks.len() - slots {
            if self.stopped {
                return Ok(());
            }
            if union | self.space.suffix_or[i] != self.space.full {
                break;
            }
            self.chosen.push(i);
            self.dfs(i + 1, union | self.space.masks[i])?;
            self.chosen.pop();
        }
        Ok(())
    }
}

/// Walks every unsatisfiable (covering) formula of size `m` in canonical
/// order. Unlike the counting walk this visits each subset individually.
pub(crate) fn enumerate_unsat(
    n: u8,
    m: usize,
    budget: &Budget,
    visit: &mut dyn FnMut(&[u64]) -> bool,
) -> Result<()> {
    if !(3..=CENSUS_MAX_VARS).contains(&n) {
        return Err(Error::NTooLarge {
            n,
            max: CENSUS_MAX_VARS,
        });
    }
    let space = SearchSpace::for_n(n)?;
    if m == 0 || m > space.masks.len() {
        return Ok(());
    }
    let mut walk = UnsatWalk {
        space: &space,
        walk: WalkState::new(budget, format!("unsat enumeration m={m}")),
        m,
        chosen: Vec::with_capacity(m),
        visit,
        stopped: false,
    };
    walk.dfs(0, 0)
}

/// How the unsatisfiable count of a census cell was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    Enumeration,
    InclusionExclusion,
    Both,
}

impl std::fmt::Display for CountMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CountMethod::Enumeration => "enumeration",
            CountMethod::InclusionExclusion => "inclusion-exclusion",
            CountMethod::Both => "both",
        })
    }
}

/// One `(n, m)` census cell.
#[derive(Debug, Clone)]
pub struct CensusRow {
    pub n: u8,
    pub m: usize,
    pub total: BigUint,
    pub unsat: BigUint,
    pub ins: BigUint,
    pub method: CountMethod,
}

/// Sweeps the census over `m_lo..=m_hi`.
///
/// Whole runs compute the unsatisfiable column by inclusion-exclusion and
/// additionally by enumeration wherever the budget allows (`method` records
/// which). Partitioned runs are enumeration-only and their cells merge by
/// addition across partitions.
pub fn census_sweep(
    n: u8,
    m_lo: usize,
    m_hi: usize,
    budget: &Budget,
    split: WorkSplit,
) -> Result<Vec<CensusRow>> {
    if !(3..=CENSUS_MAX_VARS).contains(&n) {
        return Err(Error::NTooLarge {
            n,
            max: CENSUS_MAX_VARS,
        });
    }
    let max = universe_len(n);
    if m_hi > max || m_lo > m_hi {
        return Err(Error::MOutOfRange { n, m: m_hi, max });
    }
    let ie = if split.is_whole() {
        Some(IeWeights::for_n(n)?)
    } else {
        None
    };
    let mut rows = Vec::with_capacity(m_hi - m_lo + 1);
    for m in m_lo..=m_hi {
        let total = count_total(n, m)?;
        let (unsat, method) = match &ie {
            Some(weights) => {
                let by_ie = weights.unsat(m);
                match unsat_count_over(&SearchSpace::for_n(n)?, m, budget, split) {
                    Ok(by_enum) => {
                        assert_eq!(
                            BigUint::from(by_enum),
                            by_ie,
                            "enumeration and inclusion-exclusion disagree at n={n} m={m}"
                        );
                        (by_ie, CountMethod::Both)
                    }
                    Err(Error::BudgetExceeded { .. }) => (by_ie, CountMethod::InclusionExclusion),
                    Err(other) => return Err(other),
                }
            }
            None => (
                count_unsat_enum(n, m, budget, split)?,
                CountMethod::Enumeration,
            ),
        };
        let ins = count_ins_enum(n, m, budget, split)?;
        rows.push(CensusRow {
            n,
            m,
            total,
            unsat,
            ins,
            method,
        });
    }
    Ok(rows)
}

/// Writes rows as CSV: header `n,m,total,unsat,ins,method`, full decimal
/// counts.
pub fn emit_census_csv(rows: &[CensusRow], sink: &mut dyn Write) -> Result<()> {
    writeln!(sink, "n,m,total,unsat,ins,method")?;
    for row in rows {
        writeln!(
            sink,
            "{},{},{},{},{},{}",
            row.n, row.m, row.total, row.unsat, row.ins, row.method
        )?;
    }
    Ok(())
}

/// Sum of the irreducible column over all m, for the lower-bound report.
pub fn total_ins(rows: &[CensusRow]) -> BigUint {
    rows.iter().map(|r| r.ins.clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::Clause;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn wide_budget() -> Budget {
        Budget::nodes(2_000_000_000)
    }

    #[test]
    fn binomial_values() {
        assert_eq!(count_total(4, 3).unwrap(), big(4960));
        assert_eq!(count_total(4, 8).unwrap(), big(10_518_300));
        assert_eq!(count_total(4, 32).unwrap(), big(1));
        assert!(matches!(
            count_total(4, 33),
            Err(Error::MOutOfRange { .. })
        ));
    }

    #[test]
    fn unsat_enum_pinned_values() {
        let b = wide_budget();
        let w = WorkSplit::whole();
        assert_eq!(count_unsat_enum(4, 7, &b, w).unwrap(), big(0));
        assert_eq!(count_unsat_enum(4, 8, &b, w).unwrap(), big(272));
        assert_eq!(count_unsat_enum(4, 32, &b, w).unwrap(), big(1));
        assert_eq!(count_unsat_enum(4, 31, &b, w).unwrap(), big(32));
    }

    #[test]
    fn ie_matches_enum_on_small_m() {
        let b = wide_budget();
        for m in [0usize, 1, 2, 7, 8, 9, 30, 31, 32] {
            assert_eq!(
                count_unsat_ie(4, m).unwrap(),
                count_unsat_enum(4, m, &b, WorkSplit::whole()).unwrap(),
                "m={m}"
            );
        }
    }

    #[test]
    fn ins_enum_pinned_values() {
        let b = wide_budget();
        let w = WorkSplit::whole();
        assert_eq!(count_ins_enum(4, 7, &b, w).unwrap(), big(0));
        assert_eq!(count_ins_enum(4, 8, &b, w).unwrap(), big(272));
        assert_eq!(count_ins_enum(4, 13, &b, w).unwrap(), big(0));
    }

    #[test]
    fn n3_universe_is_the_unique_core() {
        let b = wide_budget();
        let w = WorkSplit::whole();
        assert_eq!(count_unsat_enum(3, 8, &b, w).unwrap(), big(1));
        assert_eq!(count_ins_enum(3, 8, &b, w).unwrap(), big(1));
        assert_eq!(count_unsat_ie(3, 7).unwrap(), big(0));
    }

    #[test]
    fn budget_exceeded_is_loud() {
        let b = Budget::nodes(10);
        let err = count_unsat_enum(4, 8, &b, WorkSplit::whole()).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn partitions_merge_to_whole() {
        let b = wide_budget();
        let whole = count_unsat_enum(4, 8, &b, WorkSplit::whole()).unwrap();
        let merged: BigUint = (0..3)
            .map(|i| count_unsat_enum(4, 8, &b, WorkSplit::new(3, i)).unwrap())
            .sum();
        assert_eq!(whole, merged);

        let whole_ins = count_ins_enum(4, 9, &b, WorkSplit::whole()).unwrap();
        let merged_ins: BigUint = (0..4)
            .map(|i| count_ins_enum(4, 9, &b, WorkSplit::new(4, i)).unwrap())
            .sum();
        assert_eq!(whole_ins, merged_ins);
    }

    #[test]
    fn counts_are_deterministic() {
        let b = wide_budget();
        let w = WorkSplit::whole();
        assert_eq!(
            count_ins_enum(4, 9, &b, w).unwrap(),
            count_ins_enum(4, 9, &b, w).unwrap()
        );
    }

    /// Runs the pivot-feasibility walk with the clause-count window guard
    /// bypassed: the search itself must come back empty outside [8, 12].
    fn raw_ins_walk_count(m: usize) -> u128 {
        let space = SearchSpace::for_n(4).unwrap();
        let budget = wide_budget();
        let mut count: u128 = 0;
        let mut walk = InsWalk {
            space: &space,
            walk: WalkState::new(&budget, format!("raw ins walk m={m}")),
            m,
            chosen: Vec::with_capacity(m),
            pivots: vec![0; m],
            visit: InsVisit::Count(&mut count),
            stopped: false,
        };
        walk.run(WorkSplit::whole()).unwrap();
        count
    }

    #[test]
    fn window_zeros_hold_without_the_guard() {
        assert_eq!(raw_ins_walk_count(7), 0);
        assert_eq!(raw_ins_walk_count(13), 0);
        assert_eq!(raw_ins_walk_count(8), 272);
    }

    #[test]
    fn counting_is_invariant_under_relabeling() {
        // Permute variables (1 2 3 4) -> (3 1 4 2) and flip the polarity of
        // x2 and x4 before enumerating: the counts only depend on structure.
        let perm = [3u8, 1, 4, 2];
        let flip = |v: u8| v == 2 || v == 4;
        let universe = clause_universe(4).unwrap();
        let transformed: Vec<Clause> = universe
            .iter()
            .map(|c| {
                let lits = c.literals().map(|(v, p)| {
                    let nv = perm[usize::from(v) - 1];
                    (nv, p ^ flip(nv))
                });
                Clause::new(4, lits).unwrap()
            })
            .collect();
        let space = SearchSpace::from_universe(4, &transformed);
        let count =
            unsat_count_over(&space, 8, &wide_budget(), WorkSplit::whole()).unwrap();
        assert_eq!(count, 272);
    }

    #[test]
    fn sweep_rows_are_ordered_and_consistent() {
        let rows = census_sweep(4, 1, 9, &wide_budget(), WorkSplit::whole()).unwrap();
        assert_eq!(rows.len(), 9);
        for row in &rows {
            assert!(row.ins <= row.unsat);
            assert!(row.unsat <= row.total);
            assert_eq!(row.total, count_total(4, row.m).unwrap());
            assert_eq!(row.method, CountMethod::Both);
            if row.m < 8 {
                assert_eq!(row.unsat, big(0));
                assert_eq!(row.ins, big(0));
            }
        }
        assert_eq!(rows[7].unsat, big(272));
        assert_eq!(rows[7].ins, big(272));
    }

    #[test]
    fn csv_shape() {
        let rows = census_sweep(4, 7, 8, &wide_budget(), WorkSplit::whole()).unwrap();
        let mut out = Vec::new();
        emit_census_csv(&rows, &mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,m,total,unsat,ins,method");
        assert_eq!(lines[1], "4,7,3365856,0,0,both");
        assert_eq!(lines[2], "4,8,10518300,272,272,both");
    }

    #[test]
    fn enumerate_ins_yields_descending_tuples() {
        let mut seen = 0usize;
        enumerate_ins(4, 8, &wide_budget(), &mut |sigs| {
            assert_eq!(sigs.len(), 8);
            assert!(sigs.windows(2).all(|w| w[0] > w[1]));
            seen += 1;
            true
        })
        .unwrap();
        assert_eq!(seen, 272);
    }

    #[test]
    fn enumerate_stops_when_asked() {
        let mut seen = 0usize;
        enumerate_ins(4, 8, &wide_budget(), &mut |_| {
            seen += 1;
            false
        })
        .unwrap();
        assert_eq!(seen, 1);
    }
}
