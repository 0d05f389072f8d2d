//! Noisy extensions of irreducible cores and the two core-recovery
//! strategies.
//!
//! An instance doubles an irreducible non-satisfiable seed with randomly
//! drawn extra clauses; the recovery job is to locate *some* irreducible
//! sub-formula again, using a catalog of known cores. Two canonical
//! strategies exist: enumerate sub-formulae and query the catalog
//! (subsets-first), or enumerate catalog entries and test containment
//! (catalog-first). Both fix ascending-size, lexicographic iteration order,
//! so every run is deterministic, operation counts included.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use crate::catalog::{is_subtuple, Catalog, CatalogKind};
use crate::census::{binomial, enumerate_ins, Budget, CensusRow};
use crate::error::{Error, Result};
use crate::formula::{clause_universe, Clause, Formula};
use crate::rng::SplitMix64;
use crate::sat::{ins_bounds, ins_certificate};

/// An irreducible seed of `m` clauses extended by `m` random noise clauses.
#[derive(Debug, Clone)]
pub struct NoisyInstance {
    pub seed_formula: Formula,
    pub noise: Vec<Clause>,
    pub combined: Formula,
    pub rng_seed: u64,
}

/// Draws `m` distinct noise clauses uniformly (without replacement) from the
/// clause universe minus the seed, using the given generator seed. The seed
/// formula must carry a pivot certificate; the combined formula stays
/// unsatisfiable because it extends an unsatisfiable one.
pub fn gen_noisy(seed: &Formula, rng_seed: u64) -> Result<NoisyInstance> {
    if ins_certificate(seed).is_none() {
        return Err(Error::SeedNotIns);
    }
    let n = seed.n();
    let m = seed.m();
    let universe = clause_universe(n)?;
    if universe.len() < 2 * m {
        return Err(Error::UniverseTooSmall {
            n,
            universe: universe.len(),
            needed: 2 * m,
        });
    }
    let seed_sigs = seed.signature_values();
    let pool: Vec<Clause> = universe
        .into_iter()
        .filter(|c| !seed_sigs.contains(&c.signature().value()))
        .collect();
    let mut rng = SplitMix64::new(rng_seed);
    let noise: Vec<Clause> = rng
        .distinct_indices(pool.len(), m)
        .into_iter()
        .map(|i| pool[i])
        .collect();
    let mut clauses = seed.clauses().to_vec();
    clauses.extend_from_slice(&noise);
    let combined = Formula::new(n, clauses)?;
    Ok(NoisyInstance {
        seed_formula: seed.clone(),
        noise,
        combined,
        rng_seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Approach {
    SubsetsFirst,
    CatalogFirst,
}

impl std::fmt::Display for Approach {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Approach::SubsetsFirst => "subsets-first",
            Approach::CatalogFirst => "catalog-first",
        })
    }
}

impl std::str::FromStr for Approach {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "subsets-first" => Ok(Approach::SubsetsFirst),
            "catalog-first" => Ok(Approach::CatalogFirst),
            other => Err(format!("unknown approach `{other}`")),
        }
    }
}

/// Outcome of one recovery run. `found == None` means the search exhausted
/// every candidate size the catalog covers.
#[derive(Debug, Clone)]
pub struct ReductionResult {
    pub found: Option<Formula>,
    pub approach: Approach,
    /// Candidate sub-formulae (subsets-first) or catalog entries
    /// (catalog-first) examined before stopping.
    pub visited: u64,
    pub membership_checks: u64,
}

/// Candidate sizes to search: the sizes the catalog knows, capped to proper
/// sub-formulae of `formula` and to the irreducibility window.
fn search_range(formula: &Formula, catalog: &Catalog) -> Result<(usize, usize)> {
    if formula.n() != catalog.header().n {
        return Err(Error::NMismatch {
            formula_n: formula.n(),
            catalog_n: catalog.header().n,
        });
    }
    if catalog.header().kind != CatalogKind::Ins {
        return Err(Error::WrongCatalogKind {
            kind: catalog.header().kind.to_string(),
        });
    }
    let bounds = ins_bounds(formula.n())?;
    let lo = catalog.header().m_low.max(bounds.m_min as usize);
    let hi = catalog
        .header()
        .m_high
        .min(formula.m() - 1)
        .min(bounds.m_max_int as usize);
    if lo > hi {
        return Err(Error::CatalogRange {
            mlow: catalog.header().m_low,
            mhigh: catalog.header().m_high,
            lo,
            hi,
        });
    }
    Ok((lo, hi))
}

/// Strategy 1, from the formula towards the catalog: walk all p-clause
/// sub-formulae for p ascending (lexicographic within one size), querying
/// the catalog for each, and stop at the first hit.
pub fn find_core_subsets_first(formula: &Formula, catalog: &Catalog) -> Result<ReductionResult> {
    let (lo, hi) = search_range(formula, catalog)?;
    let sigs = formula.signature_values();
    let mut visited = 0u64;
    let mut checks = 0u64;
    let mut tuple: Vec<u64> = Vec::with_capacity(hi);
    for p in lo..=hi {
        let mut idx: Vec<usize> = (0..p).collect();
        loop {
            visited += 1;
            tuple.clear();
            tuple.extend(idx.iter().map(|&i| sigs[i]));
            checks += 1;
            if catalog.contains_tuple(&tuple) {
                return Ok(ReductionResult {
                    found: Some(formula.sub_formula(&idx)),
                    approach: Approach::SubsetsFirst,
                    visited,
                    membership_checks: checks,
                });
            }
            if !next_combination(&mut idx, formula.m()) {
                break;
            }
        }
    }
    Ok(ReductionResult {
        found: None,
        approach: Approach::SubsetsFirst,
        visited,
        membership_checks: checks,
    })
}

/// Strategy 2, from the catalog towards the formula: walk catalog entries
/// for p ascending (lexicographic within one size), testing each for
/// containment in the formula, and stop at the first hit.
pub fn find_core_catalog_first(formula: &Formula, catalog: &Catalog) -> Result<ReductionResult> {
    let (lo, hi) = search_range(formula, catalog)?;
    let sigs = formula.signature_values();
    let mut visited = 0u64;
    let mut checks = 0u64;
    for p in lo..=hi {
        for entry in catalog.entries_of_len(p) {
            visited += 1;
            checks += 1;
            if is_subtuple(entry, &sigs) {
                return Ok(ReductionResult {
                    found: Some(Formula::from_signatures(formula.n(), entry)?),
                    approach: Approach::CatalogFirst,
                    visited,
                    membership_checks: checks,
                });
            }
        }
    }
    Ok(ReductionResult {
        found: None,
        approach: Approach::CatalogFirst,
        visited,
        membership_checks: checks,
    })
}

/// [`find_core_subsets_first`] on a noisy instance's combined formula.
pub fn reduce_subsets_first(
    instance: &NoisyInstance,
    catalog: &Catalog,
) -> Result<ReductionResult> {
    find_core_subsets_first(&instance.combined, catalog)
}

/// [`find_core_catalog_first`] on a noisy instance's combined formula.
pub fn reduce_catalog_first(
    instance: &NoisyInstance,
    catalog: &Catalog,
) -> Result<ReductionResult> {
    find_core_catalog_first(&instance.combined, catalog)
}

/// Advances `idx` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] != i + n - k {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// `C(2m, m)`: how many size-m histories could have produced one noisy
/// 2m-clause formula.
pub fn noisy_subset_count(m: u64) -> BigUint {
    binomial(2 * m, m)
}

/// The five-term counting lower bound for the total number of irreducible
/// cores, evaluated exactly in rational arithmetic, with the observed census
/// sum attached for comparison (reported, never asserted).
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: u8,
    pub numerator_terms: Vec<BigInt>,
    pub numerator_product: BigInt,
    pub denominator_terms: Vec<BigRational>,
    pub bound_value: BigRational,
    pub observed_ins_sum: Option<BigUint>,
}

impl BoundReport {
    /// How the bound compares to the observed total, when one is attached.
    pub fn comparison(&self) -> Option<std::cmp::Ordering> {
        self.observed_ins_sum.as_ref().map(|observed| {
            let observed = BigRational::from_integer(BigInt::from(observed.clone()));
            self.bound_value.cmp(&observed)
        })
    }
}

/// Evaluates the pivot-counting bound
/// `prod_{i=0..4} (2^n C(n,3) - i * step) / prod_{i=0..4} (m_max - i)` with
/// `step = 2^(n-3) C(n,3) + (2^(n-3) - 1)(C(n,3) - 1)`.
pub fn pivot_counting_bound(n: u8, census: Option<&[CensusRow]>) -> Result<BoundReport> {
    if !(4..=crate::formula::MAX_VARS).contains(&n) {
        return Err(Error::InvalidVarCount {
            n: n as usize,
            max: crate::formula::MAX_VARS as usize,
        });
    }
    let triples = u64::from(n) * u64::from(n - 1) * u64::from(n - 2) / 6;
    let pinned = 1u64 << (n - 3);
    let step = pinned * triples + (pinned - 1) * (triples - 1);
    let first = (1u64 << n) * triples;

    let numerator_terms: Vec<BigInt> = (0..5)
        .map(|i| BigInt::from(first) - BigInt::from(i) * BigInt::from(step))
        .collect();
    let numerator_product: BigInt = numerator_terms.iter().product();

    let m_max = ins_bounds(n)?.m_max_real;
    let denominator_terms: Vec<BigRational> = (0..5)
        .map(|i| &m_max - BigRational::from_integer(BigInt::from(i)))
        .collect();
    let denominator: BigRational = denominator_terms.iter().product();
    let bound_value = BigRational::from_integer(numerator_product.clone()) / denominator;

    let observed_ins_sum = census.map(|rows| {
        rows.iter()
            .filter(|r| r.n == n)
            .map(|r| r.ins.clone())
            .sum()
    });

    Ok(BoundReport {
        n,
        numerator_terms,
        numerator_product,
        denominator_terms,
        bound_value,
        observed_ins_sum,
    })
}

/// One reduction run of one instance under one approach.
#[derive(Debug, Clone)]
pub struct ExperimentRecord {
    pub rng_seed: u64,
    pub n: u8,
    pub m: usize,
    pub approach: Approach,
    pub found_size: usize,
    pub visited: u64,
    pub membership_checks: u64,
}

/// Runs `per_m` seeded noisy instances for every seed size in
/// `m_lo..=m_hi`, under both approaches. Instance seeds derive
/// deterministically from `base_seed`, so reports are byte-reproducible.
pub fn run_experiments(
    catalog: &Catalog,
    m_lo: usize,
    m_hi: usize,
    per_m: usize,
    base_seed: u64,
) -> Result<Vec<ExperimentRecord>> {
    let n = catalog.header().n;
    let mut records = Vec::new();
    for m in m_lo..=m_hi {
        let entries: Vec<&[u64]> = catalog.entries_of_len(m).collect();
        if entries.is_empty() {
            return Err(Error::CatalogRange {
                mlow: catalog.header().m_low,
                mhigh: catalog.header().m_high,
                lo: m,
                hi: m,
            });
        }
        for k in 0..per_m {
            let rng_seed = base_seed
                .wrapping_add((m as u64) << 32)
                .wrapping_add(k as u64);
            let mut picker = SplitMix64::new(rng_seed ^ 0x5eed_5eed_5eed_5eed);
            let seed_entry = entries[picker.below(entries.len() as u64) as usize];
            let seed = Formula::from_signatures(n, seed_entry)?;
            let instance = gen_noisy(&seed, rng_seed)?;
            for result in [
                reduce_subsets_first(&instance, catalog)?,
                reduce_catalog_first(&instance, catalog)?,
            ] {
                records.push(ExperimentRecord {
                    rng_seed,
                    n,
                    m,
                    approach: result.approach,
                    found_size: result.found.as_ref().map_or(0, Formula::m),
                    visited: result.visited,
                    membership_checks: result.membership_checks,
                });
            }
        }
    }
    Ok(records)
}

/// Writes experiment records as CSV.
pub fn emit_experiment_csv(records: &[ExperimentRecord], sink: &mut dyn Write) -> Result<()> {
    writeln!(
        sink,
        "rngSeed,n,m,approach,foundSize,visited,membershipChecks"
    )?;
    for r in records {
        writeln!(
            sink,
            "{},{},{},{},{},{},{}",
            r.rng_seed, r.n, r.m, r.approach, r.found_size, r.visited, r.membership_checks
        )?;
    }
    Ok(())
}

/// One row of the adversarial-schedule trend table.
#[derive(Debug, Clone, Copy)]
pub struct TrendRow {
    pub m: usize,
    pub combined_size: usize,
    pub visited: u64,
}

/// Worst-case candidate counts for subsets-first recovery: for each seed
/// size, plant the canonically first irreducible core of that size, then
/// examine candidates as if the planted core were the only catalog entry
/// and were scheduled last within its size class. Reported as a table; the
/// counts grow with the instance size but nothing asymptotic is claimed.
pub fn adversarial_trend(n: u8, m_lo: usize, m_hi: usize, budget: &Budget) -> Result<Vec<TrendRow>> {
    let mut rows = Vec::new();
    for m in m_lo..=m_hi {
        let mut first: Option<Vec<u64>> = None;
        enumerate_ins(n, m, budget, &mut |sigs| {
            first = Some(sigs.to_vec());
            false
        })?;
        let Some(seed_sigs) = first else {
            continue; // no core of this size exists
        };
        let seed = Formula::from_signatures(n, &seed_sigs)?;
        let instance = gen_noisy(&seed, 0xad5e_ed00 ^ m as u64)?;
        let sigs = instance.combined.signature_values();
        let c = sigs.len();

        let mut visited = 0u64;
        let mut deferred_hit = false;
        let mut tuple: Vec<u64> = Vec::with_capacity(m);
        for p in 8..=m {
            let mut idx: Vec<usize> = (0..p).collect();
            loop {
                tuple.clear();
                tuple.extend(idx.iter().map(|&i| sigs[i]));
                if tuple == seed_sigs {
                    // Adversarial schedule: the only hit is served last.
                    deferred_hit = true;
                } else {
                    visited += 1;
                }
                if !next_combination(&mut idx, c) {
                    break;
                }
            }
        }
        assert!(deferred_hit, "planted core must appear among candidates");
        visited += 1;
        rows.push(TrendRow {
            m,
            combined_size: c,
            visited,
        });
    }
    Ok(rows)
}
