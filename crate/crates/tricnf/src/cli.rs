//! Command-line wiring for every capability of the crate.
//!
//! Exit codes: 0 on success (including negative answers like `NOT-INS`),
//! 1 on domain errors (bad files, exceeded budgets, mismatched catalogs),
//! 2 on usage errors. All randomness flows through `--seed`, so identical
//! invocations give byte-identical outputs.

use std::fs;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::catalog::{build_catalog, Catalog, CatalogKind};
use crate::census::{census_sweep, emit_census_csv, Budget, WorkSplit};
use crate::dimacs::{emit_dimacs, parse_dimacs, signature_line};
use crate::error::Result;
use crate::formula::Formula;
use crate::reduction::{
    pivot_counting_bound, emit_experiment_csv, find_core_catalog_first, find_core_subsets_first,
    gen_noisy, run_experiments, ReductionResult,
};
use crate::sat::{
    first_pivotless_clause, ins_bounds, ins_certificate, is_unsat_bruteforce, is_unsat_cover,
};

/// Inclusive clause-count range, written `LO..HI` or as a single `M`.
#[derive(Debug, Clone, Copy)]
pub struct MRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| format!("bad clause count `{t}`"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b)?),
            None => {
                let m = parse(s)?;
                (m, m)
            }
        };
        if lo == 0 || lo > hi {
            return Err(format!("empty m-range `{s}`"));
        }
        Ok(MRange { lo, hi })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tricnf",
    version,
    about = "Laboratory for the 3-CNF formula space: signatures, irreducible cores, censuses, catalogs, reductions"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Node budget for exhaustive walks; exceeding it is an error (census
    /// falls back to inclusion-exclusion where it can).
    #[arg(long, default_value_t = 300_000_000)]
    max_nodes: u64,
    /// Wall-clock budget in seconds for exhaustive walks.
    #[arg(long)]
    budget_seconds: Option<f64>,
}

impl BudgetArgs {
    fn budget(&self) -> std::result::Result<Budget, String> {
        if let Some(s) = self.budget_seconds {
            if s <= 0.0 {
                return Err("budget must be positive".into());
            }
        }
        if self.max_nodes == 0 {
            return Err("budget must be positive".into());
        }
        Ok(Budget::new(self.max_nodes, self.budget_seconds))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a formula's signature line (comma-separated descending).
    Sig {
        /// Input formula in DIMACS CNF.
        #[arg(long)]
        dimacs: PathBuf,
    },
    /// Decide satisfiability.
    CheckSat {
        /// Input formula in DIMACS CNF.
        #[arg(long)]
        dimacs: PathBuf,
        /// Decision route: cover, brute, or both (must agree).
        #[arg(long, default_value = "cover")]
        method: String,
    },
    /// Decide irreducible non-satisfiability.
    CheckIns {
        /// Input formula in DIMACS CNF.
        #[arg(long)]
        dimacs: PathBuf,
        /// Also print the pivot certificate, one `clause:pivot` per line.
        #[arg(long)]
        certificate: bool,
    },
    /// Sweep exact counts (total, unsatisfiable, irreducible) over m.
    Census {
        /// Variable count (the census is desk scale: 3 or 4).
        #[arg(long)]
        n: u8,
        /// Inclusive clause-count range, e.g. `1..10`.
        #[arg(long)]
        m: MRange,
        /// Output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of independent work partitions (multi-process runs).
        #[arg(long, default_value_t = 1)]
        partitions: u32,
        /// Which partition this process handles (0-based).
        #[arg(long, default_value_t = 0)]
        partition_index: u32,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Enumerate and persist a catalog of INS (or unsatisfiable) formulae.
    BuildCatalog {
        /// Variable count.
        #[arg(long)]
        n: u8,
        /// Catalog kind: `ins` or `unsat`.
        #[arg(long, default_value = "ins")]
        kind: String,
        /// Inclusive clause-count range of stored entries.
        #[arg(long)]
        m: MRange,
        /// Output catalog path.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Query a catalog for a formula's membership.
    Query {
        /// Catalog file to search.
        #[arg(long)]
        catalog: PathBuf,
        /// Input formula in DIMACS CNF.
        #[arg(long)]
        dimacs: PathBuf,
        /// Print the pipeline operation tallies.
        #[arg(long)]
        report: bool,
        /// Re-verify every catalog entry before querying.
        #[arg(long)]
        verify: bool,
    },
    /// Extend an INS seed with random noise clauses.
    GenNoisy {
        /// Seed formula (must be INS) in DIMACS CNF.
        #[arg(long)]
        dimacs: PathBuf,
        /// Generator seed; identical seeds give identical instances.
        #[arg(long)]
        seed: u64,
        /// Where to write the combined DIMACS formula.
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover an irreducible core from a noisy formula, or run seeded
    /// batch experiments.
    Reduce {
        /// Noisy input formula (single-run mode).
        #[arg(long)]
        dimacs: Option<PathBuf>,
        /// Catalog of known INS formulae.
        #[arg(long)]
        catalog: PathBuf,
        /// Strategy: `subsets-first`, `catalog-first`, or `both`.
        #[arg(long, default_value = "both")]
        approach: String,
        /// Batch mode: run seeded experiments instead of a single file.
        #[arg(long)]
        experiment: bool,
        /// Batch mode: seed sizes to draw from the catalog, e.g. `8..12`.
        #[arg(long)]
        m: Option<MRange>,
        /// Batch mode: instances per seed size.
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Batch mode: base seed for instance generation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Batch mode: output CSV path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the irreducibility clause-count window and the counting bound.
    Bounds {
        /// Variable count.
        #[arg(long)]
        n: u8,
        /// Census CSV to attach the observed irreducible total.
        #[arg(long)]
        census: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<crate::error::Error> for Failure {
    fn from(e: crate::error::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

/// Parses `argv` and runs one subcommand, returning the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            2
        }
    }
}

/// [`run`] over the process arguments.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

fn read_formula(path: &Path) -> Result<Formula> {
    let text = fs::read_to_string(path)?;
    parse_dimacs(&text)
}

fn load_catalog(path: &Path) -> Result<Catalog> {
    let file = fs::File::open(path)?;
    Catalog::load(&mut BufReader::new(file))
}

fn execute(command: Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Sig { dimacs } => {
            let f = read_formula(&dimacs)?;
            println!("{}", signature_line(&f));
            Ok(())
        }

        Command::CheckSat { dimacs, method } => {
            let f = read_formula(&dimacs)?;
            let unsat = match method.as_str() {
                "cover" => is_unsat_cover(&f),
                "brute" => is_unsat_bruteforce(&f)?,
                "both" => {
                    let cover = is_unsat_cover(&f);
                    let brute = is_unsat_bruteforce(&f)?;
                    assert_eq!(cover, brute, "decision routes disagree");
                    cover
                }
                other => return Err(format!("unknown method `{other}`").into()),
            };
            println!("{}", if unsat { "UNSAT" } else { "SAT" });
            Ok(())
        }

        Command::CheckIns {
            dimacs,
            certificate,
        } => {
            let f = read_formula(&dimacs)?;
            if !is_unsat_cover(&f) {
                println!("NOT-INS (satisfiable)");
            } else if let Some(cert) = ins_certificate(&f) {
                println!("INS");
                if certificate {
                    print!("{}", cert.to_text());
                }
            } else {
                let clause = first_pivotless_clause(&f).expect("unsat non-INS has one") + 1;
                println!("NOT-INS (clause {clause} has no pivot)");
            }
            Ok(())
        }

        Command::Census {
            n,
            m,
            out,
            partitions,
            partition_index,
            budget,
        } => {
            if partitions == 0 || partition_index >= partitions {
                return Err(format!(
                    "partition index {partition_index} out of range for {partitions} partitions"
                )
                .into());
            }
            let split = WorkSplit::new(partitions, partition_index);
            let rows = census_sweep(n, m.lo, m.hi, &budget.budget()?, split)?;
            let mut sink: Vec<u8> = Vec::new();
            emit_census_csv(&rows, &mut sink)?;
            write_or_print(out.as_deref(), &sink)?;
            Ok(())
        }

        Command::BuildCatalog {
            n,
            kind,
            m,
            out,
            budget,
        } => {
            let kind: CatalogKind = kind.parse().map_err(Failure::Usage)?;
            let catalog = build_catalog(n, kind, m.lo, m.hi, &budget.budget()?)?;
            catalog.verify()?;
            fs::write(&out, catalog.to_bytes()).map_err(crate::error::Error::from)?;
            println!(
                "catalog: {} entries (n={}, kind={}, m={}..{})",
                catalog.header().count,
                n,
                kind,
                m.lo,
                m.hi
            );
            Ok(())
        }

        Command::Query {
            catalog,
            dimacs,
            report,
            verify,
        } => {
            let cat = load_catalog(&catalog)?;
            if verify {
                cat.verify()?;
            }
            let f = read_formula(&dimacs)?;
            let (found, ops) = cat.lookup(&f)?;
            println!("{}", if found { "FOUND" } else { "NOT-FOUND" });
            if report {
                println!(
                    "ops: signatures={} sort={} search={}",
                    ops.signature_ops, ops.sort_comparisons, ops.search_comparisons
                );
            }
            Ok(())
        }

        Command::GenNoisy { dimacs, seed, out } => {
            let seed_formula = read_formula(&dimacs)?;
            let instance = gen_noisy(&seed_formula, seed)?;
            fs::write(&out, emit_dimacs(&instance.combined)).map_err(crate::error::Error::from)?;
            println!(
                "seed m={} -> combined m={} (rng-seed {})",
                instance.seed_formula.m(),
                instance.combined.m(),
                seed
            );
            Ok(())
        }

        Command::Reduce {
            dimacs,
            catalog,
            approach,
            experiment,
            m,
            count,
            seed,
            out,
        } => {
            let cat = load_catalog(&catalog)?;
            if experiment {
                let m = m.ok_or_else(|| {
                    Failure::Usage("--experiment needs --m (seed sizes)".into())
                })?;
                let records = run_experiments(&cat, m.lo, m.hi, count, seed)?;
                let mut sink: Vec<u8> = Vec::new();
                emit_experiment_csv(&records, &mut sink)?;
                write_or_print(out.as_deref(), &sink)?;
                return Ok(());
            }
            let dimacs =
                dimacs.ok_or_else(|| Failure::Usage("single-run mode needs --dimacs".into()))?;
            let f = read_formula(&dimacs)?;
            let results: Vec<ReductionResult> = match approach.as_str() {
                "subsets-first" => vec![find_core_subsets_first(&f, &cat)?],
                "catalog-first" => vec![find_core_catalog_first(&f, &cat)?],
                "both" => vec![
                    find_core_subsets_first(&f, &cat)?,
                    find_core_catalog_first(&f, &cat)?,
                ],
                other => return Err(format!("unknown approach `{other}`").into()),
            };
            for r in results {
                match &r.found {
                    Some(core) => println!(
                        "{}: FOUND size={} [{}] visited={} membership-checks={}",
                        r.approach,
                        core.m(),
                        signature_line(core),
                        r.visited,
                        r.membership_checks
                    ),
                    None => println!(
                        "{}: NOT-FOUND visited={} membership-checks={}",
                        r.approach, r.visited, r.membership_checks
                    ),
                }
            }
            Ok(())
        }

        Command::Bounds { n, census } => {
            let bounds = ins_bounds(n)?;
            println!("n={n}");
            println!("m-min={}", bounds.m_min);
            println!(
                "m-max={} (~{:.3}) floor={}",
                bounds.m_max_real,
                rational_f64(&bounds.m_max_real),
                bounds.m_max_int
            );
            if n >= 4 {
                let rows = census
                    .map(|path| -> Result<_> {
                        let text = fs::read_to_string(&path)?;
                        parse_census_csv(&text)
                    })
                    .transpose()?;
                let report = pivot_counting_bound(n, rows.as_deref())?;
                let terms: Vec<String> = report
                    .numerator_terms
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                println!("numerator-terms={}", terms.join(","));
                println!("numerator-product={}", report.numerator_product);
                let denoms: Vec<String> = report
                    .denominator_terms
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                println!("denominator-terms={}", denoms.join(","));
                println!(
                    "bound={} (~{:.3})",
                    report.bound_value,
                    rational_f64(&report.bound_value)
                );
                match (&report.observed_ins_sum, report.comparison()) {
                    (Some(sum), Some(ord)) => {
                        println!("observed-ins-sum={sum}");
                        let rel = match ord {
                            std::cmp::Ordering::Less => "bound<observed",
                            std::cmp::Ordering::Equal => "bound=observed",
                            std::cmp::Ordering::Greater => "bound>observed",
                        };
                        println!("comparison={rel} (reported, not asserted)");
                    }
                    _ => println!("observed-ins-sum=unknown"),
                }
            }
            Ok(())
        }
    }
}

fn rational_f64(value: &num_rational::BigRational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

fn write_or_print(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(path) => {
            fs::write(path, bytes)?;
            println!("wrote {} bytes to {}", bytes.len(), path.display());
        }
        None => print!("{}", String::from_utf8_lossy(bytes)),
    }
    Ok(())
}

/// Reads a census CSV back (the `bounds` subcommand attaches its ins column).
fn parse_census_csv(text: &str) -> Result<Vec<crate::census::CensusRow>> {
    use num_bigint::BigUint;
    use std::str::FromStr as _;

    let bad = |line: usize, msg: String| crate::error::Error::Dimacs { line, msg };
    let mut rows = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        if idx == 0 {
            if line != "n,m,total,unsat,ins,method" {
                return Err(bad(1, format!("unexpected census header `{line}`")));
            }
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        if parts.len() != 6 {
            return Err(bad(idx + 1, "expected 6 columns".into()));
        }
        let parse_big =
            |t: &str| BigUint::from_str(t).map_err(|_| bad(idx + 1, format!("bad count `{t}`")));
        rows.push(crate::census::CensusRow {
            n: parts[0]
                .parse()
                .map_err(|_| bad(idx + 1, "bad n column".into()))?,
            m: parts[1]
                .parse()
                .map_err(|_| bad(idx + 1, "bad m column".into()))?,
            total: parse_big(parts[2])?,
            unsat: parse_big(parts[3])?,
            ins: parse_big(parts[4])?,
            method: match parts[5] {
                "enumeration" => crate::census::CountMethod::Enumeration,
                "inclusion-exclusion" => crate::census::CountMethod::InclusionExclusion,
                "both" => crate::census::CountMethod::Both,
                other => return Err(bad(idx + 1, format!("bad method `{other}`"))),
            },
        });
    }
    Ok(rows)
}
