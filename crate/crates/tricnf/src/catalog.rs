//! Persisted, sorted catalogs of irreducible non-satisfiable (or plain
//! unsatisfiable) formulae, keyed by formula signature.
//!
//! File layout, byte-exact:
//!
//! ```text
//! v1 n=<n> kind=<INS|UNSAT> mlow=<m> mhigh=<m> count=<entries>
//! u1,u2,...,um
//! ...
//! ```
//!
//! Entries are descending signature tuples, one per line, sorted in
//! ascending lexicographic order of the numeric tuples. Catalogs are
//! immutable once built; rebuilding from the same census is byte-identical.

use std::io::{BufRead, Write};

use crate::census::{enumerate_ins, enumerate_unsat, Budget};
use crate::error::{Error, Result};
use crate::formula::{signature_bounds, Formula};
use crate::sat::{ins_certificate, is_unsat_cover};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogKind {
    Ins,
    Unsat,
}

impl std::fmt::Display for CatalogKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CatalogKind::Ins => "INS",
            CatalogKind::Unsat => "UNSAT",
        })
    }
}

impl std::str::FromStr for CatalogKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "INS" | "ins" => Ok(CatalogKind::Ins),
            "UNSAT" | "unsat" => Ok(CatalogKind::Unsat),
            other => Err(format!("unknown catalog kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogHeader {
    pub format_version: u32,
    pub n: u8,
    pub kind: CatalogKind,
    pub m_low: usize,
    pub m_high: usize,
    pub count: usize,
}

/// Abstract operation tallies for the three query-pipeline stages:
/// per-column signature reads, sorting comparisons, and entry-tuple probes
/// of the ordered search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OperationReport {
    pub signature_ops: u64,
    pub sort_comparisons: u64,
    pub search_comparisons: u64,
}

/// An immutable catalog: header plus lexicographically sorted entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    header: CatalogHeader,
    entries: Vec<Vec<u64>>,
}

/// Enumerates every formula of the requested kind for `m` in
/// `m_low..=m_high` and freezes the sorted result.
pub fn build_catalog(
    n: u8,
    kind: CatalogKind,
    m_low: usize,
    m_high: usize,
    budget: &Budget,
) -> Result<Catalog> {
    if m_low > m_high || m_low == 0 {
        return Err(Error::MOutOfRange {
            n,
            m: m_low,
            max: m_high,
        });
    }
    let mut entries: Vec<Vec<u64>> = Vec::new();
    for m in m_low..=m_high {
        let mut take = |sigs: &[u64]| {
            entries.push(sigs.to_vec());
            true
        };
        match kind {
            CatalogKind::Ins => enumerate_ins(n, m, budget, &mut take)?,
            CatalogKind::Unsat => enumerate_unsat(n, m, budget, &mut take)?,
        }
    }
    entries.sort_unstable();
    let header = CatalogHeader {
        format_version: 1,
        n,
        kind,
        m_low,
        m_high,
        count: entries.len(),
    };
    Ok(Catalog { header, entries })
}

impl Catalog {
    pub fn header(&self) -> &CatalogHeader {
        &self.header
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Entries of exactly `p` signatures, in ascending lexicographic order.
    pub fn entries_of_len(&self, p: usize) -> impl Iterator<Item = &[u64]> {
        self.entries
            .iter()
            .filter(move |e| e.len() == p)
            .map(Vec::as_slice)
    }

    /// Writes the catalog in its canonical byte form.
    pub fn save(&self, sink: &mut dyn Write) -> Result<()> {
        let h = &self.header;
        writeln!(
            sink,
            "v{} n={} kind={} mlow={} mhigh={} count={}",
            h.format_version, h.n, h.kind, h.m_low, h.m_high, h.count
        )?;
        for entry in &self.entries {
            let line = entry
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            writeln!(sink, "{line}")?;
        }
        Ok(())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        self.save(&mut out).expect("writing to a vec cannot fail");
        out
    }

    /// Reads a catalog back, re-validating the header, the per-entry
    /// invariants, and the global sort order.
    pub fn load(source: &mut dyn BufRead) -> Result<Catalog> {
        let mut lines = source.lines();
        let header_line = lines
            .next()
            .transpose()?
            .ok_or_else(|| Error::CatalogFormat {
                line: 1,
                msg: "empty catalog file".into(),
            })?;
        let header = parse_header(&header_line)?;
        let (sig_lo, sig_hi) = signature_bounds(header.n);
        let mut entries: Vec<Vec<u64>> = Vec::with_capacity(header.count);
        for (idx, line) in lines.enumerate() {
            let line_no = idx + 2;
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let mut entry = Vec::new();
            for tok in line.split(',') {
                let value: u64 = tok.parse().map_err(|_| Error::CatalogFormat {
                    line: line_no,
                    msg: format!("bad signature token `{tok}`"),
                })?;
                if value < sig_lo || value > sig_hi {
                    return Err(Error::CatalogFormat {
                        line: line_no,
                        msg: format!("signature {value} outside legal range for n={}", header.n),
                    });
                }
                entry.push(value);
            }
            if entry.len() < header.m_low || entry.len() > header.m_high {
                return Err(Error::CatalogFormat {
                    line: line_no,
                    msg: format!("entry length {} outside m-range", entry.len()),
                });
            }
            if !entry.windows(2).all(|w| w[0] > w[1]) {
                return Err(Error::CatalogFormat {
                    line: line_no,
                    msg: "signatures not strictly descending".into(),
                });
            }
            entries.push(entry);
        }
        if entries.len() != header.count {
            return Err(Error::CatalogFormat {
                line: 1,
                msg: format!(
                    "header declares {} entries but file has {}",
                    header.count,
                    entries.len()
                ),
            });
        }
        if !entries.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::CatalogFormat {
                line: 1,
                msg: "entries not sorted in ascending lexicographic order".into(),
            });
        }
        Ok(Catalog { header, entries })
    }

    /// Membership query via the signature pipeline: recompute the clause
    /// signatures, sort them, then run an ordered search. The report tallies
    /// each stage; the search counts one comparison per probed entry tuple.
    pub fn lookup(&self, formula: &Formula) -> Result<(bool, OperationReport)> {
        if formula.n() != self.header.n {
            return Err(Error::NMismatch {
                formula_n: formula.n(),
                catalog_n: self.header.n,
            });
        }
        let mut report = OperationReport::default();

        // Stage 1: one signature per clause, 2n column reads each.
        let mut sigs: Vec<u64> = formula
            .clauses()
            .iter()
            .map(|c| {
                report.signature_ops += 2 * u64::from(formula.n());
                c.signature().value()
            })
            .collect();

        // Stage 2: order the tuple (descending, the canonical key order).
        sigs.sort_by(|a, b| {
            report.sort_comparisons += 1;
            b.cmp(a)
        });

        // Stage 3: ordered search over the sorted store.
        let found = binary_search_counted(&self.entries, &sigs, &mut report.search_comparisons);
        Ok((found, report))
    }

    /// Membership of a raw descending signature tuple, without the pipeline
    /// accounting.
    pub fn contains_tuple(&self, sigs: &[u64]) -> bool {
        self.entries
            .binary_search_by(|e| e.as_slice().cmp(sigs))
            .is_ok()
    }

    /// Re-checks every stored entry against the appropriate decision
    /// procedure and the header metadata. Any mismatch is an error naming
    /// the offending entry.
    pub fn verify(&self) -> Result<()> {
        if self.entries.len() != self.header.count {
            return Err(Error::CatalogVerify {
                entry: 0,
                msg: "entry count disagrees with header".into(),
            });
        }
        for (i, entry) in self.entries.iter().enumerate() {
            let formula =
                Formula::from_signatures(self.header.n, entry).map_err(|e| Error::CatalogVerify {
                    entry: i,
                    msg: e.to_string(),
                })?;
            let ok = match self.header.kind {
                CatalogKind::Ins => ins_certificate(&formula).is_some(),
                CatalogKind::Unsat => is_unsat_cover(&formula),
            };
            if !ok {
                return Err(Error::CatalogVerify {
                    entry: i,
                    msg: format!("stored formula is not {}", self.header.kind),
                });
            }
        }
        Ok(())
    }

    #[cfg(test)]
    pub(crate) fn from_parts(header: CatalogHeader, entries: Vec<Vec<u64>>) -> Catalog {
        Catalog { header, entries }
    }
}

fn binary_search_counted(entries: &[Vec<u64>], key: &[u64], probes: &mut u64) -> bool {
    let mut lo = 0usize;
    let mut hi = entries.len();
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        *probes += 1;
        match entries[mid].as_slice().cmp(key) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater => hi = mid,
        }
    }
    false
}

fn parse_header(line: &str) -> Result<CatalogHeader> {
    let bad = |msg: String| Error::CatalogFormat { line: 1, msg };
    let parts: Vec<&str> = line.split_whitespace().collect();
    if parts.len() != 6 {
        return Err(bad(format!("malformed header `{line}`")));
    }
    let version: u32 = parts[0]
        .strip_prefix('v')
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| bad(format!("bad version field `{}`", parts[0])))?;
    if version != 1 {
        return Err(bad(format!("unsupported format version {version}")));
    }
    let field = |idx: usize, name: &str| -> Result<&str> {
        parts[idx]
            .strip_prefix(&format!("{name}=")[..])
            .ok_or_else(|| bad(format!("expected `{name}=` field, got `{}`", parts[idx])))
    };
    let n: u8 = field(1, "n")?
        .parse()
        .map_err(|_| bad("bad n field".into()))?;
    let kind: CatalogKind = field(2, "kind")?
        .parse()
        .map_err(|e: String| bad(e))?;
    let m_low: usize = field(3, "mlow")?
        .parse()
        .map_err(|_| bad("bad mlow field".into()))?;
    let m_high: usize = field(4, "mhigh")?
        .parse()
        .map_err(|_| bad("bad mhigh field".into()))?;
    let count: usize = field(5, "count")?
        .parse()
        .map_err(|_| bad("bad count field".into()))?;
    Ok(CatalogHeader {
        format_version: version,
        n,
        kind,
        m_low,
        m_high,
        count,
    })
}

/// True iff every signature of `small` occurs in `big`: one merge pass over
/// the two descending signature lists.
pub fn is_subformula(small: &Formula, big: &Formula) -> bool {
    debug_assert_eq!(small.n(), big.n(), "sub-formula test needs a shared n");
    is_subtuple(
        &small.signature_values(),
        &big.signature_values(),
    )
}

/// Merge pass over two descending signature tuples.
pub(crate) fn is_subtuple(small: &[u64], big: &[u64]) -> bool {
    let mut i = 0;
    let mut j = 0;
    while i < small.len() {
        if j == big.len() {
            return false;
        }
        match small[i].cmp(&big[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => j += 1,
            std::cmp::Ordering::Greater => return false,
        }
    }
    true
}
