//! DIMACS CNF interchange (strict three-distinct-variable subset) and the
//! signature-line text format.
//!
//! Accepted input: optional `c` comment lines, one `p cnf <n> <m>` header,
//! then exactly `m` clauses of three distinct-variable literals, each
//! terminated by `0`. Clauses may span lines. Emission is byte-deterministic:
//! header, then one clause per line in canonical descending-signature order,
//! literals ascending by variable index.

use crate::error::{Error, Result};
use crate::formula::{Clause, Formula};

/// Parses a strict 3-CNF DIMACS document into a canonical formula.
pub fn parse_dimacs(text: &str) -> Result<Formula> {
    let mut header: Option<(u8, usize)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut pending: Vec<i32> = Vec::new();

    let fail = |line: usize, msg: String| Error::Dimacs { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(fail(line_no, "duplicate problem line".into()));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(fail(line_no, format!("expected `p cnf <n> <m>`, got `{line}`")));
            }
            let n: u8 = parts[2]
                .parse()
                .map_err(|_| fail(line_no, format!("bad variable count `{}`", parts[2])))?;
            let m: usize = parts[3]
                .parse()
                .map_err(|_| fail(line_no, format!("bad clause count `{}`", parts[3])))?;
            header = Some((n, m));
            continue;
        }

        let (n, m) = header.ok_or_else(|| fail(line_no, "clause before `p cnf` header".into()))?;
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| fail(line_no, format!("bad literal token `{token}`")))?;
            if lit == 0 {
                if pending.len() != 3 {
                    return Err(fail(
                        line_no,
                        format!("clause has {} literals, expected exactly 3", pending.len()),
                    ));
                }
                let clause = Clause::from_dimacs_lits(n, [pending[0], pending[1], pending[2]])
                    .map_err(|e| fail(line_no, e.to_string()))?;
                clauses.push(clause);
                pending.clear();
                if clauses.len() > m {
                    return Err(fail(
                        line_no,
                        format!("more than the declared {m} clauses"),
                    ));
                }
            } else {
                pending.push(lit);
                if pending.len() > 3 {
                    return Err(fail(line_no, "clause has more than 3 literals".into()));
                }
            }
        }
    }

    let (n, m) = header.ok_or_else(|| fail(0, "missing `p cnf` header".into()))?;
    if !pending.is_empty() {
        return Err(fail(0, "unterminated clause at end of input".into()));
    }
    if clauses.len() != m {
        return Err(fail(
            0,
            format!("declared {m} clauses but found {}", clauses.len()),
        ));
    }
    Formula::new(n, clauses)
}

/// Serializes a formula in canonical order; re-parsing yields the same value.
pub fn emit_dimacs(formula: &Formula) -> String {
    let mut out = format!("p cnf {} {}\n", formula.n(), formula.m());
    for clause in formula.clauses() {
        for (var, positive) in clause.literals() {
            if positive {
                out.push_str(&format!("{var} "));
            } else {
                out.push_str(&format!("-{var} "));
            }
        }
        out.push_str("0\n");
    }
    out
}

/// One formula as a line of comma-separated descending signatures, e.g.
/// `164,70,25`.
pub fn signature_line(formula: &Formula) -> String {
    formula
        .signature_values()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses a signature line back into a formula over `n` variables.
pub fn formula_from_signature_line(n: u8, line: &str) -> Result<Formula> {
    let values = line
        .trim()
        .split(',')
        .map(|tok| {
            tok.trim().parse::<u64>().map_err(|_| Error::Dimacs {
                line: 1,
                msg: format!("bad signature token `{tok}`"),
            })
        })
        .collect::<Result<Vec<u64>>>()?;
    Formula::from_signatures(n, &values)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TABLE1: &str = "c worked example\np cnf 4 3\n1 2 -3 0\n-2 3 -4 0\n-1 -3 4 0\n";

    #[test]
    fn parses_worked_example() {
        let f = parse_dimacs(TABLE1).unwrap();
        assert_eq!(f.n(), 4);
        assert_eq!(f.signature_values(), vec![164, 70, 25]);
    }

    #[test]
    fn emit_is_canonical_and_stable() {
        let f = parse_dimacs(TABLE1).unwrap();
        let emitted = emit_dimacs(&f);
        assert_eq!(emitted, "p cnf 4 3\n1 2 -3 0\n-1 -3 4 0\n-2 3 -4 0\n");
        // Round trip: emit(parse(x)) is a fixed point.
        let again = parse_dimacs(&emitted).unwrap();
        assert_eq!(again, f);
        assert_eq!(emit_dimacs(&again), emitted);
    }

    #[test]
    fn clause_spanning_lines() {
        let f = parse_dimacs("p cnf 4 1\n1 2\n-3 0\n").unwrap();
        assert_eq!(f.signature_values(), vec![164]);
    }

    #[test]
    fn repeated_variable_rejected() {
        let err = parse_dimacs("p cnf 4 1\n1 1 2 0\n").unwrap_err();
        assert!(err.to_string().contains("repeated"), "{err}");
    }

    #[test]
    fn wrong_literal_count_rejected() {
        assert!(parse_dimacs("p cnf 4 1\n1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n").is_err());
    }

    #[test]
    fn out_of_range_variable_rejected() {
        let err = parse_dimacs("p cnf 4 1\n1 2 9 0\n").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn duplicate_clause_rejected() {
        assert!(matches!(
            parse_dimacs("p cnf 4 2\n1 2 3 0\n2 1 3 0\n"),
            Err(Error::DuplicateClause { .. })
        ));
    }

    #[test]
    fn header_and_count_errors() {
        assert!(parse_dimacs("1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 4 2\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 0\n1 2 -3 0\n").is_err());
        assert!(parse_dimacs("p cnf 4 1\n1 2 3\n").is_err());
    }

    #[test]
    fn signature_line_round_trip() {
        let f = parse_dimacs(TABLE1).unwrap();
        let line = signature_line(&f);
        assert_eq!(line, "164,70,25");
        let back = formula_from_signature_line(4, &line).unwrap();
        assert_eq!(back, f);
    }
}
