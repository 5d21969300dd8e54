//! DIMACS CNF reading and writing, restricted to clauses of at most three
//! distinct literals.

use std::fmt::Write as _;

use thiserror::Error;

use crate::types::{Clause, CnfFormula, Literal};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DimacsError {
    #[error("line {line}: clause data before the `p cnf` header")]
    MissingHeader { line: usize },
    #[error("no `p cnf` header")]
    NoHeader,
    #[error("line {line}: malformed header, expected `p cnf <vars> <clauses>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("line {line}: `{token}` is not an integer literal")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: clause has {len} distinct literals, at most 3 are allowed")]
    ClauseTooLong { line: usize, len: usize },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("line {line}: variable {var} exceeds the declared {k} variables")]
    VariableOutOfRange { line: usize, var: u64, k: u32 },
    #[error("line {line}: last clause is not terminated by 0")]
    UnterminatedClause { line: usize },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

fn parse_header(line_no: usize, line: &str) -> Result<(u32, usize), DimacsError> {
    let malformed = || DimacsError::MalformedHeader { line: line_no };
    let mut fields = line.split_whitespace();
    if fields.next() != Some("p") || fields.next() != Some("cnf") {
        return Err(malformed());
    }
    let k = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(malformed)?;
    let m = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((k, m))
}

/// Parses DIMACS CNF text.
///
/// Clauses may span lines; `c` lines are comments and a `%` line ends the
/// clause section. Repeated literals inside a clause are dropped before the
/// size check.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(u32, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut pending_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line: line_no });
            }
            header = Some(parse_header(line_no, line)?);
            continue;
        }
        let (k, _) = header.ok_or(DimacsError::MissingHeader { line: line_no })?;
        for token in line.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| DimacsError::InvalidToken {
                line: line_no,
                token: token.to_string(),
            })?;
            if pending.is_empty() {
                pending_line = line_no;
            }
            if value == 0 {
                if pending.is_empty() {
                    return Err(DimacsError::EmptyClause { line: line_no });
                }
                let clause = Clause::new(pending.drain(..)).map_err(|err| match err {
                    crate::Error::ClauseTooLong { len } => DimacsError::ClauseTooLong {
                        line: pending_line,
                        len,
                    },
                    _ => DimacsError::EmptyClause { line: pending_line },
                })?;
                clauses.push(clause);
                continue;
            }
            let var = value.unsigned_abs();
            if var > u64::from(k) {
                return Err(DimacsError::VariableOutOfRange {
                    line: line_no,
                    var,
                    k,
                });
            }
            pending.push(Literal::from_dimacs(value).expect("nonzero and at most k"));
        }
    }

    let (k, m) = header.ok_or(DimacsError::NoHeader)?;
    if !pending.is_empty() {
        return Err(DimacsError::UnterminatedClause { line: pending_line });
    }
    if clauses.len() != m {
        return Err(DimacsError::ClauseCountMismatch {
            declared: m,
            found: clauses.len(),
        });
    }
    Ok(CnfFormula::new(k, clauses).expect("variables checked against header"))
}

/// Renders `formula` as DIMACS, with each entry of `comments` as a leading
/// `c` line.
pub fn write_dimacs(formula: &CnfFormula, comments: &[String]) -> String {
    let mut out = String::new();
    for comment in comments {
        let _ = writeln!(out, "c {comment}");
    }
    let _ = writeln!(
        out,
        "p cnf {} {}",
        formula.num_vars(),
        formula.num_clauses()
    );
    for clause in formula.clauses() {
        for lit in clause.literals() {
            let _ = write!(out, "{} ", lit.to_dimacs());
        }
        out.push_str("0\n");
    }
    out
}

/// A DIMACS-style value line: `v <signed literals> 0`.
pub fn value_line(literals: &[i64]) -> String {
    let mut out = String::from("v");
    for lit in literals {
        let _ = write!(out, " {lit}");
    }
    out.push_str(" 0");
    out
}
