//! Line-oriented text format for knapsack instances.
//!
//! ```text
//! fwknap-instance 1
//! n 4
//! origin 2 0 6
//! capacity 7
//! bound 7
//! weights 1 6 1 6
//! values 1 6 1 6
//! checksum <sha-256 of every preceding byte, lowercase hex>
//! ```
//!
//! All numbers are decimal without leading zeros. `origin <k> <m> <beta>`
//! records the reduction dimensions and base; instances not produced by a
//! reduction write `origin none`.

use std::fmt::Write as _;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::types::{BigNat, KnapsackInstance};

pub const FORMAT_NAME: &str = "fwknap-instance";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Origin {
    pub k: usize,
    pub m: usize,
    pub beta: BigNat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub origin: Option<Origin>,
    pub instance: KnapsackInstance,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum InstanceFileError {
    #[error("not an instance file (expected `{FORMAT_NAME} {FORMAT_VERSION}`)")]
    BadMagic,
    #[error("unsupported format version {0}")]
    VersionMismatch(String),
    #[error("missing checksum line")]
    MissingChecksum,
    #[error("checksum mismatch: file says {stated}, content hashes to {actual}")]
    ChecksumMismatch { stated: String, actual: String },
    #[error("line {line}: expected `{field}`")]
    MissingField { line: usize, field: &'static str },
    #[error("line {line}: `{token}` is not a canonical decimal")]
    MalformedDecimal { line: usize, token: String },
    #[error("{field} has {found} entries, n = {n}")]
    LengthMismatch {
        field: &'static str,
        found: usize,
        n: usize,
    },
    #[error("unexpected content after the checksum")]
    TrailingData,
}

fn checksum(content: &str) -> String {
    hex::encode(Sha256::digest(content.as_bytes()))
}

fn push_numbers(out: &mut String, key: &str, numbers: &[BigNat]) {
    out.push_str(key);
    for number in numbers {
        let _ = write!(out, " {number}");
    }
    out.push('\n');
}

pub fn write_instance(file: &InstanceFile) -> String {
    let inst = &file.instance;
    let mut out = String::new();
    let _ = writeln!(out, "{FORMAT_NAME} {FORMAT_VERSION}");
    let _ = writeln!(out, "n {}", inst.n);
    match &file.origin {
        Some(o) => {
            let _ = writeln!(out, "origin {} {} {}", o.k, o.m, o.beta);
        }
        None => out.push_str("origin none\n"),
    }
    let _ = writeln!(out, "capacity {}", inst.capacity);
    let _ = writeln!(out, "bound {}", inst.bound);
    push_numbers(&mut out, "weights", &inst.weights);
    push_numbers(&mut out, "values", &inst.values);
    let sum = checksum(&out);
    let _ = writeln!(out, "checksum {sum}");
    out
}

fn decimal(line: usize, token: &str) -> Result<BigNat, InstanceFileError> {
    let canonical = !token.is_empty()
        && token.bytes().all(|b| b.is_ascii_digit())
        && (token == "0" || !token.starts_with('0'));
    let malformed = || InstanceFileError::MalformedDecimal {
        line,
        token: token.to_string(),
    };
    if !canonical {
        return Err(malformed());
    }
    BigNat::parse_bytes(token.as_bytes(), 10).ok_or_else(malformed)
}

fn small(line: usize, token: &str) -> Result<usize, InstanceFileError> {
    let value = decimal(line, token)?;
    usize::try_from(value).map_err(|_| InstanceFileError::MalformedDecimal {
        line,
        token: token.to_string(),
    })
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    next: usize,
}

impl<'a> Lines<'a> {
    /// Fields after `key` on the next line.
    fn field(&mut self, key: &'static str) -> Result<(usize, Vec<&'a str>), InstanceFileError> {
        let line_no = self.next + 1;
        let missing = InstanceFileError::MissingField {
            line: line_no,
            field: key,
        };
        let line = self.lines.get(self.next).ok_or(missing.clone())?;
        self.next += 1;
        let mut parts = line.split(' ');
        if parts.next() != Some(key) {
            return Err(missing);
        }
        Ok((line_no, parts.collect()))
    }

    fn single(&mut self, key: &'static str) -> Result<(usize, &'a str), InstanceFileError> {
        let (line, fields) = self.field(key)?;
        match fields.as_slice() {
            [value] => Ok((line, value)),
            _ => Err(InstanceFileError::MissingField { line, field: key }),
        }
    }
}

pub fn read_instance(text: &str) -> Result<InstanceFile, InstanceFileError> {
    let split = text
        .rfind("\nchecksum ")
        .ok_or(InstanceFileError::MissingChecksum)?;
    let (body, last) = text.split_at(split + 1);
    let last = last.strip_suffix('\n').unwrap_or(last);
    let stated = &last["checksum ".len()..];
    if stated.contains('\n') {
        return Err(InstanceFileError::TrailingData);
    }
    let actual = checksum(body);
    if stated != actual {
        return Err(InstanceFileError::ChecksumMismatch {
            stated: stated.to_string(),
            actual,
        });
    }

    let mut lines = Lines {
        lines: body.lines().collect(),
        next: 0,
    };
    match lines.lines.first().map(|l| l.split_once(' ')) {
        Some(Some((FORMAT_NAME, version))) if version == FORMAT_VERSION.to_string() => {}
        Some(Some((FORMAT_NAME, version))) => {
            return Err(InstanceFileError::VersionMismatch(version.to_string()))
        }
        _ => return Err(InstanceFileError::BadMagic),
    }
    lines.next = 1;

    let (line, n) = lines.single("n")?;
    let n = small(line, n)?;
    let (line, origin) = lines.field("origin")?;
    let origin = match origin.as_slice() {
        ["none"] => None,
        [k, m, beta] => Some(Origin {
            k: small(line, k)?,
            m: small(line, m)?,
            beta: decimal(line, beta)?,
        }),
        _ => {
            return Err(InstanceFileError::MissingField {
                line,
                field: "origin",
            })
        }
    };
    let (line, capacity) = lines.single("capacity")?;
    let capacity = decimal(line, capacity)?;
    let (line, bound) = lines.single("bound")?;
    let bound = decimal(line, bound)?;
    let mut vector = |key: &'static str| -> Result<Vec<BigNat>, InstanceFileError> {
        let (line, fields) = lines.field(key)?;
        let numbers = fields
            .iter()
            .map(|t| decimal(line, t))
            .collect::<Result<Vec<_>, _>>()?;
        if numbers.len() != n {
            return Err(InstanceFileError::LengthMismatch {
                field: key,
                found: numbers.len(),
                n,
            });
        }
        Ok(numbers)
    };
    let weights = vector("weights")?;
    let values = vector("values")?;
    if lines.next != lines.lines.len() {
        return Err(InstanceFileError::TrailingData);
    }
    Ok(InstanceFile {
        origin,
        instance: KnapsackInstance {
            n,
            weights,
            capacity,
            values,
            bound,
        },
    })
}
