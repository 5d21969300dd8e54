//! Positional aggregation of 0-1 rows into one big-integer row, and the
//! digit decoder that inverts it.
//!
//! Row `r` placed at position `p_r` contributes `β^{p_r}` to the coefficient
//! of each of its variables and `rhs_r · β^{p_r}` to the aggregate
//! right-hand side. As long as no digit sum reaches `β`, the base-`β` digits
//! of the aggregate left-hand side are exactly the individual row sums.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::model::{ConstraintTag, LinearConstraint, ModelVariable, Relation};
use crate::error::{Error, Result};
use crate::types::BigNat;

/// A 0-1 row (coefficient 1 on each term) assigned to a digit position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositionedRow<V> {
    pub terms: Vec<V>,
    pub rhs: u32,
    pub position: usize,
}

impl<V> PositionedRow<V> {
    pub fn new(terms: Vec<V>, rhs: u32, position: usize) -> Self {
        PositionedRow {
            terms,
            rhs,
            position,
        }
    }
}

/// `Σ coefficient(v) · v  (relation)  rhs`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AggregateForm<V: Ord> {
    pub coefficients: BTreeMap<V, BigNat>,
    pub rhs: BigNat,
}

impl<V: Ord> AggregateForm<V> {
    pub fn coefficient(&self, var: &V) -> BigNat {
        self.coefficients.get(var).cloned().unwrap_or_default()
    }

    /// Left-hand side under the 0-1 valuation `value`.
    pub fn eval(&self, mut value: impl FnMut(&V) -> bool) -> BigNat {
        self.coefficients
            .iter()
            .filter(|(v, _)| value(v))
            .fold(BigNat::zero(), |acc, (_, c)| acc + c)
    }
}

/// `β^0 ..= β^{count-1}`
pub fn powers(beta: &BigNat, count: usize) -> Vec<BigNat> {
    let mut out = Vec::with_capacity(count);
    let mut current = BigNat::one();
    for _ in 0..count {
        let next = &current * beta;
        out.push(current);
        current = next;
    }
    out
}

/// Positional sum without any precondition checks.
///
/// Used directly for the clause inequalities (right-hand sides 0 or 1) and by
/// the verifier to probe bases that violate the aggregation premise.
pub fn positional_sum<V: Ord + Clone>(
    rows: &[PositionedRow<V>],
    beta: &BigNat,
) -> AggregateForm<V> {
    let span = rows.iter().map(|r| r.position + 1).max().unwrap_or(0);
    let pow = powers(beta, span);
    let mut coefficients: BTreeMap<V, BigNat> = BTreeMap::new();
    let mut rhs = BigNat::zero();
    for row in rows {
        let weight = &pow[row.position];
        for term in &row.terms {
            *coefficients.entry(term.clone()).or_default() += weight;
        }
        rhs += weight * row.rhs;
    }
    AggregateForm { coefficients, rhs }
}

/// Aggregates unique-choice equalities (`Σ terms = 1`) into one equality.
///
/// Requires distinct positions and `β > p`, where `p` is the largest number
/// of terms in a row; under those conditions the 0-1 solutions of the
/// aggregate are exactly those of the system.
pub fn aggregate_rows<V: Ord + Clone>(
    rows: &[PositionedRow<V>],
    beta: &BigNat,
) -> Result<AggregateForm<V>> {
    if rows.iter().any(|r| r.rhs != 1) {
        return Err(Error::RhsNotOne);
    }
    let mut seen = std::collections::BTreeSet::new();
    for row in rows {
        if !seen.insert(row.position) {
            return Err(Error::DuplicatePosition(row.position));
        }
    }
    let max_nonzeros = rows.iter().map(|r| r.terms.len()).max().unwrap_or(0);
    if *beta <= BigNat::from(max_nonzeros) {
        return Err(Error::BaseTooSmall {
            beta: beta.clone(),
            max_nonzeros,
        });
    }
    Ok(positional_sum(rows, beta))
}

/// [`aggregate_rows`] over model equalities, placing each row at
/// `position(tag)`.
pub fn aggregate_equalities(
    eqs: &[LinearConstraint],
    beta: &BigNat,
    position: impl Fn(ConstraintTag) -> usize,
) -> Result<AggregateForm<ModelVariable>> {
    let rows = eqs
        .iter()
        .map(|c| {
            if c.relation != Relation::Eq || c.rhs != 1 {
                return Err(Error::RhsNotOne);
            }
            Ok(PositionedRow::new(c.terms.clone(), c.rhs, position(c.tag)))
        })
        .collect::<Result<Vec<_>>>()?;
    aggregate_rows(&rows, beta)
}

/// Base-`β` digits of `total`, least significant first, exactly
/// `num_positions` of them.
///
/// Peeling digits from the bottom recovers each row sum of an aggregate
/// when no digit sum reached `β`; in particular a vector satisfying the
/// aggregated unique-choice equality decodes to all ones.
pub fn decode_digits(total: &BigNat, beta: &BigNat, num_positions: usize) -> Result<Vec<BigNat>> {
    let overflow = || Error::DigitOverflow {
        beta: beta.clone(),
        positions: num_positions,
    };
    if *beta < BigNat::from(2u32) {
        return Err(Error::BaseTooSmall {
            beta: beta.clone(),
            max_nonzeros: 1,
        });
    }
    let mut rest = total.clone();
    let mut digits = Vec::with_capacity(num_positions);
    for _ in 0..num_positions {
        let (quotient, digit) = rest.div_rem(beta);
        digits.push(digit);
        rest = quotient;
    }
    if !rest.is_zero() {
        return Err(overflow());
    }
    Ok(digits)
}
