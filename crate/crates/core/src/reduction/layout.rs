//! Digit positions and base for the aggregated coefficients.
//!
//! Value coefficients span `(4k + 2)m + k` base-`β` digits. The low
//! `(2k + 1)m` digits (the clause block) hold the inequality families; the
//! equality families sit above them, shifted by `(2k + 1)m`:
//!
//! | family         | relative start | count |
//! |----------------|----------------|-------|
//! | `ClauseSat`    | 0              | m     |
//! | `ConvPos`      | m              | km    |
//! | `ConvNeg`      | (k + 1)m       | km    |
//! | `SlackPos`     | 0              | km    |
//! | `SlackNeg`     | km             | km    |
//! | `ClauseChoice` | 2km            | m     |
//! | `VarPair`      | 2km + m        | k     |
//!
//! Weight coefficients use only the equality rows, at their relative
//! positions.

use num_bigint::BigUint;

use super::model::{ConstraintTag, ModelShape};
use crate::types::BigNat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReductionLayout {
    pub k: usize,
    pub m: usize,
    pub beta: BigNat,
}

/// Which aggregate a digit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    /// `C_0`, the aggregated inequalities.
    Clause,
    /// `A`, the aggregated equalities.
    Equality,
}

/// `β = 2km + 2`, or `2k + 2` without clauses.
///
/// `ClauseChoice` rows have `2k` nonzeros and no row has more, and
/// `β − 1 > 2km` keeps the clause block strictly below one unit of the
/// equality block.
pub fn build_layout(k: usize, m: usize) -> ReductionLayout {
    let beta = if m >= 1 { 2 * k * m + 2 } else { 2 * k + 2 };
    ReductionLayout {
        k,
        m,
        beta: BigUint::from(beta),
    }
}

impl ReductionLayout {
    pub fn shape(&self) -> ModelShape {
        ModelShape::new(self.k, self.m)
    }

    fn pair(&self, i: usize, j: usize) -> usize {
        self.k * (i - 1) + (j - 1)
    }

    /// Number of digits in the clause block, and the exponent lifting `A`
    /// above `C_0`.
    pub fn shift(&self) -> usize {
        (2 * self.k + 1) * self.m
    }

    pub fn clause_block_len(&self) -> usize {
        self.shift()
    }

    pub fn equality_block_len(&self) -> usize {
        2 * self.k * self.m + self.m + self.k
    }

    /// `(4k + 2)m + k`
    pub fn total_positions(&self) -> usize {
        self.clause_block_len() + self.equality_block_len()
    }

    /// Position of an inequality row within the clause block.
    pub fn inequality_position(&self, tag: ConstraintTag) -> Option<usize> {
        let (k, m) = (self.k, self.m);
        match tag {
            ConstraintTag::ClauseSat(i) => Some(i - 1),
            ConstraintTag::ConvPos(i, j) => Some(m + self.pair(i, j)),
            ConstraintTag::ConvNeg(i, j) => Some(m + k * m + self.pair(i, j)),
            _ => None,
        }
    }

    /// Position of an equality row within the equality block.
    pub fn equality_position(&self, tag: ConstraintTag) -> Option<usize> {
        let (k, m) = (self.k, self.m);
        match tag {
            ConstraintTag::SlackPos(i, j) => Some(self.pair(i, j)),
            ConstraintTag::SlackNeg(i, j) => Some(k * m + self.pair(i, j)),
            ConstraintTag::ClauseChoice(i) => Some(2 * k * m + (i - 1)),
            ConstraintTag::VarPair(j) => Some(2 * k * m + m + (j - 1)),
            _ => None,
        }
    }

    /// Position of any row within the value coefficients.
    pub fn value_position(&self, tag: ConstraintTag) -> usize {
        self.inequality_position(tag)
            .or_else(|| self.equality_position(tag).map(|p| p + self.shift()))
            .expect("every tag has a position")
    }

    /// Every digit of the value coefficients, lowest first.
    pub fn positions(&self) -> Vec<(usize, Block, ConstraintTag)> {
        let (k, m) = (self.k, self.m);
        let mut tags = Vec::with_capacity(self.total_positions());
        tags.extend((1..=m).map(ConstraintTag::ClauseSat));
        for make in [ConstraintTag::ConvPos, ConstraintTag::ConvNeg] {
            for i in 1..=m {
                tags.extend((1..=k).map(|j| make(i, j)));
            }
        }
        for make in [ConstraintTag::SlackPos, ConstraintTag::SlackNeg] {
            for i in 1..=m {
                tags.extend((1..=k).map(|j| make(i, j)));
            }
        }
        tags.extend((1..=m).map(ConstraintTag::ClauseChoice));
        tags.extend((1..=k).map(ConstraintTag::VarPair));

        let mut out: Vec<_> = tags
            .into_iter()
            .map(|tag| {
                let block = if self.inequality_position(tag).is_some() {
                    Block::Clause
                } else {
                    Block::Equality
                };
                (self.value_position(tag), block, tag)
            })
            .collect();
        out.sort_by_key(|&(pos, _, _)| pos);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ConstraintTag::*;

    #[test]
    fn worked_example_dimensions() {
        let layout = build_layout(3, 2);
        assert_eq!(layout.clause_block_len(), 14);
        assert_eq!(layout.equality_block_len(), 17);
        assert_eq!(layout.shift(), 14);
        assert_eq!(layout.total_positions(), 31);
        assert_eq!(layout.beta, BigUint::from(14u32));
    }

    #[test]
    fn no_clauses() {
        let layout = build_layout(1, 0);
        assert_eq!(layout.clause_block_len(), 0);
        assert_eq!(layout.equality_block_len(), 1);
        assert_eq!(layout.equality_position(VarPair(1)), Some(0));
        assert_eq!(layout.beta, BigUint::from(4u32));
    }

    #[test]
    fn absolute_starts_match_allocation_table() {
        // starts of the seven families within the full digit span
        let (k, m) = (3, 2);
        let layout = build_layout(k, m);
        assert_eq!(layout.value_position(ClauseSat(1)), 0);
        assert_eq!(layout.value_position(ConvPos(1, 1)), m);
        assert_eq!(layout.value_position(ConvNeg(1, 1)), (k + 1) * m);
        assert_eq!(layout.value_position(SlackPos(1, 1)), (2 * k + 1) * m);
        assert_eq!(layout.value_position(SlackNeg(1, 1)), (3 * k + 1) * m);
        assert_eq!(layout.value_position(ClauseChoice(1)), (4 * k + 1) * m);
        assert_eq!(layout.value_position(VarPair(1)), (4 * k + 2) * m);
        assert_eq!(layout.value_position(VarPair(k)), (4 * k + 2) * m + k - 1);
    }

    #[test]
    fn positions_are_a_permutation() {
        for (k, m) in [(1, 0), (1, 1), (2, 3), (3, 2), (4, 4)] {
            let layout = build_layout(k, m);
            let positions = layout.positions();
            assert_eq!(positions.len(), layout.total_positions());
            for (expected, (pos, block, _)) in positions.iter().enumerate() {
                assert_eq!(*pos, expected);
                let in_clause_block = *pos < layout.shift();
                assert_eq!(in_clause_block, *block == Block::Clause);
            }
        }
    }

    #[test]
    fn base_bounds() {
        for k in 1..6 {
            for m in 0..6 {
                let beta = build_layout(k, m).beta;
                assert!(beta > BigUint::from(2 * k), "beta exceeds widest row");
                assert!(beta >= BigUint::from(2 * k * m + 2));
            }
        }
    }
}
