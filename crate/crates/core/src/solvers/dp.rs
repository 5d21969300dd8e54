//! Dynamic programming over distinct attainable weight sums.
//!
//! Level `j` holds every distinct sum of a subset of the first `j` items
//! that does not exceed the capacity. `F(j, s)` is the best value obtainable
//! from items `j+1..n` when the first `j` items already weigh `s`:
//!
//! ```text
//! F(n, s) = 0
//! F(j, s) = max{ c_{j+1} + F(j+1, s + a_{j+1})   if s + a_{j+1} <= b,
//!                F(j+1, s) }
//! ```
//!
//! The answer is `F(0, 0)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::types::{ensure_valid, BigNat, KnapsackInstance, Solution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    /// Sorted distinct sums per level `0..=n`.
    pub levels: Vec<Vec<BigNat>>,
    /// `F(j, s)` aligned with `levels[j]`.
    pub best: Vec<Vec<BigNat>>,
    /// Whether the optimal policy takes item `j+1` from state `(j, s)`;
    /// aligned with `levels[j]` for `j < n`.
    pub take: Vec<Vec<bool>>,
}

impl DpTable {
    pub fn num_states(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Position of sum `s` in level `j`.
    pub fn state(&self, level: usize, sum: &BigNat) -> Option<usize> {
        self.levels[level].binary_search(sum).ok()
    }

    pub fn optimum(&self) -> &BigNat {
        &self.best[0][0]
    }

    /// Follows the decision bits from `(0, 0)`.
    pub fn witness(&self, weights: &[BigNat]) -> Vec<bool> {
        let mut sum = BigNat::zero();
        let mut x = Vec::with_capacity(weights.len());
        for (level, weight) in weights.iter().enumerate() {
            let idx = self.state(level, &sum).expect("reachable state");
            let take = self.take[level][idx];
            if take {
                sum += weight;
            }
            x.push(take);
        }
        x
    }
}

fn next_level(level: &[BigNat], weight: &BigNat, capacity: &BigNat) -> Vec<BigNat> {
    let shifted = level
        .iter()
        .map(|s| s + weight)
        .take_while(|s| s <= capacity);
    let mut out = Vec::with_capacity(level.len() * 2);
    let mut left = level.iter().cloned().peekable();
    let mut right = shifted.peekable();
    loop {
        let next = match (left.peek(), right.peek()) {
            (Some(l), Some(r)) if l < r => left.next(),
            (Some(l), Some(r)) if l > r => right.next(),
            (Some(_), Some(_)) => {
                right.next();
                left.next()
            }
            (Some(_), None) => left.next(),
            (None, Some(_)) => right.next(),
            (None, None) => break,
        };
        out.extend(next);
    }
    out
}

/// Builds every level and the value function; fails once the total number
/// of states passes `max_states`.
pub fn build_dp_table(inst: &KnapsackInstance, max_states: usize) -> Result<DpTable> {
    ensure_valid(inst)?;
    let n = inst.n;
    let mut levels = Vec::with_capacity(n + 1);
    levels.push(vec![BigNat::zero()]);
    let mut total = 1;
    for weight in &inst.weights {
        let next = next_level(levels.last().expect("level 0"), weight, &inst.capacity);
        total += next.len();
        if total > max_states {
            return Err(Error::StateBudgetExceeded { budget: max_states });
        }
        levels.push(next);
    }

    let mut best: Vec<Vec<BigNat>> = vec![Vec::new(); n + 1];
    let mut take: Vec<Vec<bool>> = vec![Vec::new(); n];
    best[n] = vec![BigNat::zero(); levels[n].len()];
    for j in (0..n).rev() {
        let (weight, value) = (&inst.weights[j], &inst.values[j]);
        let below = &levels[j + 1];
        let lookup = |s: &BigNat| below.binary_search(s).expect("level j is within level j+1");
        let mut f = Vec::with_capacity(levels[j].len());
        let mut t = Vec::with_capacity(levels[j].len());
        for sum in &levels[j] {
            let skip = &best[j + 1][lookup(sum)];
            let with = sum + weight;
            let taken = (with <= inst.capacity).then(|| value + &best[j + 1][lookup(&with)]);
            match taken {
                Some(v) if v > *skip => {
                    f.push(v);
                    t.push(true);
                }
                _ => {
                    f.push(skip.clone());
                    t.push(false);
                }
            }
        }
        best[j] = f;
        take[j] = t;
    }
    Ok(DpTable { levels, best, take })
}

pub fn dp_solve(inst: &KnapsackInstance, max_states: usize) -> Result<Solution> {
    let table = build_dp_table(inst, max_states)?;
    let optimum = table.optimum().clone();
    Ok(Solution {
        feasible: optimum >= inst.bound,
        witness: table.witness(&inst.weights),
        optimum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigNat> {
        v.iter().map(|&x| BigNat::from(x)).collect()
    }

    #[test]
    fn level_sets_of_small_instance() {
        let inst = KnapsackInstance::from_u64(&[2, 3, 4], 6, &[3, 4, 5], 9);
        let table = build_dp_table(&inst, 1000).unwrap();
        assert_eq!(
            table.levels,
            vec![
                big(&[0]),
                big(&[0, 2]),
                big(&[0, 2, 3, 5]),
                big(&[0, 2, 3, 4, 5, 6])
            ]
        );
        assert_eq!(*table.optimum(), BigNat::from(8u32));
        let sol = dp_solve(&inst, 1000).unwrap();
        assert!(!sol.feasible);
        assert_eq!(sol.chosen(), vec![0, 2]);
    }

    #[test]
    fn equal_weights_give_linear_levels() {
        let n = 7;
        let inst = KnapsackInstance::from_u64(&vec![1; n], n as u64, &vec![1; n], 0);
        let table = build_dp_table(&inst, 1000).unwrap();
        for (j, level) in table.levels.iter().enumerate() {
            assert_eq!(level.len(), j + 1);
        }
    }

    #[test]
    fn empty_instance() {
        let inst = KnapsackInstance::from_u64(&[], 0, &[], 0);
        let sol = dp_solve(&inst, 10).unwrap();
        assert!(sol.optimum.is_zero());
        assert!(sol.witness.is_empty());
        assert!(sol.feasible);
    }

    #[test]
    fn state_budget() {
        let inst = KnapsackInstance::from_u64(&[1, 2, 4, 8, 16], 100, &[1; 5], 0);
        assert_eq!(
            build_dp_table(&inst, 10),
            Err(Error::StateBudgetExceeded { budget: 10 })
        );
        assert_eq!(build_dp_table(&inst, 63).unwrap().num_states(), 63);
    }

    #[test]
    fn overweight_item_is_never_taken() {
        let inst = KnapsackInstance::from_u64(&[1], 0, &[1], 1);
        let sol = dp_solve(&inst, 10).unwrap();
        assert!(!sol.feasible);
        assert_eq!(sol.witness, vec![false]);
    }
}
