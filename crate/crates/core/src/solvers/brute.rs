use num_traits::Zero;

use crate::error::{Error, Result};
use crate::types::{ensure_valid, BigNat, KnapsackInstance, Solution};

pub(crate) fn check_guard(what: &'static str, n: usize, max_vars: usize) -> Result<()> {
    if n > max_vars {
        return Err(Error::GuardExceeded {
            what,
            size: n,
            limit: max_vars,
        });
    }
    Ok(())
}

/// Visits item subsets in lexicographic order of their sorted index lists
/// (`{}`, `{1}`, `{1,2}`, `{1,2,3}`, `{1,3}`, ...), skipping every superset of
/// an overweight set. Weights are nonnegative, so skipped sets are all
/// infeasible.
pub(crate) struct FeasibleSets<'a> {
    weights: &'a [BigNat],
    capacity: &'a BigNat,
    chosen: Vec<usize>,
}

impl<'a> FeasibleSets<'a> {
    pub(crate) fn new(weights: &'a [BigNat], capacity: &'a BigNat) -> Self {
        FeasibleSets {
            weights,
            capacity,
            chosen: Vec::new(),
        }
    }

    /// Calls `visit(chosen, weight)` for every feasible set.
    pub(crate) fn for_each(mut self, mut visit: impl FnMut(&[usize], &BigNat)) {
        self.recurse(0, &BigNat::zero(), &mut visit);
    }

    fn recurse(
        &mut self,
        start: usize,
        weight: &BigNat,
        visit: &mut impl FnMut(&[usize], &BigNat),
    ) {
        visit(&self.chosen, weight);
        for item in start..self.weights.len() {
            let next = weight + &self.weights[item];
            if next > *self.capacity {
                continue;
            }
            self.chosen.push(item);
            self.recurse(item + 1, &next, visit);
            self.chosen.pop();
        }
    }
}

/// Exact optimum of `max c.x s.t. a.x <= b` by exhaustive search.
///
/// Among optimal sets the lexicographically smallest index list wins.
/// Refuses instances with more than `max_vars` items.
pub fn brute_force_knapsack(inst: &KnapsackInstance, max_vars: usize) -> Result<Solution> {
    ensure_valid(inst)?;
    check_guard("brute-force knapsack", inst.n, max_vars)?;
    let best_set = match WordInstance::new(inst) {
        Some(small) => small.best_set(),
        None => best_set_big(inst),
    };
    let optimum = best_set.iter().map(|&i| &inst.values[i]).sum::<BigNat>();
    let mut witness = vec![false; inst.n];
    for item in best_set {
        witness[item] = true;
    }
    Ok(Solution {
        feasible: optimum >= inst.bound,
        optimum,
        witness,
    })
}

/// The same search in `u128` arithmetic, available when the capacity and the
/// total value both fit, with branches cut once their remaining value cannot
/// beat the incumbent.
struct WordInstance {
    /// `None` for items heavier than the capacity
    weights: Vec<Option<u128>>,
    values: Vec<u128>,
    /// `suffix[i]` is the total value of items `i..`
    suffix: Vec<u128>,
    capacity: u128,
}

impl WordInstance {
    fn new(inst: &KnapsackInstance) -> Option<WordInstance> {
        let capacity = u128::try_from(&inst.capacity).ok()?;
        let total: BigNat = inst.values.iter().sum();
        u128::try_from(&total).ok()?;
        let weights = inst
            .weights
            .iter()
            .map(|w| u128::try_from(w).ok().filter(|&w| w <= capacity))
            .collect();
        let values: Vec<u128> = inst
            .values
            .iter()
            .map(|v| u128::try_from(v).unwrap())
            .collect();
        let mut suffix = vec![0; values.len() + 1];
        for i in (0..values.len()).rev() {
            suffix[i] = suffix[i + 1] + values[i];
        }
        Some(WordInstance {
            weights,
            values,
            suffix,
            capacity,
        })
    }

    fn best_set(&self) -> Vec<usize> {
        let mut search = WordSearch {
            inst: self,
            chosen: Vec::new(),
            best_value: 0,
            best_set: Vec::new(),
        };
        search.recurse(0, 0, 0);
        search.best_set
    }
}

struct WordSearch<'a> {
    inst: &'a WordInstance,
    chosen: Vec<usize>,
    best_value: u128,
    best_set: Vec<usize>,
}

impl WordSearch<'_> {
    fn recurse(&mut self, start: usize, weight: u128, value: u128) {
        if value > self.best_value {
            self.best_value = value;
            self.best_set.clone_from(&self.chosen);
        }
        for item in start..self.inst.values.len() {
            // nothing below can beat the incumbent strictly, and ties keep
            // the earlier (lexicographically smaller) set
            if value + self.inst.suffix[item] <= self.best_value {
                return;
            }
            let Some(next) = self.inst.weights[item].and_then(|w| w.checked_add(weight)) else {
                continue;
            };
            if next > self.inst.capacity {
                continue;
            }
            self.chosen.push(item);
            self.recurse(item + 1, next, value + self.inst.values[item]);
            self.chosen.pop();
        }
    }
}

fn best_set_big(inst: &KnapsackInstance) -> Vec<usize> {
    let mut best_value = BigNat::zero();
    let mut best_set: Vec<usize> = Vec::new();
    // running value per depth, so each visit costs one addition
    let mut values: Vec<BigNat> = vec![BigNat::zero()];
    FeasibleSets::new(&inst.weights, &inst.capacity).for_each(|chosen, _| {
        values.truncate(chosen.len());
        let value = match chosen.last() {
            Some(&last) => &values[chosen.len() - 1] + &inst.values[last],
            None => BigNat::zero(),
        };
        if value > best_value {
            best_value = value.clone();
            best_set = chosen.to_vec();
        }
        values.push(value);
    });
    best_set
}
