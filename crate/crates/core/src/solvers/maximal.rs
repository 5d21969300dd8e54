//! Optimization over inclusion-maximal feasible subsets.
//!
//! The subset list depends only on the weights and capacity, so it is built
//! once and then queried with any number of value vectors. With nonnegative
//! values some maximal set is optimal: growing a feasible set never lowers
//! its value. [`BigNat`] values cannot be negative, so that premise always
//! holds here.

use num_traits::Zero;

use super::brute::{check_guard, FeasibleSets};
use crate::error::{Error, Result};
use crate::types::{ensure_valid, BigNat, KnapsackInstance, Solution};

/// Every feasible set `S` such that adding any item outside `S` exceeds the
/// capacity, sorted lexicographically by index list (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSubsetList {
    pub n: usize,
    pub subsets: Vec<Vec<usize>>,
}

impl MaximalSubsetList {
    pub fn build(weights: &[BigNat], capacity: &BigNat, max_vars: usize) -> Result<Self> {
        check_guard("maximal-subset enumeration", weights.len(), max_vars)?;
        let n = weights.len();
        let mut subsets = Vec::new();
        let mut inside = vec![false; n];
        FeasibleSets::new(weights, capacity).for_each(|chosen, weight| {
            for &item in chosen {
                inside[item] = true;
            }
            let maximal = (0..n)
                .filter(|&j| !inside[j])
                .all(|j| weight + &weights[j] > *capacity);
            for &item in chosen {
                inside[item] = false;
            }
            if maximal {
                subsets.push(chosen.to_vec());
            }
        });
        Ok(MaximalSubsetList { n, subsets })
    }

    /// `f(n)`, the number of maximal feasible subsets.
    pub fn count(&self) -> usize {
        self.subsets.len()
    }

    /// Best listed subset for `values`; ties go to the earliest in the list.
    pub fn best(&self, values: &[BigNat]) -> Result<(BigNat, &[usize])> {
        if values.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: values.len(),
            });
        }
        let mut best: Option<(BigNat, &[usize])> = None;
        for subset in &self.subsets {
            let value = subset
                .iter()
                .fold(BigNat::zero(), |acc, &j| acc + &values[j]);
            if best.as_ref().is_none_or(|(b, _)| value > *b) {
                best = Some((value, subset));
            }
        }
        // the list is never empty: the empty set extends to a maximal one
        Ok(best.expect("at least one maximal subset"))
    }
}

pub fn maximal_feasible_subsets(
    weights: &[BigNat],
    capacity: &BigNat,
    max_vars: usize,
) -> Result<MaximalSubsetList> {
    MaximalSubsetList::build(weights, capacity, max_vars)
}

pub fn solve_via_maximal(inst: &KnapsackInstance, max_vars: usize) -> Result<Solution> {
    ensure_valid(inst)?;
    let list = MaximalSubsetList::build(&inst.weights, &inst.capacity, max_vars)?;
    let (optimum, subset) = list.best(&inst.values)?;
    let mut witness = vec![false; inst.n];
    for &j in subset {
        witness[j] = true;
    }
    Ok(Solution {
        feasible: optimum >= inst.bound,
        optimum,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[u64]) -> Vec<BigNat> {
        v.iter().map(|&x| BigNat::from(x)).collect()
    }

    #[test]
    fn three_unit_items() {
        let list = maximal_feasible_subsets(&big(&[1, 1, 1]), &BigNat::from(2u32), 30).unwrap();
        assert_eq!(list.subsets, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(list.count(), 3);

        let list = maximal_feasible_subsets(&big(&[1, 1, 1]), &BigNat::from(3u32), 30).unwrap();
        assert_eq!(list.subsets, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn nothing_fits() {
        let list = maximal_feasible_subsets(&big(&[5]), &BigNat::from(3u32), 30).unwrap();
        assert_eq!(list.subsets, vec![Vec::<usize>::new()]);
        assert_eq!(list.count(), 1);

        let inst = KnapsackInstance::from_u64(&[5], 3, &[7], 0);
        let sol = solve_via_maximal(&inst, 30).unwrap();
        assert!(sol.optimum.is_zero());
        assert_eq!(sol.witness, vec![false]);
    }

    #[test]
    fn optimum_via_maximal() {
        let inst = KnapsackInstance::from_u64(&[1, 1, 1], 2, &[5, 4, 3], 9);
        let sol = solve_via_maximal(&inst, 30).unwrap();
        assert_eq!(sol.optimum, BigNat::from(9u32));
        assert_eq!(sol.chosen(), vec![0, 1]);
        assert!(sol.feasible);
    }

    #[test]
    fn reuse_across_value_vectors() {
        let list = maximal_feasible_subsets(&big(&[2, 3, 4]), &BigNat::from(6u32), 30).unwrap();
        assert_eq!(list.subsets, vec![vec![0, 1], vec![0, 2]]);
        let (v, s) = list.best(&big(&[3, 4, 5])).unwrap();
        assert_eq!((v, s.to_vec()), (BigNat::from(8u32), vec![0, 2]));
        let (v, s) = list.best(&big(&[0, 9, 1])).unwrap();
        assert_eq!((v, s.to_vec()), (BigNat::from(9u32), vec![0, 1]));
        assert!(matches!(
            list.best(&big(&[1])),
            Err(Error::LengthMismatch { .. })
        ));
    }
}
