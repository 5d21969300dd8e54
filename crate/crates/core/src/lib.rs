//! # Fixed-Weights Knapsack
//!
//! Reduction compiler and exact solvers for knapsack feasibility where the
//! weight vector and capacity depend only on the problem dimensions.
//!
//! The pipeline is:
//!
//! 1. [`gadgets::gadget_transform`] turns a 3-CNF formula into a 1-in-3-SAT
//!    formula that is 1-in-3 satisfiable iff the original is satisfiable.
//! 2. [`reduction::reduce`] compiles a 1-in-3-SAT formula with `k` variables
//!    and `m` clauses into a [`KnapsackInstance`] whose weights and capacity
//!    are a pure function of `(k, m)`; only values and bound encode the
//!    formula.
//! 3. [`solvers`] decides the instance exactly (brute force, maximal feasible
//!    subsets, or dynamic programming over distinct weight sums).
//! 4. [`verify`] checks every step against brute-force oracles at small
//!    scale.

pub mod dimacs;
pub mod error;
pub mod gadgets;
pub mod instance_file;
pub mod reduction;
pub mod solvers;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
pub use types::{
    eval_clause, negate, validate_instance, Assignment, BigNat, Clause, CnfFormula, InstanceIssue,
    KnapsackInstance, Literal, Polarity, SatMode, Solution,
};

/// Enumeration guards shared by the brute-force style routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest number of free 0-1 variables an exhaustive enumeration accepts.
    pub max_enum_vars: usize,
    /// Largest total number of dynamic-programming states.
    pub max_dp_states: usize,
}

impl Limits {
    pub const DEFAULT_ENUM_VARS: usize = 30;
    pub const DEFAULT_DP_STATES: usize = 4_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enum_vars: Self::DEFAULT_ENUM_VARS,
            max_dp_states: Self::DEFAULT_DP_STATES,
        }
    }
}
