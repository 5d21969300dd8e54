//! Exact solvers for `max c.x s.t. a.x <= b, x ∈ {0,1}^n` and the
//! feasibility question `optimum >= d`.

mod brute;
mod dp;
mod maximal;

use std::fmt;
use std::str::FromStr;

pub use brute::brute_force_knapsack;
pub(crate) use brute::check_guard;
pub use dp::{build_dp_table, dp_solve, DpTable};
pub use maximal::{maximal_feasible_subsets, solve_via_maximal, MaximalSubsetList};

use crate::error::Result;
use crate::types::{KnapsackInstance, Solution};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Brute,
    Dp,
    Maximal,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Brute, Method::Dp, Method::Maximal];
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Dp => "dp",
            Method::Maximal => "maximal",
        })
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Method::Brute),
            "dp" => Ok(Method::Dp),
            "maximal" => Ok(Method::Maximal),
            other => Err(format!("unknown method `{other}` (brute, dp, maximal)")),
        }
    }
}

pub fn solve(inst: &KnapsackInstance, method: Method, limits: &Limits) -> Result<Solution> {
    match method {
        Method::Brute => brute_force_knapsack(inst, limits.max_enum_vars),
        Method::Dp => dp_solve(inst, limits.max_dp_states),
        Method::Maximal => solve_via_maximal(inst, limits.max_enum_vars),
    }
}

/// Whether some 0-1 point has `a.x <= b` and `c.x >= d`.
pub fn feasibility(inst: &KnapsackInstance, method: Method, limits: &Limits) -> Result<bool> {
    Ok(solve(inst, method, limits)?.feasible)
}
