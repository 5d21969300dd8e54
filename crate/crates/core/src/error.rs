use thiserror::Error;

use crate::types::BigNat;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable x{var} is out of range (formula has {k} variables)")]
    VariableOutOfRange { var: u32, k: u32 },
    #[error("empty clause")]
    EmptyClause,
    #[error("clause has {len} distinct literals, at most 3 are allowed")]
    ClauseTooLong { len: usize },
    #[error("assignment has {found} values, expected {expected}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("vector has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("{what} needs {size} enumerated variables, guard is {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("dynamic program needs more than {budget} states")]
    StateBudgetExceeded { budget: usize },
    #[error("base {beta} is too small, must exceed {max_nonzeros} nonzeros per equality")]
    BaseTooSmall { beta: BigNat, max_nonzeros: usize },
    #[error("aggregation rows must have right-hand side 1")]
    RhsNotOne,
    #[error("digit position {0} is used by more than one constraint")]
    DuplicatePosition(usize),
    #[error("value does not fit in {positions} base-{beta} digits")]
    DigitOverflow { beta: BigNat, positions: usize },
    #[error(
        "assignment is not a 1-in-3 witness: clause {clause} has {true_literals} true literals"
    )]
    NotAWitness { clause: usize, true_literals: usize },
    #[error("formula has {k} variables and {m} clauses, layout is for ({layout_k}, {layout_m})")]
    LayoutMismatch {
        k: u32,
        m: usize,
        layout_k: u32,
        layout_m: usize,
    },
    #[error("invalid knapsack instance: {0}")]
    InvalidInstance(String),
}
