//! 1-in-3-SAT to fixed-weights knapsack.

pub mod aggregate;
pub mod layout;
pub mod model;
mod pipeline;

pub use aggregate::{
    aggregate_equalities, aggregate_rows, decode_digits, positional_sum, AggregateForm,
    PositionedRow,
};
pub use layout::{build_layout, Block, ReductionLayout};
pub use model::{
    build_model, formula_independent_equalities, ConstraintTag, LinearConstraint, ModelShape,
    ModelSystem, ModelVariable, Relation,
};
pub use pipeline::{
    clause_aggregate, extract_assignment, fixed_weights, lift_assignment, reduce, split_value,
    value_side,
};
