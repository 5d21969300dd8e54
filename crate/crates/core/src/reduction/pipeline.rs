use num_traits::Zero;

use super::aggregate::{aggregate_equalities, positional_sum, PositionedRow};
use super::layout::{build_layout, ReductionLayout};
use super::model::{build_model, formula_independent_equalities, ModelShape, ModelVariable};
use crate::error::{Error, Result};
use crate::types::{Assignment, BigNat, CnfFormula, KnapsackInstance, SatMode};

/// Weight vector `a` and capacity `b` for every formula with `k` variables
/// and `m` clauses.
///
/// Only the formula-independent equality families enter here, so the output
/// is a pure function of `(k, m)`.
pub fn fixed_weights(k: usize, m: usize) -> (Vec<BigNat>, BigNat) {
    let layout = build_layout(k, m);
    equality_aggregate(&layout)
}

fn equality_aggregate(layout: &ReductionLayout) -> (Vec<BigNat>, BigNat) {
    let shape = layout.shape();
    let eqs = formula_independent_equalities(shape);
    let agg = aggregate_equalities(&eqs, &layout.beta, |tag| {
        layout
            .equality_position(tag)
            .expect("equality rows have equality positions")
    })
    .expect("layout base exceeds the widest equality");
    let weights = shape.variables().map(|v| agg.coefficient(&v)).collect();
    (weights, agg.rhs)
}

fn check_shape(formula: &CnfFormula, layout: &ReductionLayout) -> Result<()> {
    if formula.num_vars() as usize != layout.k || formula.num_clauses() != layout.m {
        return Err(Error::LayoutMismatch {
            k: formula.num_vars(),
            m: formula.num_clauses(),
            layout_k: layout.k as u32,
            layout_m: layout.m,
        });
    }
    Ok(())
}

/// `C_0` coefficients and `d_0`: the clause inequalities aggregated into the
/// low `(2k + 1)m` digits.
pub fn clause_aggregate(
    formula: &CnfFormula,
    layout: &ReductionLayout,
) -> Result<(Vec<BigNat>, BigNat)> {
    check_shape(formula, layout)?;
    let model = build_model(formula);
    let rows: Vec<PositionedRow<ModelVariable>> = model
        .inequalities
        .iter()
        .map(|c| {
            let position = layout
                .inequality_position(c.tag)
                .expect("inequality rows have clause-block positions");
            PositionedRow::new(c.terms.clone(), c.rhs, position)
        })
        .collect();
    let agg = positional_sum(&rows, &layout.beta);
    let c0 = model
        .shape
        .variables()
        .map(|v| agg.coefficient(&v))
        .collect();
    Ok((c0, agg.rhs))
}

/// Values `c = β^{(2k+1)m} a + c_0` and bound `d = β^{(2k+1)m} b + d_0`.
pub fn value_side(formula: &CnfFormula, layout: &ReductionLayout) -> Result<(Vec<BigNat>, BigNat)> {
    let (c0, d0) = clause_aggregate(formula, layout)?;
    let (weights, capacity) = equality_aggregate(layout);
    let lift = num_traits::pow(layout.beta.clone(), layout.shift());
    let values = weights.iter().zip(c0).map(|(a, c)| &lift * a + c).collect();
    let bound = &lift * capacity + d0;
    Ok((values, bound))
}

/// Compiles a 1-in-3-SAT formula into a knapsack instance with
/// `n = 2k + 4km` items.
///
/// The instance has a 0-1 point with `a.x <= b` and `c.x >= d` iff the
/// formula has an assignment with exactly one true literal per clause.
pub fn reduce(formula: &CnfFormula) -> (KnapsackInstance, ReductionLayout) {
    let layout = build_layout(formula.num_vars() as usize, formula.num_clauses());
    let (weights, capacity) = equality_aggregate(&layout);
    let (values, bound) = value_side(formula, &layout).expect("layout built from the formula");
    (
        KnapsackInstance::new(weights, capacity, values, bound),
        layout,
    )
}

/// Maps a 1-in-3 witness to the model point it induces.
///
/// `x_ij = 1` iff `x_j ∈ C_i` and `x_j` is true, `x̄_ij = 1` iff `x̄_j ∈ C_i`
/// and `x_j` is false, and the slacks fill the remaining unit in their rows.
pub fn lift_assignment(assignment: &Assignment, formula: &CnfFormula) -> Result<Vec<bool>> {
    use ModelVariable::*;
    for (idx, clause) in formula.clauses().iter().enumerate() {
        let count = clause
            .count_true(assignment)
            .ok_or(Error::AssignmentLength {
                expected: formula.num_vars() as usize,
                found: assignment.len(),
            })?;
        if count != 1 {
            return Err(Error::NotAWitness {
                clause: idx + 1,
                true_literals: count,
            });
        }
    }
    if assignment.len() != formula.num_vars() as usize {
        return Err(Error::AssignmentLength {
            expected: formula.num_vars() as usize,
            found: assignment.len(),
        });
    }
    debug_assert!(formula
        .eval(assignment, SatMode::ExactlyOne)
        .unwrap_or(false));

    let shape = ModelShape::new(formula.num_vars() as usize, formula.num_clauses());
    let mut x = vec![false; shape.num_vars()];
    let value = |j: usize| assignment.values()[j - 1];
    for j in 1..=shape.k {
        x[shape.index(X(j))] = value(j);
        x[shape.index(XBar(j))] = !value(j);
    }
    for (i, clause) in (1..).zip(formula.clauses()) {
        for j in 1..=shape.k {
            let pos = clause.contains(crate::types::Literal::positive(j as u32)) && value(j);
            let neg = clause.contains(crate::types::Literal::negative(j as u32)) && !value(j);
            x[shape.index(Xij(i, j))] = pos;
            x[shape.index(XBarij(i, j))] = neg;
            // x_ij + s_ij + x̄_j = 1 and x̄_ij + s̄_ij + x_j = 1
            x[shape.index(Sij(i, j))] = !pos && value(j);
            x[shape.index(SBarij(i, j))] = !neg && !value(j);
        }
    }
    Ok(x)
}

/// Reads the assignment off the first `k` coordinates.
pub fn extract_assignment(x: &[bool], k: usize, m: usize) -> Result<Assignment> {
    let n = ModelShape::new(k, m).num_vars();
    if x.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: x.len(),
        });
    }
    Ok(Assignment::new(x[..k].to_vec()))
}

/// `C·x` split back into its two aggregates: `(A·x, C_0·x)`, assuming the
/// clause block does not carry.
pub fn split_value(layout: &ReductionLayout, total: &BigNat) -> (BigNat, BigNat) {
    if layout.shift() == 0 {
        return (total.clone(), BigNat::zero());
    }
    let lift = num_traits::pow(layout.beta.clone(), layout.shift());
    num_integer::Integer::div_rem(total, &lift)
}
