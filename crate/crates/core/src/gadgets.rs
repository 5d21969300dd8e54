//! 3-SAT to 1-in-3-SAT gadget transform and the brute-force SAT oracles.
//!
//! A clause `(x | y | z)` is replaced by
//!
//! ```text
//! (~x | a | b) & (y | b | c) & (~z | c | d)
//! ```
//!
//! over four fresh variables. The three clauses have an exactly-one model
//! extending `(x, y, z)` iff `x + y + z >= 1`.

use crate::error::{Error, Result};
use crate::types::{Assignment, Clause, CnfFormula, Literal, SatMode};

/// A formula whose clauses are exactly three ordered literal slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedFormula {
    pub num_vars: u32,
    pub slots: Vec<[Literal; 3]>,
}

/// Where the gadget for one source clause landed.
///
/// Clause indices are 0-based; variable indices are 1-based like literals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetTrace {
    pub source_clause: usize,
    /// `(a, b, c, d)`
    pub fresh_vars: [u32; 4],
    pub emitted_clauses: [usize; 3],
}

/// Fills every clause up to three slots by repeating its last literal.
///
/// `(x | y)` and `(x | y | y)` have the same plain-SAT models, so the padded
/// formula is satisfiable iff the input is.
pub fn pad_to_three(formula: &CnfFormula) -> Result<PaddedFormula> {
    let slots = formula
        .clauses()
        .iter()
        .map(|clause| {
            let lits = clause.literals();
            let last = *lits.last().ok_or(Error::EmptyClause)?;
            let mut slots = [last; 3];
            slots[..lits.len()].copy_from_slice(lits);
            Ok(slots)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PaddedFormula {
        num_vars: formula.num_vars(),
        slots,
    })
}

/// Fresh variables of clause `i` (0-based) in a formula over `k` variables.
fn fresh_vars(k: u32, clause: usize) -> [u32; 4] {
    let base = k + 4 * clause as u32;
    [base + 1, base + 2, base + 3, base + 4]
}

/// Replaces every padded clause by its three-clause gadget.
///
/// The result has `k + 4m` variables and `3m` clauses; it is 1-in-3
/// satisfiable iff the input is satisfiable.
pub fn gadget_transform(padded: &PaddedFormula) -> (CnfFormula, Vec<GadgetTrace>) {
    let k = padded.num_vars;
    let mut clauses = Vec::with_capacity(3 * padded.slots.len());
    let mut traces = Vec::with_capacity(padded.slots.len());
    for (idx, &[x, y, z]) in padded.slots.iter().enumerate() {
        let fresh = fresh_vars(k, idx);
        let [a, b, c, d] = fresh.map(Literal::positive);
        let first = clauses.len();
        for lits in [[!x, a, b], [y, b, c], [!z, c, d]] {
            clauses.push(Clause::new(lits).expect("fresh literals are distinct"));
        }
        traces.push(GadgetTrace {
            source_clause: idx,
            fresh_vars: fresh,
            emitted_clauses: [first, first + 1, first + 2],
        });
    }
    let num_vars = k + 4 * padded.slots.len() as u32;
    let formula = CnfFormula::new(num_vars, clauses).expect("fresh variables are within k + 4m");
    (formula, traces)
}

/// Convenience wrapper: pad, then transform.
pub fn transform_3sat(formula: &CnfFormula) -> Result<(CnfFormula, Vec<GadgetTrace>)> {
    Ok(gadget_transform(&pad_to_three(formula)?))
}

/// All `(a, b, c, d)` for which the gadget of `(x1 | x2 | x3)` is 1-in-3
/// satisfied when `(x1, x2, x3) = (x, y, z)`, in ascending order.
pub fn gadget_completions(x: bool, y: bool, z: bool) -> Vec<[bool; 4]> {
    let source = CnfFormula::from_dimacs_clauses(3, &[&[1, 2, 3]]).expect("valid fixture");
    let (gadget, _) = transform_3sat(&source).expect("no empty clauses");
    (0u8..16)
        .map(|bits| [bits & 8 != 0, bits & 4 != 0, bits & 2 != 0, bits & 1 != 0])
        .filter(|&[a, b, c, d]| {
            let assignment = Assignment::new(vec![x, y, z, a, b, c, d]);
            gadget
                .eval(&assignment, SatMode::ExactlyOne)
                .expect("assignment covers all variables")
        })
        .collect()
}

/// Per-clause literal masks over an assignment packed into a `u64`
/// (bit `j - 1` is `x_j`).
struct PackedClause {
    pos: u64,
    neg: u64,
}

impl PackedClause {
    fn holds(&self, bits: u64, mode: SatMode) -> bool {
        let count = (bits & self.pos).count_ones() + (!bits & self.neg).count_ones();
        match mode {
            SatMode::AtLeastOne => count >= 1,
            SatMode::ExactlyOne => count == 1,
        }
    }
}

/// Exhaustive satisfiability check.
///
/// Assignments are visited as a binary counter with `x_1` as the least
/// significant bit, starting from all-false; the first model found is
/// returned. Refuses formulas with more than `max_vars` variables.
pub fn brute_force_sat(
    formula: &CnfFormula,
    mode: SatMode,
    max_vars: usize,
) -> Result<Option<Assignment>> {
    let k = formula.num_vars() as usize;
    let limit = max_vars.min(63);
    if k > limit {
        return Err(Error::GuardExceeded {
            what: "brute-force SAT",
            size: k,
            limit,
        });
    }
    // Clauses containing both x and ~x count that variable once either way,
    // so per-literal masks are exact even then.
    let packed: Vec<PackedClause> = formula
        .clauses()
        .iter()
        .map(|clause| {
            let mut pc = PackedClause { pos: 0, neg: 0 };
            for lit in clause.literals() {
                let bit = 1u64 << (lit.var() - 1);
                if lit.is_positive() {
                    pc.pos |= bit;
                } else {
                    pc.neg |= bit;
                }
            }
            pc
        })
        .collect();
    let found = (0u64..1u64 << k).find(|&bits| packed.iter().all(|pc| pc.holds(bits, mode)));
    Ok(found.map(|bits| Assignment::new((0..k).map(|j| bits >> j & 1 == 1).collect())))
}
