//! Domain vocabulary: literals, clauses, formulas, assignments and knapsack
//! instances.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every knapsack
/// coefficient.
pub type BigNat = BigUint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

/// A variable `x_j` (1-based) or its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    var: u32,
    polarity: Polarity,
}

impl Literal {
    /// # Panics
    ///
    /// If `var == 0`; variables are numbered from 1.
    pub fn new(var: u32, polarity: Polarity) -> Literal {
        assert!(var >= 1, "variable indices start at 1");
        Literal { var, polarity }
    }

    pub fn positive(var: u32) -> Literal {
        Literal::new(var, Polarity::Positive)
    }

    pub fn negative(var: u32) -> Literal {
        Literal::new(var, Polarity::Negative)
    }

    /// Parses a signed DIMACS literal; `0` and values outside `u32` yield `None`.
    pub fn from_dimacs(lit: i64) -> Option<Literal> {
        let var = u32::try_from(lit.unsigned_abs()).ok()?;
        match lit {
            0 => None,
            l if l > 0 => Some(Literal::positive(var)),
            _ => Some(Literal::negative(var)),
        }
    }

    pub fn to_dimacs(self) -> i64 {
        match self.polarity {
            Polarity::Positive => i64::from(self.var),
            Polarity::Negative => -i64::from(self.var),
        }
    }

    pub fn var(self) -> u32 {
        self.var
    }

    pub fn polarity(self) -> Polarity {
        self.polarity
    }

    pub fn is_positive(self) -> bool {
        self.polarity == Polarity::Positive
    }

    /// Truth value of the literal under `assignment`, or `None` if the
    /// variable is not covered.
    pub fn eval(self, assignment: &Assignment) -> Option<bool> {
        let value = assignment.get(self.var)?;
        Some(value == self.is_positive())
    }
}

impl std::ops::Not for Literal {
    type Output = Literal;

    fn not(self) -> Literal {
        negate(self)
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polarity {
            Polarity::Positive => write!(f, "x{}", self.var),
            Polarity::Negative => write!(f, "~x{}", self.var),
        }
    }
}

pub fn negate(lit: Literal) -> Literal {
    let polarity = match lit.polarity {
        Polarity::Positive => Polarity::Negative,
        Polarity::Negative => Polarity::Positive,
    };
    Literal {
        var: lit.var,
        polarity,
    }
}

/// A disjunction of one to three distinct literals.
///
/// Literals keep their first-occurrence order; repeated literals are dropped.
/// The order matters to the gadget transform, which reads the clause as
/// ordered slots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: impl IntoIterator<Item = Literal>) -> Result<Clause> {
        let mut lits: Vec<Literal> = Vec::with_capacity(3);
        for lit in literals {
            if !lits.contains(&lit) {
                lits.push(lit);
            }
        }
        match lits.len() {
            0 => Err(Error::EmptyClause),
            1..=3 => Ok(Clause { literals: lits }),
            len => Err(Error::ClauseTooLong { len }),
        }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn contains(&self, lit: Literal) -> bool {
        self.literals.contains(&lit)
    }

    /// Number of true literals, or `None` if some variable is unassigned.
    pub fn count_true(&self, assignment: &Assignment) -> Option<usize> {
        let mut count = 0;
        for lit in &self.literals {
            count += usize::from(lit.eval(assignment)?);
        }
        Some(count)
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, lit) in self.literals.iter().enumerate() {
            if idx > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{lit}")?;
        }
        write!(f, ")")
    }
}

/// Conjunction of `m` clauses over variables `x_1..x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<CnfFormula> {
        for clause in &clauses {
            for lit in clause.literals() {
                if lit.var() > num_vars {
                    return Err(Error::VariableOutOfRange {
                        var: lit.var(),
                        k: num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Builds a formula from signed DIMACS literal lists.
    ///
    /// # Panics
    ///
    /// If a literal is `0`. Meant for fixtures; parse untrusted text with
    /// [`crate::dimacs::parse_dimacs`].
    pub fn from_dimacs_clauses(num_vars: u32, clauses: &[&[i64]]) -> Result<CnfFormula> {
        let clauses = clauses
            .iter()
            .map(|lits| {
                Clause::new(
                    lits.iter()
                        .map(|&l| Literal::from_dimacs(l).expect("nonzero literal")),
                )
            })
            .collect::<Result<Vec<_>>>()?;
        CnfFormula::new(num_vars, clauses)
    }

    /// `k`
    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    /// `m`
    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Whether every clause holds under `assignment` in the given mode.
    pub fn eval(&self, assignment: &Assignment, mode: SatMode) -> Result<bool> {
        if assignment.len() != self.num_vars as usize {
            return Err(Error::AssignmentLength {
                expected: self.num_vars as usize,
                found: assignment.len(),
            });
        }
        for clause in &self.clauses {
            if !eval_clause(clause, assignment, mode)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return write!(f, "T");
        }
        for (idx, clause) in self.clauses.iter().enumerate() {
            if idx > 0 {
                write!(f, " & ")?;
            }
            write!(f, "{clause}")?;
        }
        Ok(())
    }
}

/// How a clause must be satisfied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SatMode {
    /// Plain SAT.
    AtLeastOne,
    /// 1-in-3-SAT.
    ExactlyOne,
}

pub fn eval_clause(clause: &Clause, assignment: &Assignment, mode: SatMode) -> Result<bool> {
    let count = clause.count_true(assignment).ok_or_else(|| {
        let var = clause
            .literals()
            .iter()
            .map(|l| l.var())
            .find(|&v| assignment.get(v).is_none())
            .unwrap_or_default();
        Error::VariableOutOfRange {
            var,
            k: assignment.len() as u32,
        }
    })?;
    Ok(match mode {
        SatMode::AtLeastOne => count >= 1,
        SatMode::ExactlyOne => count == 1,
    })
}

/// Truth values for `x_1..x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Assignment {
        Assignment { values }
    }

    pub fn all_false(k: usize) -> Assignment {
        Assignment {
            values: vec![false; k],
        }
    }

    /// Value of the 1-based variable `var`.
    pub fn get(&self, var: u32) -> Option<bool> {
        let idx = (var as usize).checked_sub(1)?;
        self.values.get(idx).copied()
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Signed DIMACS literals, one per variable.
    pub fn to_dimacs(&self) -> Vec<i64> {
        self.values
            .iter()
            .enumerate()
            .map(|(idx, &v)| if v { idx as i64 + 1 } else { -(idx as i64 + 1) })
            .collect()
    }
}

impl From<Vec<bool>> for Assignment {
    fn from(values: Vec<bool>) -> Self {
        Assignment::new(values)
    }
}

/// `a.x <= b` and `c.x >= d` over 0-1 variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnapsackInstance {
    pub n: usize,
    pub weights: Vec<BigNat>,
    pub capacity: BigNat,
    pub values: Vec<BigNat>,
    pub bound: BigNat,
}

impl KnapsackInstance {
    pub fn new(
        weights: Vec<BigNat>,
        capacity: BigNat,
        values: Vec<BigNat>,
        bound: BigNat,
    ) -> KnapsackInstance {
        KnapsackInstance {
            n: weights.len(),
            weights,
            capacity,
            values,
            bound,
        }
    }

    /// Convenience constructor for small fixtures.
    pub fn from_u64(weights: &[u64], capacity: u64, values: &[u64], bound: u64) -> Self {
        KnapsackInstance::new(
            weights.iter().map(|&w| BigNat::from(w)).collect(),
            BigNat::from(capacity),
            values.iter().map(|&v| BigNat::from(v)).collect(),
            BigNat::from(bound),
        )
    }

    pub fn weight_of(&self, x: &[bool]) -> BigNat {
        dot(&self.weights, x)
    }

    pub fn value_of(&self, x: &[bool]) -> BigNat {
        dot(&self.values, x)
    }

    /// Whether `x` satisfies both the weight and the value constraint.
    pub fn is_feasible(&self, x: &[bool]) -> bool {
        x.len() == self.n && self.weight_of(x) <= self.capacity && self.value_of(x) >= self.bound
    }
}

pub(crate) fn dot(coefficients: &[BigNat], x: &[bool]) -> BigNat {
    coefficients
        .iter()
        .zip(x)
        .filter(|(_, &bit)| bit)
        .fold(BigNat::zero(), |acc, (c, _)| acc + c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceIssue {
    WeightsLength { found: usize, n: usize },
    ValuesLength { found: usize, n: usize },
}

impl fmt::Display for InstanceIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceIssue::WeightsLength { found, n } => {
                write!(f, "weights length {found} != n = {n}")
            }
            InstanceIssue::ValuesLength { found, n } => {
                write!(f, "values length {found} != n = {n}")
            }
        }
    }
}

/// Collects every structural problem with `inst`; an empty list means the
/// instance is well formed.
pub fn validate_instance(inst: &KnapsackInstance) -> Vec<InstanceIssue> {
    let mut issues = Vec::new();
    if inst.weights.len() != inst.n {
        issues.push(InstanceIssue::WeightsLength {
            found: inst.weights.len(),
            n: inst.n,
        });
    }
    if inst.values.len() != inst.n {
        issues.push(InstanceIssue::ValuesLength {
            found: inst.values.len(),
            n: inst.n,
        });
    }
    issues
}

pub(crate) fn ensure_valid(inst: &KnapsackInstance) -> Result<()> {
    let issues = validate_instance(inst);
    if issues.is_empty() {
        return Ok(());
    }
    let msg = issues
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::InvalidInstance(msg))
}

/// Result of optimizing `c.x` subject to `a.x <= b`.
///
/// `optimum` and `witness` always describe the optimization problem;
/// `feasible` records whether the optimum reaches the bound `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub feasible: bool,
    pub optimum: BigNat,
    pub witness: Vec<bool>,
}

impl Solution {
    /// Items taken by the witness, 0-based.
    pub fn chosen(&self) -> Vec<usize> {
        self.witness
            .iter()
            .enumerate()
            .filter_map(|(idx, &bit)| bit.then_some(idx))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(bits: &[u8]) -> Assignment {
        Assignment::new(bits.iter().map(|&b| b == 1).collect())
    }

    #[test]
    fn negate_flips_polarity() {
        assert_eq!(negate(Literal::positive(1)), Literal::negative(1));
        assert_eq!(negate(Literal::negative(3)), Literal::positive(3));
        assert_eq!(negate(negate(Literal::positive(2))), Literal::positive(2));
        assert_eq!(!Literal::positive(7), Literal::negative(7));
    }

    #[test]
    fn eval_clause_modes() {
        let c = Clause::new([1, 2, 3].map(Literal::positive)).unwrap();
        assert!(!eval_clause(&c, &a(&[1, 1, 0]), SatMode::ExactlyOne).unwrap());
        assert!(eval_clause(&c, &a(&[1, 1, 0]), SatMode::AtLeastOne).unwrap());

        let c = Clause::new([
            Literal::positive(1),
            Literal::negative(2),
            Literal::negative(3),
        ])
        .unwrap();
        assert!(eval_clause(&c, &a(&[0, 1, 0]), SatMode::ExactlyOne).unwrap());

        let c = Clause::new([1, 2].map(Literal::positive)).unwrap();
        assert!(!eval_clause(&c, &a(&[0, 0]), SatMode::AtLeastOne).unwrap());
    }

    #[test]
    fn eval_clause_out_of_range() {
        let c = Clause::new([Literal::positive(4)]).unwrap();
        assert_eq!(
            eval_clause(&c, &a(&[1, 0]), SatMode::AtLeastOne),
            Err(Error::VariableOutOfRange { var: 4, k: 2 })
        );
    }

    #[test]
    fn clause_dedup_and_limits() {
        let c = Clause::new([
            Literal::positive(1),
            Literal::positive(1),
            Literal::positive(2),
        ])
        .unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!(Clause::new([]), Err(Error::EmptyClause));
        assert_eq!(
            Clause::new([1, 2, 3, 4].map(Literal::positive)),
            Err(Error::ClauseTooLong { len: 4 })
        );
        // complementary literals are allowed
        let c = Clause::new([Literal::positive(1), Literal::negative(1)]).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn formula_rejects_out_of_range() {
        let err = CnfFormula::from_dimacs_clauses(2, &[&[1, -3]]).unwrap_err();
        assert_eq!(err, Error::VariableOutOfRange { var: 3, k: 2 });
    }

    #[test]
    fn validate_instance_cases() {
        let ok = KnapsackInstance::from_u64(&[1, 2], 2, &[3, 4], 3);
        assert!(validate_instance(&ok).is_empty());

        let mut bad = KnapsackInstance::from_u64(&[1, 2], 2, &[3], 3);
        bad.n = 2;
        let issues = validate_instance(&bad);
        assert_eq!(issues, vec![InstanceIssue::ValuesLength { found: 1, n: 2 }]);
        assert_eq!(issues[0].to_string(), "values length 1 != n = 2");

        let empty = KnapsackInstance::from_u64(&[], 0, &[], 0);
        assert_eq!(empty.n, 0);
        assert!(validate_instance(&empty).is_empty());
    }

    fn arb_literal(max_var: u32) -> impl Strategy<Value = Literal> {
        (1..=max_var, any::<bool>()).prop_map(|(v, p)| {
            if p {
                Literal::positive(v)
            } else {
                Literal::negative(v)
            }
        })
    }

    proptest! {
        #[test]
        fn negate_is_involution(lit in arb_literal(1_000_000)) {
            prop_assert_eq!(negate(negate(lit)), lit);
            prop_assert_ne!(negate(lit), lit);
            prop_assert_eq!(negate(lit).var(), lit.var());
        }

        #[test]
        fn exactly_one_implies_at_least_one(
            lits in proptest::collection::vec(arb_literal(4), 1..=3),
            bits in proptest::collection::vec(any::<bool>(), 4),
        ) {
            let clause = Clause::new(lits).unwrap();
            let assignment = Assignment::new(bits);
            if eval_clause(&clause, &assignment, SatMode::ExactlyOne).unwrap() {
                prop_assert!(eval_clause(&clause, &assignment, SatMode::AtLeastOne).unwrap());
            }
        }
    }
}
