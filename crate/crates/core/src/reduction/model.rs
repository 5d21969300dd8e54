//! The unique-choice 0-1 model of a 1-in-3-SAT formula.
//!
//! For `k` variables and `m` clauses the model has `n = 2k + 4km` variables:
//! `x_j`, `x̄_j`, and for every clause/variable pair `x_ij`, `x̄_ij`, `s_ij`,
//! `s̄_ij`. The equality families are the same for every formula with the
//! given `(k, m)`; only the inequality families read the clauses.

use std::fmt;

use crate::types::{CnfFormula, Literal};

/// One model variable. Clause index `i` and variable index `j` are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelVariable {
    X(usize),
    XBar(usize),
    Xij(usize, usize),
    XBarij(usize, usize),
    Sij(usize, usize),
    SBarij(usize, usize),
}

impl fmt::Display for ModelVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelVariable::X(j) => write!(f, "x{j}"),
            ModelVariable::XBar(j) => write!(f, "~x{j}"),
            ModelVariable::Xij(i, j) => write!(f, "x{i},{j}"),
            ModelVariable::XBarij(i, j) => write!(f, "~x{i},{j}"),
            ModelVariable::Sij(i, j) => write!(f, "s{i},{j}"),
            ModelVariable::SBarij(i, j) => write!(f, "~s{i},{j}"),
        }
    }
}

/// Dimensions of a model and the flat variable order.
///
/// Order: `X(1..k)`, `XBar(1..k)`, then `Xij`, `XBarij`, `Sij`, `SBarij`, each
/// block row-major in `(i, j)`. Vector position `p` holds flat index `p + 1`.
/// This order is part of the instance format: changing it changes every
/// weight vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModelShape {
    pub k: usize,
    pub m: usize,
}

impl ModelShape {
    pub fn new(k: usize, m: usize) -> ModelShape {
        ModelShape { k, m }
    }

    pub fn num_vars(&self) -> usize {
        2 * self.k + 4 * self.k * self.m
    }

    fn pair_offset(&self, i: usize, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.k).contains(&j));
        self.k * (i - 1) + (j - 1)
    }

    /// 0-based position of `var` in instance vectors.
    pub fn index(&self, var: ModelVariable) -> usize {
        let (k, km) = (self.k, self.k * self.m);
        match var {
            ModelVariable::X(j) => j - 1,
            ModelVariable::XBar(j) => k + j - 1,
            ModelVariable::Xij(i, j) => 2 * k + self.pair_offset(i, j),
            ModelVariable::XBarij(i, j) => 2 * k + km + self.pair_offset(i, j),
            ModelVariable::Sij(i, j) => 2 * k + 2 * km + self.pair_offset(i, j),
            ModelVariable::SBarij(i, j) => 2 * k + 3 * km + self.pair_offset(i, j),
        }
    }

    /// Inverse of [`ModelShape::index`].
    pub fn variable(&self, index: usize) -> Option<ModelVariable> {
        let (k, km) = (self.k, self.k * self.m);
        if index < k {
            return Some(ModelVariable::X(index + 1));
        }
        if index < 2 * k {
            return Some(ModelVariable::XBar(index - k + 1));
        }
        let rest = index - 2 * k;
        if k == 0 || rest >= 4 * km {
            return None;
        }
        let (block, offset) = (rest / km, rest % km);
        let (i, j) = (offset / k + 1, offset % k + 1);
        Some(match block {
            0 => ModelVariable::Xij(i, j),
            1 => ModelVariable::XBarij(i, j),
            2 => ModelVariable::Sij(i, j),
            _ => ModelVariable::SBarij(i, j),
        })
    }

    pub fn variables(&self) -> impl Iterator<Item = ModelVariable> + '_ {
        (0..self.num_vars()).map(|idx| self.variable(idx).expect("index below n"))
    }
}

/// Which constraint family a row belongs to; fixes its digit position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintTag {
    /// `x_j + x̄_j = 1`
    VarPair(usize),
    /// `Σ_j x_ij + Σ_j x̄_ij = 1`
    ClauseChoice(usize),
    /// `Σ_{x_j ∈ C_i} x_ij + Σ_{x̄_j ∈ C_i} x̄_ij >= 1`
    ClauseSat(usize),
    /// `(x_ij + x̄_j) δ(i, x_j) >= δ(i, x_j)`
    ConvPos(usize, usize),
    /// `(x̄_ij + x_j) δ(i, x̄_j) >= δ(i, x̄_j)`
    ConvNeg(usize, usize),
    /// `x_ij + s_ij + x̄_j = 1`
    SlackPos(usize, usize),
    /// `x̄_ij + s̄_ij + x_j = 1`
    SlackNeg(usize, usize),
}

impl fmt::Display for ConstraintTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ConstraintTag::VarPair(j) => write!(f, "VarPair({j})"),
            ConstraintTag::ClauseChoice(i) => write!(f, "ClauseChoice({i})"),
            ConstraintTag::ClauseSat(i) => write!(f, "ClauseSat({i})"),
            ConstraintTag::ConvPos(i, j) => write!(f, "ConvPos({i},{j})"),
            ConstraintTag::ConvNeg(i, j) => write!(f, "ConvNeg({i},{j})"),
            ConstraintTag::SlackPos(i, j) => write!(f, "SlackPos({i},{j})"),
            ConstraintTag::SlackNeg(i, j) => write!(f, "SlackNeg({i},{j})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Geq,
}

/// A 0-1 row: every listed variable has coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub tag: ConstraintTag,
    pub terms: Vec<ModelVariable>,
    pub relation: Relation,
    pub rhs: u32,
}

impl LinearConstraint {
    pub fn lhs(&self, shape: &ModelShape, x: &[bool]) -> u32 {
        self.terms
            .iter()
            .map(|&v| u32::from(x[shape.index(v)]))
            .sum()
    }

    pub fn holds(&self, shape: &ModelShape, x: &[bool]) -> bool {
        let lhs = self.lhs(shape, x);
        match self.relation {
            Relation::Eq => lhs == self.rhs,
            Relation::Geq => lhs >= self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSystem {
    pub shape: ModelShape,
    /// `k + m + 2km` rows
    pub equalities: Vec<LinearConstraint>,
    /// `m + 2km` rows, including the all-zero ones where `δ = 0`
    pub inequalities: Vec<LinearConstraint>,
}

impl ModelSystem {
    pub fn constraints(&self) -> impl Iterator<Item = &LinearConstraint> {
        self.equalities.iter().chain(&self.inequalities)
    }

    pub fn holds(&self, x: &[bool]) -> bool {
        x.len() == self.shape.num_vars() && self.constraints().all(|c| c.holds(&self.shape, x))
    }
}

fn unique_choice(tag: ConstraintTag, terms: Vec<ModelVariable>) -> LinearConstraint {
    LinearConstraint {
        tag,
        terms,
        relation: Relation::Eq,
        rhs: 1,
    }
}

/// The equality families, which depend only on `(k, m)`.
///
/// Row order: `VarPair(1..k)`, `ClauseChoice(1..m)`, `SlackPos` row-major,
/// `SlackNeg` row-major.
pub fn formula_independent_equalities(shape: ModelShape) -> Vec<LinearConstraint> {
    use ModelVariable::*;
    let ModelShape { k, m } = shape;
    let mut rows = Vec::with_capacity(k + m + 2 * k * m);
    for j in 1..=k {
        rows.push(unique_choice(
            ConstraintTag::VarPair(j),
            vec![X(j), XBar(j)],
        ));
    }
    for i in 1..=m {
        let terms = (1..=k)
            .map(|j| Xij(i, j))
            .chain((1..=k).map(|j| XBarij(i, j)));
        rows.push(unique_choice(
            ConstraintTag::ClauseChoice(i),
            terms.collect(),
        ));
    }
    for i in 1..=m {
        for j in 1..=k {
            rows.push(unique_choice(
                ConstraintTag::SlackPos(i, j),
                vec![Xij(i, j), Sij(i, j), XBar(j)],
            ));
        }
    }
    for i in 1..=m {
        for j in 1..=k {
            rows.push(unique_choice(
                ConstraintTag::SlackNeg(i, j),
                vec![XBarij(i, j), SBarij(i, j), X(j)],
            ));
        }
    }
    rows
}

fn delta(formula: &CnfFormula, i: usize, lit: Literal) -> bool {
    formula.clauses()[i - 1].contains(lit)
}

/// Builds the full model: the fixed equality families plus the clause
/// inequalities.
///
/// Inequality row order: `ClauseSat(1..m)`, `ConvPos` row-major, `ConvNeg`
/// row-major. A `Conv*` row whose literal is absent from the clause is kept
/// as `0 >= 0` so every formula of the same shape has the same row set.
pub fn build_model(formula: &CnfFormula) -> ModelSystem {
    use ModelVariable::*;
    let shape = ModelShape::new(formula.num_vars() as usize, formula.num_clauses());
    let ModelShape { k, m } = shape;
    let pos = |j: usize| Literal::positive(j as u32);
    let neg = |j: usize| Literal::negative(j as u32);

    let mut inequalities = Vec::with_capacity(m + 2 * k * m);
    for i in 1..=m {
        let mut terms = Vec::new();
        for j in 1..=k {
            if delta(formula, i, pos(j)) {
                terms.push(Xij(i, j));
            }
        }
        for j in 1..=k {
            if delta(formula, i, neg(j)) {
                terms.push(XBarij(i, j));
            }
        }
        inequalities.push(LinearConstraint {
            tag: ConstraintTag::ClauseSat(i),
            terms,
            relation: Relation::Geq,
            rhs: 1,
        });
    }
    let conv = |tag, present: bool, terms: [ModelVariable; 2]| LinearConstraint {
        tag,
        terms: if present { terms.to_vec() } else { Vec::new() },
        relation: Relation::Geq,
        rhs: u32::from(present),
    };
    for i in 1..=m {
        for j in 1..=k {
            inequalities.push(conv(
                ConstraintTag::ConvPos(i, j),
                delta(formula, i, pos(j)),
                [Xij(i, j), XBar(j)],
            ));
        }
    }
    for i in 1..=m {
        for j in 1..=k {
            inequalities.push(conv(
                ConstraintTag::ConvNeg(i, j),
                delta(formula, i, neg(j)),
                [XBarij(i, j), X(j)],
            ));
        }
    }

    ModelSystem {
        shape,
        equalities: formula_independent_equalities(shape),
        inequalities,
    }
}
