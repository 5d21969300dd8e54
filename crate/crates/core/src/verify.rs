//! Small-scale executable checks of every correctness claim of the
//! construction, each against an independent brute-force oracle.
//!
//! Reports serialize as one line each:
//!
//! ```text
//! <claim> <descriptor> <verdict> <cases> <millis>
//! ```
//!
//! Counterexamples go to a separate sidecar text (see
//! [`SuiteSummary::counterexamples`]).

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::gadgets::{brute_force_sat, gadget_completions, transform_3sat};
use crate::reduction::{lift_assignment, positional_sum, reduce, PositionedRow};
use crate::solvers::brute_force_knapsack;
use crate::types::{Assignment, BigNat, Clause, CnfFormula, Literal, SatMode};
use crate::Limits;

/// Largest system [`check_aggregation`] enumerates.
pub const AGGREGATION_MAX_VARS: usize = 12;
/// Random systems per suite run.
pub const SUITE_AGGREGATION_SYSTEMS: usize = 500;

/// `(x, y, z)` and every `(a, b, c, d)` completing the gadget, as tabulated
/// in the case analysis of the gadget.
pub const GADGET_CASE_TABLE: [([u8; 3], &[[u8; 4]]); 8] = [
    ([0, 0, 0], &[]),
    ([1, 0, 0], &[[0, 1, 0, 0]]),
    ([0, 1, 0], &[[0, 0, 0, 0]]),
    ([0, 0, 1], &[[0, 0, 1, 0]]),
    ([1, 1, 0], &[[1, 0, 0, 0]]),
    ([1, 0, 1], &[[1, 0, 1, 0], [0, 1, 0, 1]]),
    ([0, 1, 1], &[[0, 0, 0, 1]]),
    ([1, 1, 1], &[[1, 0, 0, 1]]),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Completions of one gadget for each `(x, y, z)`.
    GadgetTable,
    /// SAT(f) iff 1-in-3-SAT(gadget transform of f).
    Gadget,
    /// A unique-choice system and its positional aggregate have the same
    /// 0-1 solutions.
    Aggregation,
    /// The reduced knapsack instance is feasible iff the formula is 1-in-3
    /// satisfiable.
    Equivalence,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Claim::GadgetTable => "gadget-table",
            Claim::Gadget => "gadget",
            Claim::Aggregation => "aggregation",
            Claim::Equivalence => "equivalence",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Confirmed,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Confirmed => "confirmed",
            Verdict::Refuted => "refuted",
        })
    }
}

/// Both sides of a disagreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    GadgetTable {
        case: [bool; 3],
        expected: Vec<[bool; 4]>,
        found: Vec<[bool; 4]>,
    },
    Gadget {
        sat_witness: Option<Assignment>,
        one_in_three_witness: Option<Assignment>,
    },
    Aggregation {
        vector: Vec<bool>,
        system_holds: bool,
        aggregate_holds: bool,
    },
    Equivalence {
        one_in_three_witness: Option<Assignment>,
        /// Lifted certificate that failed, or the knapsack point found for
        /// an unsatisfiable formula.
        knapsack_point: Option<Vec<bool>>,
        knapsack_feasible: bool,
    },
}

fn bits(values: &[bool]) -> String {
    values.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

fn opt_assignment(a: &Option<Assignment>) -> String {
    a.as_ref()
        .map_or_else(|| "none".to_string(), |a| bits(a.values()))
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::GadgetTable {
                case,
                expected,
                found,
            } => {
                let list =
                    |v: &[[bool; 4]]| v.iter().map(|c| bits(c)).collect::<Vec<_>>().join(",");
                write!(
                    f,
                    "xyz={} expected=[{}] found=[{}]",
                    bits(case),
                    list(expected),
                    list(found)
                )
            }
            Counterexample::Gadget {
                sat_witness,
                one_in_three_witness,
            } => write!(
                f,
                "sat={} one-in-three={}",
                opt_assignment(sat_witness),
                opt_assignment(one_in_three_witness)
            ),
            Counterexample::Aggregation {
                vector,
                system_holds,
                aggregate_holds,
            } => write!(
                f,
                "x={} system={} aggregate={}",
                bits(vector),
                system_holds,
                aggregate_holds
            ),
            Counterexample::Equivalence {
                one_in_three_witness,
                knapsack_point,
                knapsack_feasible,
            } => write!(
                f,
                "one-in-three={} knapsack-point={} knapsack-feasible={}",
                opt_assignment(one_in_three_witness),
                knapsack_point
                    .as_deref()
                    .map_or_else(|| "none".to_string(), bits),
                knapsack_feasible
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub claim: Claim,
    pub descriptor: String,
    pub verdict: Verdict,
    pub counterexample: Option<Counterexample>,
    pub cases: u64,
    pub elapsed: Duration,
}

impl Report {
    fn new(claim: Claim, descriptor: String, started: Instant) -> Report {
        Report {
            claim,
            descriptor,
            verdict: Verdict::Confirmed,
            counterexample: None,
            cases: 0,
            elapsed: started.elapsed(),
        }
    }

    fn refute(mut self, counterexample: Counterexample) -> Report {
        self.verdict = Verdict::Refuted;
        self.counterexample = Some(counterexample);
        self
    }

    pub fn is_confirmed(&self) -> bool {
        self.verdict == Verdict::Confirmed
    }

    /// `<claim> <descriptor> <verdict> <cases> <millis>`
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.claim,
            self.descriptor,
            self.verdict,
            self.cases,
            self.elapsed.as_millis()
        )
    }
}

/// Space-free formula descriptor, e.g. `k3m2:1,2,3/1,-2,-3`.
pub fn describe_formula(formula: &CnfFormula) -> String {
    let clauses: Vec<String> = formula
        .clauses()
        .iter()
        .map(|c| {
            c.literals()
                .iter()
                .map(|l| l.to_dimacs().to_string())
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect();
    format!(
        "k{}m{}:{}",
        formula.num_vars(),
        formula.num_clauses(),
        clauses.join("/")
    )
}

/// Compares the reduced instance against 1-in-3 satisfiability.
///
/// A satisfiable formula is confirmed by lifting its witness and checking
/// the knapsack point directly; an unsatisfiable one by exhaustive knapsack
/// search.
pub fn check_equivalence(formula: &CnfFormula, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let (inst, _) = reduce(formula);
    crate::solvers::check_guard("equivalence check", inst.n, limits.max_enum_vars)?;
    let witness = brute_force_sat(formula, SatMode::ExactlyOne, limits.max_enum_vars)?;
    let mut report = Report::new(Claim::Equivalence, describe_formula(formula), started);
    report.cases = 1u64 << formula.num_vars();

    let outcome = match witness {
        Some(a) => {
            let x = lift_assignment(&a, formula)?;
            report.cases += 1;
            let feasible = inst.is_feasible(&x);
            (!feasible).then_some(Counterexample::Equivalence {
                one_in_three_witness: Some(a),
                knapsack_point: Some(x),
                knapsack_feasible: false,
            })
        }
        None => {
            let sol = brute_force_knapsack(&inst, limits.max_enum_vars)?;
            report.cases += 1u64 << inst.n;
            sol.feasible.then_some(Counterexample::Equivalence {
                one_in_three_witness: None,
                knapsack_point: Some(sol.witness),
                knapsack_feasible: true,
            })
        }
    };
    report.elapsed = started.elapsed();
    Ok(match outcome {
        Some(cex) => report.refute(cex),
        None => report,
    })
}

/// Compares plain satisfiability of `formula` with 1-in-3 satisfiability
/// of its gadget transform.
pub fn check_gadget(formula: &CnfFormula, limits: &Limits) -> Result<Report> {
    let started = Instant::now();
    let (transformed, _) = transform_3sat(formula)?;
    crate::solvers::check_guard(
        "gadget check",
        transformed.num_vars() as usize,
        limits.max_enum_vars,
    )?;
    let sat = brute_force_sat(formula, SatMode::AtLeastOne, limits.max_enum_vars)?;
    let one = brute_force_sat(&transformed, SatMode::ExactlyOne, limits.max_enum_vars)?;
    let mut report = Report::new(Claim::Gadget, describe_formula(formula), started);
    report.cases = (1u64 << formula.num_vars()) + (1u64 << transformed.num_vars());
    report.elapsed = started.elapsed();
    if sat.is_some() != one.is_some() {
        return Ok(report.refute(Counterexample::Gadget {
            sat_witness: sat,
            one_in_three_witness: one,
        }));
    }
    Ok(report)
}

/// Enumerates the completions of one gadget for all eight `(x, y, z)` and
/// compares them with [`GADGET_CASE_TABLE`].
pub fn check_gadget_table() -> Report {
    let started = Instant::now();
    let mut report = Report::new(Claim::GadgetTable, "xyz".to_string(), started);
    let to_bools = |v: &[u8]| v.iter().map(|&b| b == 1).collect::<Vec<_>>();
    for (case, completions) in GADGET_CASE_TABLE {
        let case = to_bools(&case);
        let mut expected: Vec<[bool; 4]> = completions
            .iter()
            .map(|c| to_bools(c).try_into().expect("four values"))
            .collect();
        expected.sort();
        let found = gadget_completions(case[0], case[1], case[2]);
        report.cases += 16;
        if found != expected {
            report.elapsed = started.elapsed();
            return report.refute(Counterexample::GadgetTable {
                case: [case[0], case[1], case[2]],
                expected,
                found,
            });
        }
    }
    report.elapsed = started.elapsed();
    report
}

/// Unique-choice system `Σ_{v ∈ row_r} x_v = 1`, row `r` at digit position
/// `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualitySystem {
    pub num_vars: usize,
    pub rows: Vec<Vec<usize>>,
}

impl EqualitySystem {
    /// Largest number of nonzeros in a row.
    pub fn max_nonzeros(&self) -> usize {
        self.rows.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn holds(&self, x: &[bool]) -> bool {
        self.rows
            .iter()
            .all(|row| row.iter().filter(|&&v| x[v]).count() == 1)
    }

    pub fn positioned_rows(&self) -> Vec<PositionedRow<usize>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(pos, row)| PositionedRow::new(row.clone(), 1, pos))
            .collect()
    }

    /// Whether `x` satisfies the aggregate built with base `beta`.
    pub fn aggregate_holds(&self, beta: &BigNat, x: &[bool]) -> bool {
        let agg = positional_sum(&self.positioned_rows(), beta);
        agg.eval(|&v| x[v]) == agg.rhs
    }

    /// Random system with `1..=max_vars` variables, `1..=max_rows` rows and
    /// `1..=max_nonzeros` distinct variables per row.
    pub fn random(
        rng: &mut impl Rng,
        max_vars: usize,
        max_rows: usize,
        max_nonzeros: usize,
    ) -> EqualitySystem {
        let num_vars = rng.gen_range(1..=max_vars);
        let num_rows = rng.gen_range(1..=max_rows);
        let rows = (0..num_rows)
            .map(|_| {
                let size = rng.gen_range(1..=max_nonzeros.min(num_vars));
                let mut row = rand::seq::index::sample(rng, num_vars, size).into_vec();
                row.sort_unstable();
                row
            })
            .collect();
        EqualitySystem { num_vars, rows }
    }

    /// e.g. `n4:0+1/1+2+3`
    pub fn describe(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("+")
            })
            .collect();
        format!("n{}:{}", self.num_vars, rows.join("/"))
    }
}

/// Compares the 0-1 solution sets of `system` and its base-`beta`
/// aggregate over all `2^n` vectors.
///
/// No premise on `beta` is enforced, so undersized bases can be probed;
/// the first disagreeing vector becomes the counterexample.
pub fn check_aggregation(system: &EqualitySystem, beta: &BigNat) -> Result<Report> {
    let started = Instant::now();
    crate::solvers::check_guard("aggregation check", system.num_vars, AGGREGATION_MAX_VARS)?;
    let agg = positional_sum(&system.positioned_rows(), beta);
    let descriptor = format!("{}@b{}", system.describe(), beta);
    let mut report = Report::new(Claim::Aggregation, descriptor, started);
    let n = system.num_vars;
    let mut x = vec![false; n];
    for mask in 0u64..1 << n {
        for (j, bit) in x.iter_mut().enumerate() {
            *bit = mask >> j & 1 == 1;
        }
        report.cases += 1;
        let system_holds = system.holds(&x);
        let aggregate_holds = agg.eval(|&v| x[v]) == agg.rhs;
        if system_holds != aggregate_holds {
            report.elapsed = started.elapsed();
            return Ok(report.refute(Counterexample::Aggregation {
                vector: x,
                system_holds,
                aggregate_holds,
            }));
        }
    }
    report.elapsed = started.elapsed();
    Ok(report)
}

/// How clause literal order is enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseOrder {
    /// One clause per literal set, literals sorted.
    Canonical,
    /// Every ordering of every literal set; the gadget reads clauses as
    /// ordered slots, so orderings are distinct inputs for it.
    SlotOrdered,
}

/// Every clause of 1 to 3 distinct literals over `x_1..x_k`.
pub fn enumerate_clauses(k: u32, order: ClauseOrder) -> Vec<Clause> {
    let literals: Vec<Literal> = (1..=k)
        .flat_map(|v| [Literal::positive(v), Literal::negative(v)])
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(3);
    fn extend(
        literals: &[Literal],
        order: ClauseOrder,
        start: usize,
        current: &mut Vec<Literal>,
        out: &mut Vec<Clause>,
    ) {
        if !current.is_empty() {
            out.push(Clause::new(current.iter().copied()).expect("1 to 3 distinct literals"));
        }
        if current.len() == 3 {
            return;
        }
        let from = match order {
            ClauseOrder::Canonical => start,
            ClauseOrder::SlotOrdered => 0,
        };
        for idx in from..literals.len() {
            if current.contains(&literals[idx]) {
                continue;
            }
            current.push(literals[idx]);
            extend(literals, order, idx + 1, current, out);
            current.pop();
        }
    }
    extend(&literals, order, 0, &mut current, &mut out);
    out
}

/// Every formula with exactly `k` variables and `m` clauses drawn from
/// [`enumerate_clauses`], as a sorted multiset of clauses.
pub fn enumerate_formulas(k: u32, m: usize, order: ClauseOrder) -> Vec<CnfFormula> {
    let clauses = enumerate_clauses(k, order);
    let mut out = Vec::new();
    let mut picked: Vec<usize> = Vec::with_capacity(m);
    fn extend(
        k: u32,
        m: usize,
        clauses: &[Clause],
        picked: &mut Vec<usize>,
        out: &mut Vec<CnfFormula>,
    ) {
        if picked.len() == m {
            let chosen = picked.iter().map(|&i| clauses[i].clone()).collect();
            out.push(CnfFormula::new(k, chosen).expect("clauses over x_1..x_k"));
            return;
        }
        let start = picked.last().copied().unwrap_or(0);
        for idx in start..clauses.len() {
            picked.push(idx);
            extend(k, m, clauses, picked, out);
            picked.pop();
        }
    }
    extend(k, m, &clauses, &mut picked, &mut out);
    out
}

/// All formulas with `1 <= k <= max_k` and `0 <= m <= max_m`.
pub fn enumerate_formulas_upto(max_k: u32, max_m: usize, order: ClauseOrder) -> Vec<CnfFormula> {
    (1..=max_k)
        .flat_map(|k| (0..=max_m).flat_map(move |m| enumerate_formulas(k, m, order)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteSummary {
    pub reports: Vec<Report>,
}

impl SuiteSummary {
    pub fn confirmed(&self) -> usize {
        self.reports.iter().filter(|r| r.is_confirmed()).count()
    }

    pub fn refuted(&self) -> usize {
        self.reports.len() - self.confirmed()
    }

    pub fn all_confirmed(&self) -> bool {
        self.refuted() == 0
    }

    pub fn count(&self, claim: Claim) -> usize {
        self.reports.iter().filter(|r| r.claim == claim).count()
    }

    /// Formulas checked by the gadget and equivalence claims together.
    pub fn formulas_checked(&self) -> usize {
        self.count(Claim::Gadget) + self.count(Claim::Equivalence)
    }

    pub fn lines(&self) -> impl Iterator<Item = String> + '_ {
        self.reports.iter().map(Report::line)
    }

    /// Sidecar text: one `<claim> <descriptor> <counterexample>` line per
    /// refuted report.
    pub fn counterexamples(&self) -> String {
        self.reports
            .iter()
            .filter_map(|r| {
                r.counterexample
                    .as_ref()
                    .map(|c| format!("{} {} {c}\n", r.claim, r.descriptor))
            })
            .collect()
    }

    /// Reports without timings, for reproducibility comparisons.
    pub fn fingerprint(&self) -> Vec<(Claim, String, Verdict, u64)> {
        self.reports
            .iter()
            .map(|r| (r.claim, r.descriptor.clone(), r.verdict, r.cases))
            .collect()
    }
}

/// Runs every claim up to `(max_k, max_m)`:
///
/// - the gadget case table;
/// - the gadget transform on every slot-ordered formula;
/// - the reduction on every canonical formula;
/// - [`SUITE_AGGREGATION_SYSTEMS`] random systems seeded by `seed`
///   (`n <= 8`, at most 4 rows, at most 3 nonzeros, `β = p + 1`).
///
/// Reports come back grouped in that order, sorted by descriptor within a
/// group, and are identical for identical inputs apart from timings.
pub fn run_suite(max_k: u32, max_m: usize, seed: u64, limits: &Limits) -> Result<SuiteSummary> {
    let mut reports = vec![check_gadget_table()];

    let gadget_inputs = enumerate_formulas_upto(max_k, max_m, ClauseOrder::SlotOrdered);
    let gadget: Vec<Report> = gadget_inputs
        .par_iter()
        .map(|f| check_gadget(f, limits))
        .collect::<Result<_>>()?;
    reports.extend(gadget);

    let reduction_inputs = enumerate_formulas_upto(max_k, max_m, ClauseOrder::Canonical);
    let equivalence: Vec<Report> = reduction_inputs
        .par_iter()
        .map(|f| check_equivalence(f, limits))
        .collect::<Result<_>>()?;
    reports.extend(equivalence);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems: Vec<EqualitySystem> = (0..SUITE_AGGREGATION_SYSTEMS)
        .map(|_| EqualitySystem::random(&mut rng, 8, 4, 3))
        .collect();
    let aggregation: Vec<Report> = systems
        .par_iter()
        .map(|s| check_aggregation(s, &BigNat::from(s.max_nonzeros() + 1)))
        .collect::<Result<_>>()?;
    reports.extend(aggregation);

    // stable, so repeated random systems keep their draw order
    reports.sort_by(|a, b| (a.claim, &a.descriptor).cmp(&(b.claim, &b.descriptor)));
    Ok(SuiteSummary { reports })
}

/// All 0-1 points satisfying every row of `rows` over `n` variables, in
/// increasing order of the binary number `x_1 x_2 ... x_n`.
///
/// Rows are `(variables, relation-is-equality, rhs)`; the search fixes
/// variables in index order and prunes a branch as soon as a row whose
/// variables are all fixed fails, or an equality row already exceeds its
/// right-hand side.
pub fn enumerate_01_solutions(n: usize, rows: &[(Vec<usize>, bool, u32)]) -> Vec<Vec<bool>> {
    let last_var: Vec<Option<usize>> = rows
        .iter()
        .map(|(vars, _, _)| vars.iter().max().copied())
        .collect();
    // empty rows are decided up front
    if rows
        .iter()
        .any(|(vars, is_eq, rhs)| vars.is_empty() && if *is_eq { *rhs != 0 } else { *rhs > 0 })
    {
        return Vec::new();
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut touching: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (r, (vars, _, _)) in rows.iter().enumerate() {
        if let Some(last) = last_var[r] {
            closing[last].push(r);
        }
        for &v in vars {
            touching[v].push(r);
        }
    }
    let mut sums = vec![0u32; rows.len()];
    let mut x = vec![false; n];
    let mut out = Vec::new();

    fn go(
        depth: usize,
        rows: &[(Vec<usize>, bool, u32)],
        closing: &[Vec<usize>],
        touching: &[Vec<usize>],
        sums: &mut [u32],
        x: &mut Vec<bool>,
        out: &mut Vec<Vec<bool>>,
    ) {
        if depth == x.len() {
            out.push(x.clone());
            return;
        }
        for value in [false, true] {
            x[depth] = value;
            if value {
                for &r in &touching[depth] {
                    sums[r] += 1;
                }
            }
            let overfull = value
                && touching[depth]
                    .iter()
                    .any(|&r| rows[r].1 && sums[r] > rows[r].2);
            let closed_ok = closing[depth].iter().all(|&r| {
                let (_, is_eq, rhs) = rows[r];
                if is_eq {
                    sums[r] == rhs
                } else {
                    sums[r] >= rhs
                }
            });
            if !overfull && closed_ok {
                go(depth + 1, rows, closing, touching, sums, x, out);
            }
            if value {
                for &r in &touching[depth] {
                    sums[r] -= 1;
                }
            }
        }
        x[depth] = false;
    }
    go(0, rows, &closing, &touching, &mut sums, &mut x, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn formula(k: u32, clauses: &[&[i64]]) -> CnfFormula {
        CnfFormula::from_dimacs_clauses(k, clauses).unwrap()
    }

    #[test]
    fn clause_counts() {
        // 2k literals: C(2k,1) + C(2k,2) + C(2k,3) sets
        assert_eq!(enumerate_clauses(1, ClauseOrder::Canonical).len(), 3);
        assert_eq!(enumerate_clauses(2, ClauseOrder::Canonical).len(), 14);
        assert_eq!(enumerate_clauses(3, ClauseOrder::Canonical).len(), 41);
        // ordered: 2k + 2k(2k-1) + 2k(2k-1)(2k-2)
        assert_eq!(enumerate_clauses(1, ClauseOrder::SlotOrdered).len(), 4);
        assert_eq!(enumerate_clauses(2, ClauseOrder::SlotOrdered).len(), 40);
    }

    #[test]
    fn formula_counts() {
        // multisets of m clauses out of 14
        assert_eq!(enumerate_formulas(2, 2, ClauseOrder::Canonical).len(), 105);
        assert_eq!(enumerate_formulas(2, 0, ClauseOrder::Canonical).len(), 1);
        assert_eq!(
            enumerate_formulas_upto(2, 2, ClauseOrder::Canonical).len(),
            (1 + 3 + 6) + (1 + 14 + 105)
        );
    }

    #[test]
    fn equivalence_examples() {
        let limits = Limits::default();
        let r = check_equivalence(&formula(1, &[&[1], &[-1]]), &limits).unwrap();
        assert!(r.is_confirmed());
        assert_eq!(r.cases, 2 + 1024);

        let sec34 = formula(3, &[&[1, 2, 3], &[1, -2, -3]]);
        let r = check_equivalence(&sec34, &limits).unwrap();
        assert!(r.is_confirmed());
        assert_eq!(r.cases, 8 + 1);

        let r = check_equivalence(&formula(2, &[]), &limits).unwrap();
        assert!(r.is_confirmed());
    }

    #[test]
    fn gadget_examples() {
        let limits = Limits::default();
        assert!(check_gadget(&formula(3, &[&[1, 2, 3]]), &limits)
            .unwrap()
            .is_confirmed());
        assert!(check_gadget(&formula(1, &[&[1], &[-1]]), &limits)
            .unwrap()
            .is_confirmed());
        for signs in 0..8 {
            let lit = |v: i64| if signs >> (v - 1) & 1 == 1 { -v } else { v };
            let f = formula(3, &[&[lit(1), lit(2), lit(3)]]);
            assert!(check_gadget(&f, &limits).unwrap().is_confirmed());
        }
        assert!(check_gadget_table().is_confirmed());
    }

    #[test]
    fn guard_is_enforced() {
        let limits = Limits {
            max_enum_vars: 8,
            ..Limits::default()
        };
        // n = 2 + 4 = 6 passes, n = 10 does not
        assert!(check_equivalence(&formula(1, &[&[1]]), &limits).is_ok());
        assert!(check_equivalence(&formula(1, &[&[1], &[-1]]), &limits).is_err());
        // gadget: k' = 1 + 8
        assert!(check_gadget(&formula(1, &[&[1], &[-1]]), &limits).is_err());
    }

    #[test]
    fn aggregation_examples() {
        let system = EqualitySystem {
            num_vars: 3,
            rows: vec![vec![0, 1], vec![1, 2]],
        };
        let r = check_aggregation(&system, &BigNat::from(3u32)).unwrap();
        assert!(r.is_confirmed());
        assert_eq!(r.cases, 8);
        assert_eq!(r.descriptor, "n3:0+1/1+2@b3");

        let empty = EqualitySystem {
            num_vars: 2,
            rows: vec![],
        };
        assert!(check_aggregation(&empty, &BigNat::from(2u32))
            .unwrap()
            .is_confirmed());
    }

    #[test]
    fn undersized_base_is_refuted_with_recheckable_counterexample() {
        // three nonzeros at base 2: x0 + x1 + x2 = 2 carries into x3's digit
        let system = EqualitySystem {
            num_vars: 4,
            rows: vec![vec![0, 1, 2], vec![3]],
        };
        let beta = BigNat::from(2u32);
        let r = check_aggregation(&system, &beta).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted);
        let Some(Counterexample::Aggregation {
            vector,
            system_holds,
            aggregate_holds,
        }) = r.counterexample
        else {
            panic!("aggregation counterexample expected");
        };
        assert_eq!(system.holds(&vector), system_holds);
        assert_eq!(system.aggregate_holds(&beta, &vector), aggregate_holds);
        assert_ne!(system_holds, aggregate_holds);
    }

    #[test]
    fn zero_one_enumerator() {
        // x0 + x1 = 1, x1 + x2 >= 1
        let rows = vec![(vec![0, 1], true, 1), (vec![1, 2], false, 1)];
        let sols = enumerate_01_solutions(3, &rows);
        let expected = vec![
            vec![false, true, false],
            vec![false, true, true],
            vec![true, false, true],
        ];
        assert_eq!(sols, expected);
        assert!(enumerate_01_solutions(2, &[(vec![], true, 1)]).is_empty());
        assert_eq!(enumerate_01_solutions(2, &[]).len(), 4);
    }

    #[test]
    fn report_line_format() {
        let r = check_gadget_table();
        let line = r.line();
        let fields: Vec<&str> = line.split(' ').collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(&fields[..4], &["gadget-table", "xyz", "confirmed", "128"]);
        assert!(fields[4].parse::<u128>().is_ok());
    }
}
