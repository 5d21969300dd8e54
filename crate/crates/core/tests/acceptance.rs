//! Acceptance criteria, one line each:
//!
//! ```text
//! criterion <n> <name>: PASS|FAIL (<detail>) <elapsed> / <limit>
//! ```
//!
//! Runs without the libtest harness so the lines always reach stdout; exits
//! nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fwknap::gadgets::gadget_completions;
use fwknap::instance_file::{read_instance, write_instance, InstanceFile, Origin};
use fwknap::reduction::{build_layout, clause_aggregate, fixed_weights, lift_assignment, reduce};
use fwknap::solvers::{brute_force_knapsack, dp_solve, solve_via_maximal};
use fwknap::verify::{
    check_aggregation, check_equivalence, check_gadget, enumerate_formulas,
    enumerate_formulas_upto, ClauseOrder, EqualitySystem, Report, SUITE_AGGREGATION_SYSTEMS,
};
use fwknap::{Assignment, BigNat, Clause, CnfFormula, KnapsackInstance, Limits, Literal};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn sec34() -> CnfFormula {
    CnfFormula::from_dimacs_clauses(3, &[&[1, 2, 3], &[1, -2, -3]]).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tally(reports: &[Report]) -> Outcome {
    match reports.iter().find(|r| !r.is_confirmed()) {
        Some(r) => Err(format!(
            "{} {}: {}",
            r.claim,
            r.descriptor,
            r.counterexample
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default()
        )),
        None => Ok(format!("{} confirmed, 0 refuted", reports.len())),
    }
}

/// (x, y, z) -> completions (a, b, c, d), from the gadget's case analysis.
const CASES: [([bool; 3], &[[bool; 4]]); 8] = [
    ([false, false, false], &[]),
    ([true, false, false], &[[false, true, false, false]]),
    ([false, true, false], &[[false, false, false, false]]),
    ([false, false, true], &[[false, false, true, false]]),
    ([true, true, false], &[[true, false, false, false]]),
    (
        [true, false, true],
        &[[false, true, false, true], [true, false, true, false]],
    ),
    ([false, true, true], &[[false, false, false, true]]),
    ([true, true, true], &[[true, false, false, true]]),
];

fn gadget_table() -> Outcome {
    for ([x, y, z], expected) in CASES {
        let found = gadget_completions(x, y, z);
        ensure(found == expected, || format!("({x},{y},{z}): {found:?}"))?;
    }
    let counts: Vec<usize> = CASES.iter().map(|(_, c)| c.len()).collect();
    Ok(format!("8 cases, completion counts {counts:?}"))
}

fn gadget_equivalence() -> Outcome {
    let limits = Limits::default();
    let reports: Vec<Report> = enumerate_formulas_upto(3, 2, ClauseOrder::Canonical)
        .iter()
        .map(|f| check_gadget(f, &limits))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    tally(&reports)
}

fn aggregation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut reports = Vec::new();
    for _ in 0..SUITE_AGGREGATION_SYSTEMS {
        let system = EqualitySystem::random(&mut rng, 8, 4, 3);
        let p = system.max_nonzeros();
        ensure(
            system.num_vars <= 8 && system.rows.len() <= 4 && p <= 3,
            || format!("out of range: {}", system.describe()),
        )?;
        reports.push(check_aggregation(&system, &BigNat::from(p + 1)).map_err(|e| e.to_string())?);
    }
    let vectors: u64 = reports.iter().map(|r| r.cases).sum();
    tally(&reports).map(|s| format!("{s}, {vectors} vectors"))
}

fn reduction_equivalence() -> Outcome {
    let limits = Limits::default();
    let reports: Vec<Report> = enumerate_formulas_upto(2, 2, ClauseOrder::Canonical)
        .iter()
        .map(|f| check_equivalence(f, &limits))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    tally(&reports)
}

fn random_formula(rng: &mut impl Rng, k: u32, m: usize) -> CnfFormula {
    let clauses = (0..m)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            let lits = (0..len).map(|_| {
                let v = rng.gen_range(1..=k);
                if rng.gen() {
                    Literal::positive(v)
                } else {
                    Literal::negative(v)
                }
            });
            Clause::new(lits).unwrap()
        })
        .collect();
    CnfFormula::new(k, clauses).unwrap()
}

fn fixed_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut pairs = 0;
    for k in 1..=4u32 {
        for m in 0..=4usize {
            let expected = fixed_weights(k as usize, m);
            for _ in 0..10 {
                let (f, g) = (
                    random_formula(&mut rng, k, m),
                    random_formula(&mut rng, k, m),
                );
                let (fi, _) = reduce(&f);
                let (gi, _) = reduce(&g);
                ensure(
                    fi.weights == gi.weights && fi.capacity == gi.capacity,
                    || format!("k={k} m={m}: weights differ"),
                )?;
                ensure((fi.weights, fi.capacity) == expected, || {
                    format!("k={k} m={m}: not the fixed weights")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} formula pairs bit-identical"))
}

fn worked_example() -> Outcome {
    let f = sec34();
    let (inst, layout) = reduce(&f);
    ensure(inst.n == 30, || format!("n = {}", inst.n))?;
    ensure(layout.total_positions() == 31, || {
        format!("{} positions", layout.total_positions())
    })?;
    ensure(layout.beta == BigNat::from(14u32), || {
        format!("beta {}", layout.beta)
    })?;
    let x = lift_assignment(&Assignment::new(vec![false, true, false]), &f)
        .map_err(|e| e.to_string())?;
    ensure(inst.weight_of(&x) == inst.capacity, || "A.x != b".into())?;
    ensure(inst.value_of(&x) >= inst.bound, || "C.x < d".into())?;
    Ok("n = 30, 31 positions, beta 14, A.x = b, C.x >= d".into())
}

fn random_instance(rng: &mut impl Rng, max_n: usize) -> KnapsackInstance {
    let n = rng.gen_range(0..=max_n);
    let wide = rng.gen_bool(0.3);
    let number = |rng: &mut ChaCha8Rng| -> BigNat {
        if wide {
            BigNat::from(rng.gen::<u64>()) * BigNat::from(rng.gen::<u64>())
        } else {
            BigNat::from(rng.gen_range(0u32..1000))
        }
    };
    let mut r = ChaCha8Rng::seed_from_u64(rng.gen());
    let weights: Vec<BigNat> = (0..n).map(|_| number(&mut r)).collect();
    let values: Vec<BigNat> = (0..n).map(|_| number(&mut r)).collect();
    let total: BigNat = weights.iter().sum();
    let capacity = total * BigNat::from(rng.gen_range(0u32..=100)) / BigNat::from(100u32);
    let bound = values.iter().sum::<BigNat>() * BigNat::from(rng.gen_range(0u32..=100))
        / BigNat::from(100u32);
    KnapsackInstance::new(weights, capacity, values, bound)
}

fn solver_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..200 {
        let inst = random_instance(&mut rng, 16);
        let brute = brute_force_knapsack(&inst, 30).map_err(|e| e.to_string())?;
        let dp = dp_solve(&inst, Limits::DEFAULT_DP_STATES).map_err(|e| e.to_string())?;
        ensure(dp.optimum == brute.optimum, || {
            format!("dp round {round}: {} vs {}", dp.optimum, brute.optimum)
        })?;
    }
    for round in 0..200 {
        let inst = random_instance(&mut rng, 12);
        let brute = brute_force_knapsack(&inst, 30).map_err(|e| e.to_string())?;
        let maximal = solve_via_maximal(&inst, 30).map_err(|e| e.to_string())?;
        ensure(maximal.optimum == brute.optimum, || {
            format!(
                "maximal round {round}: {} vs {}",
                maximal.optimum, brute.optimum
            )
        })?;
    }
    Ok("200 dp and 200 maximal optima equal brute force".into())
}

fn ladder() -> Outcome {
    let layout = build_layout(1, 1);
    let mut checked = 0;
    let mut premise = 0;
    for f in enumerate_formulas(1, 1, ClauseOrder::Canonical) {
        let (inst, _) = reduce(&f);
        let (c0, d0) = clause_aggregate(&f, &layout).map_err(|e| e.to_string())?;
        for mask in 0u32..64 {
            let x: Vec<bool> = (0..6).map(|j| mask >> j & 1 == 1).collect();
            checked += 1;
            if inst.weight_of(&x) > inst.capacity || inst.value_of(&x) < inst.bound {
                continue;
            }
            premise += 1;
            let c0x: BigNat = c0.iter().zip(&x).filter(|(_, &b)| b).map(|(c, _)| c).sum();
            ensure(inst.weight_of(&x) == inst.capacity && c0x >= d0, || {
                format!("{f:?} x={x:?}")
            })?;
        }
    }
    Ok(format!(
        "{checked} vectors, {premise} satisfy both constraints, 0 refuted"
    ))
}

fn serialization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut files = Vec::new();
    for _ in 0..100 {
        let instance = random_instance(&mut rng, 20);
        let origin = rng.gen_bool(0.5).then(|| Origin {
            k: rng.gen_range(1..5),
            m: rng.gen_range(0..5),
            beta: BigNat::from(rng.gen_range(2u32..50)),
        });
        files.push(InstanceFile { origin, instance });
    }
    let mut formulas = enumerate_formulas_upto(2, 2, ClauseOrder::Canonical);
    formulas.push(sec34());
    for f in &formulas {
        let (instance, layout) = reduce(f);
        files.push(InstanceFile {
            origin: Some(Origin {
                k: layout.k,
                m: layout.m,
                beta: layout.beta,
            }),
            instance,
        });
    }
    for file in &files {
        let text = write_instance(file);
        let back = read_instance(&text).map_err(|e| e.to_string())?;
        ensure(&back == file && write_instance(&back) == text, || {
            "round trip changed the instance".into()
        })?;
    }
    Ok(format!("{} instances round-trip", files.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("gadget-table", Duration::from_secs(1), gadget_table),
        (
            "gadget-equivalence",
            Duration::from_secs(120),
            gadget_equivalence,
        ),
        ("aggregation", Duration::from_secs(60), aggregation),
        (
            "reduction-equivalence",
            Duration::from_secs(600),
            reduction_equivalence,
        ),
        ("fixed-structure", Duration::from_secs(1), fixed_structure),
        ("worked-example", Duration::from_secs(1), worked_example),
        (
            "solver-agreement",
            Duration::from_secs(60),
            solver_agreement,
        ),
        ("ladder", Duration::from_secs(1), ladder),
        ("serialization", Duration::from_secs(1), serialization),
    ];
    let mut failed = 0;
    for (idx, (name, limit, run)) in criteria.into_iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let elapsed = started.elapsed();
        let (verdict, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over time limit")),
            Err(d) => ("FAIL", d),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {} {name}: {verdict} ({detail}) {:.3}s / {}s",
            idx + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
