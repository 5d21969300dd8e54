//! `fwknap` command-line front end.
//!
//! Exit codes: 10 satisfiable/feasible, 20 unsatisfiable/infeasible (or a
//! refuted claim under `verify`), 0 informational success, 1 usage or
//! format error, 2 enumeration guard or state budget exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use fwknap::dimacs::{parse_dimacs, value_line, write_dimacs};
use fwknap::gadgets::{brute_force_sat, transform_3sat};
use fwknap::instance_file::{read_instance, write_instance, InstanceFile, Origin};
use fwknap::reduction::{build_layout, decode_digits, extract_assignment, reduce, Block};
use fwknap::solvers::{solve, Method};
use fwknap::verify::run_suite;
use fwknap::{BigNat, Limits, SatMode};

/// Overrides the default enumeration guard.
const ENUM_LIMIT_VAR: &str = "FWKNAP_ENUM_LIMIT";

const EXIT_SAT: u8 = 10;
const EXIT_UNSAT: u8 = 20;
const EXIT_USAGE: u8 = 1;
const EXIT_GUARD: u8 = 2;

#[derive(Parser)]
#[command(
    name = "fwknap",
    version,
    about = "Fixed-weights knapsack reduction and solvers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// 3-CNF (DIMACS) to an equisatisfiable 1-in-3-SAT formula (DIMACS).
    Transform {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Also decide the input and embed a 1-in-3 witness of the output as
        /// `c v ...` comments; exits 10/20.
        #[arg(long)]
        witness: bool,
        #[arg(long, value_name = "N")]
        enum_limit: Option<usize>,
    },
    /// 1-in-3-SAT formula (DIMACS) to a knapsack instance file.
    Reduce {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Reject formulas whose variable and clause counts differ.
        #[arg(long)]
        square: bool,
    },
    /// Decide an instance file: `s`, `o` and `v` lines.
    Solve {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value = "dp")]
        method: Method,
        #[arg(long, value_name = "N")]
        enum_limit: Option<usize>,
        #[arg(long, value_name = "N", default_value_t = Limits::DEFAULT_DP_STATES)]
        state_budget: usize,
    },
    /// Run the small-scale verification suite, one report per line.
    Verify {
        #[arg(long, default_value_t = 2)]
        max_k: u32,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write counterexamples of refuted reports here.
        #[arg(long, value_name = "FILE")]
        counterexamples: Option<PathBuf>,
        #[arg(long, value_name = "N")]
        enum_limit: Option<usize>,
    },
    /// Digit positions and base of the reduction for `(k, m)`.
    Layout {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Base-β digits of a value over the `(k, m)` layout.
    Decode {
        #[arg(long)]
        value: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
}

fn read_input(path: &Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading stdin")?;
            Ok(text)
        }
    }
}

fn limits(enum_limit: Option<usize>, max_dp_states: usize) -> anyhow::Result<Limits> {
    let max_enum_vars = match (enum_limit, std::env::var(ENUM_LIMIT_VAR)) {
        (Some(n), _) => n,
        (None, Ok(text)) => text
            .trim()
            .parse()
            .with_context(|| format!("{ENUM_LIMIT_VAR}=`{text}` is not a count"))?,
        (None, Err(_)) => Limits::DEFAULT_ENUM_VARS,
    };
    Ok(Limits {
        max_enum_vars,
        max_dp_states,
    })
}

fn block_name(block: Block) -> &'static str {
    match block {
        Block::Clause => "clause",
        Block::Equality => "equality",
    }
}

fn run(command: Command, out: &mut impl Write) -> anyhow::Result<u8> {
    match command {
        Command::Transform {
            input,
            witness,
            enum_limit,
        } => {
            let formula = parse_dimacs(&read_input(&input)?)?;
            let (transformed, traces) = transform_3sat(&formula)?;
            let mut comments: Vec<String> = traces
                .iter()
                .map(|t| {
                    let [a, b, c, d] = t.fresh_vars;
                    let [e1, e2, e3] = t.emitted_clauses;
                    format!(
                        "gadget clause {} fresh {a} {b} {c} {d} emits {} {} {}",
                        t.source_clause + 1,
                        e1 + 1,
                        e2 + 1,
                        e3 + 1
                    )
                })
                .collect();
            let mut code = 0;
            if witness {
                let limits = limits(enum_limit, Limits::DEFAULT_DP_STATES)?;
                match brute_force_sat(&transformed, SatMode::ExactlyOne, limits.max_enum_vars)? {
                    Some(a) => {
                        comments.push("s SATISFIABLE".into());
                        comments.push(value_line(&a.to_dimacs()));
                        code = EXIT_SAT;
                    }
                    None => {
                        comments.push("s UNSATISFIABLE".into());
                        code = EXIT_UNSAT;
                    }
                }
            }
            out.write_all(write_dimacs(&transformed, &comments).as_bytes())?;
            Ok(code)
        }
        Command::Reduce { input, square } => {
            let formula = parse_dimacs(&read_input(&input)?)?;
            let (k, m) = (formula.num_vars() as usize, formula.num_clauses());
            if square && k != m {
                bail!("--square: formula has {k} variables and {m} clauses");
            }
            let (instance, layout) = reduce(&formula);
            let file = InstanceFile {
                origin: Some(Origin {
                    k: layout.k,
                    m: layout.m,
                    beta: layout.beta,
                }),
                instance,
            };
            out.write_all(write_instance(&file).as_bytes())?;
            Ok(0)
        }
        Command::Solve {
            input,
            method,
            enum_limit,
            state_budget,
        } => {
            let file = read_instance(&read_input(&input)?)?;
            let inst = &file.instance;
            let problems = fwknap::validate_instance(inst);
            if let Some(first) = problems.first() {
                bail!("invalid instance: {first}");
            }
            let sol = solve(inst, method, &limits(enum_limit, state_budget)?)?;
            writeln!(
                out,
                "s {}",
                if sol.feasible {
                    "FEASIBLE"
                } else {
                    "INFEASIBLE"
                }
            )?;
            writeln!(out, "o {}", sol.optimum)?;
            let literals: Vec<i64> = (1..)
                .zip(&sol.witness)
                .map(|(i, &b)| if b { i } else { -i })
                .collect();
            writeln!(out, "{}", value_line(&literals))?;
            if let (true, Some(origin)) = (sol.feasible, &file.origin) {
                if let Ok(a) = extract_assignment(&sol.witness, origin.k, origin.m) {
                    let line = value_line(&a.to_dimacs());
                    writeln!(out, "c assignment {}", &line[2..])?;
                }
            }
            Ok(if sol.feasible { EXIT_SAT } else { EXIT_UNSAT })
        }
        Command::Verify {
            max_k,
            max_m,
            seed,
            counterexamples,
            enum_limit,
        } => {
            let summary = run_suite(
                max_k,
                max_m,
                seed,
                &limits(enum_limit, Limits::DEFAULT_DP_STATES)?,
            )?;
            for line in summary.lines() {
                writeln!(out, "{line}")?;
            }
            if let Some(path) = counterexamples {
                fs::write(&path, summary.counterexamples())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            eprintln!(
                "{} reports, {} formulas, {} refuted",
                summary.reports.len(),
                summary.formulas_checked(),
                summary.refuted()
            );
            Ok(if summary.all_confirmed() {
                0
            } else {
                EXIT_UNSAT
            })
        }
        Command::Layout { k, m } => {
            let layout = build_layout(k, m);
            writeln!(out, "beta {}", layout.beta)?;
            writeln!(out, "shift {}", layout.shift())?;
            writeln!(out, "positions {}", layout.total_positions())?;
            for (pos, block, tag) in layout.positions() {
                writeln!(out, "{pos} {} {tag}", block_name(block))?;
            }
            Ok(0)
        }
        Command::Decode { value, k, m } => {
            let canonical = !value.is_empty()
                && value.bytes().all(|b| b.is_ascii_digit())
                && (value == "0" || !value.starts_with('0'));
            let total = canonical
                .then(|| BigNat::parse_bytes(value.as_bytes(), 10))
                .flatten()
                .with_context(|| format!("`{value}` is not a canonical decimal"))?;
            let layout = build_layout(k, m);
            let digits = decode_digits(&total, &layout.beta, layout.total_positions())?;
            writeln!(out, "beta {}", layout.beta)?;
            for ((pos, block, tag), digit) in layout.positions().into_iter().zip(&digits) {
                writeln!(out, "{pos} {digit} {} {tag}", block_name(block))?;
            }
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    let guard = err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<fwknap::Error>(),
            Some(fwknap::Error::GuardExceeded { .. } | fwknap::Error::StateBudgetExceeded { .. })
        )
    });
    if guard {
        EXIT_GUARD
    } else {
        EXIT_USAGE
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result.and_then(|code| flushed.map(|_| code).map_err(Into::into)) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("fwknap: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
