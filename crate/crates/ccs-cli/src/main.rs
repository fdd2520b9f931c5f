//! `ccs`: build, check, and tabulate cyclic m-cycle systems of K_n - I.
//!
//! Exit codes: 0 success, 1 negative answer (infeasible, no system found,
//! verification failed), 2 bad input, 3 resource limit hit.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Parser, Subcommand};

use ccs_core::circulant::Order;
use ccs_core::constructions::build;
use ccs_core::document::SystemDocument;
use ccs_core::feasibility::{feasible, Params, ParityConstraint};
use ccs_core::ham::CACHE_ENV;
use ccs_core::verifier::exhaustive_search;
use ccs_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "ccs",
    version,
    about = "Cyclic m-cycle systems of the complete graph minus a 1-factor"
)]
struct Cli {
    /// Hamiltonian base-case cache file; overrides the CCS_CACHE variable.
    #[arg(long, global = true, value_name = "FILE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certified generating set and emit it as JSON.
    Generate {
        /// Cycle length (even, at least 4).
        #[arg(short)]
        m: u32,
        /// Order multiplier; the system lives on n = m·t points.
        #[arg(short)]
        t: u32,
        /// Include the full orbit expansion in the document.
        #[arg(long)]
        expand: bool,
        /// Write to a file instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Re-verify a document produced by generate.
    Verify {
        file: PathBuf,
    },
    /// Decide whether a system exists for one parameter pair.
    Feasible {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        t: u32,
        /// Also print the length-parity derivation.
        #[arg(long)]
        explain: bool,
    },
    /// Print the existence table for even m up to m-max, t up to t-max.
    Table {
        #[arg(long, value_name = "M")]
        m_max: u32,
        #[arg(long, value_name = "T")]
        t_max: u32,
        /// Also build and verify every feasible cell, in parallel.
        #[arg(long)]
        check: bool,
    },
    /// Exhaustively search for any generating set; small n only.
    Search {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        n: u32,
        /// Raise the order cap the search refuses beyond (default 24).
        #[arg(long)]
        bound: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.cache {
        std::env::set_var(CACHE_ENV, path);
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Infeasible { .. } | Error::NoHamSystem { .. } => 1,
        Error::BudgetExceeded { .. } | Error::SearchBoundExceeded { .. } => 3,
        Error::ConstructionCheck { .. } => 1,
        _ => 2,
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Generate { m, t, expand, out } => {
            let set = build(Params::new(m, t)?)?;
            let text = SystemDocument::from_set(&set, expand).to_json();
            match out {
                Some(path) => fs::write(&path, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Verify { file } => {
            let doc = SystemDocument::from_json(&fs::read_to_string(&file)?)?;
            doc.check_consistency()?;
            let report = run_verify(&doc)?;
            println!("{}", report.summary());
            Ok(u8::from(!report.ok()))
        }
        Command::Feasible { m, t, explain } => {
            let decision = feasible(Params::new(m, t)?);
            println!(
                "{} [{}: {}]",
                decision.feasible, decision.clause, decision.reason
            );
            if explain {
                println!("parity: {}", parity_text(decision.parity));
            }
            Ok(u8::from(!decision.feasible))
        }
        Command::Table { m_max, t_max, check } => cmd_table(m_max, t_max, check),
        Command::Search { m, n, bound } => match exhaustive_search(m, n, bound)? {
            Some(cycles) => {
                for c in &cycles {
                    let joined: Vec<String> =
                        c.vertices().iter().map(u32::to_string).collect();
                    println!("({})", joined.join(", "));
                }
                Ok(0)
            }
            None => {
                println!("no cyclic {m}-cycle system of K_{n} - I exists");
                Ok(1)
            }
        },
    }
}

fn run_verify(doc: &SystemDocument) -> Result<ccs_core::verifier::VerificationReport> {
    let cycles = doc.cycles()?;
    let n = Order::new(doc.n)?;
    ccs_core::verifier::verify(doc.m as usize, n, &cycles)
}

fn parity_text(parity: ParityConstraint) -> &'static str {
    match parity {
        ParityConstraint::Unconstrained => "length counts permit either parity of t",
        ParityConstraint::RequiresEvenT => "an odd number of even lengths forces even t",
        ParityConstraint::RequiresOddT => "an odd number of odd lengths forces odd t",
        ParityConstraint::Impossible => "length counts rule out both parities of t",
    }
}

fn cmd_table(m_max: u32, t_max: u32, check: bool) -> Result<u8> {
    if m_max < 4 || t_max < 1 {
        return Err(Error::BadParams(format!(
            "table needs m-max >= 4 and t-max >= 1, got {m_max} and {t_max}"
        )));
    }
    let mut feasible_cells = Vec::new();
    for m in (4..=m_max).step_by(2) {
        let marks: Vec<&str> = (1..=t_max)
            .map(|t| {
                let params = Params::new(m, t).expect("even m and positive t");
                if feasible(params).feasible {
                    feasible_cells.push(params);
                    "\u{2713}"
                } else {
                    "\u{2717}"
                }
            })
            .collect();
        println!("m={m:>2}: {}", marks.join(" "));
    }
    if !check {
        return Ok(0);
    }

    let next = AtomicUsize::new(0);
    let failures: Mutex<Vec<String>> = Mutex::new(Vec::new());
    let workers = std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(feasible_cells.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some(&params) = feasible_cells.get(idx) else {
                    break;
                };
                if let Err(err) = build(params) {
                    failures
                        .lock()
                        .unwrap()
                        .push(format!("m={}, t={}: {err}", params.m, params.t));
                }
            });
        }
    });
    let mut failures = failures.into_inner().unwrap();
    failures.sort();
    if failures.is_empty() {
        println!("checked {} feasible cells: all verified", feasible_cells.len());
        Ok(0)
    } else {
        for line in &failures {
            eprintln!("check failed: {line}");
        }
        Ok(1)
    }
}
