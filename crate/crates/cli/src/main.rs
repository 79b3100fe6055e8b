//! `conjham`: build, check, and enumerate pairs `(x, y)` by the Hamming
//! distance between `xy` and `yx`.
//!
//! Exit codes: 0 success, 1 infeasible, 2 argument error, 3 oracle budget
//! exceeded.

mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use conjham_core::{
    achievable_set, construct, conjugate_mismatch, cycle_disagreements, feasible,
    have_common_power, lexmin_witness, Alphabet, CycleDecomposition, Error, OracleConfig,
    ProblemInstance, Word, DEFAULT_BUDGET,
};

use report::{CheckReport, Output, WitnessRecord};

/// Overrides the oracle enumeration budget (number of candidates).
const BUDGET_ENV: &str = "CONJHAM_ORACLE_BUDGET";

#[derive(Parser)]
#[command(name = "conjham", version, about = "Hamming distance between the conjugates xy and yx")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a verified witness (x, y) with h(xy, yx) = k
    Construct(InstanceArgs),
    /// Report h(xy, yx), per-cycle mismatches and commutation for a given pair
    Check {
        x: String,
        y: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether (m, n, k) has a witness over the alphabet
    Feasible(InstanceArgs),
    /// Exhaustively list every achievable k with its smallest witness
    Table {
        /// Largest m + n to enumerate
        #[arg(long)]
        max_total: usize,
        #[arg(short = 'a', long = "alphabet", default_value_t = 3)]
        alphabet: u32,
        #[arg(long)]
        json: bool,
    },
    /// Lexicographically smallest witness, by exhaustive search
    Lexmin(InstanceArgs),
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'k', allow_negative_numbers = true)]
    k: i64,
    /// Alphabet size; anything above 3 behaves like 3
    #[arg(short = 'a', long = "alphabet", default_value_t = 3)]
    alphabet: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Budget(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

const INFEASIBLE: u8 = 1;

fn alphabet(size: u32) -> Result<Alphabet, CliError> {
    let alphabet = Alphabet::from_size(size)?;
    if size > 3 {
        eprintln!("warning: alphabet size {size} behaves like 3; only symbols 0, 1, 2 are used");
    }
    Ok(alphabet)
}

fn instance(args: &InstanceArgs) -> Result<ProblemInstance, CliError> {
    if args.m > args.n {
        eprintln!(
            "notice: swapping m = {} and n = {} (h(xy, yx) is symmetric in x and y)",
            args.m, args.n
        );
    }
    Ok(ProblemInstance::new(args.m, args.n, args.k, alphabet(args.alphabet)?)?)
}

fn oracle_config() -> Result<OracleConfig, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(value) => value
            .trim()
            .parse()
            .map(OracleConfig::with_budget)
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}={value:?} is not a count"))),
        Err(_) => Ok(OracleConfig::with_budget(DEFAULT_BUDGET)),
    }
}

fn exit_for(feasible: bool) -> ExitCode {
    if feasible {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(INFEASIBLE)
    }
}

fn cmd_construct(args: &InstanceArgs) -> Result<ExitCode, CliError> {
    let inst = instance(args)?;
    let verdict = feasible(&inst);
    let record = if verdict.feasible() {
        WitnessRecord::found(&inst, &construct(&inst)?)
    } else {
        WitnessRecord::absent(&inst, &verdict)
    };
    record.print(args.json);
    Ok(exit_for(verdict.feasible()))
}

fn cmd_feasible(args: &InstanceArgs) -> Result<ExitCode, CliError> {
    let inst = instance(args)?;
    let verdict = feasible(&inst);
    WitnessRecord::absent(&inst, &verdict).print(args.json);
    Ok(exit_for(verdict.feasible()))
}

fn cmd_lexmin(args: &InstanceArgs) -> Result<ExitCode, CliError> {
    let inst = instance(args)?;
    let verdict = feasible(&inst);
    let found = match inst.k_in_range() {
        Some(k) => lexmin_witness(inst.m(), inst.n(), k, inst.alphabet(), &oracle_config()?)?,
        None => None,
    };
    let record = match &found {
        Some(w) => WitnessRecord::found(&inst, w),
        None => WitnessRecord::absent(&inst, &verdict),
    };
    record.print(args.json);
    Ok(exit_for(found.is_some()))
}

fn cmd_check(x: &str, y: &str, json: bool) -> Result<ExitCode, CliError> {
    let x: Word = x.parse()?;
    let y: Word = y.parse()?;
    if x.is_empty() || y.is_empty() {
        return Err(Error::ZeroLength {
            m: x.len(),
            n: y.len(),
        }
        .into());
    }
    let decomposition = CycleDecomposition::new(x.len(), y.len())?;
    let report = CheckReport {
        x: x.to_string(),
        y: y.to_string(),
        m: x.len(),
        n: y.len(),
        k: conjugate_mismatch(&x, &y),
        cycles: cycle_disagreements(&x.concat(&y), &decomposition)?,
        common_power: have_common_power(&x, &y),
    };
    report.print(json);
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(max_total: usize, size: u32, json: bool) -> Result<ExitCode, CliError> {
    let alphabet = alphabet(size)?;
    let config = oracle_config()?;
    if !json {
        println!("m\tn\tk\tx\ty");
    }
    for total in 2..=max_total {
        for m in 1..=total / 2 {
            let n = total - m;
            let record = achievable_set(m, n, alphabet, &config)?;
            for (&k, w) in &record.witness_per_k {
                if json {
                    let inst = ProblemInstance::new(m, n, k as i64, alphabet)?;
                    WitnessRecord::found(&inst, w).print(true);
                } else {
                    println!("{m}\t{n}\t{k}\t{}\t{}", w.x(), w.y());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let result = match &cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Check { x, y, json } => cmd_check(x, y, *json),
        Command::Feasible(args) => cmd_feasible(args),
        Command::Table {
            max_total,
            alphabet,
            json,
        } => cmd_table(*max_total, *alphabet, *json),
        Command::Lexmin(args) => cmd_lexmin(args),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Budget(msg)) => {
            eprintln!("error: {msg} (raise it with {BUDGET_ENV})");
            ExitCode::from(3)
        }
    }
}
