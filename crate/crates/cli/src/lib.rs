//! `tetraspeed` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 budget exceeded.

pub mod digits;
pub mod number;
pub mod table;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use rayon::prelude::*;
use tetraspeed_core::{congruence_speed, constant_speed, decompose, Budget, Error, DEFAULT_DIGIT_BUDGET};

use crate::table::{Format, SpeedPath, TableRow};

/// Most heights `digits` lists in one call.
const MAX_LISTED_HEIGHTS: u64 = 10_000;
/// Most bases `table` evaluates in one call.
const MAX_TABLE_ROWS: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "tetraspeed", version, about = "Congruence speed of integer tetration in radix 10")]
pub struct Cli {
    /// Largest exact integer, in decimal digits, ever materialized.
    #[arg(long, global = true, env = "TETRA_BUDGET", default_value_t = DEFAULT_DIGIT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Congruence speed V(a, b).
    Speed {
        #[arg(value_parser = number::parse_integer)]
        a: BigUint,
        #[arg(value_parser = number::parse_integer)]
        b: BigUint,
    },
    /// Constant congruence speed V(a) of a base not ending in 0.
    Constant {
        #[arg(value_parser = number::parse_integer)]
        a: BigUint,
    },
    /// Last digits of ^b a for a range of heights, frozen digits marked with '|'.
    Digits {
        #[arg(value_parser = number::parse_integer)]
        a: BigUint,
        #[arg(value_parser = number::parse_integer)]
        min_b: BigUint,
        #[arg(value_parser = number::parse_integer)]
        max_b: BigUint,
        /// Number of trailing digits shown.
        #[arg(long, default_value_t = 30)]
        window: u64,
        /// Paint new frozen digits cyan and older frozen digits red.
        #[arg(long)]
        color: bool,
    },
    /// V(a, b) for every base in [from, to].
    Table {
        #[arg(value_parser = number::parse_integer)]
        from: BigUint,
        #[arg(value_parser = number::parse_integer)]
        to: BigUint,
        /// Tower height shared by every row.
        #[arg(long, value_parser = number::parse_integer)]
        b: BigUint,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute V(a, b) for b = 1..=max-b by every applicable route.
    Verify {
        #[arg(value_parser = number::parse_integer)]
        a: BigUint,
        /// Largest height checked.
        #[arg(long, default_value_t = 5)]
        max_b: u64,
    },
}

#[derive(Debug)]
pub enum Failure {
    Verification(String),
    Invalid(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verification(m) | Failure::Invalid(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } | Error::WindowBudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

/// Parses `args`, runs the command, and maps the outcome to an exit code.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(output) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(output.as_bytes());
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Failure::Verification(report) = &failure {
                print!("{report}");
            } else {
                eprintln!("error: {}", failure.message());
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    if cli.budget == 0 {
        return Err(Failure::Invalid("--budget must be positive".into()));
    }
    let budget = Budget::with_digits(cli.budget);
    match cli.command {
        Command::Speed { a, b } => {
            if b == BigUint::from(0u32) {
                return Err(Failure::Invalid("height must be at least 1".into()));
            }
            let speed = congruence_speed(a, b, &budget)?;
            Ok(format!("{speed}\n"))
        }
        Command::Constant { a } => Ok(format!("{}\n", constant_speed(a, &budget)?)),
        Command::Digits { a, min_b, max_b, window, color } => {
            if min_b > max_b {
                return Err(Failure::Invalid("min_b must not exceed max_b".into()));
            }
            if &max_b - &min_b >= BigUint::from(MAX_LISTED_HEIGHTS) {
                return Err(Failure::Invalid(format!("at most {MAX_LISTED_HEIGHTS} heights per listing")));
            }
            let lines = digits::digit_lines(&a, &min_b, &max_b, window, &budget.tower)?;
            let mut out = String::new();
            for line in lines {
                writeln!(out, "{}", line.render(color)).expect("writing to a String");
            }
            Ok(out)
        }
        Command::Table { from, to, b, format, out } => {
            let rows = table_rows(&from, &to, &b, &budget)?;
            let text = table::render(&rows, format).map_err(Failure::Invalid)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Verify { a, max_b } => {
            if max_b == 0 {
                return Err(Failure::Invalid("--max-b must be at least 1".into()));
            }
            let mut report = String::new();
            let mut agree = true;
            let mut unreachable = false;
            for b in 1..=max_b {
                let height = verify::verify_height(&a, b, &budget)?;
                agree &= height.agree;
                unreachable |= !height.has_value();
                writeln!(report, "{}", height.render()).expect("writing to a String");
            }
            if !agree {
                writeln!(report, "verification FAILED for a = {a}").expect("writing to a String");
                return Err(Failure::Verification(report));
            }
            if unreachable {
                print!("{report}");
                return Err(Failure::Budget("some heights are out of reach of every route".into()));
            }
            writeln!(report, "all routes agree for a = {a}, b = 1..={max_b}").expect("writing to a String");
            Ok(report)
        }
    }
}

/// Rows for bases `from..=to`, evaluated in parallel and returned in order.
pub fn table_rows(from: &BigUint, to: &BigUint, b: &BigUint, budget: &Budget) -> Result<Vec<TableRow>, Failure> {
    if from > to {
        return Err(Failure::Invalid("from must not exceed to".into()));
    }
    if b == &BigUint::from(0u32) {
        return Err(Failure::Invalid("height must be at least 1".into()));
    }
    let count = to - from + 1u32;
    if count > BigUint::from(MAX_TABLE_ROWS) {
        return Err(Failure::Invalid(format!("at most {MAX_TABLE_ROWS} rows per table")));
    }
    let count: u64 = count.try_into().expect("bounded above");
    (0..count)
        .into_par_iter()
        .map(|k| {
            let a = from + k;
            let base = decompose(a.clone());
            let path = if base.is_zero() || base.is_positive_multiple_of_ten() {
                SpeedPath::Formula
            } else {
                SpeedPath::Definitional
            };
            let speed = congruence_speed(a.clone(), b.clone(), budget)?;
            Ok(TableRow::new(a, b, &speed, path))
        })
        .collect()
}
