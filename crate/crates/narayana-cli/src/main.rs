//! `narayana` — exact tables, sequences, identity verification, and a
//! construction-strategy benchmark for Narayana polynomials.
//!
//! One binary, four subcommands:
//!
//! * `poly` — coefficients of one polynomial, by a chosen construction
//! * `seq` — integer/rational sequences, one value per line
//! * `verify` — exact identity checks, reported as JSON
//! * `bench` — wall-time comparison of the three constructions, gated on a
//!   correctness pre-pass
//!
//! Exit codes are a strict contract: `0` means every check passed, `1` means
//! a mathematical failure (a nonzero residual or a disagreement between
//! construction methods), `2` means a usage error. Coefficients are always
//! serialized as strings because the values outgrow any machine integer
//! almost immediately.

mod bench;
mod output;
mod verify;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use narayana::{
    binomial_power_expect, catalan, lassalle_numbers, narayana_poly_recurrence, narayana_row,
    schroder_half_eval, weighted_sum_first, weighted_sum_second, NarayanaRow, Polynomial,
};
use serde::Serialize;

use output::{open_sink, Format};
use verify::Identity;

/// Why a command could not complete; decides the process exit code.
pub enum Failure {
    /// Bad argument values discovered after parsing: exit code 2.
    Usage(String),
    /// An exact check failed — a nonzero residual or a method disagreement:
    /// exit code 1.
    Math(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Math(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Math(m) => m,
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("cannot write output: {e}"))
    }
}

/// One of the three independent ways to build `N_r(z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed-form triangle row: `N(r,k) = binom(r,k-1) binom(r,k) / r`.
    Direct,
    /// Three-term recurrence in `r`, seeded with the first two rows.
    Recurrence,
    /// Expectation of `(1 + z + 2 sqrt(z) X)^(r-1)` under the semicircular
    /// moment functional.
    Moment,
}

impl Method {
    pub fn token(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Recurrence => "recurrence",
            Method::Moment => "moment",
        }
    }

    /// Builds `N_r(z)` from scratch; the row cache is bypassed so repeated
    /// timings measure real work (only the tiny Catalan-number constants
    /// stay warm between calls).
    pub fn construct(self, r: u32) -> narayana::Result<Polynomial> {
        match self {
            Method::Direct => Ok(NarayanaRow::compute(r)?.to_polynomial()),
            Method::Recurrence => narayana_poly_recurrence(r),
            Method::Moment => binomial_power_expect(r),
        }
    }
}

/// A sequence the `seq` subcommand can emit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SequenceName {
    /// Catalan numbers `C_1 .. C_n`.
    Catalan,
    /// The entries of triangle row `r = n`.
    NarayanaRow,
    /// Lassalle numbers `A_1 .. A_n` (1, 1, 5, 56, 1092, ...).
    Lassalle,
    /// `(1/2) N_r(2)` for `r = 1 .. n`; these are half-integers, four times
    /// smaller than the classical large Schroeder numbers.
    SchroderHalf,
    /// Row sums weighted by `k - 1`, for `r = 1 .. n`.
    Weighted1,
    /// Row sums weighted by `(k - 1)(k - 2)`, for `r = 1 .. n`.
    Weighted2,
}

impl SequenceName {
    fn token(self) -> &'static str {
        match self {
            SequenceName::Catalan => "catalan",
            SequenceName::NarayanaRow => "narayana-row",
            SequenceName::Lassalle => "lassalle",
            SequenceName::SchroderHalf => "schroder-half",
            SequenceName::Weighted1 => "weighted1",
            SequenceName::Weighted2 => "weighted2",
        }
    }
}

#[derive(Parser)]
#[command(
    name = "narayana",
    version,
    about = "Exact Narayana polynomials: tables, sequences, identity verification, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of N_r(z), ascending in degree.
    Poly {
        /// Row index (r >= 1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Construction to use.
        #[arg(long, value_enum, default_value = "direct")]
        method: Method,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check identities exactly over a range of r; emits one JSON report per
    /// identity and exits nonzero on any failure.
    Verify {
        /// Identity to check; omit to run the whole catalog.
        #[arg(value_enum)]
        identity: Option<Identity>,
        /// Upper end of the checked r range (for stein: how many random test
        /// functions). Defaults to the identity's documented range.
        #[arg(long)]
        r_max: Option<u32>,
        /// Seed for the random stein test functions.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Corrupt one coefficient before comparing, to exercise the failure
        /// path; the run must then exit 1.
        #[arg(long, hide = true)]
        inject_fault: bool,
        /// Write the reports to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print a sequence, one exact value per line.
    Seq {
        #[arg(value_enum)]
        name: SequenceName,
        /// How many leading values (for narayana-row: the row index).
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the construction strategies on a doubling ladder of r values,
    /// after checking that all three agree for every r up to the maximum.
    Bench {
        /// Largest row index to benchmark (>= 3).
        #[arg(long, default_value_t = 48, value_parser = clap::value_parser!(u32).range(3..))]
        r_max: u32,
        /// Timing repetitions per measurement; the median is reported.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        reps: u32,
        /// Subset of constructions to time.
        #[arg(long, value_enum, value_delimiter = ',', default_value = "direct,recurrence,moment")]
        methods: Vec<Method>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the records to this file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Poly {
            r,
            method,
            format,
            output,
        } => cmd_poly(r, method, format, output.as_deref()),
        Command::Verify {
            identity,
            r_max,
            seed,
            inject_fault,
            output,
        } => verify::cmd_verify(identity, r_max, seed, inject_fault, output.as_deref()),
        Command::Seq {
            name,
            n,
            format,
            output,
        } => cmd_seq(name, n, format, output.as_deref()),
        Command::Bench {
            r_max,
            reps,
            methods,
            format,
            output,
        } => bench::cmd_bench(r_max, reps, &methods, format, output.as_deref()),
    }
}

#[derive(Serialize)]
struct PolyRecord {
    r: u32,
    method: &'static str,
    coeffs: Vec<String>,
}

fn cmd_poly(r: u32, method: Method, format: Format, output: Option<&Path>) -> Result<(), Failure> {
    let poly = method
        .construct(r)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
    let mut out = open_sink(output)?;
    match format {
        Format::Plain => writeln!(out, "{}", coeffs.join(" "))?,
        Format::Json => {
            let record = PolyRecord {
                r,
                method: method.token(),
                coeffs,
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("string fields"))?;
        }
        Format::Csv => {
            let header: Vec<String> = (0..coeffs.len()).map(|i| format!("c{i}")).collect();
            writeln!(out, "{}", header.join(","))?;
            writeln!(out, "{}", coeffs.join(","))?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct SeqRecord<'a> {
    name: &'static str,
    n: u32,
    values: &'a [String],
}

fn cmd_seq(
    name: SequenceName,
    n: u32,
    format: Format,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let values = sequence_values(name, n).map_err(|e| Failure::Usage(e.to_string()))?;
    let mut out = open_sink(output)?;
    match format {
        Format::Plain => {
            for v in &values {
                writeln!(out, "{v}")?;
            }
        }
        Format::Json => {
            let record = SeqRecord {
                name: name.token(),
                n,
                values: &values,
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("string fields"))?;
        }
        Format::Csv => {
            writeln!(out, "value")?;
            for v in &values {
                writeln!(out, "{v}")?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn sequence_values(name: SequenceName, n: u32) -> narayana::Result<Vec<String>> {
    match name {
        SequenceName::Catalan => (1..=n).map(|k| Ok(catalan(k)?.to_string())).collect(),
        SequenceName::NarayanaRow => Ok(narayana_row(n)?
            .entries()
            .iter()
            .map(|e| e.to_string())
            .collect()),
        SequenceName::Lassalle => Ok(lassalle_numbers(n)?
            .values()
            .iter()
            .map(|a| a.to_string())
            .collect()),
        SequenceName::SchroderHalf => (1..=n)
            .map(|k| Ok(schroder_half_eval(k)?.to_string()))
            .collect(),
        SequenceName::Weighted1 => (1..=n)
            .map(|k| Ok(weighted_sum_first(k)?.to_string()))
            .collect(),
        SequenceName::Weighted2 => (1..=n)
            .map(|k| Ok(weighted_sum_second(k)?.to_string()))
            .collect(),
    }
}
