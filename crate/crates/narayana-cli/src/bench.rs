//! Construction-strategy benchmark, gated on a correctness pre-pass.
//!
//! Correctness dominates benchmarking: before anything is timed, every r up
//! to the requested maximum is rebuilt by all three constructions and the
//! results must agree exactly. Only then does the timing ladder run, on
//! doubling r values, reporting median-of-reps wall time and the bit length
//! of the largest coefficient numerator.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use narayana::{HalfPowerBivariate, NarayanaRow, Polynomial, RecurrencePolynomials};
use serde::Serialize;

use crate::output::{open_sink, Format};
use crate::{Failure, Method};

/// One timing measurement: a construction at one row index.
#[derive(Serialize)]
pub struct BenchRecord {
    method: &'static str,
    r: u32,
    wall_time_ns: u128,
    max_coeff_bits: u64,
}

pub fn cmd_bench(
    r_max: u32,
    reps: u32,
    methods: &[Method],
    format: Format,
    output: Option<&Path>,
) -> Result<(), Failure> {
    agreement_pre_pass(r_max)?;
    let mut records = Vec::new();
    for r in ladder(r_max) {
        for &method in methods {
            records.push(time_construction(method, r, reps)?);
        }
    }
    let mut out = open_sink(output)?;
    match format {
        Format::Plain => {
            writeln!(out, "{:<12} {:>6} {:>14} {:>16}", "method", "r", "wall_time_ns", "max_coeff_bits")?;
            for rec in &records {
                writeln!(
                    out,
                    "{:<12} {:>6} {:>14} {:>16}",
                    rec.method, rec.r, rec.wall_time_ns, rec.max_coeff_bits
                )?;
            }
        }
        Format::Json => {
            for rec in &records {
                writeln!(out, "{}", serde_json::to_string(rec).expect("numeric fields"))?;
            }
        }
        Format::Csv => {
            writeln!(out, "method,r,wall_time_ns,max_coeff_bits")?;
            for rec in &records {
                writeln!(
                    out,
                    "{},{},{},{}",
                    rec.method, rec.r, rec.wall_time_ns, rec.max_coeff_bits
                )?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

/// Asserts that the direct row, the three-term recurrence, and the moment
/// expectation agree for *every* `r <= r_max`, not just the timed points.
///
/// Both iterative constructions are advanced incrementally — the recurrence
/// by its streaming iterator, the moment side by a running power of the base
/// expression — so the whole sweep costs no more than the single largest
/// expansion.
fn agreement_pre_pass(r_max: u32) -> Result<(), Failure> {
    let base = HalfPowerBivariate::narayana_base();
    let mut power = HalfPowerBivariate::one();
    let mut recurrence_rows = RecurrencePolynomials::new();
    for r in 1..=r_max {
        let direct = NarayanaRow::compute(r)
            .map_err(|e| Failure::Math(e.to_string()))?
            .to_polynomial();
        let recurrence = recurrence_rows.next().expect("stream never ends");
        let moment = power.expect().map_err(|e| Failure::Math(e.to_string()))?;
        if recurrence != direct {
            return Err(Failure::Math(format!(
                "recurrence and direct constructions disagree at r = {r}"
            )));
        }
        if moment != direct {
            return Err(Failure::Math(format!(
                "moment and direct constructions disagree at r = {r}"
            )));
        }
        power = power.mul(&base);
    }
    Ok(())
}

/// Doubling ladder 3, 6, 12, ... capped by (and always including) `r_max`.
fn ladder(r_max: u32) -> Vec<u32> {
    let mut rs = Vec::new();
    let mut r = 3;
    while r <= r_max {
        rs.push(r);
        r *= 2;
    }
    if rs.last() != Some(&r_max) {
        rs.push(r_max);
    }
    rs
}

fn time_construction(method: Method, r: u32, reps: u32) -> Result<BenchRecord, Failure> {
    let mut times = Vec::with_capacity(reps as usize);
    let mut poly = Polynomial::zero();
    for _ in 0..reps {
        let start = Instant::now();
        poly = method
            .construct(r)
            .map_err(|e| Failure::Math(e.to_string()))?;
        times.push(start.elapsed().as_nanos());
    }
    times.sort_unstable();
    let median = times[(times.len() - 1) / 2];
    Ok(BenchRecord {
        method: method.token(),
        r,
        wall_time_ns: median,
        max_coeff_bits: max_coeff_bits(&poly),
    })
}

/// Bit length of the largest coefficient numerator (at least 1, per the
/// record's contract).
fn max_coeff_bits(poly: &Polynomial) -> u64 {
    poly.coeffs()
        .iter()
        .map(|c| c.numer().bits())
        .max()
        .unwrap_or(1)
        .max(1)
}
