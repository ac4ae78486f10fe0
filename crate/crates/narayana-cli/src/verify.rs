//! Exact identity verification.
//!
//! Every check recomputes both sides of an identity independently and demands
//! a residual that is *identically* zero — a zero polynomial or a zero
//! rational, never a small float. One JSON report per identity goes to the
//! sink; any failure (or any exact division that turns out not to be exact)
//! makes the whole run a mathematical failure, exit code 1.

use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use narayana::{
    binomial_power_expect, catalan, derivative_identity_first, derivative_identity_second,
    derivative_two_term, expectation_x2_residual, expectation_x_residual, lassalle_numbers,
    lassalle_residual, narayana_poly_direct, narayana_poly_recurrence, stein_residual,
    weighted_sum_first, weighted_sum_second, Polynomial, Rational,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::output::open_sink;
use crate::Failure;

/// Largest degree of the random test functions fed to the Stein check.
const STEIN_MAX_DEGREE: usize = 25;

/// The identity catalog. The command-line names are frozen interface tokens;
/// the variant names say what each check actually is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    /// Three-term recurrence in r rebuilds the triangle rows.
    #[value(name = "eq3")]
    Recurrence,
    /// First-derivative identity, with the division by 2z done exactly.
    #[value(name = "eq4")]
    DerivativeFirst,
    /// Second-derivative identity, with the division by z^2 done exactly.
    #[value(name = "eq5")]
    DerivativeSecond,
    /// Two-term derivative recurrence reaching back two rows.
    #[value(name = "remark2")]
    DerivativeTwoTerm,
    /// Lassalle's alternating-sum recurrence with the numbers A_n.
    #[value(name = "eq6")]
    Lassalle,
    /// Semicircular-moment expectation rebuilds the polynomial.
    #[value(name = "eq7")]
    MomentConstruction,
    /// Stein-type identity E[h(X) X] = (1/3) E[h'(X)(1 - X^2)] on random
    /// polynomial test functions.
    #[value(name = "stein")]
    Stein,
    /// Step-down relation for the expectation against one factor of X.
    #[value(name = "io")]
    StepDownX,
    /// Step-down relation for the expectation against X^2.
    #[value(name = "ioa")]
    StepDownX2,
    /// Catalan contraction C_r = (4r-2)/(r+1) C_(r-1).
    #[value(name = "catalan-contraction")]
    CatalanContraction,
    /// Weighted row sums against their Catalan closed forms, including the
    /// plain row sum N_r(1) = C_r.
    #[value(name = "weighted-sums")]
    WeightedSums,
}

/// Every identity, in report order.
pub const CATALOG: [Identity; 11] = [
    Identity::Recurrence,
    Identity::DerivativeFirst,
    Identity::DerivativeSecond,
    Identity::DerivativeTwoTerm,
    Identity::Lassalle,
    Identity::MomentConstruction,
    Identity::Stein,
    Identity::StepDownX,
    Identity::StepDownX2,
    Identity::CatalanContraction,
    Identity::WeightedSums,
];

impl Identity {
    pub fn token(self) -> &'static str {
        match self {
            Identity::Recurrence => "eq3",
            Identity::DerivativeFirst => "eq4",
            Identity::DerivativeSecond => "eq5",
            Identity::DerivativeTwoTerm => "remark2",
            Identity::Lassalle => "eq6",
            Identity::MomentConstruction => "eq7",
            Identity::Stein => "stein",
            Identity::StepDownX => "io",
            Identity::StepDownX2 => "ioa",
            Identity::CatalanContraction => "catalan-contraction",
            Identity::WeightedSums => "weighted-sums",
        }
    }

    /// Smallest r the identity is stated for (for stein: at least one case).
    pub fn r_min(self) -> u32 {
        match self {
            Identity::Recurrence => 3,
            Identity::DerivativeFirst => 2,
            Identity::DerivativeSecond => 2,
            Identity::DerivativeTwoTerm => 3,
            Identity::Lassalle => 1,
            Identity::MomentConstruction => 1,
            Identity::Stein => 1,
            Identity::StepDownX => 2,
            Identity::StepDownX2 => 3,
            Identity::CatalanContraction => 2,
            Identity::WeightedSums => 1,
        }
    }

    /// Default upper end of the checked range (for stein: how many random
    /// test functions).
    pub fn default_r_max(self) -> u32 {
        match self {
            Identity::Recurrence => 60,
            Identity::DerivativeFirst => 60,
            Identity::DerivativeSecond => 60,
            Identity::DerivativeTwoTerm => 60,
            Identity::Lassalle => 30,
            Identity::MomentConstruction => 40,
            Identity::Stein => 200,
            Identity::StepDownX => 40,
            Identity::StepDownX2 => 40,
            Identity::CatalanContraction => 50,
            Identity::WeightedSums => 50,
        }
    }
}

/// Outcome of one identity over its whole range.
#[derive(Serialize)]
pub struct VerifyReport {
    identity: &'static str,
    r_range: [u32; 2],
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<FirstFailure>,
}

/// The smallest r (or case index) where the check broke, with the offending
/// residual.
#[derive(Serialize)]
pub struct FirstFailure {
    r: u32,
    residual: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn cmd_verify(
    identity: Option<Identity>,
    r_max: Option<u32>,
    seed: u64,
    inject_fault: bool,
    output: Option<&Path>,
) -> Result<(), Failure> {
    let ids: &[Identity] = match identity {
        Some(ref id) => std::slice::from_ref(id),
        None => &CATALOG,
    };
    let mut out = open_sink(output)?;
    let mut all_pass = true;
    for &id in ids {
        let report = run_identity(id, r_max, seed, inject_fault)?;
        writeln!(out, "{}", serde_json::to_string(&report).expect("string fields"))?;
        all_pass &= report.passed();
    }
    out.flush()?;
    if all_pass {
        Ok(())
    } else {
        Err(Failure::Math("identity verification failed".into()))
    }
}

/// Checks one identity for every r in `r_min ..= r_max` and reports the first
/// failure, if any.
pub fn run_identity(
    id: Identity,
    r_max: Option<u32>,
    seed: u64,
    inject_fault: bool,
) -> Result<VerifyReport, Failure> {
    let r_max = r_max.unwrap_or_else(|| id.default_r_max());
    let r_min = id.r_min();
    if r_max < r_min {
        return Err(Failure::Usage(format!(
            "--r-max {r_max} is below the smallest valid value {r_min} for {}",
            id.token()
        )));
    }
    let first_failure = match id {
        Identity::Recurrence => scan(r_min, r_max, inject_fault, |r| {
            Ok(narayana_poly_recurrence(r)? - narayana_poly_direct(r)?)
        }),
        Identity::DerivativeFirst => scan(r_min, r_max, inject_fault, |r| {
            Ok(derivative_identity_first(r)? - narayana_poly_direct(r)?.derivative())
        }),
        Identity::DerivativeSecond => scan(r_min, r_max, inject_fault, |r| {
            let second = narayana_poly_direct(r)?.derivative().derivative();
            Ok(derivative_identity_second(r)? - second)
        }),
        Identity::DerivativeTwoTerm => scan(r_min, r_max, inject_fault, |r| {
            Ok(derivative_two_term(r)? - narayana_poly_direct(r)?.derivative())
        }),
        Identity::Lassalle => {
            let needed = r_max.div_ceil(2);
            let numbers = lassalle_numbers(needed).map_err(|e| Failure::Math(e.to_string()))?;
            scan(r_min, r_max, inject_fault, |r| lassalle_residual(r, &numbers))
        }
        Identity::MomentConstruction => scan(r_min, r_max, inject_fault, |r| {
            Ok(binomial_power_expect(r)? - narayana_poly_direct(r)?)
        }),
        Identity::Stein => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            scan(r_min, r_max, inject_fault, |_case| {
                let h = random_polynomial(&mut rng, STEIN_MAX_DEGREE);
                Ok(Polynomial::monomial(stein_residual(&h), 0))
            })
        }
        Identity::StepDownX => scan(r_min, r_max, inject_fault, expectation_x_residual),
        Identity::StepDownX2 => scan(r_min, r_max, inject_fault, expectation_x2_residual),
        Identity::CatalanContraction => scan(r_min, r_max, inject_fault, |r| {
            let contracted =
                Rational::new(4 * r as i64 - 2, r as i64 + 1)? * Rational::from(catalan(r - 1)?);
            Ok(Polynomial::monomial(
                Rational::from(catalan(r)?) - contracted,
                0,
            ))
        }),
        Identity::WeightedSums => scan(r_min, r_max, inject_fault, weighted_sums_residual),
    };
    let status = if first_failure.is_none() { "pass" } else { "fail" };
    Ok(VerifyReport {
        identity: id.token(),
        r_range: [r_min, r_max],
        status,
        first_failure,
    })
}

/// Runs `residual_at` over the inclusive range and returns the first nonzero
/// residual. With `inject_fault` the first residual gets its constant
/// coefficient bumped by one — exactly the effect of a corrupted coefficient
/// on one side of the identity — so the failure path stays testable.
fn scan<F>(lo: u32, hi: u32, inject_fault: bool, mut residual_at: F) -> Option<FirstFailure>
where
    F: FnMut(u32) -> narayana::Result<Polynomial>,
{
    for r in lo..=hi {
        let residual = match residual_at(r) {
            Ok(p) => {
                if inject_fault && r == lo {
                    p + Polynomial::one()
                } else {
                    p
                }
            }
            Err(e) => {
                return Some(FirstFailure {
                    r,
                    residual: e.to_string(),
                })
            }
        };
        if !residual.is_zero() {
            return Some(FirstFailure {
                r,
                residual: format!("nonzero residual {residual}"),
            });
        }
    }
    None
}

/// Packs the three Remark-style row-sum checks into one residual polynomial:
/// coefficient 0 is the `(k-1)`-weighted sum against `(r-1)/2 C_r`,
/// coefficient 1 the `(k-1)(k-2)`-weighted sum against
/// `-(r-1) C_r + r(r-1) C_(r-1)`, coefficient 2 the row sum `N_r(1) - C_r`.
fn weighted_sums_residual(r: u32) -> narayana::Result<Polynomial> {
    let c_r = Rational::from(catalan(r)?);
    let first = Rational::from(weighted_sum_first(r)?)
        - Rational::new(r as i64 - 1, 2)? * &c_r;
    let second_closed_form = if r == 1 {
        Rational::zero()
    } else {
        let c_prev = Rational::from(catalan(r - 1)?);
        Rational::from(1 - r as i64) * &c_r + Rational::from(r as i64 * (r as i64 - 1)) * c_prev
    };
    let second = Rational::from(weighted_sum_second(r)?) - second_closed_form;
    let row_sum = narayana_poly_direct(r)?.eval(&Rational::one()) - c_r;
    Ok(Polynomial::new(vec![first, second, row_sum]))
}

/// A reproducible random polynomial with degree at most `max_degree` and
/// small rational coefficients.
fn random_polynomial(rng: &mut ChaCha8Rng, max_degree: usize) -> Polynomial {
    let degree = rng.gen_range(0..=max_degree);
    let coeffs = (0..=degree)
        .map(|_| {
            let numer = rng.gen_range(-1000i64..=1000);
            let denom = rng.gen_range(1i64..=50);
            Rational::new(numer, denom).expect("denominator is positive")
        })
        .collect();
    Polynomial::new(coeffs)
}
