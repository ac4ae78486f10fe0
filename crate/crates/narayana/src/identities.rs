//! Recurrence and derivative identities for the Narayana polynomials.
//!
//! Three constructors rebuild `N_r` or its derivatives from lower rows
//! instead of from the triangle:
//!
//! * the three-term recurrence
//!   `N_r = (2r-1)/(r+1) (1+z) N_(r-1) - (r-2)/(r+1) (1-z)^2 N_(r-2)`,
//! * the first-derivative identity
//!   `N'_r = (r-1)/(2z) N_r + (r-1)(z-1)/(2z) N_(r-1)`,
//! * the second-derivative identity
//!   `N''_r = -(r-1)/z^2 N_r + ((r-1)^2/z + (r-1)/z^2) N_(r-1)`,
//!
//! plus the two-term derivative recurrence that combines the first two, and
//! Lassalle's alternating recurrence relating `(z+1) N_r - N_(r+1)` to the
//! sequence `A_n`. The `1/z` and `1/z^2` factors are rational-function
//! denominators on paper; here each identity is restated over the polynomial
//! ring by clearing denominators and dividing exactly, so a broken identity
//! surfaces as a hard [`Error::NotDivisible`] instead of a silent
//! rational-function artifact.
//!
//! Each constructor's output must agree exactly with the formal derivative
//! (or the direct row construction); the residual helpers and the test suite
//! check that over the documented ranges.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::triangle::{binomial, catalan, narayana_poly_direct};

fn out_of_domain(op: &'static str, min: u32, got: u32) -> Error {
    Error::OutOfDomain { op, min, got }
}

/// Streams `N_1, N_2, N_3, ...` by the three-term recurrence, seeded with
/// the direct `N_1`, `N_2` and keeping only a two-row window, so producing
/// each next row costs one recurrence step instead of a full restart.
///
/// The iterator never ends; take as many rows as needed.
#[derive(Clone, Debug)]
pub struct RecurrencePolynomials {
    /// Row index of the polynomial `next` will yield.
    r: i64,
    /// `N_(r-2)` and `N_(r-1)`, once both exist.
    window: (Option<Polynomial>, Option<Polynomial>),
}

impl RecurrencePolynomials {
    pub fn new() -> Self {
        RecurrencePolynomials {
            r: 1,
            window: (None, None),
        }
    }
}

impl Default for RecurrencePolynomials {
    fn default() -> Self {
        RecurrencePolynomials::new()
    }
}

impl Iterator for RecurrencePolynomials {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        let row = match self.r {
            1 | 2 => narayana_poly_direct(self.r as u32).expect("rows 1 and 2 exist"),
            i => {
                let a = Rational::new(2 * i - 1, i + 1).expect("i + 1 > 0");
                let b = Rational::new(i - 2, i + 1).expect("i + 1 > 0");
                let one_plus_z = Polynomial::from_int_coeffs(&[1, 1]);
                let one_minus_z_sq = Polynomial::from_int_coeffs(&[1, -2, 1]);
                let (prev, cur) = (&self.window.0, &self.window.1);
                let cur = cur.as_ref().expect("window filled after two steps");
                let prev = prev.as_ref().expect("window filled after two steps");
                (&one_plus_z * cur).scale(&a) - (&one_minus_z_sq * prev).scale(&b)
            }
        };
        self.r += 1;
        self.window = (self.window.1.take(), Some(row.clone()));
        Some(row)
    }
}

/// `N_r(z)` by the three-term recurrence, seeded with the direct `N_1`, `N_2`.
///
/// Must equal [`narayana_poly_direct`] for every `r`.
pub fn narayana_poly_recurrence(r: u32) -> Result<Polynomial> {
    if r < 1 {
        return Err(out_of_domain("narayana_poly_recurrence", 1, r));
    }
    Ok(RecurrencePolynomials::new()
        .nth(r as usize - 1)
        .expect("the recurrence stream never ends"))
}

/// `N'_r(z)` from the first-derivative identity.
///
/// Clears the `2z` denominator: computes `(r-1) (N_r + (z-1) N_(r-1))`,
/// divides exactly by `z`, and halves. A [`Error::NotDivisible`] would
/// falsify the identity.
pub fn derivative_identity_first(r: u32) -> Result<Polynomial> {
    if r < 2 {
        return Err(out_of_domain("derivative_identity_first", 2, r));
    }
    let n_r = narayana_poly_direct(r)?;
    let n_prev = narayana_poly_direct(r - 1)?;
    let z_minus_one = Polynomial::from_int_coeffs(&[-1, 1]);
    let numerator = (n_r + z_minus_one * n_prev).scale(&Rational::from(r as i64 - 1));
    Ok(numerator.div_exact_z_power(1)?.scale(&Rational::new(1, 2)?))
}

/// `N''_r(z)` from the second-derivative identity.
///
/// Clears the `z^2` denominators: computes
/// `-(r-1) N_r + ((r-1)^2 z + (r-1)) N_(r-1)` and divides exactly by `z^2`.
pub fn derivative_identity_second(r: u32) -> Result<Polynomial> {
    if r < 2 {
        return Err(out_of_domain("derivative_identity_second", 2, r));
    }
    let rm1 = r as i64 - 1;
    let n_r = narayana_poly_direct(r)?;
    let n_prev = narayana_poly_direct(r - 1)?;
    let linear = Polynomial::from_int_coeffs(&[rm1, rm1 * rm1]);
    let numerator = linear * n_prev - n_r.scale(&Rational::from(rm1));
    numerator.div_exact_z_power(2)
}

/// `N'_r(z)` from the two-term recurrence
/// `N'_r = (r-1)/(2r+2) (r-2+3rz)/z N_(r-1) - (r-1)(r-2)/(2r+2) (1-z)^2/z N_(r-2)`,
/// which reaches back two rows instead of using `N_r` itself.
pub fn derivative_two_term(r: u32) -> Result<Polynomial> {
    if r < 3 {
        return Err(out_of_domain("derivative_two_term", 3, r));
    }
    let (rr, rm1, rm2) = (r as i64, r as i64 - 1, r as i64 - 2);
    let n_prev = narayana_poly_direct(r - 1)?;
    let n_prev2 = narayana_poly_direct(r - 2)?;
    let linear = Polynomial::from_int_coeffs(&[rm2, 3 * rr]).scale(&Rational::from(rm1));
    let square = Polynomial::from_int_coeffs(&[1, -2, 1]).scale(&Rational::from(rm1 * rm2));
    let numerator = linear * n_prev - square * n_prev2;
    Ok(numerator
        .div_exact_z_power(1)?
        .scale(&Rational::new(1, 2 * rr + 2)?))
}

/// The Lassalle numbers `A_1 .. A_n`, from the alternating recurrence
/// `(-1)^(n-1) A_n = C_n + sum_(j=1)^(n-1) (-1)^j binom(2n-1,2j-1) A_j C_(n-j)`
/// with `A_1 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LassalleSequence {
    values: Vec<BigInt>,
}

impl LassalleSequence {
    /// `A_1 .. A_n` (1, 1, 5, 56, 1092, ...).
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `A_n`, 1-based.
    pub fn get(&self, n: usize) -> Option<&BigInt> {
        n.checked_sub(1).and_then(|i| self.values.get(i))
    }
}

/// Computes `A_1 .. A_(n_max)` by the recurrence.
pub fn lassalle_numbers(n_max: u32) -> Result<LassalleSequence> {
    if n_max < 1 {
        return Err(out_of_domain("lassalle_numbers", 1, n_max));
    }
    let mut values = vec![BigInt::one()];
    for n in 2..=n_max as u64 {
        let mut sum = catalan(n as u32)?;
        for j in 1..n {
            let term = binomial(2 * n - 1, 2 * j - 1)
                * &values[j as usize - 1]
                * catalan((n - j) as u32)?;
            if j % 2 == 1 {
                sum -= term;
            } else {
                sum += term;
            }
        }
        // A_n = (-1)^(n-1) * sum
        values.push(if n % 2 == 1 { sum } else { -sum });
    }
    Ok(LassalleSequence { values })
}

/// Exact residual of Lassalle's recurrence at row `r`:
/// `(z+1) N_r - N_(r+1) - sum_(n>=1) (-z)^n binom(r-1,2n-1) A_n N_(r-2n+1)`.
///
/// The sum truncates where `2n-1 > r-1` makes the binomial vanish, i.e. after
/// `floor(r/2)` terms; `a` must supply at least `ceil(r/2)` values. The
/// residual is the zero polynomial exactly when the recurrence holds.
pub fn lassalle_residual(r: u32, a: &LassalleSequence) -> Result<Polynomial> {
    if r < 1 {
        return Err(out_of_domain("lassalle_residual", 1, r));
    }
    let needed = (r as usize).div_ceil(2);
    if a.len() < needed {
        return Err(Error::InsufficientLassalle {
            needed,
            have: a.len(),
        });
    }
    let z_plus_one = Polynomial::from_int_coeffs(&[1, 1]);
    let mut residual = z_plus_one * narayana_poly_direct(r)? - narayana_poly_direct(r + 1)?;
    for n in 1..=(r as usize / 2) {
        let a_n = a.get(n).expect("length checked above");
        let coeff = binomial(r as u64 - 1, 2 * n as u64 - 1) * a_n;
        let signed = if n % 2 == 1 { -coeff } else { coeff };
        let term = narayana_poly_direct(r - 2 * n as u32 + 1)?
            .mul_z_power(n)
            .scale(&Rational::from(signed));
        residual = residual - term;
    }
    Ok(residual)
}
