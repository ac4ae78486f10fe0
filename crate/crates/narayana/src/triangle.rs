//! The Narayana triangle and the integer sequences attached to it.
//!
//! The Narayana number is `N(r,k) = binom(r,k-1) * binom(r,k) / r` for
//! `1 <= k <= r`; row `r` of the triangle generates the Narayana polynomial
//! `N_r(z) = sum_k N(r,k) z^(k-1)`, a palindromic polynomial of degree `r-1`.
//! The row at `z = 1` sums to the Catalan number `C_r`, and `z = 2` is tied
//! to the large Schroeder numbers.
//!
//! The `1/r` division always cancels, but that is a theorem rather than an
//! implementation assumption, so every entry is produced by an integer
//! division with a zero-remainder assertion. Rows and Catalan values are
//! memoized per session in write-once tables behind a mutex.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

/// `binom(n, k)` as a big integer, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn entry(r: u32, k: u32) -> BigInt {
    let prod = binomial(r as u64, k as u64 - 1) * binomial(r as u64, k as u64);
    let (q, rem) = prod.div_rem(&BigInt::from(r));
    assert!(rem.is_zero(), "N({r},{k}) is not integral");
    q
}

/// The Narayana number `N(r,k)`; zero for `k` outside `[1, r]`.
pub fn narayana_number(r: u32, k: i64) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::OutOfDomain {
            op: "narayana_number",
            min: 1,
            got: r,
        });
    }
    if k < 1 || k > r as i64 {
        return Ok(BigInt::zero());
    }
    Ok(entry(r, k as u32))
}

/// Row `r` of the Narayana triangle: `N(r,1) .. N(r,r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NarayanaRow {
    r: u32,
    entries: Arc<[BigInt]>,
}

impl NarayanaRow {
    /// Computes the row from the definition, bypassing the session cache.
    ///
    /// The two binomials are walked incrementally along the row (each step is
    /// an exact integer multiply/divide), and every entry still goes through
    /// the divide-by-`r` zero-remainder assertion.
    pub fn compute(r: u32) -> Result<Self> {
        if r < 1 {
            return Err(Error::OutOfDomain {
                op: "narayana_row",
                min: 1,
                got: r,
            });
        }
        let rb = BigInt::from(r);
        let mut entries = Vec::with_capacity(r as usize);
        // left = binom(r, k-1), right = binom(r, k), starting at k = 1
        let mut left = BigInt::one();
        let mut right = rb.clone();
        for k in 1..=r as u64 {
            let (q, rem) = (&left * &right).div_rem(&rb);
            assert!(rem.is_zero(), "N({r},{k}) is not integral");
            entries.push(q);
            if k < r as u64 {
                // binom(r, k) -> binom(r, k+1)
                left = right.clone();
                right = right * BigInt::from(r as u64 - k) / BigInt::from(k + 1);
            }
        }
        Ok(NarayanaRow {
            r,
            entries: entries.into(),
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The entries `N(r,1) .. N(r,r)`.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// The generating polynomial `sum_k N(r,k) z^(k-1)` of this row.
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::new(self.entries.iter().map(Rational::from).collect())
    }
}

fn row_cache() -> &'static Mutex<HashMap<u32, Arc<[BigInt]>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<[BigInt]>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Row `r` of the triangle, memoized per session.
pub fn narayana_row(r: u32) -> Result<NarayanaRow> {
    if r < 1 {
        return Err(Error::OutOfDomain {
            op: "narayana_row",
            min: 1,
            got: r,
        });
    }
    let mut cache = row_cache().lock().unwrap();
    let entries = match cache.get(&r) {
        Some(entries) => Arc::clone(entries),
        None => {
            let entries = NarayanaRow::compute(r)?.entries;
            cache.insert(r, Arc::clone(&entries));
            entries
        }
    };
    Ok(NarayanaRow { r, entries })
}

/// The Narayana polynomial `N_r(z)` built directly from row `r`.
pub fn narayana_poly_direct(r: u32) -> Result<Polynomial> {
    Ok(narayana_row(r)?.to_polynomial())
}

fn catalan_cache() -> &'static Mutex<HashMap<u32, BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The Catalan number `C_n = binom(2n,n) / (n+1)`, memoized per session.
///
/// `C_n` also equals `N_n(1)`, which the verification suite checks.
pub fn catalan(n: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::OutOfDomain {
            op: "catalan",
            min: 1,
            got: n,
        });
    }
    let mut cache = catalan_cache().lock().unwrap();
    if let Some(c) = cache.get(&n) {
        return Ok(c.clone());
    }
    let (q, rem) = binomial(2 * n as u64, n as u64).div_rem(&BigInt::from(n + 1));
    assert!(rem.is_zero(), "C({n}) is not integral");
    cache.insert(n, q.clone());
    Ok(q)
}

/// `(1/2) * N_r(2)`, exactly as a rational.
///
/// These are half-integers 1/2, 3/2, 11/2, 45/2, ...; the classical large
/// Schroeder numbers 2, 6, 22, 90, ... are four times these values.
pub fn schroder_half_eval(r: u32) -> Result<Rational> {
    let value = narayana_poly_direct(r)?.eval(&Rational::from(2));
    Ok(value * Rational::new(1, 2).expect("2 != 0"))
}

/// `sum_k (k-1) N(r,k)`, by direct summation over row `r`.
///
/// Equals `(r-1)/2 * C_r`; the verification suite checks that contract.
pub fn weighted_sum_first(r: u32) -> Result<BigInt> {
    let row = narayana_row(r)?;
    let mut acc = BigInt::zero();
    for (i, e) in row.entries().iter().enumerate() {
        acc += BigInt::from(i) * e;
    }
    Ok(acc)
}

/// `sum_k (k-1)(k-2) N(r,k)`, by direct summation over row `r`.
///
/// Equals `-(r-1) C_r + r(r-1) C_(r-1)`.
pub fn weighted_sum_second(r: u32) -> Result<BigInt> {
    let row = narayana_row(r)?;
    let mut acc = BigInt::zero();
    for (i, e) in row.entries().iter().enumerate() {
        if i >= 2 {
            acc += BigInt::from(i * (i - 1)) * e;
        }
    }
    Ok(acc)
}
