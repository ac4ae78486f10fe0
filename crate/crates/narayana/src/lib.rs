//! Exact-arithmetic construction and verification of Narayana polynomials.
//!
//! The Narayana polynomial `N_r(z) = sum_(k=1)^r N(r,k) z^(k-1)` is built
//! here by three independent routes:
//!
//! 1. directly from the triangle `N(r,k) = binom(r,k-1) binom(r,k) / r`
//!    ([`triangle::narayana_poly_direct`]),
//! 2. by the three-term recurrence
//!    ([`identities::narayana_poly_recurrence`]),
//! 3. as the formal expectation `E[(1 + z + 2 sqrt(z) X)^(r-1)]` against the
//!    semicircular law ([`semicircle::binomial_power_expect`]).
//!
//! Everything runs over exact big rationals, so "two constructions agree"
//! means coefficient-wise equality, not closeness. The same machinery
//! produces exact residuals for the derivative identities, Lassalle's
//! recurrence, the Catalan/weighted-sum specializations at `z = 1`, the
//! Stein-type integration-by-parts identity of the semicircular law, and the
//! two expectation step-down relations — a residual is the zero polynomial
//! (or zero rational) precisely when the identity holds.
//!
//! All values are immutable after construction and all operations are pure;
//! the session caches for triangle rows and Catalan numbers are write-once
//! tables behind a mutex, safe for concurrent use.

pub mod error;
pub mod identities;
pub mod polynomial;
pub mod rational;
pub mod semicircle;
pub mod triangle;

pub use error::{Error, Result};
pub use identities::{
    derivative_identity_first, derivative_identity_second, derivative_two_term,
    lassalle_numbers, lassalle_residual, narayana_poly_recurrence, LassalleSequence,
    RecurrencePolynomials,
};
pub use polynomial::Polynomial;
pub use rational::Rational;
pub use semicircle::{
    binomial_power_expect, expectation_x2_residual, expectation_x_residual, moment,
    stein_residual, HalfPowerBivariate, MomentTable,
};
pub use triangle::{
    binomial, catalan, narayana_number, narayana_poly_direct, narayana_row, schroder_half_eval,
    weighted_sum_first, weighted_sum_second, NarayanaRow,
};
