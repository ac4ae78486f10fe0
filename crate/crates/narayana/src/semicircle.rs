//! Formal expectation engine for the semicircular law on `[-1, 1]`.
//!
//! Let `X` have density `(2/pi) sqrt(1-x^2)`. Its moments are exact
//! rationals: odd moments vanish and `E[X^(2n)] = C_n / 4^n`. Treating the
//! expectation as the linear functional defined by those moments makes
//! `E[(1+z+2 sqrt(z) X)^(r-1)]` a purely symbolic computation, and its value
//! is exactly the Narayana polynomial `N_r(z)` — an independent third
//! construction next to the triangle and the three-term recurrence.
//!
//! `sqrt(z)` is never a numeric square root here: it is a first-class formal
//! variable `u` with `z = u^2`. After applying the expectation, every
//! surviving power of `u` must be even (odd `u`-powers only ever pair with
//! odd `X`-powers, whose moments vanish); that is asserted, not assumed, and
//! a violation is [`Error::OddHalfPower`].
//!
//! The same moment functional verifies the Stein-type identity
//! `E[h(X) X] = (1/3) E[h'(X) (1-X^2)]` exactly on polynomial `h`, and the
//! two step-down relations for `E[(...)^m X]` and `E[(...)^m X^2]` that power
//! the recurrence proofs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;
use crate::triangle::{catalan, narayana_poly_direct};

/// `E[X^n]` for the semicircular law: `0` for odd `n`, `C_(n/2) / 4^(n/2)`
/// for even `n`.
pub fn moment(n: u32) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    if n == 0 {
        return Rational::one();
    }
    let half = n / 2;
    let c = catalan(half).expect("half >= 1");
    Rational::new(c, BigInt::one() << (n as usize))
        .expect("power of two is nonzero")
}

/// Moments `E[X^0] .. E[X^n]`, precomputed once and then shared read-only.
#[derive(Clone, Debug)]
pub struct MomentTable {
    moments: Vec<Rational>,
}

impl MomentTable {
    pub fn up_to(n_max: u32) -> Self {
        MomentTable {
            moments: (0..=n_max).map(moment).collect(),
        }
    }

    /// `E[X^n]`; panics if the table was built too small.
    pub fn get(&self, n: u32) -> &Rational {
        &self.moments[n as usize]
    }

    pub fn len(&self) -> usize {
        self.moments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moments.is_empty()
    }
}

/// An exact bivariate expansion `sum c_(i,j) u^i X^j` with `u = sqrt(z)` —
/// the pre-expectation form of expressions like `(1 + u^2 + 2uX)^m`.
///
/// Canonical form stores no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPowerBivariate {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl HalfPowerBivariate {
    pub fn zero() -> Self {
        HalfPowerBivariate {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        HalfPowerBivariate::term(Rational::one(), 0, 0)
    }

    /// The single term `c * u^u_pow * X^x_pow`.
    pub fn term(c: Rational, u_pow: u32, x_pow: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((u_pow, x_pow), c);
        }
        HalfPowerBivariate { terms }
    }

    /// `1 + u^2 + 2uX`, the base whose powers have Narayana expectations.
    pub fn narayana_base() -> Self {
        let mut base = HalfPowerBivariate::zero();
        base.add_term((0, 0), Rational::one());
        base.add_term((2, 0), Rational::one());
        base.add_term((1, 1), Rational::from(2));
        base
    }

    /// Terms as `((u_pow, x_pow), coefficient)` in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&key);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&key, c) in &rhs.terms {
            out.add_term(key, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return HalfPowerBivariate::zero();
        }
        HalfPowerBivariate {
            terms: self
                .terms
                .iter()
                .map(|(&key, v)| (key, v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = HalfPowerBivariate::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }

    /// `self^m` by repeated multiplication, canonicalizing at every step.
    pub fn pow(&self, m: u32) -> Self {
        let mut out = HalfPowerBivariate::one();
        for _ in 0..m {
            out = out.mul(self);
        }
        out
    }

    /// Applies the expectation functional: replaces each `X^j` by `E[X^j]`,
    /// collects powers of `u`, asserts every surviving `u`-power is even, and
    /// substitutes `z = u^2`.
    ///
    /// An odd surviving `u`-power means the input was not an expression the
    /// moment functional can turn into a polynomial in `z`; the caller gets
    /// [`Error::OddHalfPower`] and must abort.
    pub fn expect(&self) -> Result<Polynomial> {
        let max_x = self.terms.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let table = MomentTable::up_to(max_x);
        let mut by_u_power: BTreeMap<u32, Rational> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let m = table.get(j);
            if m.is_zero() {
                continue;
            }
            let contribution = c * m;
            match by_u_power.get_mut(&i) {
                Some(acc) => *acc = &*acc + &contribution,
                None => {
                    by_u_power.insert(i, contribution);
                }
            }
        }
        by_u_power.retain(|_, v| !v.is_zero());
        if let Some((&power, _)) = by_u_power.iter().find(|&(&i, _)| i % 2 == 1) {
            return Err(Error::OddHalfPower { power });
        }
        let degree = by_u_power.keys().next_back().map_or(0, |&i| i as usize / 2);
        let mut coeffs = vec![Rational::zero(); degree + 1];
        for (i, c) in by_u_power {
            coeffs[i as usize / 2] = c;
        }
        Ok(Polynomial::new(coeffs))
    }
}

/// `N_r(z)` as the exact expectation `E[(1 + z + 2 sqrt(z) X)^(r-1)]`.
///
/// Must equal [`narayana_poly_direct`] for every `r`.
pub fn binomial_power_expect(r: u32) -> Result<Polynomial> {
    if r < 1 {
        return Err(Error::OutOfDomain {
            op: "binomial_power_expect",
            min: 1,
            got: r,
        });
    }
    HalfPowerBivariate::narayana_base().pow(r - 1).expect()
}

/// Exact residual of the Stein-type identity
/// `E[h(X) X] - (1/3) E[h'(X) (1 - X^2)]` for a polynomial test function `h`
/// (read as a function of `x`). Zero for every polynomial.
pub fn stein_residual(h: &Polynomial) -> Rational {
    let degree = h.coeffs().len(); // h*x and h' need moments up to degree+1
    let table = MomentTable::up_to(degree as u32 + 1);
    let mut lhs = Rational::zero();
    for (j, c) in h.coeffs().iter().enumerate() {
        lhs = lhs + c * table.get(j as u32 + 1);
    }
    let mut rhs = Rational::zero();
    for (j, c) in h.derivative().coeffs().iter().enumerate() {
        let weight = table.get(j as u32) - table.get(j as u32 + 2);
        rhs = rhs + c * &weight;
    }
    lhs - rhs * Rational::new(1, 3).expect("3 != 0")
}

/// Exact residual of the first step-down relation
/// `N_r - (1+z) N_(r-1) = E-image of 2uX (1 + u^2 + 2uX)^(r-2)`.
pub fn expectation_x_residual(r: u32) -> Result<Polynomial> {
    if r < 2 {
        return Err(Error::OutOfDomain {
            op: "expectation_x_residual",
            min: 2,
            got: r,
        });
    }
    let image = HalfPowerBivariate::narayana_base()
        .pow(r - 2)
        .mul(&HalfPowerBivariate::term(Rational::from(2), 1, 1))
        .expect()?;
    let one_plus_z = Polynomial::from_int_coeffs(&[1, 1]);
    Ok(narayana_poly_direct(r)? - one_plus_z * narayana_poly_direct(r - 1)? - image)
}

/// Exact residual of the second step-down relation
/// `z * E-image of X^2 (1+u^2+2uX)^(r-3)
///    = -3/(4(r-2)) (N_r - (1+z) N_(r-1)) + z N_(r-2)`.
pub fn expectation_x2_residual(r: u32) -> Result<Polynomial> {
    if r < 3 {
        return Err(Error::OutOfDomain {
            op: "expectation_x2_residual",
            min: 3,
            got: r,
        });
    }
    let image = HalfPowerBivariate::narayana_base()
        .pow(r - 3)
        .mul(&HalfPowerBivariate::term(Rational::one(), 0, 2))
        .expect()?;
    let lhs = image.mul_z_power(1);
    let one_plus_z = Polynomial::from_int_coeffs(&[1, 1]);
    let gap = narayana_poly_direct(r)? - one_plus_z * narayana_poly_direct(r - 1)?;
    let rhs = gap.scale(&Rational::new(-3, 4 * (r as i64 - 2))?)
        + narayana_poly_direct(r - 2)?.mul_z_power(1);
    Ok(lhs - rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn small_moments() {
        assert_eq!(moment(0), Rational::one());
        assert_eq!(moment(1), Rational::zero());
        assert_eq!(moment(2), rat(1, 4));
        assert_eq!(moment(3), Rational::zero());
        assert_eq!(moment(4), rat(1, 8));
        assert_eq!(moment(6), rat(5, 64));
    }

    #[test]
    fn expect_kills_odd_x_powers() {
        let x = HalfPowerBivariate::term(Rational::one(), 0, 1);
        assert!(x.expect().unwrap().is_zero());
    }

    #[test]
    fn expect_of_base_is_one_plus_z() {
        let base = HalfPowerBivariate::narayana_base();
        assert_eq!(
            base.expect().unwrap(),
            Polynomial::from_int_coeffs(&[1, 1])
        );
    }

    #[test]
    fn expect_of_base_squared_is_third_narayana() {
        let base = HalfPowerBivariate::narayana_base();
        assert_eq!(
            base.pow(2).expect().unwrap(),
            Polynomial::from_int_coeffs(&[1, 3, 1])
        );
    }

    #[test]
    fn odd_half_power_is_rejected() {
        // u * X^2 has expectation u/4, which is not a polynomial in z = u^2
        let e = HalfPowerBivariate::term(Rational::one(), 1, 2);
        assert_eq!(e.expect(), Err(Error::OddHalfPower { power: 1 }));
    }

    #[test]
    fn binomial_power_expect_examples() {
        assert_eq!(binomial_power_expect(1).unwrap(), Polynomial::one());
        assert_eq!(
            binomial_power_expect(3).unwrap(),
            Polynomial::from_int_coeffs(&[1, 3, 1])
        );
        assert_eq!(
            binomial_power_expect(7).unwrap(),
            Polynomial::from_int_coeffs(&[1, 21, 105, 175, 105, 21, 1])
        );
        assert!(binomial_power_expect(0).is_err());
    }

    #[test]
    fn stein_residual_on_simple_test_functions() {
        assert!(stein_residual(&Polynomial::one()).is_zero());
        assert!(stein_residual(&Polynomial::from_int_coeffs(&[0, 1])).is_zero());
        assert!(stein_residual(&Polynomial::from_int_coeffs(&[0, 0, 1])).is_zero());
        assert!(stein_residual(&Polynomial::zero()).is_zero());
    }

    #[test]
    fn step_down_residuals_vanish() {
        for r in [2u32, 3, 10] {
            assert!(expectation_x_residual(r).unwrap().is_zero(), "X step r={r}");
        }
        for r in [3u32, 4, 20] {
            assert!(
                expectation_x2_residual(r).unwrap().is_zero(),
                "X^2 step r={r}"
            );
        }
        assert!(expectation_x_residual(1).is_err());
        assert!(expectation_x2_residual(2).is_err());
    }
}
