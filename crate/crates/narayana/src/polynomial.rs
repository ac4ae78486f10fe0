//! Dense univariate polynomials over [`Rational`] in the indeterminate `z`.
//!
//! The coefficient vector is kept canonical: the highest-index entry is
//! nonzero, and the zero polynomial is the empty vector. Equality is
//! therefore plain structural equality. Multiplication is schoolbook
//! convolution, which is the scaling limit of this crate — fine for the
//! degrees in play here (a few thousand), not meant for more.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A polynomial in `z`, stored as ascending-degree coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros to restore canonical form.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial {
            coeffs: vec![Rational::one()],
        }
    }

    /// The monomial `c * z^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial { coeffs }
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// Ascending-degree coefficients; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial, else the index of the leading term.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Scalar multiple `c * self`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Term-by-term formal derivative.
    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Rational::from(i as i64))
            .collect();
        Polynomial::new(coeffs)
    }

    /// Exact Horner evaluation at `x`.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divides exactly by `z^k`, i.e. returns `q` with `self = z^k * q`.
    ///
    /// Fails with [`Error::NotDivisible`] if any coefficient of
    /// `z^0 .. z^(k-1)` is nonzero. When an identity constructor calls this,
    /// a failure means the identity itself is broken, so the caller must
    /// abort the check.
    pub fn div_exact_z_power(&self, k: usize) -> Result<Polynomial> {
        if k == 0 || self.is_zero() {
            return Ok(self.clone());
        }
        for (index, c) in self.coeffs.iter().take(k).enumerate() {
            if !c.is_zero() {
                return Err(Error::NotDivisible { power: k, index });
            }
        }
        Ok(Polynomial {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        })
    }

    /// `self * z^k`.
    pub fn mul_z_power(&self, k: usize) -> Polynomial {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        Polynomial { coeffs }
    }

    /// Coefficients in reverse order; a degree-(r-1) Narayana polynomial is
    /// its own reversal (palindromic).
    pub fn reversed(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    /// Full schoolbook convolution, no truncation.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }

        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = Polynomial::from_int_coeffs(&[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p.degree(), Some(1));
        assert!(Polynomial::from_int_coeffs(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn add_cancels_to_zero() {
        let p = Polynomial::from_int_coeffs(&[1, 1]);
        let q = Polynomial::from_int_coeffs(&[-1, -1]);
        assert!((&p + &q).is_zero());
    }

    #[test]
    fn binomial_square() {
        let p = Polynomial::from_int_coeffs(&[1, 1]);
        assert_eq!(&p * &p, Polynomial::from_int_coeffs(&[1, 2, 1]));
    }

    #[test]
    fn scale_halves() {
        let p = Polynomial::from_int_coeffs(&[2, 4]);
        let half = Rational::new(1, 2).unwrap();
        assert_eq!(p.scale(&half), Polynomial::from_int_coeffs(&[1, 2]));
    }

    #[test]
    fn derivative_examples() {
        let p = Polynomial::from_int_coeffs(&[1, 3, 1]);
        assert_eq!(p.derivative(), Polynomial::from_int_coeffs(&[3, 2]));
        assert!(Polynomial::from_int_coeffs(&[5]).derivative().is_zero());
        // N_4 = 1 + 6z + 6z^2 + z^3, term rule gives 6 + 12z + 3z^2
        let n4 = Polynomial::from_int_coeffs(&[1, 6, 6, 1]);
        assert_eq!(n4.derivative(), Polynomial::from_int_coeffs(&[6, 12, 3]));
    }

    #[test]
    fn eval_examples() {
        let p = Polynomial::from_int_coeffs(&[1, 3, 1]);
        assert_eq!(p.eval(&Rational::one()), Rational::from(5));
        assert_eq!(p.eval(&Rational::zero()), Rational::from(1));
        let n4 = Polynomial::from_int_coeffs(&[1, 6, 6, 1]);
        assert_eq!(n4.eval(&Rational::from(2)), Rational::from(45));
    }

    #[test]
    fn exact_division_by_z_power() {
        let p = Polynomial::from_int_coeffs(&[0, 2, 4]);
        assert_eq!(
            p.div_exact_z_power(1).unwrap(),
            Polynomial::from_int_coeffs(&[2, 4])
        );
        assert_eq!(p.div_exact_z_power(0).unwrap(), p);
        assert!(Polynomial::zero().div_exact_z_power(3).unwrap().is_zero());

        let q = Polynomial::from_int_coeffs(&[1, 1]);
        assert_eq!(
            q.div_exact_z_power(1),
            Err(Error::NotDivisible { power: 1, index: 0 })
        );
    }

    #[test]
    fn display_is_readable() {
        let p = Polynomial::from_int_coeffs(&[1, 0, -2]);
        assert_eq!(p.to_string(), "1 + (-2)*z^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }
}
