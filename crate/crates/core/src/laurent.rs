//! Sparse one-variable Laurent polynomials with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::BigInt;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exponent: i64, coeff: BigInt) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(0)
    }

    /// The polynomial obtained by substituting `q -> 1/q`.
    pub fn invert_variable(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (-e, c.clone())))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c * factor)))
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (e, true) => write!(f, "q^{e}")?,
                (e, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// `P_r = r q^r + (r-2) q^{r-2} + ... + (-r) q^{-r}`; `P_0` is zero.
pub fn p_poly(r: i64) -> Result<LaurentPolynomial> {
    if r < 0 {
        return Err(Error::domain(format!("P_r needs r >= 0, got {r}")));
    }
    Ok(LaurentPolynomial::from_terms(
        (0..=r).map(|i| r - 2 * i).map(|e| (e, BigInt::from(e))),
    ))
}

pub fn lp_mul(p1: &LaurentPolynomial, p2: &LaurentPolynomial) -> LaurentPolynomial {
    p1 * p2
}

pub fn constant_term(p: &LaurentPolynomial) -> BigInt {
    p.constant_term()
}
