//! Exact integer and rational arithmetic plus the elementary counts every
//! other module builds on: binomials, Catalan numbers, two-row standard Young
//! tableaux and the base-point weights attached to pencils.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Binomial coefficient for any integer `n` and `k`.
///
/// Negative `n` uses the usual extension `(-1)^k * C(k - n - 1, k)`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let magnitude = binomial(k - n - 1, k);
        return if k % 2 == 0 { magnitude } else { -magnitude };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point.
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Converts an exact rational to an integer, failing loudly when the value
/// has a nontrivial denominator.
pub fn to_integer(value: &BigRational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::internal(format!(
            "{what} is not an integer: {value}"
        )))
    }
}

pub fn rational(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> BigRational {
    BigRational::new(numer.into(), denom.into())
}

pub fn catalan(n: i64) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::domain(format!(
            "Catalan index must be >= 0, got {n}"
        )));
    }
    let value = BigRational::new(binomial(2 * n, n), BigInt::from(n + 1));
    to_integer(&value, "Catalan number")
}

/// Number of standard Young tableaux of two-row shape `(a, b)`, which is also
/// the coefficient of `sigma_{a,b}` in `sigma_1^{a+b}`.
///
/// Shapes outside `a >= b >= 0` are empty and count zero.
pub fn syt_count(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b {
        return BigInt::zero();
    }
    let numer = binomial(a + b, a) * BigInt::from(a - b + 1);
    let (quot, rem) = numer.div_rem(&BigInt::from(a + 1));
    debug_assert!(rem.is_zero());
    quot
}

/// Per-point `(total vanishing, base-point order)` pairs of a pencil.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    pairs: Vec<(i64, i64)>,
}

impl WeightVector {
    pub fn new(pairs: Vec<(i64, i64)>) -> Result<Self> {
        for &(d, k) in &pairs {
            if k < 0 {
                return Err(Error::domain(format!(
                    "base-point order must be >= 0, got {k}"
                )));
            }
            if d - 2 * k < 1 {
                return Err(Error::domain(format!(
                    "vanishing ({k}, {}) is not a valid sequence for total vanishing {d}",
                    d - k
                )));
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> &[(i64, i64)] {
        &self.pairs
    }
}

/// Multiplicity of a pencil with the given base-point orders: the product of
/// `c_{d_i - k_i - 1, k_i}`.
pub fn weight(w: &WeightVector) -> BigInt {
    w.pairs
        .iter()
        .map(|&(d, k)| syt_count(d - k - 1, k))
        .fold(BigInt::one(), |acc, c| acc * c)
}

pub(crate) fn is_nonnegative(value: &BigInt) -> bool {
    !value.is_negative()
}
