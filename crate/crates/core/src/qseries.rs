//! Truncated power series in `q` with exact rational coefficients.
//!
//! The roots `alpha, beta` of `z^2 - z + q` never appear explicitly: every
//! symmetric expression in them is a series in `q` through `alpha + beta = 1`
//! and `alpha * beta = q`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{rational, to_integer, BigInt, BigRational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(value: BigRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// Builds a series from leading coefficients, padding with zeros or
    /// dropping terms above `order`.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = BigRational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn integer_coeff(&self, n: usize) -> Result<BigInt> {
        to_integer(&self.coeffs[n], "series coefficient")
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Highest exponent with a nonzero coefficient, `None` for the zero series.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        Self::from_coeffs(
            (0..=order).map(|i| &self.coeffs[i] + &other.coeffs[i]),
            order,
        )
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        Self::from_coeffs(
            (0..=order).map(|i| &self.coeffs[i] - &other.coeffs[i]),
            order,
        )
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.common_order(other);
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::domain(
                "series with zero constant term is not invertible",
            ));
        }
        let inv0 = c0.recip();
        let mut out = Self::zero(self.order());
        out.coeffs[0] = inv0.clone();
        for n in 1..=self.order() {
            let acc: BigRational = (1..=n).map(|i| &self.coeffs[i] * &out.coeffs[n - i]).sum();
            out.coeffs[n] = -acc * &inv0;
        }
        Ok(out)
    }

    /// Multiplication by `q^k`, dropping whatever falls above the order.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for i in 0..=order.saturating_sub(k) {
            if i + k <= order {
                out.coeffs[i + k] = self.coeffs[i].clone();
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `(1 - 4q)^{1/2}` from the binomial series with exponent one half.
pub fn sqrt_one_minus_4q(order: usize) -> TruncatedSeries {
    let half = rational(1, 2);
    let minus_four = BigRational::from_integer(BigInt::from(-4));
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for n in 1..=order {
        let n_rat = BigRational::from_integer(BigInt::from(n));
        term = term * (&half - (&n_rat - BigRational::one())) / &n_rat * &minus_four;
        coeffs.push(term.clone());
    }
    let series = TruncatedSeries::from_coeffs(coeffs, order);
    assert!(
        series.is_integral(),
        "(1-4q)^(1/2) has integer coefficients"
    );
    series
}

/// `(1 - 4q)^{3/2}`.
pub fn power_3_2(order: usize) -> TruncatedSeries {
    let linear = TruncatedSeries::from_integers(&[1, -4], order);
    linear.mul(&sqrt_one_minus_4q(order))
}

/// Two-variable Schur polynomials `s_j(alpha, beta)` as series in `q`,
/// tabulated once for `j = 0..=max_j`.
#[derive(Debug, Clone)]
pub struct SchurTable {
    order: usize,
    rows: Vec<TruncatedSeries>,
}

impl SchurTable {
    pub fn new(max_j: usize, order: usize) -> Self {
        let mut rows: Vec<TruncatedSeries> = Vec::with_capacity(max_j + 1);
        for j in 0..=max_j {
            let next = match j {
                0 | 1 => TruncatedSeries::one(order),
                _ => rows[j - 1].sub(&rows[j - 2].shift(1)),
            };
            rows.push(next);
        }
        Self { order, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `s_j`, with `s_{-1} = 0`.
    pub fn get(&self, j: i64) -> TruncatedSeries {
        if j < 0 {
            return TruncatedSeries::zero(self.order);
        }
        self.rows[j as usize].clone()
    }

    /// `sum_{k + l = n} s_k s_l`; zero for negative `n`.
    pub fn convolution(&self, n: i64) -> TruncatedSeries {
        let mut acc = TruncatedSeries::zero(self.order);
        for k in 0..=n {
            acc = acc.add(&self.rows[k as usize].mul(&self.rows[(n - k) as usize]));
        }
        acc
    }
}

pub fn schur_q(j: i64, order: usize) -> Result<TruncatedSeries> {
    if j < -1 {
        return Err(Error::domain(format!("s_j needs j >= -1, got {j}")));
    }
    Ok(SchurTable::new(j.max(0) as usize, order).get(j))
}

/// `((1 - sqrt(1 - 4q)) / (2q))^t`, whose `q^m` coefficient counts standard
/// Young tableaux of shape `(t + m - 1, m)`.
pub fn catalan_power_series(t: i64, order: usize) -> Result<TruncatedSeries> {
    if t < 1 {
        return Err(Error::domain(format!("power t must be >= 1, got {t}")));
    }
    let root = sqrt_one_minus_4q(order + 1);
    let minus_half = rational(-1, 2);
    let base =
        TruncatedSeries::from_coeffs((1..=order + 1).map(|n| root.coeff(n) * &minus_half), order);
    Ok(base.pow(t as u32))
}

/// `(6q - 1) + (1 - 4q)^{3/2}`, the `q`-part of the weighted generating function.
pub fn weighted_q_factor(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_integers(&[-1, 6], order).add(&power_3_2(order))
}

/// Coefficients of `x^0..=x^max_n` in `(x / (1 - x + x^2 q))^2`, each a series
/// in `q`, found by inverting the denominator as a power series in `x`.
pub fn squared_rational_x_coefficients(max_n: usize, order: usize) -> Result<Vec<TruncatedSeries>> {
    let zero = TruncatedSeries::zero(order);
    let mut denom = vec![zero.clone(); max_n + 1];
    denom[0] = TruncatedSeries::one(order);
    if max_n >= 1 {
        denom[1] = TruncatedSeries::from_integers(&[-1], order);
    }
    if max_n >= 2 {
        denom[2] = TruncatedSeries::from_integers(&[0, 1], order);
    }
    let head_inv = denom[0].inverse()?;
    let mut inv = vec![zero.clone(); max_n + 1];
    inv[0] = head_inv.clone();
    for n in 1..=max_n {
        let mut acc = zero.clone();
        for i in 1..=n {
            acc = acc.add(&denom[i].mul(&inv[n - i]));
        }
        inv[n] = acc
            .mul(&head_inv)
            .scale(&BigRational::from_integer(BigInt::from(-1)));
    }
    // Square, then multiply by x^2.
    let mut out = vec![zero.clone(); max_n + 1];
    for n in 2..=max_n {
        let mut acc = zero.clone();
        for k in 0..=n - 2 {
            acc = acc.add(&inv[k].mul(&inv[n - 2 - k]));
        }
        out[n] = acc;
    }
    Ok(out)
}

/// Genus-1 count from the one-variable coefficient formula:
/// the `q^d` coefficient of `(1-4q)^{3/2} prod_i sum_j s_j s_{d_i-2-j}`.
pub fn n_via_series(orders: [i64; 4]) -> Result<BigInt> {
    if orders.iter().any(|&d| d < 1) {
        return Err(Error::domain(format!("orders {orders:?} must all be >= 1")));
    }
    let total: i64 = orders.iter().sum();
    if total % 2 != 0 || total < 8 {
        return Err(Error::off_shell(format!(
            "orders {orders:?} sum to {total}; need 2d + 4 with d >= 2"
        )));
    }
    let degree = ((total - 4) / 2) as usize;
    let max_j = orders.iter().map(|&d| (d - 2).max(0)).max().unwrap_or(0) as usize;
    let table = SchurTable::new(max_j, degree);
    let product = orders.iter().fold(power_3_2(degree), |acc, &d| {
        acc.mul(&table.convolution(d - 2))
    });
    product.integer_coeff(degree)
}
