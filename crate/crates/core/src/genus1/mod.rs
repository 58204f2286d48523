//! Counts of pencils on a general elliptic curve `(E, p_1)` with ramification
//! at `p_1` and three moving points.
//!
//! The unweighted count `N` has four independent evaluations (Schubert
//! calculus, a Laurent constant term, explicit piecewise polynomials and a
//! one-variable series coefficient). The weighted count `N~` has a closed form
//! and is tied to `N` by a sum over base-point splittings.

mod explicit;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{binomial, catalan, rational, syt_count, to_integer, BigInt, BigRational};
use crate::grassmann::{magic_class, SchubertClass};
use crate::laurent::{p_poly, LaurentPolynomial};
use crate::qseries::n_via_series;

/// Orders `(d1, d2, d3, d4)` at the fixed point and the three moving points.
/// The degree is determined by `d1 + d2 + d3 + d4 = 2d + 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus1Tuple {
    orders: [i64; 4],
}

impl Genus1Tuple {
    pub fn new(orders: [i64; 4]) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&d| d < 1) {
            return Err(Error::domain(format!(
                "ramification order {bad} must be >= 1"
            )));
        }
        let total: i64 = orders.iter().sum();
        if total % 2 != 0 {
            return Err(Error::off_shell(format!(
                "orders {orders:?} have odd sum {total}; need d1+d2+d3+d4 = 2d+4"
            )));
        }
        if total < 8 {
            return Err(Error::off_shell(format!(
                "orders {orders:?} give degree {} < 2",
                (total - 4) / 2
            )));
        }
        Ok(Self { orders })
    }

    pub fn orders(&self) -> [i64; 4] {
        self.orders
    }

    pub fn degree(&self) -> i64 {
        degree_of(&self.orders)
    }

    /// Orders sorted in nonincreasing order.
    pub fn sorted(&self) -> [i64; 4] {
        sorted_desc(self.orders)
    }

    /// Whether `1 <= d_i <= d` for every index.
    pub fn in_domain(&self) -> bool {
        let d = self.degree();
        self.orders.iter().all(|&x| (1..=d).contains(&x))
    }

    fn require_domain(&self, upper: i64, what: &str) -> Result<()> {
        if let Some(&bad) = self.orders.iter().find(|&&x| x > upper) {
            return Err(Error::domain(format!(
                "{what}: order {bad} exceeds {upper} for degree {} (orders {:?})",
                self.degree(),
                self.orders
            )));
        }
        Ok(())
    }

    /// Image under the involution `d_i -> d + 2 - d_i`.
    pub fn dual(&self) -> Result<Self> {
        let d = self.degree();
        Self::new(self.orders.map(|x| d + 2 - x))
    }
}

impl fmt::Display for Genus1Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.orders;
        write!(f, "({a},{b},{c},{d})")
    }
}

fn degree_of(orders: &[i64; 4]) -> i64 {
    (orders.iter().sum::<i64>() - 4) / 2
}

fn sorted_desc(orders: [i64; 4]) -> [i64; 4] {
    let mut o = orders;
    o.sort_unstable_by(|x, y| y.cmp(x));
    o
}

fn product_minus_one(orders: &[i64]) -> BigInt {
    orders.iter().map(|&x| BigInt::from(x - 1)).product()
}

/// `12 C_{d-2} / d * prod (d_i - 1)` for any orders with degree `d >= 2`.
fn weighted_closed_form(orders: &[i64; 4]) -> Result<BigInt> {
    let d = degree_of(orders);
    let value = BigRational::new(
        BigInt::from(12) * catalan(d - 2)? * product_minus_one(orders),
        BigInt::from(d),
    );
    to_integer(&value, "weighted count")
}

/// Weighted count of pencils on `E` with total vanishing `d_i` at each point.
pub fn weighted_count(t: &Genus1Tuple) -> Result<BigInt> {
    t.require_domain(2 * t.degree() + 1, "weighted count")?;
    weighted_closed_form(&t.orders)
}

/// Weighted count with vanishing exactly `(0, d1)` at the fixed point.
pub fn weighted_fixed_first(t: &Genus1Tuple) -> Result<BigInt> {
    let d = t.degree();
    let d1 = t.orders[0];
    if d1 > d {
        return Err(Error::domain(format!(
            "fixed-point order {d1} exceeds degree {d} (orders {:?})",
            t.orders
        )));
    }
    fixed_first_closed_form(&t.orders)
}

/// `2 d1 (d1+1)(d1-1) prod_{i>1}(d_i-1) C(2d-d1-2, d-d1) / (d(d-1))`.
pub(crate) fn fixed_first_closed_form(orders: &[i64; 4]) -> Result<BigInt> {
    let d = degree_of(orders);
    if d < 2 {
        return Ok(BigInt::zero());
    }
    let d1 = orders[0];
    let numer = BigInt::from(2 * d1 * (d1 + 1) * (d1 - 1))
        * product_minus_one(&orders[1..])
        * binomial(2 * d - d1 - 2, d - d1);
    to_integer(
        &BigRational::new(numer, BigInt::from(d * (d - 1))),
        "fixed-first weighted count",
    )
}

/// `tau_r = sum_{a+b=r} sigma_a sigma_b`; zero for negative `r`.
pub fn tau_class(r: i64, ambient: i64) -> SchubertClass {
    let mut acc = SchubertClass::zero(ambient);
    for a in 0..=r {
        let piece = SchubertClass::one(ambient).pieri_mul(a).pieri_mul(r - a);
        acc = acc.add(&piece).expect("same ambient");
    }
    acc
}

/// `int_{Gr(2,d+1)} prod_i tau_{d_i-2} (8 sigma_{1,1} - 2 sigma_1^2)`.
pub fn count_schubert(t: &Genus1Tuple) -> Result<BigInt> {
    let d = t.degree();
    t.require_domain(d, "Schubert count")?;
    let ambient = d + 1;
    let mut class = magic_class(ambient);
    for &x in &t.orders {
        class = class.mul(&tau_class(x - 2, ambient))?;
    }
    Ok(class.integrate())
}

/// Constant term of `P_{d1-1} P_{d2-1} P_{d3-1} P_{d4-1}`.
pub fn count_laurent(t: &Genus1Tuple) -> Result<BigInt> {
    laurent_constant_term(&t.orders)
}

fn laurent_constant_term(orders: &[i64; 4]) -> Result<BigInt> {
    let mut product = LaurentPolynomial::one();
    for &x in orders {
        product = &product * &p_poly(x - 1)?;
    }
    Ok(product.constant_term())
}

/// Unweighted count extended to arbitrary orders `d_i >= 1`: zero when the
/// index sum is odd or the implied degree is below 2, the Laurent constant
/// term otherwise.
pub fn extended_count(orders: [i64; 4]) -> BigInt {
    if orders.iter().any(|&x| x < 1) {
        return BigInt::zero();
    }
    let total: i64 = orders.iter().sum();
    if total % 2 != 0 || total < 8 {
        return BigInt::zero();
    }
    laurent_constant_term(&orders).expect("orders are positive")
}

/// Which explicit polynomial to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolynomialBranch {
    /// `d1 - d2 >= d3 - d4` after sorting.
    OuterGap,
    /// `d1 - d2 <= d3 - d4` after sorting.
    InnerGap,
}

impl PolynomialBranch {
    pub fn applies_to(self, t: &Genus1Tuple) -> bool {
        let [d1, d2, d3, d4] = t.sorted();
        match self {
            PolynomialBranch::OuterGap => d1 - d2 >= d3 - d4,
            PolynomialBranch::InnerGap => d1 - d2 <= d3 - d4,
        }
    }
}

/// Evaluates one branch of the explicit formula regardless of whether its
/// case condition holds.
pub fn polynomial_branch(t: &Genus1Tuple, branch: PolynomialBranch) -> Result<BigInt> {
    let table = match branch {
        PolynomialBranch::OuterGap => explicit::OUTER_GAP_DOMINANT,
        PolynomialBranch::InnerGap => explicit::INNER_GAP_DOMINANT,
    };
    let vars = t.sorted().map(BigInt::from);
    let mut total = BigRational::zero();
    for &(num, den, exps) in table {
        let mut monomial = BigInt::from(1);
        for (v, &e) in vars.iter().zip(exps.iter()) {
            monomial *= num_traits::pow(v.clone(), e as usize);
        }
        total += rational(num, den) * BigRational::from_integer(monomial);
    }
    to_integer(&total, &format!("explicit polynomial at {t}"))
}

pub fn count_polynomial(t: &Genus1Tuple) -> Result<BigInt> {
    t.require_domain(t.degree(), "explicit polynomial count")?;
    let branch = if PolynomialBranch::OuterGap.applies_to(t) {
        PolynomialBranch::OuterGap
    } else {
        PolynomialBranch::InnerGap
    };
    polynomial_branch(t, branch)
}

pub fn count_series(t: &Genus1Tuple) -> Result<BigInt> {
    n_via_series(t.orders)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Schubert,
    Laurent,
    Polynomial,
    Series,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Schubert,
        Method::Laurent,
        Method::Polynomial,
        Method::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Schubert => "schubert",
            Method::Laurent => "laurent",
            Method::Polynomial => "polynomial",
            Method::Series => "series",
        }
    }

    pub fn evaluate(self, t: &Genus1Tuple) -> Result<BigInt> {
        match self {
            Method::Schubert => count_schubert(t),
            Method::Laurent => count_laurent(t),
            Method::Polynomial => count_polynomial(t),
            Method::Series => count_series(t),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown method '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub tuple: Genus1Tuple,
    pub values: BTreeMap<Method, BigInt>,
    pub agreed: bool,
}

impl CountReport {
    /// The common value when every method agreed.
    pub fn value(&self) -> Option<&BigInt> {
        if self.agreed {
            self.values.values().next()
        } else {
            None
        }
    }
}

/// Runs the selected pipelines. Disagreement is reported, never resolved.
pub fn count(t: &Genus1Tuple, methods: &[Method]) -> Result<CountReport> {
    if methods.is_empty() {
        return Err(Error::domain("no counting method selected"));
    }
    let mut values = BTreeMap::new();
    for &m in methods {
        values.insert(m, m.evaluate(t)?);
    }
    let mut iter = values.values();
    let first = iter.next().expect("nonempty");
    let agreed = iter.all(|v| v == first);
    Ok(CountReport {
        tuple: *t,
        values,
        agreed,
    })
}

/// All `(k1..k4)` with `d_i - 2 k_i >= 1`.
fn base_point_splittings(orders: [i64; 4]) -> impl Iterator<Item = [i64; 4]> {
    let bounds = orders.map(|d| (d - 1) / 2);
    (0..=bounds[0]).flat_map(move |k1| {
        (0..=bounds[1]).flat_map(move |k2| {
            (0..=bounds[2]).flat_map(move |k3| (0..=bounds[3]).map(move |k4| [k1, k2, k3, k4]))
        })
    })
}

fn splitting_weight(orders: &[i64; 4], ks: &[i64; 4]) -> BigInt {
    orders
        .iter()
        .zip(ks)
        .map(|(&d, &k)| syt_count(d - k - 1, k))
        .product()
}

fn shifted(orders: &[i64; 4], ks: &[i64; 4]) -> [i64; 4] {
    [0, 1, 2, 3].map(|i| orders[i] - 2 * ks[i])
}

/// `sum_k C^{d}_{k} N_{d - 2k}` with the unweighted counts taken from the
/// Laurent method (degree of each term inferred from its orders).
pub fn weighted_from_unweighted(t: &Genus1Tuple) -> BigInt {
    base_point_splittings(t.orders)
        .map(|ks| splitting_weight(&t.orders, &ks) * extended_count(shifted(&t.orders, &ks)))
        .sum()
}

/// Recovers `N` from the weighted closed form by peeling off every splitting
/// with a base point, recursing on strictly smaller index sums.
pub fn unweighted_from_weighted(t: &Genus1Tuple) -> Result<BigInt> {
    let mut memo = HashMap::new();
    invert(t.orders, &mut memo)
}

fn invert(orders: [i64; 4], memo: &mut HashMap<[i64; 4], BigInt>) -> Result<BigInt> {
    let total: i64 = orders.iter().sum();
    if orders.iter().any(|&x| x < 1) || total % 2 != 0 || total < 8 {
        return Ok(BigInt::zero());
    }
    let key = sorted_desc(orders);
    if let Some(v) = memo.get(&key) {
        return Ok(v.clone());
    }
    let mut value = weighted_closed_form(&key)?;
    for ks in base_point_splittings(key) {
        if ks == [0; 4] {
            continue;
        }
        value -= splitting_weight(&key, &ks) * invert(shifted(&key, &ks), memo)?;
    }
    memo.insert(key, value.clone());
    Ok(value)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityReport {
    pub tuple: Genus1Tuple,
    pub image: Genus1Tuple,
    pub count: BigInt,
    pub image_count: BigInt,
    pub equal: bool,
}

/// Compares `N_{d_i}` with `N_{d + 2 - d_i}`, both in the range `1..=d`.
pub fn duality_check(t: &Genus1Tuple) -> Result<DualityReport> {
    let image = t.dual()?;
    if !t.in_domain() || !image.in_domain() {
        return Err(Error::domain(format!(
            "duality needs both {t} and {image} within 1..={}",
            t.degree()
        )));
    }
    let count = count_laurent(t)?;
    let image_count = count_laurent(&image)?;
    let equal = count == image_count;
    Ok(DualityReport {
        tuple: *t,
        image,
        count,
        image_count,
        equal,
    })
}

/// Every on-shell tuple of the given degree with `lo <= d_i <= hi`,
/// in lexicographic order.
pub fn tuples_of_degree(degree: i64, lo: i64, hi: i64) -> Vec<Genus1Tuple> {
    let total = 2 * degree + 4;
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            for c in lo..=hi {
                let d = total - a - b - c;
                if (lo..=hi).contains(&d) {
                    if let Ok(t) = Genus1Tuple::new([a, b, c, d]) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// In-domain tuples `1 <= d_i <= degree`.
pub fn domain_tuples(degree: i64) -> Vec<Genus1Tuple> {
    tuples_of_degree(degree, 1, degree)
}
