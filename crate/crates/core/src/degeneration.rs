//! Genus-0 counts and the degeneration of a general genus-`g` curve to a
//! rational spine carrying `g` elliptic tails.
//!
//! A limit pencil on the comb has vanishing `(a_j, b_j)` at the node of the
//! `j`-th tail and `(d - b_j, d - a_j)` at the matching spine point. The count
//! is a sum over distributions of the moving points (three per tail) and node
//! vanishing sequences of a Grassmannian integral on the spine times genus-1
//! counts on the tails.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{catalan, factorial, is_nonnegative, BigInt};
use crate::genus1::{extended_count, fixed_first_closed_form};
use crate::grassmann::{sigma, sigma1_power, special_product, SchubertClass};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RamificationProblem {
    genus: i64,
    degree: i64,
    fixed: Vec<i64>,
    moving: Vec<i64>,
}

impl RamificationProblem {
    /// Validates the dimension-zero condition
    /// `g + 2(d - g - 1) = sum_fixed (d_i - 1) + sum_moving (d_i - 2)`,
    /// `m <= 3g` and stability `2g - 2 + n > 0`.
    pub fn new(genus: i64, degree: i64, fixed: Vec<i64>, moving: Vec<i64>) -> Result<Self> {
        if genus < 0 {
            return Err(Error::domain(format!("genus must be >= 0, got {genus}")));
        }
        if degree < 2 {
            return Err(Error::domain(format!("degree must be >= 2, got {degree}")));
        }
        if let Some(&bad) = fixed.iter().chain(&moving).find(|&&x| x < 2) {
            return Err(Error::domain(format!(
                "ramification order {bad} must be >= 2"
            )));
        }
        if 2 * genus - 2 + fixed.len() as i64 <= 0 {
            return Err(Error::domain(format!(
                "unstable: 2g - 2 + n = {} must be positive",
                2 * genus - 2 + fixed.len() as i64
            )));
        }
        let expected = genus + 2 * (degree - genus - 1);
        let imposed: i64 =
            fixed.iter().map(|x| x - 1).sum::<i64>() + moving.iter().map(|x| x - 2).sum::<i64>();
        if expected != imposed {
            return Err(Error::off_shell(format!(
                "dimension condition fails: g + 2(d-g-1) = {expected} but the conditions impose {imposed}"
            )));
        }
        if moving.len() as i64 > 3 * genus {
            return Err(Error::domain(format!(
                "{} moving points exceed 3g = {}",
                moving.len(),
                3 * genus
            )));
        }
        Ok(Self {
            genus,
            degree,
            fixed,
            moving,
        })
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn fixed(&self) -> &[i64] {
        &self.fixed
    }

    pub fn moving(&self) -> &[i64] {
        &self.moving
    }

    fn require_upper_bound(&self, upper: i64, what: &str) -> Result<()> {
        if let Some(&bad) = self.fixed.iter().chain(&self.moving).find(|&&x| x > upper) {
            return Err(Error::domain(format!(
                "{what}: order {bad} exceeds {upper}"
            )));
        }
        Ok(())
    }

    fn require_full_moving(&self) -> Result<()> {
        if self.moving.len() as i64 != 3 * self.genus {
            return Err(Error::domain(format!(
                "degeneration needs exactly 3g = {} moving points, got {}; pad first",
                3 * self.genus,
                self.moving.len()
            )));
        }
        Ok(())
    }

    /// Largest order admitted by the weighted count.
    pub fn weighted_upper_bound(&self) -> i64 {
        self.degree.max(2 * self.degree - self.genus - 1)
    }
}

impl fmt::Display for RamificationProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "g={} d={} fixed={:?} moving={:?}",
            self.genus, self.degree, self.fixed, self.moving
        )
    }
}

/// Ordered assignment of moving-point labels to elliptic tails, three each.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Distribution {
    pub components: Vec<[usize; 3]>,
}

fn check_genus0(degree: i64, orders: &[i64]) -> Result<()> {
    if degree < 1 {
        return Err(Error::domain(format!("degree must be >= 1, got {degree}")));
    }
    if let Some(&bad) = orders.iter().find(|&&x| x < 2) {
        return Err(Error::domain(format!(
            "ramification order {bad} must be >= 2"
        )));
    }
    let imposed: i64 = orders.iter().map(|x| x - 1).sum();
    if imposed != 2 * degree - 2 {
        return Err(Error::off_shell(format!(
            "sum of (d_i - 1) is {imposed}, expected 2d - 2 = {}",
            2 * degree - 2
        )));
    }
    Ok(())
}

/// Degree-`d` maps `P^1 -> P^1` with ramification `d_i` at general points:
/// `int_{Gr(2,d+1)} prod sigma_{d_i - 1}`.
pub fn genus0_count(degree: i64, orders: &[i64]) -> Result<BigInt> {
    check_genus0(degree, orders)?;
    if let Some(&bad) = orders.iter().find(|&&x| x > degree) {
        return Err(Error::domain(format!(
            "ramification order {bad} exceeds degree {degree}"
        )));
    }
    let indices: Vec<i64> = orders.iter().map(|x| x - 1).collect();
    Ok(special_product(&indices, degree + 1).integrate())
}

/// Weighted genus-0 count with total vanishing `d_i`; always `C_{d-1}`.
pub fn genus0_weighted(degree: i64, orders: &[i64]) -> Result<BigInt> {
    check_genus0(degree, orders)?;
    let ambient = degree + 1;
    let mut class = SchubertClass::one(ambient);
    for &x in orders {
        class = class.mul(&sigma1_power(x - 1, ambient))?;
    }
    let value = class.integrate();
    let expected = catalan(degree - 1)?;
    if value != expected {
        return Err(Error::internal(format!(
            "weighted genus-0 count {value} differs from C_{} = {expected}",
            degree - 1
        )));
    }
    Ok(value)
}

/// Adds `3g - m` simple moving points. The padded count is the original
/// answer times the returned factor `(3g - m)!`.
pub fn pad_moving(p: &RamificationProblem) -> Result<(RamificationProblem, BigInt)> {
    let missing = 3 * p.genus - p.moving.len() as i64;
    if missing < 0 {
        return Err(Error::domain(format!(
            "m = {} exceeds 3g = {}",
            p.moving.len(),
            3 * p.genus
        )));
    }
    let mut padded = p.clone();
    padded
        .moving
        .extend(std::iter::repeat_n(2, missing as usize));
    Ok((padded, factorial(missing as u64)))
}

/// All `(3g)! / 6^g` ordered distributions of the labels into triples.
pub fn distributions(labels: &[usize], genus: usize) -> Result<Vec<Distribution>> {
    if labels.len() != 3 * genus {
        return Err(Error::domain(format!(
            "{} labels cannot be split into {genus} triples",
            labels.len()
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(genus);
    distribute(labels.to_vec(), &mut current, &mut out);
    Ok(out)
}

fn distribute(remaining: Vec<usize>, current: &mut Vec<[usize; 3]>, out: &mut Vec<Distribution>) {
    if remaining.is_empty() {
        out.push(Distribution {
            components: current.clone(),
        });
        return;
    }
    let n = remaining.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let triple = [remaining[i], remaining[j], remaining[k]];
                let rest: Vec<usize> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| *idx != i && *idx != j && *idx != k)
                    .map(|(_, &l)| l)
                    .collect();
                current.push(triple);
                distribute(rest, current, out);
                current.pop();
            }
        }
    }
}

/// Replaces all fixed points by one point of total vanishing
/// `(d_1 + ... + d_n) - n + 1`.
pub fn consolidate_fixed(p: &RamificationProblem) -> Result<RamificationProblem> {
    if p.fixed.is_empty() {
        return Err(Error::domain("no fixed points to consolidate"));
    }
    let merged = p.fixed.iter().sum::<i64>() - p.fixed.len() as i64 + 1;
    let out = RamificationProblem::new(p.genus, p.degree, vec![merged], p.moving.clone())
        .map_err(|e| Error::internal(format!("consolidation broke the problem: {e}")))?;
    Ok(out)
}

/// Unweighted count via the comb degeneration. Requires `m = 3g`; genus 0
/// goes straight to the Grassmannian count.
pub fn genus_g_count(p: &RamificationProblem) -> Result<BigInt> {
    p.require_upper_bound(p.degree, "unweighted count")?;
    if p.genus == 0 {
        return genus0_count(p.degree, &p.fixed);
    }
    p.require_full_moving()?;
    let indices: Vec<i64> = p.fixed.iter().map(|x| x - 1).collect();
    let spine = special_product(&indices, p.degree + 1);
    assemble(p, &spine, |orders| Ok(extended_count(orders)))
}

/// Weighted count: fixed points carry `sigma_1^{d_i - 1}` and each tail the
/// weighted count with a base-point-free node.
pub fn genus_g_weighted(p: &RamificationProblem) -> Result<BigInt> {
    p.require_upper_bound(p.weighted_upper_bound(), "weighted count")?;
    if p.genus == 0 {
        return genus0_weighted(p.degree, &p.fixed);
    }
    p.require_full_moving()?;
    let codim: i64 = p.fixed.iter().map(|x| x - 1).sum();
    let spine = sigma1_power(codim, p.degree + 1);
    assemble(p, &spine, |orders| fixed_first_closed_form(&orders))
}

/// Node vanishing options `(a, b)` for a tail carrying the given orders,
/// paired with the tail factor; options with a zero factor are dropped.
fn tail_options<F>(degree: i64, triple: [i64; 3], tail: &F) -> Result<Vec<(i64, i64, BigInt)>>
where
    F: Fn([i64; 4]) -> Result<BigInt>,
{
    let node_total = 2 * degree + 4 - triple.iter().sum::<i64>();
    let mut out = Vec::new();
    for a in 0..=degree {
        let b = node_total - a;
        if b <= a || b > degree {
            continue;
        }
        let factor = tail([b - a, triple[0], triple[1], triple[2]])?;
        if !factor.is_zero() {
            out.push((a, b, factor));
        }
    }
    Ok(out)
}

fn assemble<F>(p: &RamificationProblem, spine: &SchubertClass, tail: F) -> Result<BigInt>
where
    F: Fn([i64; 4]) -> Result<BigInt>,
{
    let labels: Vec<usize> = (0..p.moving.len()).collect();
    let mut cache: HashMap<Vec<[i64; 3]>, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    for dist in distributions(&labels, p.genus as usize)? {
        let mut key: Vec<[i64; 3]> = dist
            .components
            .iter()
            .map(|c| {
                let mut t = c.map(|l| p.moving[l]);
                t.sort_unstable();
                t
            })
            .collect();
        key.sort_unstable();
        if let Some(v) = cache.get(&key) {
            total += v;
            continue;
        }
        let options = key
            .iter()
            .map(|&triple| tail_options(p.degree, triple, &tail))
            .collect::<Result<Vec<_>>>()?;
        let value = sum_over_nodes(p.degree, spine, &options, BigInt::one());
        if !is_nonnegative(&value) {
            return Err(Error::internal(format!(
                "negative contribution {value} for {p}"
            )));
        }
        total += &value;
        cache.insert(key, value);
    }
    Ok(total)
}

fn sum_over_nodes(
    degree: i64,
    class: &SchubertClass,
    options: &[Vec<(i64, i64, BigInt)>],
    factor: BigInt,
) -> BigInt {
    let Some((head, rest)) = options.split_first() else {
        return class.integrate() * factor;
    };
    let mut acc = BigInt::zero();
    for (a, b, tail_factor) in head {
        let node = sigma(degree - a - 1, degree - b, degree + 1);
        let next = class.mul(&node).expect("same ambient");
        if next.is_zero() {
            continue;
        }
        acc += sum_over_nodes(degree, &next, rest, &factor * tail_factor);
    }
    acc
}
