//! Schubert calculus on the Grassmannian of 2-planes `Gr(2, N)`.
//!
//! A class is a finite integer combination of basis classes `sigma_{a,b}`
//! with `N - 2 >= a >= b >= 0`. Products with a special class `sigma_k`
//! follow the Pieri rule; general products reduce to Pieri steps through
//! `sigma_{c,e} = sigma_{1,1}^e * sigma_{c-e}`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::BigInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowPartition {
    a: i64,
    b: i64,
}

impl TwoRowPartition {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < 0 || a < b {
            return Err(Error::domain(format!(
                "({a},{b}) is not a two-row partition"
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(self) -> i64 {
        self.a
    }

    pub fn b(self) -> i64 {
        self.b
    }

    /// Codimension of the corresponding Schubert class.
    pub fn size(self) -> i64 {
        self.a + self.b
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertClass {
    ambient: i64,
    terms: BTreeMap<TwoRowPartition, BigInt>,
}

impl SchubertClass {
    pub fn zero(ambient: i64) -> Self {
        assert!(ambient >= 2, "Gr(2,{ambient}) is empty");
        Self {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    /// The fundamental class `sigma_{0,0}`.
    pub fn one(ambient: i64) -> Self {
        sigma(0, 0, ambient)
    }

    pub fn ambient(&self) -> i64 {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (TwoRowPartition, &BigInt)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn coefficient(&self, a: i64, b: i64) -> BigInt {
        TwoRowPartition::new(a, b)
            .ok()
            .and_then(|p| self.terms.get(&p).cloned())
            .unwrap_or_default()
    }

    fn fits(&self, a: i64, b: i64) -> bool {
        0 <= b && b <= a && a <= self.ambient - 2
    }

    fn accumulate(&mut self, a: i64, b: i64, coeff: &BigInt) {
        if coeff.is_zero() || !self.fits(a, b) {
            return;
        }
        let key = TwoRowPartition { a, b };
        let entry = self.terms.entry(key).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::domain(format!(
                "classes live on different Grassmannians Gr(2,{}) and Gr(2,{})",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.accumulate(p.a, p.b, c);
        }
        Ok(out)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.ambient);
        for (p, c) in &self.terms {
            out.accumulate(p.a, p.b, &(c * factor));
        }
        out
    }

    /// Product with the special class `sigma_k` by the Pieri rule.
    pub fn pieri_mul(&self, k: i64) -> Self {
        let mut out = Self::zero(self.ambient);
        if k < 0 {
            return out;
        }
        let top = self.ambient - 2;
        for (p, c) in &self.terms {
            let total = p.a + p.b + k;
            // a' = total - b' must satisfy a <= a' <= top and b <= b' <= a.
            let lo = p.b.max(total - top);
            let hi = p.a.min(p.b + k);
            for b2 in lo..=hi {
                out.accumulate(total - b2, b2, c);
            }
        }
        out
    }

    /// Product with `sigma_{1,1}`, which shifts both rows by one.
    pub fn raise(&self) -> Self {
        let mut out = Self::zero(self.ambient);
        for (p, c) in &self.terms {
            out.accumulate(p.a + 1, p.b + 1, c);
        }
        out
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut out = Self::zero(self.ambient);
        for (p, c) in &other.terms {
            let mut piece = self.pieri_mul(p.a - p.b);
            for _ in 0..p.b {
                piece = piece.raise();
            }
            for (q, d) in &piece.terms {
                out.accumulate(q.a, q.b, &(d * c));
            }
        }
        Ok(out)
    }

    /// Degree of the top-dimensional part: the coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        let top = self.ambient - 2;
        self.coefficient(top, top)
    }
}

impl fmt::Display for SchubertClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            write!(f, "s[{},{}]", p.a, p.b)?;
        }
        Ok(())
    }
}

/// Basis class `sigma_{a,b}` on `Gr(2, N)`; zero outside the `(N-2) x 2` box.
pub fn sigma(a: i64, b: i64, ambient: i64) -> SchubertClass {
    let mut class = SchubertClass::zero(ambient);
    class.accumulate(a, b, &BigInt::one());
    class
}

pub fn pieri_mul(c: &SchubertClass, k: i64) -> SchubertClass {
    c.pieri_mul(k)
}

pub fn mul(c1: &SchubertClass, c2: &SchubertClass) -> Result<SchubertClass> {
    c1.mul(c2)
}

pub fn integrate(c: &SchubertClass) -> BigInt {
    c.integrate()
}

pub fn sigma1_power(k: i64, ambient: i64) -> SchubertClass {
    (0..k).fold(SchubertClass::one(ambient), |acc, _| acc.pieri_mul(1))
}

/// Product of special classes `sigma_{n_1} ... sigma_{n_r}`.
pub fn special_product(indices: &[i64], ambient: i64) -> SchubertClass {
    indices
        .iter()
        .fold(SchubertClass::one(ambient), |acc, &n| acc.pieri_mul(n))
}

/// `8 sigma_{1,1} - 2 sigma_1^2`, the correction class in the genus-1 count.
pub fn magic_class(ambient: i64) -> SchubertClass {
    sigma(1, 1, ambient)
        .scale(&BigInt::from(8))
        .sub(&sigma1_power(2, ambient).scale(&BigInt::from(2)))
        .expect("same ambient")
}

fn sorted_desc(ns: [i64; 4]) -> [i64; 4] {
    let mut ns = ns;
    ns.sort_unstable_by(|x, y| y.cmp(x));
    ns
}

/// Closed form for `int_{Gr(2,N)} sigma_{n1} sigma_{n2} sigma_{n3} sigma_{n4}`
/// when the codimensions fill the Grassmannian exactly.
pub fn fourfold_integral(ns: [i64; 4], ambient: i64) -> Result<BigInt> {
    if ns.iter().any(|&n| n < 0 || n > ambient - 1) {
        return Err(Error::domain(format!(
            "indices {ns:?} must lie in [0, {}] on Gr(2,{ambient})",
            ambient - 1
        )));
    }
    let total: i64 = ns.iter().sum();
    if total != 2 * ambient - 4 {
        return Err(Error::domain(format!(
            "indices {ns:?} sum to {total}, expected dim Gr(2,{ambient}) = {}",
            2 * ambient - 4
        )));
    }
    let [n1, _, _, n4] = sorted_desc(ns);
    Ok(BigInt::from((ambient - n1 - 1).min(n4 + 1).max(0)))
}

/// Closed form for `int_{Gr(2,N)} sigma_{n1..n4} (8 sigma_{1,1} - 2 sigma_1^2)`
/// with `n1 + n2 + n3 + n4 = 2(N - 1) - 4`.
pub fn magic_integral(ns: [i64; 4], ambient: i64) -> Result<BigInt> {
    if ns.iter().any(|&n| n < 0) {
        return Err(Error::domain(format!("indices {ns:?} must be nonnegative")));
    }
    let total: i64 = ns.iter().sum();
    if total != 2 * (ambient - 1) - 4 {
        return Err(Error::domain(format!(
            "indices {ns:?} sum to {total}, expected {}",
            2 * (ambient - 1) - 4
        )));
    }
    let [n1, n2, n3, n4] = sorted_desc(ns);
    let value = if n1 == n4 {
        6
    } else if n1 == n2 && n3 == n4 {
        4
    } else if n1 + n4 == n2 + n3 {
        2
    } else if n1 == n2 + n3 + n4 + 2 {
        -2
    } else {
        0
    };
    Ok(BigInt::from(value))
}
