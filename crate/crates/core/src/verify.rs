//! Invariant suites over every tuple up to a degree bound.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::degeneration::{
    consolidate_fixed, genus_g_count, genus_g_weighted, pad_moving, RamificationProblem,
};
use crate::error::{Error, Result};
use crate::exactmath::{catalan, syt_count, BigInt};
use crate::genus1::{
    count, count_laurent, domain_tuples, duality_check, polynomial_branch, tuples_of_degree,
    unweighted_from_weighted, weighted_count, weighted_from_unweighted, Genus1Tuple, Method,
    PolynomialBranch,
};
use crate::grassmann::{
    fourfold_integral, magic_class, magic_integral, sigma1_power, special_product,
};
use crate::qseries::{catalan_power_series, squared_rational_x_coefficients, SchurTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Schubert,
    Laurent,
    Duality,
    Recursion,
    Degeneration,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = [
        "all",
        "schubert",
        "laurent",
        "duality",
        "recursion",
        "degeneration",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Schubert => "schubert",
            Suite::Laurent => "laurent",
            Suite::Duality => "duality",
            Suite::Recursion => "recursion",
            Suite::Degeneration => "degeneration",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::All,
            Suite::Schubert,
            Suite::Laurent,
            Suite::Duality,
            Suite::Recursion,
            Suite::Degeneration,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| Error::domain(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for PropertyOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

type Check = std::result::Result<(), String>;

fn outcome(name: &str, checked: usize, scope: &str, result: Check) -> PropertyOutcome {
    match result {
        Ok(()) => PropertyOutcome {
            name: name.to_string(),
            passed: true,
            detail: format!("{checked} cases, {scope}"),
        },
        Err(msg) => PropertyOutcome {
            name: name.to_string(),
            passed: false,
            detail: msg,
        },
    }
}

/// Runs `f` on every item in parallel and reports the first failure in input
/// order.
fn check_each<T, F>(items: &[T], f: F) -> Check
where
    T: Sync,
    F: Fn(&T) -> Check + Sync,
{
    let failures: Vec<(usize, String)> = items
        .par_iter()
        .enumerate()
        .filter_map(|(i, item)| f(item).err().map(|e| (i, e)))
        .collect();
    match failures.into_iter().min_by_key(|(i, _)| *i) {
        Some((_, msg)) => Err(msg),
        None => Ok(()),
    }
}

fn expect_eq(what: impl fmt::Display, got: Result<BigInt>, want: Result<BigInt>) -> Check {
    match (got, want) {
        (Ok(g), Ok(w)) if g == w => Ok(()),
        (Ok(g), Ok(w)) => Err(format!("{what}: got {g}, expected {w}")),
        (Err(e), _) | (_, Err(e)) => Err(format!("{what}: {e}")),
    }
}

fn tuples_up_to(max_degree: i64, lo: i64) -> Vec<Genus1Tuple> {
    (2..=max_degree)
        .flat_map(|d| tuples_of_degree(d, lo, d))
        .collect()
}

fn all_domain_tuples(max_degree: i64) -> Vec<Genus1Tuple> {
    (2..=max_degree).flat_map(domain_tuples).collect()
}

/// Runs the selected suite. Computation errors count as failures.
pub fn run_suite(suite: Suite, max_degree: i64) -> Result<Vec<PropertyOutcome>> {
    if max_degree < 2 {
        return Err(Error::domain(format!(
            "max degree must be >= 2, got {max_degree}"
        )));
    }
    let d = max_degree;
    let mut out = Vec::new();
    if suite.includes(Suite::Schubert) {
        out.push(fourfold_closed_form(d));
        out.push(magic_closed_form(d));
        out.push(top_sigma1_power(d));
        out.push(sigma1_power_tableaux(2 * d));
        out.push(catalan_powers(d));
    }
    if suite.includes(Suite::Laurent) {
        out.push(anchor_2222());
        out.push(four_method_agreement(d));
        out.push(two_equal_orders(d));
        out.push(polynomial_transcription(d));
        out.push(schur_convolution(2 * d));
    }
    if suite.includes(Suite::Duality) {
        out.push(duality(d));
    }
    if suite.includes(Suite::Recursion) {
        out.push(weighted_recursion(d));
        out.push(weighted_inversion(d));
    }
    if suite.includes(Suite::Degeneration) {
        out.push(genus1_reduction(d));
        out.push(hyperelliptic());
        out.push(single_moving_point(d));
        out.push(consolidation(d.min(5)));
    }
    Ok(out)
}

fn fourfold_closed_form(max_degree: i64) -> PropertyOutcome {
    let mut cases = Vec::new();
    for ambient in 2..=max_degree + 1 {
        let top = 2 * ambient - 4;
        for n1 in 0..ambient {
            for n2 in 0..=n1 {
                for n3 in 0..=n2 {
                    let n4 = top - n1 - n2 - n3;
                    if (0..=n3).contains(&n4) {
                        cases.push(([n1, n2, n3, n4], ambient));
                    }
                }
            }
        }
    }
    let result = check_each(&cases, |&(ns, ambient)| {
        let engine = special_product(&ns, ambient).integrate();
        expect_eq(
            format!("sigma{ns:?} on Gr(2,{ambient})"),
            Ok(engine),
            fourfold_integral(ns, ambient),
        )
    });
    outcome(
        "schubert.fourfold_closed_form",
        cases.len(),
        &format!("Gr(2,N), N <= {}", max_degree + 1),
        result,
    )
}

fn magic_closed_form(max_degree: i64) -> PropertyOutcome {
    let mut cases = Vec::new();
    for ambient in 3..=max_degree + 1 {
        let top = 2 * (ambient - 1) - 4;
        for n1 in 0..=top.max(0) {
            for n2 in 0..=n1 {
                for n3 in 0..=n2 {
                    let n4 = top - n1 - n2 - n3;
                    if (0..=n3).contains(&n4) {
                        cases.push(([n1, n2, n3, n4], ambient));
                    }
                }
            }
        }
    }
    let result = check_each(&cases, |&(ns, ambient)| {
        let engine = special_product(&ns, ambient)
            .mul(&magic_class(ambient))
            .map(|c| c.integrate());
        expect_eq(
            format!("magic sigma{ns:?} on Gr(2,{ambient})"),
            engine,
            magic_integral(ns, ambient),
        )
    });
    outcome(
        "schubert.magic_closed_form",
        cases.len(),
        &format!("Gr(2,N), N <= {}", max_degree + 1),
        result,
    )
}

fn top_sigma1_power(max_degree: i64) -> PropertyOutcome {
    let degrees: Vec<i64> = (1..=max_degree).collect();
    let result = check_each(&degrees, |&d| {
        let engine = sigma1_power(2 * d - 2, d + 1).integrate();
        expect_eq(
            format!("sigma_1^{} on Gr(2,{})", 2 * d - 2, d + 1),
            Ok(engine),
            catalan(d - 1),
        )
    });
    outcome(
        "schubert.top_sigma1_power_catalan",
        degrees.len(),
        &format!("d <= {max_degree}"),
        result,
    )
}

fn sigma1_power_tableaux(max_k: i64) -> PropertyOutcome {
    let powers: Vec<i64> = (0..=max_k).collect();
    let result = check_each(&powers, |&k| {
        let ambient = k + 2;
        let class = sigma1_power(k, ambient);
        for b in 0..=k / 2 {
            let a = k - b;
            let got = class.coefficient(a, b);
            if got != syt_count(a, b) {
                return Err(format!(
                    "sigma_1^{k}: coefficient of sigma_({a},{b}) is {got}"
                ));
            }
        }
        Ok(())
    });
    outcome(
        "schubert.sigma1_power_tableaux",
        powers.len(),
        &format!("k <= {max_k}"),
        result,
    )
}

fn catalan_powers(max_t: i64) -> PropertyOutcome {
    let order = 15usize;
    let ts: Vec<i64> = (1..=max_t.min(6)).collect();
    let result = check_each(&ts, |&t| {
        let f = catalan_power_series(t, order).map_err(|e| e.to_string())?;
        for m in 0..=order as i64 {
            expect_eq(
                format!("q^{m} of f_{t}"),
                f.integer_coeff(m as usize),
                Ok(syt_count(t + m - 1, m)),
            )?;
        }
        Ok(())
    });
    outcome(
        "schubert.catalan_power_series",
        ts.len(),
        &format!("t <= {}, m <= {order}", max_t.min(6)),
        result,
    )
}

fn anchor_2222() -> PropertyOutcome {
    let result = Genus1Tuple::new([2, 2, 2, 2])
        .and_then(|t| count(&t, &Method::ALL))
        .map_err(|e| e.to_string())
        .and_then(|report| {
            for (m, v) in &report.values {
                if *v != BigInt::from(6) {
                    return Err(format!("{m} gives {v}, expected 6"));
                }
            }
            Ok(())
        });
    outcome("laurent.anchor_2222", 1, "all four methods", result)
}

fn four_method_agreement(max_degree: i64) -> PropertyOutcome {
    let tuples = all_domain_tuples(max_degree);
    let result = check_each(&tuples, |t| {
        let report = count(t, &Method::ALL).map_err(|e| format!("{t}: {e}"))?;
        if report.agreed {
            Ok(())
        } else {
            Err(format!("{t}: methods disagree {:?}", report.values))
        }
    });
    outcome(
        "laurent.four_method_agreement",
        tuples.len(),
        &format!("1 <= d_i <= d <= {max_degree}"),
        result,
    )
}

fn two_equal_orders(max_degree: i64) -> PropertyOutcome {
    let degrees: Vec<i64> = (2..=max_degree).collect();
    let result = check_each(&degrees, |&d| {
        let t = Genus1Tuple::new([d, d, 2, 2]).map_err(|e| e.to_string())?;
        expect_eq(
            format!("N{t}"),
            count_laurent(&t),
            Ok(BigInt::from(2 * (d * d - 1))),
        )
    });
    outcome(
        "laurent.two_equal_orders",
        degrees.len(),
        &format!("N(d,d,2,2) = 2(d^2-1), d <= {max_degree}"),
        result,
    )
}

fn polynomial_transcription(max_degree: i64) -> PropertyOutcome {
    let tuples = all_domain_tuples(max_degree);
    let result = check_each(&tuples, |t| {
        let laurent = count_laurent(t).map_err(|e| e.to_string())?;
        for branch in [PolynomialBranch::OuterGap, PolynomialBranch::InnerGap] {
            let value = polynomial_branch(t, branch).map_err(|e| format!("{t} {branch:?}: {e}"))?;
            if branch.applies_to(t) && value != laurent {
                return Err(format!(
                    "{t} {branch:?}: polynomial {value}, Laurent {laurent}"
                ));
            }
        }
        Ok(())
    });
    outcome(
        "laurent.polynomial_transcription",
        tuples.len(),
        &format!("both branches integral, applicable branches exact, d <= {max_degree}"),
        result,
    )
}

fn schur_convolution(max_n: i64) -> PropertyOutcome {
    let max_n = max_n.max(2) as usize;
    let result = (|| {
        let coeffs = squared_rational_x_coefficients(max_n, max_n).map_err(|e| e.to_string())?;
        let table = SchurTable::new(max_n, max_n);
        for (n, c) in coeffs.iter().enumerate() {
            if *c != table.convolution(n as i64 - 2) {
                return Err(format!(
                    "x^{n}: coefficient {c} is not the Schur convolution"
                ));
            }
            let bound = (n / 2) as i64 - 1;
            if c.degree().is_some_and(|deg| deg as i64 > bound) {
                return Err(format!("x^{n}: q-degree exceeds {bound}"));
            }
        }
        Ok(())
    })();
    outcome(
        "laurent.schur_convolution",
        max_n + 1,
        &format!("n <= {max_n}"),
        result,
    )
}

fn duality(max_degree: i64) -> PropertyOutcome {
    let mut tuples = tuples_up_to(max_degree, 2);
    tuples.push(Genus1Tuple::new([4, 4, 4, 2]).expect("on-shell"));
    let result = check_each(&tuples, |t| {
        let report = duality_check(t).map_err(|e| e.to_string())?;
        if !report.equal {
            return Err(format!(
                "N{t} = {} but N{} = {}",
                report.count, report.image, report.image_count
            ));
        }
        if t.orders() == [4, 4, 4, 2] && report.count != BigInt::from(96) {
            return Err(format!("N{t} = {}, expected 96", report.count));
        }
        Ok(())
    });
    outcome(
        "duality.involution",
        tuples.len(),
        &format!("2 <= d_i <= d <= {max_degree}"),
        result,
    )
}

fn weighted_recursion(max_degree: i64) -> PropertyOutcome {
    let tuples: Vec<Genus1Tuple> = (2..=max_degree)
        .flat_map(|d| tuples_of_degree(d, 1, 2 * d + 1))
        .collect();
    let result = check_each(&tuples, |t| {
        expect_eq(
            format!("weighted {t}"),
            Ok(weighted_from_unweighted(t)),
            weighted_count(t),
        )
    });
    outcome(
        "recursion.weighted_sum",
        tuples.len(),
        &format!("1 <= d_i <= 2d+1, d <= {max_degree}"),
        result,
    )
}

fn weighted_inversion(max_degree: i64) -> PropertyOutcome {
    let tuples = all_domain_tuples(max_degree);
    let result = check_each(&tuples, |t| {
        expect_eq(
            format!("inverted {t}"),
            unweighted_from_weighted(t),
            count_laurent(t),
        )
    });
    outcome(
        "recursion.inversion",
        tuples.len(),
        &format!("1 <= d_i <= d <= {max_degree}"),
        result,
    )
}

fn genus1_reduction(max_degree: i64) -> PropertyOutcome {
    let tuples = tuples_up_to(max_degree, 2);
    let result = check_each(&tuples, |t| {
        let [d1, d2, d3, d4] = t.orders();
        let p = RamificationProblem::new(1, t.degree(), vec![d1], vec![d2, d3, d4])
            .map_err(|e| e.to_string())?;
        expect_eq(
            format!("unweighted {p}"),
            genus_g_count(&p),
            count_laurent(t),
        )?;
        expect_eq(
            format!("weighted {p}"),
            genus_g_weighted(&p),
            weighted_count(t),
        )
    });
    outcome(
        "degeneration.genus1_reduction",
        tuples.len(),
        &format!("2 <= d_i <= d <= {max_degree}"),
        result,
    )
}

fn hyperelliptic() -> PropertyOutcome {
    let result = RamificationProblem::new(2, 2, vec![], vec![2; 6])
        .map_err(|e| e.to_string())
        .and_then(|p| expect_eq(&p, genus_g_count(&p), Ok(BigInt::from(720))));
    outcome(
        "degeneration.hyperelliptic",
        1,
        "g = 2, d = 2, six simple points",
        result,
    )
}

fn single_moving_point(max_degree: i64) -> PropertyOutcome {
    let degrees: Vec<i64> = (2..=max_degree).collect();
    let result = check_each(&degrees, |&d| {
        let p = RamificationProblem::new(1, d, vec![d], vec![d]).map_err(|e| e.to_string())?;
        let (padded, factor) = pad_moving(&p).map_err(|e| e.to_string())?;
        if factor != BigInt::from(2) {
            return Err(format!("{p}: pad factor {factor}"));
        }
        let padded_count = genus_g_count(&padded).map(|v| v / &factor);
        expect_eq(&p, padded_count, Ok(BigInt::from(d * d - 1)))
    });
    outcome(
        "degeneration.single_moving_point",
        degrees.len(),
        &format!("d^2 - 1, d <= {max_degree}"),
        result,
    )
}

/// Nondecreasing sequences of the given length with entries in `lo..=hi`.
fn multisets(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in multisets(len - 1, first, hi) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn consolidation_problems(max_degree: i64) -> Vec<RamificationProblem> {
    let mut out = Vec::new();
    for g in 1..=2i64 {
        for d in 2..=max_degree {
            let upper = d.max(2 * d - g - 1);
            let budget = g + 2 * (d - g - 1);
            for n in 2..=budget.max(0) as usize {
                for fixed in multisets(n, 2, upper) {
                    for moving in multisets(3 * g as usize, 2, upper) {
                        if let Ok(p) = RamificationProblem::new(g, d, fixed.clone(), moving) {
                            out.push(p);
                        }
                    }
                }
            }
        }
    }
    out
}

fn consolidation(max_degree: i64) -> PropertyOutcome {
    let problems = consolidation_problems(max_degree);
    let result = check_each(&problems, |p| {
        let merged = consolidate_fixed(p).map_err(|e| format!("{p}: {e}"))?;
        expect_eq(
            format!("{p} vs {merged}"),
            genus_g_weighted(p),
            genus_g_weighted(&merged),
        )
    });
    outcome(
        "degeneration.weighted_consolidation",
        problems.len(),
        &format!("g <= 2, d <= {max_degree}"),
        result,
    )
}
