use std::collections::HashMap;

use pencilcount::degeneration::{
    genus0_count, genus0_weighted, genus_g_count, genus_g_weighted, RamificationProblem,
};
use pencilcount::exactmath::catalan;
use pencilcount::genus1::{
    count_laurent, count_schubert, domain_tuples, weighted_count, Genus1Tuple,
};
use pencilcount::grassmann::special_product;
use pencilcount::BigInt;
use proptest::prelude::*;

/// Top-degree coefficient of a product of special classes on `Gr(2, n)`,
/// by walking two-row shapes in the `2 x (n-2)` box and adding horizontal
/// strips one factor at a time.
fn strip_walk(indices: &[i64], n: i64) -> BigInt {
    let width = n - 2;
    let mut states: HashMap<(i64, i64), BigInt> = HashMap::new();
    states.insert((0, 0), BigInt::from(1));
    for &k in indices {
        let mut next: HashMap<(i64, i64), BigInt> = HashMap::new();
        for ((a, b), c) in &states {
            for a2 in *a..=width {
                for b2 in *b..=*a {
                    if a2 - a + b2 - b == k {
                        *next.entry((a2, b2)).or_default() += c;
                    }
                }
            }
        }
        states = next;
    }
    states.get(&(width, width)).cloned().unwrap_or_default()
}

/// Constant term of `prod P_{r_i}` by summing over one exponent per factor.
fn brute_constant_term(rs: [i64; 4]) -> BigInt {
    let exps = |r: i64| (0..=r).map(move |i| r - 2 * i);
    let mut total = BigInt::from(0);
    for e0 in exps(rs[0]) {
        for e1 in exps(rs[1]) {
            for e2 in exps(rs[2]) {
                for e3 in exps(rs[3]) {
                    if e0 + e1 + e2 + e3 == 0 {
                        total += BigInt::from(e0 * e1 * e2 * e3);
                    }
                }
            }
        }
    }
    total
}

#[test]
fn schubert_products_match_strip_walk() {
    for n in 2..=8 {
        let dim = 2 * (n - 2);
        let mut stack = vec![(Vec::<i64>::new(), 0i64)];
        while let Some((idx, used)) = stack.pop() {
            if used == dim {
                assert_eq!(
                    special_product(&idx, n).integrate(),
                    strip_walk(&idx, n),
                    "{idx:?} on Gr(2,{n})"
                );
                continue;
            }
            let last = idx.last().copied().unwrap_or(n - 2);
            for k in 1..=last.min(dim - used) {
                let mut next = idx.clone();
                next.push(k);
                stack.push((next, used + k));
            }
        }
    }
}

#[test]
fn laurent_count_matches_brute_constant_term() {
    for d in 2..=8 {
        for t in domain_tuples(d) {
            let rs = t.orders().map(|x| x - 1);
            assert_eq!(count_laurent(&t).unwrap(), brute_constant_term(rs), "{t}");
        }
    }
}

#[test]
fn schubert_count_matches_brute_constant_term() {
    for d in 2..=6 {
        for t in domain_tuples(d) {
            let rs = t.orders().map(|x| x - 1);
            assert_eq!(count_schubert(&t).unwrap(), brute_constant_term(rs), "{t}");
        }
    }
}

#[test]
fn genus0_simple_branching() {
    // Simple branching over 2d - 2 points on Gr(2, d+1): the top power of
    // sigma_1 is a Catalan number.
    for d in 2..=8 {
        let orders = vec![2; (2 * d - 2) as usize];
        assert_eq!(genus0_count(d, &orders).unwrap(), catalan(d - 1).unwrap());
    }
}

#[test]
fn genus0_total_ramification_pair_is_unique() {
    for d in 2..=8 {
        let mut orders = vec![d];
        orders.extend(std::iter::repeat_n(2, (d - 1) as usize));
        assert_eq!(genus0_count(d, &orders).unwrap(), BigInt::from(1), "d={d}");
        assert_eq!(genus0_count(d, &[d, d]).unwrap(), BigInt::from(1));
    }
}

#[test]
fn genus0_weighted_is_catalan() {
    for d in 2..=7 {
        for split in 1..(2 * d - 2) {
            let orders = [split + 1, 2 * d - 2 - split + 1];
            assert_eq!(
                genus0_weighted(d, &orders).unwrap(),
                catalan(d - 1).unwrap()
            );
        }
    }
}

#[test]
fn hyperelliptic_count_is_labelings() {
    let p = RamificationProblem::new(2, 2, vec![], vec![2; 6]).unwrap();
    let six_factorial: BigInt = (1..=6).map(BigInt::from).product();
    assert_eq!(genus_g_count(&p).unwrap(), six_factorial);
}

#[test]
fn genus1_weighted_simple_points() {
    // All-simple weighted count is 12 C_{d-2} / d.
    for d in 2..=8 {
        let t = Genus1Tuple::new([2, 2, 2, 2 * d - 2]).unwrap();
        let closed =
            BigInt::from(12) * catalan(d - 2).unwrap() * BigInt::from(2 * d - 3) / BigInt::from(d);
        assert_eq!(weighted_count(&t).unwrap(), closed);
    }
}

fn on_shell_genus2() -> impl Strategy<Value = RamificationProblem> {
    (3i64..=4, proptest::collection::vec(2i64..=4, 6)).prop_filter_map(
        "off-shell",
        |(d, moving)| {
            let budget = 2 + 2 * (d - 3) - moving.iter().map(|x| x - 2).sum::<i64>();
            if budget < 1 || moving.iter().any(|&x| x > d) || budget + 1 > d {
                return None;
            }
            RamificationProblem::new(2, d, vec![budget + 1], moving).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn genus2_counts_are_label_symmetric(p in on_shell_genus2()) {
        let mut reversed = p.moving().to_vec();
        reversed.reverse();
        let q = RamificationProblem::new(2, p.degree(), p.fixed().to_vec(), reversed).unwrap();
        let a = genus_g_count(&p).unwrap();
        prop_assert_eq!(&a, &genus_g_count(&q).unwrap());
        prop_assert!(a >= BigInt::from(0));
        prop_assert!(genus_g_weighted(&p).unwrap() >= a);
    }
}
