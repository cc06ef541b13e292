//! Randomized invariants, 256 cases each with a fixed seed.

mod common;

use common::*;
use dedekind::ideals::{factor_p_in_order_with_bound, factorization_shape};
use dedekind::indexform::{common_value_divisor, index_form};
use dedekind::{common_index_divisor, maximal_order};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

const CASES: u32 = 256;

#[test]
fn factorization_round_trip() {
    run("round trip", CASES, (fp_input(10), any::<u64>()), |((p, c), s)| factor_round_trip(p, c, s)).unwrap();
}

#[test]
fn factorization_is_seed_independent() {
    run("seeds", CASES, (fp_input(8), any::<u64>(), any::<u64>()), |((p, c), s1, s2)| {
        factor_seed_independent(p, c, s1, s2)
    })
    .unwrap();
}

#[test]
fn necklace_counts() {
    run("necklace", CASES, (small_prime(), 1usize..=6), |(p, f)| necklace_identity(p, f)).unwrap();
}

#[test]
fn enumeration_agrees_with_count() {
    let strategy = prop_oneof![
        (Just(2u64), 1usize..=8),
        (Just(3u64), 1usize..=5),
        (Just(5u64), 1usize..=3),
        (Just(7u64), 1usize..=3)
    ];
    run("enumeration", 64, strategy, |(p, f)| enumeration_matches_count(p, f)).unwrap();
}

#[test]
fn resultant_matches_root_products() {
    let strategy = (prop::collection::vec(-6i64..=6, 1..=4), prop::collection::vec(-9i64..=9, 1..=5));
    run("resultant", CASES, strategy, |(r, g)| resultant_by_roots(r, g)).unwrap();
}

#[test]
fn discriminant_and_repeated_factors() {
    let strategy = (monic_zpoly(2, 5, 12), small_prime());
    run("disc mod p", CASES, strategy, |(f, p)| {
        prop_assume!(!f.discriminant().unwrap().is_zero());
        discriminant_detects_repeated_factors(f, p)
    })
    .unwrap();
}

#[test]
fn cofactor_lift_independence() {
    let strategy = (monic_zpoly(2, 5, 12), small_prime(), prop::collection::vec(-5i64..=5, 1..=6));
    run("lifts", CASES, strategy, |(f, p, s)| lift_independence(f, p, s)).unwrap();
}

#[test]
fn criterion_agrees_with_enlargement() {
    let strategy = (monic_zpoly(3, 4, 10), prop_oneof![Just(2u64), Just(3), Just(5)]);
    run("criterion oracle", CASES, strategy, |(f, p)| criterion_matches_enlargement(f, p)).unwrap();
}

#[test]
fn enumerated_shapes_agree_with_polynomial_shapes() {
    let strategy = (monic_zpoly(2, 4, 10), small_prime());
    run("shapes", CASES, strategy, |(f, p)| shapes_agree(f, p)).unwrap();
}

#[test]
fn good_generators_when_supply_suffices() {
    let strategy = (monic_zpoly(2, 4, 8), prop_oneof![Just(2u64), Just(3), Just(5)]);
    run("theorem iv", CASES, strategy, |(f, p)| good_generator_exists(f, p)).unwrap();
}

#[test]
fn ideal_norms_multiply() {
    let el = || prop::array::uniform3(-9i64..=9);
    let ex = || prop::array::uniform3(0u32..=2);
    run("norms", CASES, (el(), el(), ex(), ex()), |(m, n, a, b)| norm_multiplicative(m, n, a, b)).unwrap();
}

#[test]
fn cubic_family_discriminants() {
    let c = || -30i64..=30;
    run("family", CASES, (c(), c(), c(), c()), |(a, b, a1, b1)| family_closed_form(a, b, a1, b1)).unwrap();
}

#[test]
fn index_form_values_are_indices() {
    run("index form", CASES, prop::collection::vec(-25i64..=25, 3), index_form_evaluates_to_index).unwrap();
}

#[test]
fn ramification_matches_discriminant_on_corpus() {
    for (name, f) in corpus() {
        let m = maximal_order(&f).unwrap();
        let n = m.order.rank();
        for p in primes_to_check(&m.discriminant) {
            let bound = p.pow(n as u32).max(10_000);
            let fs = factor_p_in_order_with_bound(&m.order, pm(p), bound).unwrap();
            let ramified = fs.iter().any(|q| q.e > 1);
            assert_eq!(ramified, m.discriminant.is_multiple_of(&BigInt::from(p)), "{name} at {p}");
            assert_eq!(fs.iter().map(|q| q.e * q.f).sum::<usize>(), n, "{name} at {p}");
        }
    }
}

#[test]
fn index_form_divisors_match_supply_on_corpus() {
    for (name, f) in corpus() {
        let m = maximal_order(&f).unwrap();
        let form = index_form(&m.order).unwrap();
        for p in [2u64, 3, 5, 7] {
            let fs = factor_p_in_order_with_bound(&m.order, pm(p), 10_000).unwrap();
            let shape = factorization_shape(pm(p), &fs).unwrap();
            let by_values = common_value_divisor(&form, pm(p)).unwrap();
            assert_eq!(by_values, common_index_divisor(pm(p), &shape).common_index_divisor, "{name} at {p}");
        }
    }
}
