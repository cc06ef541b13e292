//! Acceptance run: one PASS/FAIL line per criterion. Criterion 10 is
//! reported but does not affect the exit status.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use dedekind::examples::{
    cubic_polynomial, maximal_cubic_order, prime_ideals, quartic_polynomial, root_two_order,
    MU_RELATIONS, PRINCIPAL_IDEALS, PRODUCTS,
};
use dedekind::ideals::{factor_p_in_order_with_bound, factorization_shape, LatticeIdeal};
use dedekind::indexform::{common_value_divisor, index_form, MultiPoly};
use dedekind::orders::element_index;
use dedekind::{
    common_index_divisor, crt_good_generator, factor_p_in_order, index_divisible, maximal_order,
    FpPoly, ShapePart, ZPoly,
};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn z(c: &[i64]) -> ZPoly {
    ZPoly::from_i64(c)
}

fn sorted(mut v: Vec<Vec<Vec<i64>>>) -> Vec<Vec<Vec<i64>>> {
    v.sort();
    v
}

fn criterion_1() -> String {
    let f = cubic_polynomial();
    let disc = f.discriminant().unwrap();
    assert_eq!(disc, BigInt::from(-2012));
    assert_eq!(BigInt::from(-2012), BigInt::from(4) * BigInt::from(-503));
    let m = maximal_order(&f).unwrap();
    assert_eq!(m.discriminant, BigInt::from(-503));
    assert_eq!(&disc / &m.discriminant, &m.index * &m.index);
    format!("disc = {disc} = 2^2 * ({}), index {}", m.discriminant, m.index)
}

fn criterion_2() -> String {
    let f = cubic_polynomial();
    let two = pm(2);
    let expected_m = f.cofactor_m(two, &[(z(&[0, 1]), 2), (z(&[-1, 1]), 1)]).unwrap();
    assert_eq!(expected_m, z(&[4, 1]));
    let v = index_divisible(&f, two).unwrap();
    assert!(v.divisible);
    let (w, e) = v.witness.clone().unwrap();
    assert_eq!((w.to_string().as_str(), e), ("t", 2));
    // canonical lifts t, t+1 give another M; the difference vanishes mod (2, t)
    let diff = (&v.m - &expected_m).reduce_mod(two);
    assert!(diff.div_rem(&FpPoly::x(two)).unwrap().1.is_zero());
    let json = serde_json::to_string(&v).unwrap();
    assert_eq!(json, r#"{"p":2,"parts":[{"f":1,"e":2},{"f":1,"e":1}],"index_divisible":true,"witness":{"poly":"t","e":2}}"#);
    format!("M = {expected_m} for lifts t, t-1; witness ({w}, {e}); verdict divisible")
}

fn criterion_3() -> String {
    let o = maximal_cubic_order();
    let fs = factor_p_in_order(&o, pm(2)).unwrap();
    let got = sorted(fs.iter().map(|q| q.ideal.basis_i64().unwrap()).collect());
    let expected = sorted(vec![
        vec![vec![2, 0, 0], vec![0, 1, 0], vec![1, 0, 1]],
        vec![vec![2, 0, 0], vec![1, 1, 0], vec![0, 0, 1]],
        vec![vec![2, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
    ]);
    assert_eq!(got, expected);
    assert!(fs.iter().all(|q| q.ideal.norm() == BigInt::from(2) && q.e == 1 && q.f == 1));
    let prod = fs.iter().fold(LatticeIdeal::whole(&o), |acc, q| acc.product(&q.ideal).unwrap());
    assert_eq!(prod.basis_i64().unwrap(), vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
    let shown: Vec<String> = fs.iter().map(|q| q.ideal.to_string()).collect();
    format!("primes above 2: {}; product {}", shown.join(" "), prod)
}

fn criterion_4() -> String {
    let o = maximal_cubic_order();
    let ideals = prime_ideals(&o).unwrap();
    let power = |exps: [u32; 3]| {
        ideals.iter().zip(exps).fold(LatticeIdeal::whole(&o), |acc, (i, e)| acc.product(&i.pow(e)).unwrap())
    };
    let rows = |m: [[i64; 3]; 3]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    for (name, exps, basis) in PRODUCTS {
        assert_eq!(power(exps).basis_i64().unwrap(), rows(basis), "{name}");
    }
    for (name, exps, basis, mu) in PRINCIPAL_IDEALS {
        assert_eq!(power(exps).basis_i64().unwrap(), rows(basis), "{name}");
        let principal = LatticeIdeal::principal(&o.element_i64(&mu).unwrap()).unwrap();
        assert_eq!(principal.basis_i64().unwrap(), rows(basis), "O(mu) for {name}");
    }
    for (name, lhs, rhs) in MU_RELATIONS {
        let prod = |fs: &[[i64; 3]]| fs.iter().fold(o.one(), |acc, x| acc.mul(&o.element_i64(x).unwrap()).unwrap());
        assert_eq!(prod(lhs), prod(rhs), "{name}");
    }
    format!("{} products, {} principal ideals, {} generator relations", PRODUCTS.len(), PRINCIPAL_IDEALS.len(), MU_RELATIONS.len())
}

fn criterion_5() -> String {
    let form = index_form(&maximal_cubic_order()).unwrap();
    let expected = MultiPoly::from_terms(
        &["x", "y"],
        &[(vec![3, 0], 2), (vec![2, 1], -1), (vec![1, 2], -1), (vec![0, 3], -2)],
    );
    assert!(form == expected || form == expected.neg(), "{form}");
    assert!(common_value_divisor(&form, pm(2)).unwrap());
    format!("index form {form}; every value even")
}

fn criterion_6() -> String {
    let fam = dedekind::cubic_family(2, 2, 1, -1).unwrap();
    assert_eq!(fam.closed_form_discriminant, BigInt::from(-503));
    assert_eq!(fam.order.discriminant(), BigInt::from(-503));
    let c = || -40i64..=40;
    run("acceptance family", 200, (c(), c(), c(), c()), |(a, b, a1, b1)| family_closed_form(a, b, a1, b1)).unwrap();
    "(2,2,1,-1) -> -503; 200 random coprime quadruples agree".to_string()
}

fn criterion_7() -> String {
    let m = maximal_order(&quartic_polynomial()).unwrap();
    assert_eq!(m.discriminant, BigInt::from(2873));
    assert_eq!(BigInt::from(13 * 13 * 17), BigInt::from(2873));
    let fs = factor_p_in_order(&m.order, pm(2)).unwrap();
    let shape = factorization_shape(pm(2), &fs).unwrap();
    assert_eq!(shape.sorted_parts(), vec![ShapePart { f: 2, e: 1 }; 2]);
    assert!(common_index_divisor(pm(2), &shape).common_index_divisor);
    format!("D = {} = 13^2*17; 2 splits as {shape}; common index divisor", m.discriminant)
}

fn criterion_8() -> String {
    let o = root_two_order();
    let seven = pm(7);
    let fs = factor_p_in_order(&o, seven).unwrap();
    let polys = [FpPoly::from_i64(seven, &[0, 1]), FpPoly::from_i64(seven, &[-1, 1])];
    let theta = crt_good_generator(&o, seven, &fs, &polys).unwrap();
    let r: Vec<BigInt> = theta.coords().iter().map(|c| c.mod_floor(&BigInt::from(49))).collect();
    assert_eq!(r, vec![BigInt::from(25), BigInt::from(27)]);
    assert_eq!(theta.char_poly().reduce_mod(seven), FpPoly::from_i64(seven, &[0, -1, 1]));
    let fixed = o.element_i64(&[25, 27]).unwrap();
    let k = element_index(&o, &fixed).unwrap();
    assert_eq!(k, BigInt::from(27));
    assert!(!element_index(&o, &theta).unwrap().is_multiple_of(&BigInt::from(7)));
    // independent oracle: disc(char poly) = k^2 * D with D = 8
    let ratio = fixed.char_poly().discriminant().unwrap() / BigInt::from(8);
    assert_eq!(ratio, &k * &k);
    format!("theta = {theta}, congruent to 25+27a mod 49; char poly mod 7 = t^2 - t; index 27")
}

fn criterion_9() -> String {
    const N: u32 = 200;
    let mut failures = Vec::new();
    let mut record = |r: Result<(), String>| {
        if let Err(e) = r {
            failures.push(e);
        }
    };
    record(run("acc round trip", N, (fp_input(10), any::<u64>()), |((p, c), s)| factor_round_trip(p, c, s)));
    record(run("acc seeds", N, (fp_input(8), any::<u64>(), any::<u64>()), |((p, c), a, b)| {
        factor_seed_independent(p, c, a, b)
    }));
    record(run("acc shapes", N, (monic_zpoly(2, 4, 10), small_prime()), |(f, p)| shapes_agree(f, p)));
    let el = || prop::array::uniform3(-9i64..=9);
    let ex = || prop::array::uniform3(0u32..=2);
    record(run("acc norms", N, (el(), el(), ex(), ex()), |(m, n, a, b)| norm_multiplicative(m, n, a, b)));
    record(run("acc lifts", N, (monic_zpoly(2, 5, 12), small_prime(), prop::collection::vec(-5i64..=5, 1..=6)), |(f, p, s)| {
        lift_independence(f, p, s)
    }));
    record(run("acc oracle", N, (monic_zpoly(3, 4, 10), prop_oneof![Just(2u64), Just(3), Just(5)]), |(f, p)| {
        criterion_matches_enlargement(f, p)
    }));
    record(run("acc necklace", N, (prop_oneof![Just(2u64), Just(3), Just(5), Just(7)], 1usize..=6), |(p, f)| {
        necklace_identity(p, f)
    }));
    let mut corpus_checks = 0;
    for (name, f) in corpus() {
        let m = maximal_order(&f).unwrap();
        let n = m.order.rank();
        for p in primes_to_check(&m.discriminant) {
            let bound = p.pow(n as u32).max(10_000);
            let fs = factor_p_in_order_with_bound(&m.order, pm(p), bound).unwrap();
            let ramified = fs.iter().any(|q| q.e > 1);
            if ramified != m.discriminant.is_multiple_of(&BigInt::from(p)) {
                failures.push(format!("ramification mismatch for {name} at {p}"));
            }
            corpus_checks += 1;
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    format!("7 properties x {N} cases; ramification <=> p | D on {corpus_checks} (field, prime) pairs")
}

/// Elements of `Z[ζ]`, `ζ` a primitive 13th root of unity, as coefficient
/// vectors modulo `1 + ζ + ⋯ + ζ¹²`, normalized so the constant slot is zero.
mod cyclotomic {
    pub const L: usize = 13;
    pub type Cyc = [i64; L];

    pub fn normalize(mut a: Cyc) -> Cyc {
        let c = a[0];
        for x in a.iter_mut() {
            *x -= c;
        }
        a
    }

    pub fn integer(n: i64) -> Cyc {
        let mut a = [0; L];
        a[0] = n;
        normalize(a)
    }

    pub fn add(a: &Cyc, b: &Cyc) -> Cyc {
        let mut c = [0; L];
        for i in 0..L {
            c[i] = a[i] + b[i];
        }
        normalize(c)
    }

    pub fn mul(a: &Cyc, b: &Cyc) -> Cyc {
        let mut c = [0; L];
        for i in 0..L {
            for j in 0..L {
                c[(i + j) % L] += a[i] * b[j];
            }
        }
        normalize(c)
    }

    /// The rational integer represented by `a`, if any.
    pub fn as_integer(a: &Cyc) -> Option<i64> {
        a[1..].iter().all(|&x| x == a[1]).then(|| -a[1])
    }
}

fn criterion_10() -> String {
    use cyclotomic::*;
    // periods of length 3 over the subgroup {1, 3, 9} of (Z/13)^*
    let subgroup = [1usize, 3, 9];
    let mut seen = [false; L];
    let mut periods = Vec::new();
    for k in 1..L {
        if seen[k] {
            continue;
        }
        let mut eta = [0i64; L];
        for &h in &subgroup {
            let e = k * h % L;
            seen[e] = true;
            eta[e] += 1;
        }
        periods.push(normalize(eta));
    }
    assert_eq!(periods.len(), 4);
    // Π (t − ηᵢ), coefficients ascending
    let mut poly: Vec<Cyc> = vec![integer(1)];
    for eta in &periods {
        let neg = mul(eta, &integer(-1));
        let mut next = vec![integer(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = add(&next[i + 1], c);
            next[i] = add(&next[i], &mul(c, &neg));
        }
        poly = next;
    }
    let coeffs: Vec<i64> = poly.iter().map(|c| as_integer(c).expect("rational coefficient")).collect();
    let f = z(&coeffs);
    let m = maximal_order(&f).unwrap();
    let fs = factor_p_in_order(&m.order, pm(3)).unwrap();
    let shape = factorization_shape(pm(3), &fs).unwrap();
    assert_eq!(shape.sorted_parts(), vec![ShapePart { f: 1, e: 1 }; 4]);
    assert!(common_index_divisor(pm(3), &shape).common_index_divisor);
    assert!(common_value_divisor(&index_form(&m.order).unwrap(), pm(3)).unwrap());
    format!("period polynomial {f}; D = {}; 3 splits as {shape}; common index divisor", m.discriminant)
}

/// Number, title, whether it gates the exit status, and the check itself.
type Criterion = (u32, &'static str, bool, fn() -> String);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "discriminant of the cubic and its field discriminant", true, criterion_1),
        (2, "index-divisibility test on the cubic at 2", true, criterion_2),
        (3, "prime ideals above 2 in the maximal cubic order", true, criterion_3),
        (4, "ideal products and principal ideals", true, criterion_4),
        (5, "index form of the maximal cubic order", true, criterion_5),
        (6, "cubic family discriminant formula", true, criterion_6),
        (7, "quartic field with discriminant 13^2*17", true, criterion_7),
        (8, "good generator in Q(sqrt 2) at 7", true, criterion_8),
        (9, "randomized property suite", true, criterion_9),
        (10, "quartic Gauss periods of conductor 13 (non-gating)", false, criterion_10),
    ];
    let mut gating_failures = 0;
    for (id, title, gating, check) in criteria {
        match panic::catch_unwind(AssertUnwindSafe(check)) {
            Ok(summary) => println!("PASS criterion {id}: {title}: {summary}"),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL criterion {id}: {title}: {msg}");
                if gating {
                    gating_failures += 1;
                }
            }
        }
    }
    if gating_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
