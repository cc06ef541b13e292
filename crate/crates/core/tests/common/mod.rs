//! Strategies and property bodies shared by the property tests and the
//! acceptance run.
#![allow(dead_code)]

use dedekind::criteria::index_divisible;
use dedekind::examples::{maximal_cubic_order, prime_ideals};
use dedekind::ideals::{factor_p_in_order, factorization_shape, LatticeIdeal};
use dedekind::indexform::index_form;
use dedekind::orders::{element_index, order_from_polynomial};
use dedekind::{
    assign_prime_functions, count_monic_irreducibles, crt_good_generator, cubic_family,
    enumerate_monic_irreducibles, factor_prime_via_polynomial, p_enlarge, Error, FpPoly,
    PrimeModulus, ZPoly,
};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Outcome = Result<(), TestCaseError>;

pub fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn small_prime() -> impl Strategy<Value = u64> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7)]
}

/// Monic polynomial of degree `lo..=hi` with coefficients in `-c..=c`.
pub fn monic_zpoly(lo: usize, hi: usize, c: i64) -> impl Strategy<Value = ZPoly> {
    (lo..=hi).prop_flat_map(move |d| prop::collection::vec(-c..=c, d)).prop_map(|mut v| {
        v.push(1);
        ZPoly::from_i64(&v)
    })
}

/// `(p, coefficients)` for a polynomial over `F_p` of degree `≤ hi`.
pub fn fp_input(hi: usize) -> impl Strategy<Value = (u64, Vec<u64>)> {
    prop_oneof![Just(2u64), Just(3), Just(5), Just(7), Just(13), Just(101)].prop_flat_map(move |p| {
        (Just(p), prop::collection::vec(0..p, 2..=hi + 1))
    })
}

// -- polynomials over F_p --

pub fn factor_round_trip(p: u64, coeffs: Vec<u64>, seed: u64) -> Outcome {
    let f = FpPoly::new(pm(p), coeffs);
    prop_assume!(!f.is_zero());
    let fs = f.factor(seed).unwrap();
    let back = FpPoly::product(pm(p), &fs).scale(f.leading());
    prop_assert_eq!(&back, &f);
    for (g, e) in &fs {
        prop_assert!(g.is_monic() && g.is_irreducible().unwrap() && *e >= 1);
    }
    prop_assert!(fs.windows(2).all(|w| w[0].0 < w[1].0), "factors sorted and distinct");
    Ok(())
}

pub fn factor_seed_independent(p: u64, coeffs: Vec<u64>, s1: u64, s2: u64) -> Outcome {
    let f = FpPoly::new(pm(p), coeffs);
    prop_assume!(!f.is_zero());
    prop_assert_eq!(f.factor(s1).unwrap(), f.factor(s2).unwrap());
    Ok(())
}

/// `Σ_{d | f} d·N_d = p^f`
pub fn necklace_identity(p: u64, f: usize) -> Outcome {
    let total: BigUint = (1..=f)
        .filter(|d| f.is_multiple_of(*d))
        .map(|d| count_monic_irreducibles(pm(p), d).unwrap() * BigUint::from(d))
        .sum();
    prop_assert_eq!(total, BigUint::from(p).pow(f as u32));
    Ok(())
}

pub fn enumeration_matches_count(p: u64, f: usize) -> Outcome {
    let list = enumerate_monic_irreducibles(pm(p), f).unwrap();
    prop_assert_eq!(BigUint::from(list.len()), count_monic_irreducibles(pm(p), f).unwrap());
    prop_assert!(list.windows(2).all(|w| w[0] < w[1]));
    prop_assert!(list.iter().all(|g| g.degree() == Some(f) && g.is_irreducible().unwrap()));
    Ok(())
}

// -- integer polynomials --

/// `Res(Π (t − rᵢ), g) = Π g(rᵢ)` for integer roots `rᵢ`.
pub fn resultant_by_roots(roots: Vec<i64>, g: Vec<i64>) -> Outcome {
    let f = roots.iter().fold(ZPoly::one(), |acc, &r| &acc * &ZPoly::from_i64(&[-r, 1]));
    let g = ZPoly::from_i64(&g);
    prop_assume!(!g.is_zero());
    let expected: BigInt = roots.iter().map(|&r| g.eval(&BigInt::from(r))).product();
    prop_assert_eq!(f.resultant(&g), expected);
    Ok(())
}

/// `p | disc(F)` iff `F mod p` has a repeated factor.
pub fn discriminant_detects_repeated_factors(f: ZPoly, p: u64) -> Outcome {
    let disc = f.discriminant().unwrap();
    let fs = f.reduce_mod(pm(p)).factor(0).unwrap();
    let repeated = fs.iter().any(|(_, e)| *e > 1);
    prop_assert_eq!(disc.is_multiple_of(&BigInt::from(p)), repeated);
    Ok(())
}

/// Other monic lifts `Pᵢ + p·hᵢ` change `M` by a multiple of every repeated `Pᵢ` mod `p`.
pub fn lift_independence(f: ZPoly, p: u64, shifts: Vec<i64>) -> Outcome {
    let v = match index_divisible(&f, pm(p)) {
        Ok(v) => v,
        Err(Error::Reducible(_)) => return Err(TestCaseError::reject("integer root")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let mut k = 0;
    let lifts: Vec<(ZPoly, usize)> = v
        .factors
        .iter()
        .map(|(g, e)| {
            let d = g.degree().unwrap();
            let h: Vec<i64> = (0..d).map(|_| {
                k += 1;
                shifts[k % shifts.len()]
            }).collect();
            let shift = ZPoly::from_i64(&h).scale(&BigInt::from(p));
            (&ZPoly::lift(g) + &shift, *e)
        })
        .collect();
    let n = f.cofactor_m(pm(p), &lifts).unwrap();
    let diff = (&v.m - &n).reduce_mod(pm(p));
    for (g, e) in &v.factors {
        if *e >= 2 {
            prop_assert!(diff.div_rem(g).unwrap().1.is_zero(), "M - N not divisible by {}", g);
        }
    }
    Ok(())
}

/// The criterion agrees with the enlargement search: `p` divides the index
/// of `θ` iff `Z[θ]` grows at `p`.
pub fn criterion_matches_enlargement(f: ZPoly, p: u64) -> Outcome {
    prop_assume!(!f.discriminant().unwrap().is_zero());
    let v = match index_divisible(&f, pm(p)) {
        Ok(v) => v,
        Err(Error::Reducible(_)) => return Err(TestCaseError::reject("integer root")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let order = order_from_polynomial(&f).unwrap();
    let grows = !p_enlarge(&order, pm(p)).same_as(&order);
    prop_assert_eq!(v.divisible, grows, "F = {}, p = {}", f, p);
    if !f.discriminant().unwrap().is_multiple_of(&BigInt::from(p)) {
        prop_assert!(!v.divisible);
    }
    Ok(())
}

/// When `p` does not divide the index, enumerating ideals of `Z[θ]` gives the
/// shape read off from `F mod p`, and `Σ e·f = n`.
pub fn shapes_agree(f: ZPoly, p: u64) -> Outcome {
    prop_assume!(!f.discriminant().unwrap().is_zero());
    let (shape, _) = match factor_prime_via_polynomial(&f, pm(p), 0) {
        Ok(s) => s,
        Err(Error::Reducible(_) | Error::IndexDivisible(_)) => return Err(TestCaseError::reject("skip")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    let n = f.degree().unwrap();
    prop_assert_eq!(shape.parts().iter().map(|s| s.e * s.f).sum::<usize>(), n);
    let order = order_from_polynomial(&f).unwrap();
    let fs = factor_p_in_order(&order, pm(p)).unwrap();
    let enumerated = factorization_shape(pm(p), &fs).unwrap();
    prop_assert!(shape.same_multiset(&enumerated), "{} vs {}", shape, enumerated);
    Ok(())
}

/// With a sufficient supply of prime functions the constructed generator has
/// index prime to `p` and the prescribed characteristic polynomial mod `p`.
pub fn good_generator_exists(f: ZPoly, p: u64) -> Outcome {
    prop_assume!(!f.discriminant().unwrap().is_zero());
    prop_assume!(f.integer_root().is_none());
    let order = p_enlarge(&order_from_polynomial(&f).unwrap(), pm(p));
    let fs = factor_p_in_order(&order, pm(p)).unwrap();
    let shape = factorization_shape(pm(p), &fs).unwrap();
    let Some(polys) = assign_prime_functions(pm(p), &shape) else {
        return Err(TestCaseError::reject("common index divisor"));
    };
    let theta = crt_good_generator(&order, pm(p), &fs, &polys).unwrap();
    prop_assert!(!element_index(&order, &theta).unwrap().is_multiple_of(&BigInt::from(p)));
    let expected = FpPoly::product(pm(p), &polys.iter().cloned().zip(fs.iter().map(|q| q.e)).collect::<Vec<_>>());
    prop_assert_eq!(theta.char_poly().reduce_mod(pm(p)), expected);
    Ok(())
}

// -- ideals and orders --

pub fn norm_multiplicative(mu: [i64; 3], nu: [i64; 3], ea: [u32; 3], eb: [u32; 3]) -> Outcome {
    let o = maximal_cubic_order();
    let [a, b, c] = prime_ideals(&o).unwrap();
    let m = o.element_i64(&mu).unwrap();
    let n = o.element_i64(&nu).unwrap();
    prop_assume!(!m.norm().is_zero() && !n.norm().is_zero());
    let pm_ = LatticeIdeal::principal(&m).unwrap();
    prop_assert_eq!(pm_.norm(), m.norm().abs());
    let i = pm_.product(&a.pow(ea[0])).unwrap().product(&b.pow(ea[1])).unwrap().product(&c.pow(ea[2])).unwrap();
    let j = LatticeIdeal::principal(&n).unwrap().product(&a.pow(eb[0])).unwrap().product(&b.pow(eb[1])).unwrap();
    let j = j.product(&c.pow(eb[2])).unwrap();
    let ij = i.product(&j).unwrap();
    prop_assert_eq!(ij.norm(), i.norm() * j.norm());
    prop_assert_eq!(&ij, &j.product(&i).unwrap());
    Ok(())
}

pub fn family_closed_form(a: i64, b: i64, a1: i64, b1: i64) -> Outcome {
    let fam = match cubic_family(a, b, a1, b1) {
        Ok(f) => f,
        Err(Error::CommonDivisor(_)) => return Err(TestCaseError::reject("common divisor")),
        Err(e) => return Err(TestCaseError::fail(e.to_string())),
    };
    prop_assert_eq!(fam.order.discriminant(), fam.closed_form_discriminant);
    Ok(())
}

/// `|index_form(coords)| = element_index(θ)`.
pub fn index_form_evaluates_to_index(coords: Vec<i64>) -> Outcome {
    let o = maximal_cubic_order();
    let form = index_form(&o).unwrap();
    let theta = o.element_i64(&coords[..3]).unwrap();
    let value = form.eval_i64(&coords[1..3]).abs();
    prop_assert_eq!(value, element_index(&o, &theta).unwrap());
    Ok(())
}

/// Runs `body` on `cases` inputs drawn from `strategy` with a fixed seed.
pub fn run<S: Strategy>(
    name: &str,
    cases: u32,
    strategy: S,
    body: impl Fn(S::Value) -> Outcome,
) -> Result<(), String> {
    use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
    let mut seed = [0u8; 32];
    for (i, b) in name.bytes().enumerate() {
        seed[i % 32] ^= b;
    }
    let config = Config { cases, max_global_rejects: cases * 50, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed));
    runner.run(&strategy, body).map_err(|e| format!("{name}: {e}"))
}

/// Defining polynomials of the fields checked extensionally.
pub fn corpus() -> Vec<(&'static str, ZPoly)> {
    vec![
        ("t^3-t^2-2t-8", ZPoly::from_i64(&[-8, -2, -1, 1])),
        ("t^4-t^3+t^2-2t+4", ZPoly::from_i64(&[4, -2, 1, -1, 1])),
        ("t^2-2", ZPoly::from_i64(&[-2, 0, 1])),
        ("t^2+1", ZPoly::from_i64(&[1, 0, 1])),
        ("t^2+5", ZPoly::from_i64(&[5, 0, 1])),
        ("t^2-5", ZPoly::from_i64(&[-5, 0, 1])),
        ("t^3-2", ZPoly::from_i64(&[-2, 0, 0, 1])),
        ("t^3-t-1", ZPoly::from_i64(&[-1, -1, 0, 1])),
        ("t^4+1", ZPoly::from_i64(&[1, 0, 0, 0, 1])),
        ("t^3-t^2-2t+1", ZPoly::from_i64(&[1, -2, -1, 1])),
    ]
}

/// Primes small enough to enumerate in rank `n`, plus every prime factor of `d`.
pub fn primes_to_check(d: &BigInt) -> Vec<u64> {
    let mut ps = vec![2u64, 3, 5, 7];
    let mut rest = d.abs();
    let mut q = 2u64;
    while rest > BigInt::from(1) {
        let bq = BigInt::from(q);
        if rest.is_multiple_of(&bq) {
            if !ps.contains(&q) {
                ps.push(q);
            }
            rest /= &bq;
        } else {
            q += 1;
        }
    }
    ps
}
