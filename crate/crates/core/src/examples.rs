//! Worked examples: the cubic field of discriminant −503 in which 2 divides
//! every index, the quartic field of discriminant 13²·17, and `Q(√2)`.
//!
//! [`run_paper_checks`] recomputes every tabulated value from scratch and
//! reports each comparison separately.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::criteria::{common_index_divisor, index_divisible};
use crate::fppoly::{FpPoly, PrimeModulus};
use crate::ideals::{
    crt_good_generator, factor_p_in_order, factorization_shape, ideal_from_generators, LatticeIdeal,
};
use crate::indexform::{common_value_divisor, index_form, MultiPoly};
use crate::orders::{cubic_family, maximal_order, order_from_polynomial, Order, OrderElement};
use crate::zpoly::ZPoly;
use crate::Result;

/// `t³ − t² − 2t − 8`
pub fn cubic_polynomial() -> ZPoly {
    ZPoly::from_i64(&[-8, -2, -1, 1])
}

/// `t⁴ − t³ + t² − 2t + 4`
pub fn quartic_polynomial() -> ZPoly {
    ZPoly::from_i64(&[4, -2, 1, -1, 1])
}

/// `t² − 2`
pub fn root_two_polynomial() -> ZPoly {
    ZPoly::from_i64(&[-2, 0, 1])
}

/// The maximal order `[1, α, β]` of the cubic field, with
/// `α² = 2 + α + 2β`, `β² = −2 + 2α − β`, `αβ = 4`.
pub fn maximal_cubic_order() -> Order {
    cubic_family(2, 2, 1, -1).expect("coprime parameters").order
}

/// `Z[√2]` with basis labels `1, a`.
pub fn root_two_order() -> Order {
    order_from_polynomial(&root_two_polynomial()).expect("monic")
}

/// Basis rows of `a = [2, α, 1+β]`, `b = [2, 1+α, β]`, `c = [2, α, β]`.
pub const PRIME_IDEALS: [(&str, [[i64; 3]; 3]); 3] = [
    ("a", [[2, 0, 0], [0, 1, 0], [1, 0, 1]]),
    ("b", [[2, 0, 0], [1, 1, 0], [0, 0, 1]]),
    ("c", [[2, 0, 0], [0, 1, 0], [0, 0, 1]]),
];

/// Integer basis of an ideal of the cubic order, one row per generator.
pub type Basis = [[i64; 3]; 3];
/// Coordinates of an element in the basis `1, a, b`.
pub type Coords = [i64; 3];

/// Exponents of `(a, b, c)` and the basis of the product.
pub const PRODUCTS: [(&str, [u32; 3], Basis); 6] = [
    ("a^2", [2, 0, 0], [[4, 0, 0], [0, 1, 0], [3, 0, 1]]),
    ("b^2", [0, 2, 0], [[4, 0, 0], [1, 1, 0], [0, 0, 1]]),
    ("c^2", [0, 0, 2], [[4, 0, 0], [2, 1, 0], [2, 0, 1]]),
    ("bc", [0, 1, 1], [[2, 0, 0], [0, 2, 0], [0, 0, 1]]),
    ("ca", [1, 0, 1], [[2, 0, 0], [0, 1, 0], [0, 0, 2]]),
    ("ab", [1, 1, 0], [[2, 0, 0], [0, 2, 0], [1, 1, 1]]),
];

/// Exponents of `(a, b, c)`, the basis of the product and its generator `μ`.
pub const PRINCIPAL_IDEALS: [(&str, [u32; 3], Basis, Coords); 10] = [
    ("abc", [1, 1, 1], [[2, 0, 0], [0, 2, 0], [0, 0, 2]], [2, 0, 0]),
    ("a^2c", [2, 0, 1], [[4, 0, 0], [0, 1, 0], [2, 0, 2]], [0, 1, 0]),
    ("b^2c", [0, 2, 1], [[4, 0, 0], [2, 2, 0], [0, 0, 1]], [0, 0, 1]),
    ("ac^2", [1, 0, 2], [[4, 0, 0], [2, 1, 0], [0, 0, 2]], [-2, 1, 0]),
    ("bc^2", [0, 1, 2], [[4, 0, 0], [0, 2, 0], [2, 0, 1]], [2, 0, -1]),
    ("a^2b", [2, 1, 0], [[4, 0, 0], [0, 2, 0], [3, 1, 1]], [3, 1, 1]),
    ("ab^2", [1, 2, 0], [[4, 0, 0], [2, 2, 0], [1, 1, 1]], [1, 1, 1]),
    ("a^3", [3, 0, 0], [[8, 0, 0], [4, 1, 0], [3, 0, 1]], [3, 2, 1]),
    ("b^3", [0, 3, 0], [[8, 0, 0], [1, 1, 0], [4, 0, 1]], [1, 1, 0]),
    ("c^3", [0, 0, 3], [[8, 0, 0], [2, 1, 0], [2, 0, 1]], [-4, 1, 1]),
];

/// Relations `Π lhs = Π rhs` among the generators `μ`. A sixth relation in
/// the source table is illegible and is not reproduced.
pub const MU_RELATIONS: [(&str, &[Coords], &[Coords]); 5] = [
    ("a(a-2)(1+a) = 8", &[[0, 1, 0], [-2, 1, 0], [1, 1, 0]], &[[8, 0, 0]]),
    ("(a-2)(3+a+b) = 2a", &[[-2, 1, 0], [3, 1, 1]], &[[0, 2, 0]]),
    ("a(2-b) = 2(a-2)", &[[0, 1, 0], [2, 0, -1]], &[[2, 0, 0], [-2, 1, 0]]),
    ("(a-2)(3+2a+b) = a^2", &[[-2, 1, 0], [3, 2, 1]], &[[0, 1, 0], [0, 1, 0]]),
    ("a(a+b-4) = (a-2)^2", &[[0, 1, 0], [-4, 1, 1]], &[[-2, 1, 0], [-2, 1, 0]]),
];

fn rows(m: &[[i64; 3]; 3]) -> Vec<Vec<BigInt>> {
    m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// The ideals `a, b, c` of `order`, built from their listed bases.
pub fn prime_ideals(order: &Order) -> Result<[LatticeIdeal; 3]> {
    let mk = |i: usize| -> Result<LatticeIdeal> {
        let gens: Vec<OrderElement> =
            rows(&PRIME_IDEALS[i].1).into_iter().map(|r| order.element(r)).collect::<Result<_>>()?;
        ideal_from_generators(order, &gens)
    };
    Ok([mk(0)?, mk(1)?, mk(2)?])
}

fn power_product(ideals: &[LatticeIdeal; 3], exps: [u32; 3]) -> Result<LatticeIdeal> {
    let mut acc = LatticeIdeal::whole(ideals[0].order());
    for (i, e) in ideals.iter().zip(exps) {
        acc = acc.product(&i.pow(e))?;
    }
    Ok(acc)
}

/// One recomputed value compared with its expected value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub got: String,
}

struct Checks(Vec<Check>);

impl Checks {
    fn eq<T: ToString>(&mut self, name: &str, expected: impl ToString, got: Result<T>) {
        let expected = expected.to_string();
        let (passed, got) = match got {
            Ok(v) => {
                let v = v.to_string();
                (v == expected, v)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        self.0.push(Check { name: name.to_string(), passed, expected, got });
    }
}

/// Recomputes every worked example. `cubic` is the order the cubic-field
/// tables are checked in; pass [`maximal_cubic_order`] for the real one.
pub fn run_paper_checks(cubic: &Order) -> Vec<Check> {
    let mut c = Checks(Vec::new());
    let f = cubic_polynomial();
    let two = PrimeModulus::new(2).expect("prime");
    let seven = PrimeModulus::new(7).expect("prime");

    c.eq("cubic: polynomial discriminant", -2012, f.discriminant());
    c.eq("cubic: field discriminant from enlargement", -503, maximal_order(&f).map(|m| m.discriminant));
    c.eq("cubic: index of a root", 2, maximal_order(&f).map(|m| m.index));
    c.eq("cubic: discriminant of the tabulated order", -503, Ok(cubic.discriminant()));
    c.eq(
        "cubic: cofactor M for lifts t, t-1",
        "t + 4",
        f.cofactor_m(two, &[(ZPoly::x(), 2), (ZPoly::from_i64(&[-1, 1]), 1)]),
    );
    c.eq("cubic: 2 divides the index of a root", true, index_divisible(&f, two).map(|v| v.divisible));

    let ideals = prime_ideals(cubic);
    let shown = |r: Result<LatticeIdeal>| r.map(|i| i.to_string());
    match &ideals {
        Ok(ideals) => {
            let mut found: Vec<String> = factor_p_in_order(cubic, two)
                .map(|fs| fs.iter().map(|q| format!("{} e={} f={}", q.ideal, q.e, q.f)).collect())
                .unwrap_or_else(|e| vec![format!("error: {e}")]);
            found.sort();
            let mut expected: Vec<String> = ideals.iter().map(|i| format!("{i} e=1 f=1")).collect();
            expected.sort();
            c.eq("cubic: primes above 2", expected.join("; "), Ok(found.join("; ")));
            for (i, (name, basis)) in PRIME_IDEALS.iter().enumerate() {
                let expected = LatticeIdeal::from_basis(cubic, &rows(basis)).map(|i| i.to_string());
                c.eq(&format!("cubic: {name} = {}", expected.as_deref().unwrap_or("?")), ideals[i].to_string(), expected);
            }
            for (name, exps, basis) in PRODUCTS {
                let expected = LatticeIdeal::from_basis(cubic, &rows(&basis))
                    .map(|i| i.to_string())
                    .unwrap_or_else(|e| format!("error: {e}"));
                c.eq(&format!("cubic: {name}"), expected, shown(power_product(ideals, exps)));
            }
            for (name, exps, basis, mu) in PRINCIPAL_IDEALS {
                let expected = LatticeIdeal::from_basis(cubic, &rows(&basis))
                    .map(|i| i.to_string())
                    .unwrap_or_else(|e| format!("error: {e}"));
                c.eq(&format!("cubic: {name}"), &expected, shown(power_product(ideals, exps)));
                let principal = cubic.element_i64(&mu).and_then(|m| LatticeIdeal::principal(&m));
                let label = cubic.element_i64(&mu).map(|m| m.to_string()).unwrap_or_default();
                c.eq(&format!("cubic: {name} = O({label})"), &expected, shown(principal));
            }
        }
        Err(e) => c.eq("cubic: ideals a, b, c", "three ideals", Err::<String, _>(e.clone())),
    }
    for (name, lhs, rhs) in MU_RELATIONS {
        let prod = |fs: &[[i64; 3]]| -> Result<OrderElement> {
            fs.iter().try_fold(cubic.one(), |acc, x| acc.mul(&cubic.element_i64(x)?))
        };
        let expected = prod(rhs).map(|x| x.to_string()).unwrap_or_else(|e| format!("error: {e}"));
        c.eq(&format!("cubic: {name}"), expected, prod(lhs));
    }
    let expected_form = MultiPoly::from_terms(
        &["x", "y"],
        &[(vec![3, 0], 2), (vec![2, 1], -1), (vec![1, 2], -1), (vec![0, 3], -2)],
    );
    c.eq(
        "cubic: index form (up to sign)",
        &expected_form,
        index_form(cubic).map(|g| if g == expected_form.neg() { g.neg() } else { g }),
    );
    c.eq(
        "cubic: index form is always even",
        true,
        index_form(cubic).and_then(|g| common_value_divisor(&g, two)),
    );
    c.eq(
        "family (2,2,1,-1): closed-form discriminant",
        -503,
        cubic_family(2, 2, 1, -1).map(|f| f.closed_form_discriminant),
    );

    let q = quartic_polynomial();
    let quartic = maximal_order(&q);
    c.eq("quartic: field discriminant 13^2*17", 2873, quartic.as_ref().map(|m| m.discriminant.clone()).map_err(Clone::clone));
    let shape = quartic
        .as_ref()
        .map_err(Clone::clone)
        .and_then(|m| factor_p_in_order(&m.order, two))
        .and_then(|fs| factorization_shape(two, &fs));
    c.eq("quartic: primes above 2", "{(f=2, e=1), (f=2, e=1)}", shape.as_ref().map(|s| s.to_string()).map_err(Clone::clone));
    c.eq(
        "quartic: 2 is a common index divisor",
        true,
        shape.map(|s| common_index_divisor(two, &s).common_index_divisor),
    );

    let r2 = root_two_order();
    let theta = factor_p_in_order(&r2, seven).and_then(|fs| {
        crt_good_generator(&r2, seven, &fs, &[FpPoly::from_i64(seven, &[0, 1]), FpPoly::from_i64(seven, &[-1, 1])])
    });
    let mod49 = theta.as_ref().map_err(Clone::clone).map(|t| {
        let r: Vec<String> = t.coords().iter().map(|x| x.mod_floor(&BigInt::from(49)).to_string()).collect();
        format!("{} + {}a", r[0], r[1])
    });
    c.eq("sqrt2: generator mod 49", "25 + 27a", mod49);
    c.eq(
        "sqrt2: characteristic polynomial mod 7",
        "t^2 + 6*t",
        theta.as_ref().map_err(Clone::clone).map(|t| t.char_poly().reduce_mod(seven)),
    );
    c.eq("sqrt2: index of 25+27a", 27, r2.element_i64(&[25, 27]).map(|t| t.index()));
    c.eq(
        "sqrt2: index of the generator is prime to 7",
        true,
        theta.map(|t| !t.index().is_multiple_of(&BigInt::from(7))),
    );
    c.0
}
