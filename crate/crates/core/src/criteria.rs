//! Splitting of `p` read off from `F mod p`, the index-divisibility test on
//! the cofactor `M`, and the supply test for common index divisors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::fppoly::{count_monic_irreducibles, FpPoly, MonicIrreducibles, PrimeModulus};
use crate::zpoly::ZPoly;
use crate::{Error, Result};

/// Seed used where a factorization is needed but the caller supplied none;
/// the factorization does not depend on it.
const DEFAULT_SEED: u64 = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ShapePart {
    /// residue degree
    pub f: usize,
    /// ramification exponent
    pub e: usize,
}

/// Multiset of `(f, e)` for the prime ideals above `p`, with `Σ e·f = n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingShape {
    p: PrimeModulus,
    n: usize,
    parts: Vec<ShapePart>,
}

impl SplittingShape {
    pub fn new(p: PrimeModulus, n: usize, parts: Vec<ShapePart>) -> Result<Self> {
        if parts.iter().any(|s| s.e == 0 || s.f == 0) {
            return Err(Error::ZeroDegree);
        }
        let total: usize = parts.iter().map(|s| s.e * s.f).sum();
        if total != n {
            return Err(Error::DimensionMismatch { expected: n, got: total });
        }
        Ok(SplittingShape { p, n, parts })
    }

    /// Shape from `(f, e)` pairs; the degree is inferred as `Σ e·f`.
    pub fn from_pairs(p: PrimeModulus, pairs: &[(usize, usize)]) -> Result<Self> {
        let parts: Vec<ShapePart> = pairs.iter().map(|&(f, e)| ShapePart { f, e }).collect();
        let n = parts.iter().map(|s| s.e * s.f).sum();
        Self::new(p, n, parts)
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[ShapePart] {
        &self.parts
    }

    /// Parts sorted by `(f, e)`; two shapes describe the same splitting iff
    /// their sorted parts agree.
    pub fn sorted_parts(&self) -> Vec<ShapePart> {
        let mut v = self.parts.clone();
        v.sort();
        v
    }

    pub fn same_multiset(&self, other: &SplittingShape) -> bool {
        self.p == other.p && self.n == other.n && self.sorted_parts() == other.sorted_parts()
    }

    pub fn is_ramified(&self) -> bool {
        self.parts.iter().any(|s| s.e > 1)
    }
}

impl fmt::Display for SplittingShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|s| format!("(f={}, e={})", s.f, s.e)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for SplittingShape {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SplittingShape", 3)?;
        st.serialize_field("p", &self.p.get())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("parts", &self.parts)?;
        st.end()
    }
}

/// The prime ideal generated by `p` and `P(θ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdealSymbol {
    pub p: PrimeModulus,
    /// Lift of the irreducible factor with coefficients in `[0, p)`.
    pub generator_poly: ZPoly,
    pub e: usize,
    pub f: usize,
}

impl fmt::Display for PrimeIdealSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.generator_poly)
    }
}

/// Outcome of the index-divisibility test for `F` at `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexVerdict {
    pub p: PrimeModulus,
    /// Factorization of `F mod p`.
    pub factors: Vec<(FpPoly, usize)>,
    /// Cofactor computed from the canonical lifts of `factors`.
    pub m: ZPoly,
    pub divisible: bool,
    /// A repeated factor `P` (exponent ≥ 2) that also divides `M mod p`.
    pub witness: Option<(FpPoly, usize)>,
}

impl IndexVerdict {
    pub fn parts(&self) -> Vec<ShapePart> {
        self.factors
            .iter()
            .map(|(g, e)| ShapePart { f: g.degree().unwrap_or(0), e: *e })
            .collect()
    }
}

struct Witness<'a>(&'a FpPoly, usize);

impl Serialize for Witness<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("poly", &self.0.to_string())?;
        m.serialize_entry("e", &self.1)?;
        m.end()
    }
}

/// `{"p":2,"parts":[{"f":1,"e":2},{"f":1,"e":1}],"index_divisible":true,"witness":{"poly":"t","e":2}}`
impl Serialize for IndexVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IndexVerdict", 4)?;
        st.serialize_field("p", &self.p.get())?;
        st.serialize_field("parts", &self.parts())?;
        st.serialize_field("index_divisible", &self.divisible)?;
        st.serialize_field("witness", &self.witness.as_ref().map(|(g, e)| Witness(g, *e)))?;
        st.end()
    }
}

fn check_input(f: &ZPoly) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial),
        _ if !f.is_monic() => Err(Error::NotMonic),
        Some(n) => {
            if n >= 2 {
                if let Some(r) = f.integer_root() {
                    return Err(Error::Reducible(r.to_string()));
                }
            }
            Ok(())
        }
    }
}

/// Decides whether `p` divides the index of a root of `F`: true iff some
/// irreducible `P` with `P² | F mod p` also divides `M mod p`.
///
/// `F` must be monic and irreducible over the rationals; only a rational-root
/// screen is applied here.
pub fn index_divisible(f: &ZPoly, p: PrimeModulus) -> Result<IndexVerdict> {
    verdict_with_seed(f, p, DEFAULT_SEED)
}

fn verdict_with_seed(f: &ZPoly, p: PrimeModulus, seed: u64) -> Result<IndexVerdict> {
    check_input(f)?;
    let factors = f.reduce_mod(p).factor(seed)?;
    let lifts: Vec<(ZPoly, usize)> = factors.iter().map(|(g, e)| (ZPoly::lift(g), *e)).collect();
    let m = f.cofactor_m(p, &lifts)?;
    let m_bar = m.reduce_mod(p);
    let witness = factors
        .iter()
        .filter(|(_, e)| *e >= 2)
        .find(|(g, _)| m_bar.div_rem(g).map(|(_, r)| r.is_zero()).unwrap_or(false))
        .cloned();
    Ok(IndexVerdict { p, factors, m, divisible: witness.is_some(), witness })
}

/// Splitting of `p` in the field of `F` when `p` does not divide the index:
/// one prime ideal `(p, Pᵢ(θ))` of degree `deg Pᵢ` and exponent `eᵢ` per
/// factor `Pᵢ^eᵢ` of `F mod p`.
pub fn factor_prime_via_polynomial(
    f: &ZPoly,
    p: PrimeModulus,
    seed: u64,
) -> Result<(SplittingShape, Vec<PrimeIdealSymbol>)> {
    let verdict = verdict_with_seed(f, p, seed)?;
    if verdict.divisible {
        return Err(Error::IndexDivisible(p.get()));
    }
    let n = f.degree().unwrap();
    let shape = SplittingShape::new(p, n, verdict.parts())?;
    let symbols = verdict
        .factors
        .iter()
        .map(|(g, e)| PrimeIdealSymbol {
            p,
            generator_poly: ZPoly::lift(g),
            e: *e,
            f: g.degree().unwrap(),
        })
        .collect();
    Ok((shape, symbols))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSupply {
    pub degree: usize,
    pub required: usize,
    #[serde(serialize_with = "ser_biguint")]
    pub available: BigUint,
}

fn ser_biguint<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CommonIndexReport {
    pub p: u64,
    pub common_index_divisor: bool,
    pub supply: Vec<DegreeSupply>,
}

/// `p` divides every index iff for some degree `d` the shape needs more
/// distinct prime ideals of degree `d` than there are monic irreducibles of
/// degree `d` mod `p`.
pub fn common_index_divisor(p: PrimeModulus, shape: &SplittingShape) -> CommonIndexReport {
    let mut required: BTreeMap<usize, usize> = BTreeMap::new();
    for part in shape.parts() {
        *required.entry(part.f).or_default() += 1;
    }
    let supply: Vec<DegreeSupply> = required
        .into_iter()
        .map(|(degree, required)| DegreeSupply {
            degree,
            required,
            available: count_monic_irreducibles(p, degree).expect("degree is positive"),
        })
        .collect();
    let common = supply.iter().any(|s| BigUint::from(s.required) > s.available);
    CommonIndexReport { p: p.get(), common_index_divisor: common, supply }
}

/// Pairwise distinct monic irreducibles matching the degrees of the shape's
/// parts, first-fit in enumeration order; `None` when the supply is short.
pub fn assign_prime_functions(p: PrimeModulus, shape: &SplittingShape) -> Option<Vec<FpPoly>> {
    if common_index_divisor(p, shape).common_index_divisor {
        return None;
    }
    let mut pools: BTreeMap<usize, MonicIrreducibles> = BTreeMap::new();
    shape
        .parts()
        .iter()
        .map(|part| {
            pools
                .entry(part.f)
                .or_insert_with(|| MonicIrreducibles::new(p, part.f).expect("degree is positive"))
                .next()
        })
        .collect()
}
