//! Polynomials over prime fields: arithmetic, gcds, factorization and
//! counting/enumeration of monic irreducibles ("prime functions" mod p).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::polytext;
use crate::{Error, Result};

/// A prime below 2³¹, so products of two residues fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub const BOUND: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if p < Self::BOUND && is_prime(p) {
            Ok(PrimeModulus(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub(crate) fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub(crate) fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    #[inline]
    pub(crate) fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue.
    pub(crate) fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0));
        self.pow(a, self.0 - 2)
    }

    pub(crate) fn reduce_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce(self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.0)).to_u64().unwrap()
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial-division primality test for word-sized integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Dense polynomial over `F_p`, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    modulus: PrimeModulus,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(modulus: PrimeModulus, coeffs: Vec<u64>) -> Self {
        let p = modulus.get();
        let coeffs = coeffs.into_iter().map(|c| c % p).collect();
        Self::from_reduced(modulus, coeffs)
    }

    pub fn from_i64(modulus: PrimeModulus, coeffs: &[i64]) -> Self {
        Self::from_reduced(modulus, coeffs.iter().map(|&c| modulus.reduce_i64(c)).collect())
    }

    fn from_reduced(modulus: PrimeModulus, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { modulus, coeffs }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        FpPoly { modulus, coeffs: Vec::new() }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(modulus, 1)
    }

    pub fn constant(modulus: PrimeModulus, c: u64) -> Self {
        Self::new(modulus, vec![c])
    }

    /// The polynomial `t`.
    pub fn x(modulus: PrimeModulus) -> Self {
        Self::new(modulus, vec![0, 1])
    }

    /// Parses the shared text format and reduces coefficients mod `p`.
    pub fn parse(s: &str, modulus: PrimeModulus) -> Result<Self> {
        let (coeffs, _) = polytext::parse_coeffs(s, None)?;
        Ok(Self::from_reduced(modulus, coeffs.iter().map(|c| modulus.reduce(c)).collect()))
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &FpPoly) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.modulus.get(), other.modulus.get()))
        }
    }

    pub fn try_add(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        Ok(self.add_raw(other))
    }

    pub fn try_sub(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        Ok(self.sub_raw(other))
    }

    pub fn try_mul(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        Ok(self.mul_raw(other))
    }

    /// Returns `(q, r)` with `self = q·divisor + r` and `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.div_rem_raw(divisor))
    }

    fn add_raw(&self, other: &FpPoly) -> FpPoly {
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                m.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::from_reduced(m, coeffs)
    }

    fn sub_raw(&self, other: &FpPoly) -> FpPoly {
        let m = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                m.sub(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Self::from_reduced(m, coeffs)
    }

    fn mul_raw(&self, other: &FpPoly) -> FpPoly {
        let m = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Self::zero(m);
        }
        let p = m.get();
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) % p;
            }
        }
        Self::from_reduced(m, out)
    }

    fn div_rem_raw(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        let m = self.modulus;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(m), self.clone());
        }
        let inv = m.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = m.mul(rem[k + dd], inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = m.sub(rem[k + j], m.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Self::from_reduced(m, quot), Self::from_reduced(m, rem))
    }

    fn rem_raw(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem_raw(divisor).1
    }

    /// Exact quotient; caller guarantees divisibility.
    fn div_exact(&self, divisor: &FpPoly) -> FpPoly {
        let (q, r) = self.div_rem_raw(divisor);
        debug_assert!(r.is_zero());
        q
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let m = self.modulus;
        let c = c % m.get();
        Self::from_reduced(m, self.coeffs.iter().map(|&a| m.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(self.modulus.inv(self.leading()))
    }

    pub fn derivative(&self) -> FpPoly {
        let m = self.modulus;
        let p = m.get();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| m.mul(c, i as u64 % p))
            .collect();
        Self::from_reduced(m, coeffs)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus;
        self.coeffs.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, x), c))
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, exp: &BigUint, modulus: &FpPoly) -> Result<FpPoly> {
        self.check(modulus)?;
        if modulus.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_mod_raw(exp, modulus))
    }

    fn pow_mod_raw(&self, exp: &BigUint, modulus: &FpPoly) -> FpPoly {
        let mut acc = Self::one(self.modulus).rem_raw(modulus);
        let base = self.rem_raw(modulus);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul_raw(&acc).rem_raw(modulus);
            if exp.bit(i) {
                acc = acc.mul_raw(&base).rem_raw(modulus);
            }
        }
        acc
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &FpPoly) -> Result<FpPoly> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.gcd_raw(other))
    }

    fn gcd_raw(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem_raw(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u·self + v·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &FpPoly) -> Result<(FpPoly, FpPoly, FpPoly)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let m = self.modulus;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(m), Self::zero(m));
        let (mut t0, mut t1) = (Self::zero(m), Self::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem_raw(&r1);
            let s = s0.sub_raw(&q.mul_raw(&s1));
            let t = t0.sub_raw(&q.mul_raw(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = m.inv(r0.leading());
        Ok((r0.scale(inv), s0.scale(inv), t0.scale(inv)))
    }

    /// Rabin's irreducibility test: `t^(p^n) ≡ t (mod f)` and
    /// `gcd(f, t^(p^(n/q)) − t) = 1` for every prime `q | n`.
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            None => return Err(Error::ZeroPolynomial),
            Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let m = self.modulus;
        let x = Self::x(m);
        let p = BigUint::from(m.get());
        let mut frob = Vec::with_capacity(n + 1);
        let mut h = x.rem_raw(&f);
        frob.push(h.clone());
        for _ in 0..n {
            h = h.pow_mod_raw(&p, &f);
            frob.push(h.clone());
        }
        if frob[n] != x.rem_raw(&f) {
            return Ok(false);
        }
        for q in prime_divisors(n as u64) {
            let k = n / q as usize;
            if !f.gcd_raw(&frob[k].sub_raw(&x)).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree and then by ascending coefficient sequence. The
    /// leading coefficient is dropped. The seed drives the randomized
    /// equal-degree step; the result does not depend on it.
    pub fn factor(&self, seed: u64) -> Result<Vec<(FpPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, mult) in squarefree_decomposition(&f) {
            for (h, d) in distinct_degree(&g) {
                for k in equal_degree(&h, d, &mut rng) {
                    out.push((k, mult));
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// `Π fᵢ^eᵢ`.
    pub fn product(modulus: PrimeModulus, factors: &[(FpPoly, usize)]) -> FpPoly {
        let mut acc = Self::one(modulus);
        for (f, e) in factors {
            for _ in 0..*e {
                acc = acc.mul_raw(f);
            }
        }
        acc
    }

    pub fn display_with(&self, var: char) -> String {
        let big: Vec<BigInt> = self.coeffs.iter().map(|&c| BigInt::from(c)).collect();
        polytext::format_coeffs(&big, var)
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Modulus, then degree, then coefficient sequence from the constant term up.
impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.modulus
            .cmp(&other.modulus)
            .then(self.coeffs.len().cmp(&other.coeffs.len()))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('t'))
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) mod {}", self.display_with('t'), self.modulus)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $raw:ident) => {
        impl $tr for &FpPoly {
            type Output = FpPoly;
            /// Panics when the moduli differ; use the `try_` variant to get an error instead.
            fn $method(self, rhs: &FpPoly) -> FpPoly {
                self.check(rhs).expect("modulus mismatch");
                self.$raw(rhs)
            }
        }
        impl $tr for FpPoly {
            type Output = FpPoly;
            fn $method(self, rhs: FpPoly) -> FpPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, add_raw);
forward_op!(Sub, sub, sub_raw);
forward_op!(Mul, mul, mul_raw);

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let m = self.modulus;
        FpPoly::from_reduced(m, self.coeffs.iter().map(|&c| m.neg(c)).collect())
    }
}

/// Replaces `f(t^p)` by `f(t)`; valid because `a^p = a` in `F_p`.
fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.modulus.get() as usize;
    let coeffs = f.coeffs.iter().step_by(p).copied().collect();
    FpPoly::from_reduced(f.modulus, coeffs)
}

/// Squarefree decomposition of a monic polynomial: pairs `(g, i)` with the
/// `g` pairwise coprime, squarefree, and `f = Π g^i`.
fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let m = f.modulus;
    let p = m.get() as usize;
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, i) in squarefree_decomposition(&pth_root(f)) {
            out.push((g, i * p));
        }
        return out;
    }
    let mut c = f.gcd_raw(&d);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd_raw(&c);
        let fac = w.div_exact(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = c.div_exact(&y);
        w = y;
        i += 1;
    }
    if !c.is_one() {
        for (g, j) in squarefree_decomposition(&pth_root(&c)) {
            out.push((g, j * p));
        }
    }
    out
}

/// Splits a squarefree monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let m = f.modulus;
    let p = BigUint::from(m.get());
    let x = FpPoly::x(m);
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut h = x.rem_raw(&f);
    let mut i = 1;
    while f.degree().unwrap_or(0) >= 2 * i {
        h = h.pow_mod_raw(&p, &f);
        let g = f.gcd_raw(&h.sub_raw(&x));
        if !g.is_one() {
            f = f.div_exact(&g);
            h = h.rem_raw(&f);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(d) = f.degree().filter(|&d| d > 0) {
        out.push((f, d));
    }
    out
}

/// Cantor–Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
/// In characteristic 2 the splitting polynomial is the absolute trace.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let m = f.modulus;
    let p = m.get();
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) >> 1;
    loop {
        let a = FpPoly::new(m, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let g = f.gcd_raw(&a);
        let g = if !g.is_one() {
            g
        } else {
            let b = if p == 2 {
                let mut s = a.clone();
                let mut tr = a.clone();
                for _ in 1..d {
                    s = s.mul_raw(&s).rem_raw(f);
                    tr = tr.add_raw(&s);
                }
                tr
            } else {
                a.pow_mod_raw(&exponent, f).sub_raw(&FpPoly::one(m))
            };
            f.gcd_raw(&b)
        };
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.div_exact(&g), d, rng));
            return out;
        }
    }
}

pub(crate) fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn mobius(n: u64) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `f` over `F_p`:
/// `(1/f) Σ_{d|f} μ(d) p^(f/d)`.
pub fn count_monic_irreducibles(p: PrimeModulus, f: usize) -> Result<BigUint> {
    if f == 0 {
        return Err(Error::ZeroDegree);
    }
    let base = BigInt::from(p.get());
    let mut total = BigInt::zero();
    for d in 1..=f {
        if !f.is_multiple_of(d) {
            continue;
        }
        match mobius(d as u64) {
            0 => {}
            s => total += BigInt::from(s) * base.pow((f / d) as u32),
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(f));
    debug_assert!(r.is_zero());
    Ok(q.to_biguint().expect("count is positive"))
}

/// Lazily enumerates monic irreducibles of a fixed degree in ascending
/// coefficient order (constant term most significant).
#[derive(Clone, Debug)]
pub struct MonicIrreducibles {
    modulus: PrimeModulus,
    digits: Vec<u64>,
    done: bool,
}

impl MonicIrreducibles {
    pub fn new(p: PrimeModulus, f: usize) -> Result<Self> {
        if f == 0 {
            return Err(Error::ZeroDegree);
        }
        Ok(MonicIrreducibles { modulus: p, digits: vec![0; f], done: false })
    }

    fn advance(&mut self) {
        let p = self.modulus.get();
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < p {
                return;
            }
            *d = 0;
        }
        self.done = true;
    }
}

impl Iterator for MonicIrreducibles {
    type Item = FpPoly;

    fn next(&mut self) -> Option<FpPoly> {
        while !self.done {
            let mut coeffs = self.digits.clone();
            coeffs.push(1);
            let candidate = FpPoly::from_reduced(self.modulus, coeffs);
            self.advance();
            if candidate.is_irreducible().unwrap_or(false) {
                return Some(candidate);
            }
        }
        None
    }
}

/// All monic irreducibles of degree `f`, in ascending coefficient order.
pub fn enumerate_monic_irreducibles(p: PrimeModulus, f: usize) -> Result<Vec<FpPoly>> {
    Ok(MonicIrreducibles::new(p, f)?.collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(p: u64, c: &[i64]) -> FpPoly {
        FpPoly::from_i64(pm(p), c)
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(2_147_483_647).is_ok());
        assert_eq!(PrimeModulus::new(4), Err(Error::NotPrime(4)));
        assert!(PrimeModulus::new(0).is_err());
        assert!(PrimeModulus::new(1).is_err());
        assert!(PrimeModulus::new((1 << 31) + 11).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let t = FpPoly::x(pm(2));
        let t1 = poly(2, &[1, 1]);
        assert_eq!(&t * &t1, poly(2, &[0, 1, 1]));
        assert!((&t1 + &t1).is_zero());
        let f = poly(2, &[-8, -2, -1, 1]);
        let (q, r) = f.div_rem(&poly(2, &[0, 0, 1])).unwrap();
        assert_eq!(q, poly(2, &[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn arithmetic_errors() {
        let a = poly(2, &[1, 1]);
        let b = poly(3, &[1, 1]);
        assert_eq!(a.try_add(&b), Err(Error::ModulusMismatch(2, 3)));
        assert!(a.try_mul(&b).is_err());
        assert_eq!(a.div_rem(&FpPoly::zero(pm(2))), Err(Error::DivisionByZero));
        assert_eq!(FpPoly::zero(pm(5)).gcd(&FpPoly::zero(pm(5))), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn gcd_examples() {
        let g = poly(2, &[0, 1, 1]).gcd(&poly(2, &[1, 0, 1])).unwrap();
        assert_eq!(g, poly(2, &[1, 1]));
        let f = poly(7, &[3, 0, 2]);
        assert_eq!(f.gcd(&FpPoly::zero(pm(7))).unwrap(), f.monic());
    }

    #[test]
    fn ext_gcd_witness() {
        // S = t + 1, P = t over F_2: SU + PV = 1
        let s = poly(2, &[1, 1]);
        let p = poly(2, &[0, 1]);
        let (g, u, v) = s.ext_gcd(&p).unwrap();
        assert!(g.is_one());
        assert!((&(&s * &u) + &(&p * &v)).is_one());
        let a = poly(13, &[5, 0, 3, 1, 7]);
        let b = poly(13, &[2, 11, 1]);
        let (g, u, v) = a.ext_gcd(&b).unwrap();
        assert_eq!(&(&a * &u) + &(&b * &v), g);
        assert_eq!(g, a.gcd(&b).unwrap());
    }

    #[test]
    fn factor_examples() {
        let f = poly(2, &[-8, -2, -1, 1]);
        assert_eq!(f.factor(0).unwrap(), vec![(poly(2, &[0, 1]), 2), (poly(2, &[1, 1]), 1)]);
        let g = poly(7, &[-833, -50, 1]);
        assert_eq!(g.factor(0).unwrap(), vec![(poly(7, &[0, 1]), 1), (poly(7, &[6, 1]), 1)]);
        let h = poly(2, &[1, 1, 1]);
        assert_eq!(h.factor(0).unwrap(), vec![(h.clone(), 1)]);
        assert_eq!(FpPoly::zero(pm(3)).factor(0), Err(Error::ZeroPolynomial));
        assert!(poly(5, &[3]).factor(1).unwrap().is_empty());
    }

    #[test]
    fn factor_high_multiplicity_in_small_characteristic() {
        // (t+1)^6 (t^2+t+1)^2 t^4 over F_2 involves p-th roots twice
        let m = pm(2);
        let parts = vec![(poly(2, &[0, 1]), 4), (poly(2, &[1, 1]), 6), (poly(2, &[1, 1, 1]), 2)];
        let f = FpPoly::product(m, &parts);
        assert_eq!(f.factor(9).unwrap(), parts);
        let m3 = pm(3);
        let parts3 = vec![(poly(3, &[1, 1]), 3), (poly(3, &[1, 0, 1]), 9)];
        assert_eq!(FpPoly::product(m3, &parts3).factor(2).unwrap(), parts3);
    }

    #[test]
    fn irreducibility_examples() {
        assert!(poly(2, &[1, 1, 1]).is_irreducible().unwrap());
        assert!(!poly(2, &[1, 0, 1]).is_irreducible().unwrap());
        assert!(poly(2, &[1, 1, 0, 1]).is_irreducible().unwrap());
        assert_eq!(poly(2, &[1]).is_irreducible(), Err(Error::ConstantPolynomial));
        assert_eq!(FpPoly::zero(pm(2)).is_irreducible(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn irreducible_cubic_mod_two_by_root_check() {
        // a cubic is irreducible iff it has no root
        for bits in 0..8u64 {
            let f = FpPoly::new(pm(2), vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, 1]);
            let no_root = f.eval(0) != 0 && f.eval(1) != 0;
            assert_eq!(f.is_irreducible().unwrap(), no_root, "{f:?}");
        }
    }

    #[test]
    fn counts_and_enumeration() {
        assert_eq!(count_monic_irreducibles(pm(2), 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_monic_irreducibles(pm(2), 2).unwrap(), BigUint::from(1u32));
        assert_eq!(count_monic_irreducibles(pm(2), 3).unwrap(), BigUint::from(2u32));
        assert_eq!(count_monic_irreducibles(pm(2), 0), Err(Error::ZeroDegree));
        assert_eq!(
            enumerate_monic_irreducibles(pm(2), 1).unwrap(),
            vec![poly(2, &[0, 1]), poly(2, &[1, 1])]
        );
        assert_eq!(enumerate_monic_irreducibles(pm(2), 2).unwrap(), vec![poly(2, &[1, 1, 1])]);
        assert_eq!(
            enumerate_monic_irreducibles(pm(3), 1).unwrap(),
            vec![poly(3, &[0, 1]), poly(3, &[1, 1]), poly(3, &[2, 1])]
        );
    }

    #[test]
    fn degree_three_count_matches_exhaustive_enumeration() {
        let brute = (0..8u64)
            .filter(|bits| {
                let f = FpPoly::new(pm(2), vec![bits & 1, (bits >> 1) & 1, (bits >> 2) & 1, 1]);
                f.eval(0) != 0 && f.eval(1) != 0
            })
            .count();
        assert_eq!(BigUint::from(brute), count_monic_irreducibles(pm(2), 3).unwrap());
    }

    #[test]
    fn parse_and_print() {
        let f = FpPoly::parse("t^2 - 50*t - 833", pm(7)).unwrap();
        assert_eq!(f.to_string(), "t^2 + 6*t");
        assert_eq!(FpPoly::parse(&f.to_string(), pm(7)).unwrap(), f);
    }
}
