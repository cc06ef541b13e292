//! The index form of an order and common divisors of its values.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::fppoly::PrimeModulus;
use crate::orders::Order;
use crate::{Error, Result};

/// Largest rank for which the symbolic determinant is attempted.
pub const MAX_RANK: usize = 5;

/// Largest `p^v` searched by [`common_value_divisor`].
pub const DEFAULT_EVALUATION_BOUND: u64 = 1_000_000;

const VARIABLE_NAMES: [&str; 4] = ["x", "y", "u", "v"];

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn variable(vars: &[&str], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, BigInt::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; like terms add up.
    pub fn from_terms(vars: &[&str], terms: &[(Vec<u32>, i64)]) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e.clone(), BigInt::from(*c));
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(e);
        let slot = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in decreasing graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn same_vars(&self, other: &MultiPoly) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.same_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        self.scale(&BigInt::from(-1))
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.0.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.same_vars(other);
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        self.terms
            .iter()
            .map(|(m, c)| m.0.iter().zip(point).fold(c.clone(), |acc, (&e, x)| acc * Pow::pow(x, e)))
            .sum()
    }

    pub fn eval_i64(&self, point: &[i64]) -> BigInt {
        self.eval(&point.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn reduce_mod(&self, p: PrimeModulus) -> MultiPoly {
        let mut out = MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        for (m, c) in &self.terms {
            out.add_term(m.0.clone(), BigInt::from(p.reduce(c)));
        }
        out
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    /// Removes a variable that does not occur.
    fn drop_variable(&self, i: usize) -> MultiPoly {
        debug_assert!(!self.involves(i));
        let mut vars = self.vars.clone();
        vars.remove(i);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.remove(i);
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly { vars, terms }
    }
}

fn write_monomial(out: &mut String, vars: &[String], e: &[u32]) {
    for (v, &k) in vars.iter().zip(e) {
        match k {
            0 => {}
            1 => out.push_str(v),
            k => out.push_str(&format!("{v}^{k}")),
        }
    }
}

/// Printed like `2x^3 - x^2y - xy^2 - 2y^3`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            let constant = e.iter().all(|&k| k == 0);
            if !mag.is_one() || constant {
                out.push_str(&mag.to_string());
            }
            write_monomial(&mut out, &self.vars, e);
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

/// `det` of the coordinates of `1, ω, …, ω^(n−1)` for the generic element
/// `ω = z + x·ω₂ + y·ω₃ + ⋯`, as a form in the non-identity coordinates.
///
/// The determinant is computed with `z` symbolic; a result that still
/// depends on `z` means the multiplication table is inconsistent and is
/// reported as [`Error::InvalidTable`].
pub fn index_form(order: &Order) -> Result<MultiPoly> {
    let n = order.rank();
    if n > MAX_RANK {
        return Err(Error::RankTooLarge(n));
    }
    let mut names = vec!["z"];
    names.extend_from_slice(&VARIABLE_NAMES[..n - 1]);
    let zero = MultiPoly::zero(&names);
    let omega: Vec<MultiPoly> = (0..n).map(|i| MultiPoly::variable(&names, i)).collect();
    let mut power = vec![zero.clone(); n];
    power[0] = MultiPoly::constant(&names, BigInt::one());
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push(power.clone());
        let mut next = vec![zero.clone(); n];
        for (i, a) in power.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in omega.iter().enumerate() {
                let ab = a.mul(b);
                for (k, c) in order.table()[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        next[k] = next[k].add(&ab.scale(c));
                    }
                }
            }
        }
        power = next;
    }
    let det = cofactor_det(&rows, &zero);
    if det.involves(0) {
        return Err(Error::InvalidTable(format!("index form depends on the identity coordinate: {det}")));
    }
    Ok(det.drop_variable(0))
}

fn cofactor_det(m: &[Vec<MultiPoly>], zero: &MultiPoly) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = zero.clone();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = entry.mul(&cofactor_det(&minor, zero));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Whether `p` divides every value of `f` at integer points, decided by
/// evaluating at all `p^v` residue points. Requires `p^v ≤ 10⁶`.
pub fn common_value_divisor(f: &MultiPoly, p: PrimeModulus) -> Result<bool> {
    common_value_divisor_with_bound(f, p, DEFAULT_EVALUATION_BOUND)
}

pub fn common_value_divisor_with_bound(f: &MultiPoly, p: PrimeModulus, bound: u64) -> Result<bool> {
    let v = f.vars.len();
    let pu = p.get();
    if pu.checked_pow(v as u32).is_none_or(|c| c > bound) {
        return Err(Error::BoundExceeded(format!("{pu}^{v} evaluation points exceed {bound}")));
    }
    let terms: Vec<(Vec<u32>, u64)> = f
        .terms
        .iter()
        .map(|(m, c)| (m.0.clone(), p.reduce(c)))
        .filter(|(_, c)| *c != 0)
        .collect();
    let mut point = vec![0u64; v];
    loop {
        let value = terms.iter().fold(0u64, |acc, (e, c)| {
            let t = e.iter().zip(&point).fold(*c, |t, (&k, &x)| p.mul(t, p.pow(x, k as u64)));
            p.add(acc, t)
        });
        if value != 0 {
            return Ok(false);
        }
        let mut i = 0;
        while i < v {
            point[i] += 1;
            if point[i] < pu {
                break;
            }
            point[i] = 0;
            i += 1;
        }
        if i == v {
            return Ok(true);
        }
    }
}
