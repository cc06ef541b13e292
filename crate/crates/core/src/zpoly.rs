//! Integer polynomials: exact arithmetic, resultants and discriminants,
//! reduction and lifting modulo `p`, and the cofactor `M` in
//! `F = P₁^e₁ ⋯ P_m^e_m − p·M`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fppoly::{FpPoly, PrimeModulus};
use crate::lattice::det_bareiss;
use crate::polytext;
use crate::{Error, Result};

/// Dense polynomial with arbitrary-precision integer coefficients, ascending,
/// no trailing zeros. The zero polynomial has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// Parses the shared text format, with an explicit variable letter.
    pub fn parse_with_var(s: &str, var: char) -> Result<Self> {
        polytext::parse_coeffs(s, Some(var)).map(|(c, _)| Self::new(c))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn derivative(&self) -> ZPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: usize) -> ZPoly {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Division by a monic polynomial: `self = q·divisor + r`, `deg r < deg divisor`.
    pub fn div_rem_monic(&self, divisor: &ZPoly) -> Result<(ZPoly, ZPoly)> {
        if !divisor.is_monic() {
            return Err(Error::NotMonic);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * d;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Divides every coefficient by `k`, failing unless all divisions are exact.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Option<ZPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Self::new(out))
    }

    pub fn reduce_mod(&self, p: PrimeModulus) -> FpPoly {
        FpPoly::new(p, self.coeffs.iter().map(|c| p.reduce(c)).collect())
    }

    /// Lift with coefficients in `[0, p)`.
    pub fn lift(g: &FpPoly) -> ZPoly {
        Self::new(g.coeffs().iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Resultant via the Sylvester matrix, evaluated by fraction-free elimination.
    pub fn resultant(&self, other: &ZPoly) -> BigInt {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return BigInt::zero();
        };
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        det_bareiss(&sylvester(self, other))
    }

    /// `(−1)^(n(n−1)/2) · Res(f, f′)` for monic `f` of degree `n ≥ 1`.
    pub fn discriminant(&self) -> Result<BigInt> {
        match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            _ if !self.is_monic() => return Err(Error::NotMonic),
            Some(1) => return Ok(BigInt::one()),
            Some(_) => {}
        }
        let n = self.degree().unwrap();
        let res = self.resultant(&self.derivative());
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -res } else { res })
    }

    /// The cofactor `M = (Π liftᵢ^eᵢ − f) / p`.
    pub fn cofactor_m(&self, p: PrimeModulus, lifts: &[(ZPoly, usize)]) -> Result<ZPoly> {
        if !self.is_monic() || lifts.iter().any(|(g, _)| !g.is_monic()) {
            return Err(Error::NotMonic);
        }
        let prod = lifts.iter().fold(Self::one(), |acc, (g, e)| &acc * &g.pow(*e));
        (&prod - self).div_exact_scalar(&BigInt::from(p.get())).ok_or(Error::NotCongruent(p.get()))
    }

    /// Some integer root of a monic polynomial, if one exists. Roots divide
    /// the constant term; candidates beyond `10¹²` in absolute value are not tried.
    pub fn integer_root(&self) -> Option<BigInt> {
        let c0 = self.coeffs.first()?;
        if c0.is_zero() {
            return Some(BigInt::zero());
        }
        let a = c0.abs();
        let limit = BigInt::from(1_000_000_000_000u64);
        let root_bound = a.sqrt().min(BigInt::from(1_000_000u64));
        let try_root = |r: &BigInt| -> Option<BigInt> {
            if r > &limit {
                return None;
            }
            [r.clone(), -r].into_iter().find(|x| self.eval(x).is_zero())
        };
        let mut d = BigInt::one();
        while d <= root_bound {
            if a.is_multiple_of(&d) {
                if let Some(r) = try_root(&d) {
                    return Some(r);
                }
                if let Some(r) = try_root(&(&a / &d)) {
                    return Some(r);
                }
            }
            d += 1;
        }
        None
    }

    pub fn display_with(&self, var: char) -> String {
        polytext::format_coeffs(&self.coeffs, var)
    }

    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

/// Sylvester matrix of `f` (degree m) and `g` (degree n), size `(m+n)×(m+n)`.
pub fn sylvester(f: &ZPoly, g: &ZPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, shifts, deg) in [(f, n, m), (g, m, n)] {
        for s in 0..shifts {
            let mut row = vec![BigInt::zero(); size];
            for k in 0..=deg {
                // highest coefficient first
                row[s + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

impl FromStr for ZPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        polytext::parse_coeffs(s, None).map(|(c, _)| Self::new(c))
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('t'))
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ZPoly({})", self.display_with('t'))
    }
}

impl Add for &ZPoly {
    type Output = ZPoly;
    fn add(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ZPoly {
    type Output = ZPoly;
    fn sub(self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ZPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ZPoly {
    type Output = ZPoly;
    fn mul(self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }
}

impl Neg for &ZPoly {
    type Output = ZPoly;
    fn neg(self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_op {
    ($tr:ident, $m:ident) => {
        impl $tr for ZPoly {
            type Output = ZPoly;
            fn $m(self, rhs: ZPoly) -> ZPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&z(&[-2, 1]) * &z(&[4, 1, 1]), z(&[-8, 2, -1, 1]));
        let (q, r) = z(&[-24, 26, -9, 1]).div_rem_monic(&z(&[-2, 1])).unwrap();
        assert_eq!(q, z(&[12, -7, 1]));
        assert!(r.is_zero());
        let f = z(&[-8, -2, -1, 1]);
        assert_eq!(&f + &ZPoly::zero(), f);
        assert_eq!(f.div_rem_monic(&z(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(z(&[-8, -2, -1, 1]).discriminant().unwrap(), BigInt::from(-2012));
        assert_eq!(z(&[-833, -50, 1]).discriminant().unwrap(), BigInt::from(5832));
        assert_eq!(z(&[1, 0, 1]).discriminant().unwrap(), BigInt::from(-4));
        assert_eq!(z(&[5]).discriminant(), Err(Error::ConstantPolynomial));
        assert_eq!(z(&[1, 0, 2]).discriminant(), Err(Error::NotMonic));
    }

    #[test]
    fn reduce_and_lift() {
        let f = z(&[-8, -2, -1, 1]);
        assert_eq!(f.reduce_mod(pm(2)), FpPoly::from_i64(pm(2), &[0, 0, 1, 1]));
        let g = z(&[-833, -50, 1]).reduce_mod(pm(7));
        assert_eq!(g, FpPoly::from_i64(pm(7), &[0, 6, 1]));
        assert_eq!(ZPoly::lift(&g).reduce_mod(pm(7)), g);
        assert!(ZPoly::lift(&g).coeffs().iter().all(|c| *c >= BigInt::zero() && *c < BigInt::from(7)));
    }

    #[test]
    fn cofactor_examples() {
        let f = z(&[-8, -2, -1, 1]);
        let m = f.cofactor_m(pm(2), &[(z(&[0, 1]), 2), (z(&[-1, 1]), 1)]).unwrap();
        assert_eq!(m, z(&[4, 1]));
        let m = z(&[-2, 0, 1]).cofactor_m(pm(2), &[(z(&[0, 1]), 2)]).unwrap();
        assert_eq!(m, z(&[1]));
        let g = z(&[-6, 1, 1]);
        let m = g.cofactor_m(pm(5), &[(z(&[-2, 1]), 1), (z(&[3, 1]), 1)]).unwrap();
        assert!(m.is_zero());
        assert_eq!(
            f.cofactor_m(pm(2), &[(z(&[0, 1]), 3)]),
            Err(Error::NotCongruent(2))
        );
    }

    #[test]
    fn integer_roots() {
        assert_eq!(z(&[-8, 2, -1, 1]).integer_root(), Some(BigInt::from(2)));
        assert_eq!(z(&[-8, -2, -1, 1]).integer_root(), None);
        assert_eq!(z(&[0, 3, 1]).integer_root(), Some(BigInt::zero()));
        assert_eq!(z(&[-2, 0, 1]).integer_root(), None);
        assert_eq!(z(&[36, 0, 1, 1]).integer_root(), None);
        assert_eq!(z(&[-97, 1]).integer_root(), Some(BigInt::from(97)));
    }

    #[test]
    fn text_round_trip() {
        let f: ZPoly = "t^3 - t^2 - 2*t - 8".parse().unwrap();
        assert_eq!(f, z(&[-8, -2, -1, 1]));
        assert_eq!(f.to_string(), "t^3 - t^2 - 2*t - 8");
        assert_eq!(f.display_with('x'), "x^3 - x^2 - 2*x - 8");
        assert_eq!(ZPoly::parse_with_var("x^2 - 2", 'x').unwrap(), z(&[-2, 0, 1]));
    }
}
