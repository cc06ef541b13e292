//! Integral ideals of an order, stored as full-rank sublattices in Hermite
//! normal form relative to the order's basis.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::criteria::{common_index_divisor, ShapePart, SplittingShape};
use crate::fppoly::{FpPoly, PrimeModulus};
use crate::lattice::{self, hnf, hnf_with_transform, reduce_mod_lattice, solve_lower, Matrix};
use crate::modp::{for_each_subspace, subspace_count};
use crate::orders::{p_enlarge, Order, OrderElement};
use crate::zpoly::ZPoly;
use crate::{Error, Result};

/// Largest `pⁿ` that [`factor_p_in_order`] enumerates without being asked.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 10_000;

/// An integral ideal: the row span of a lower-triangular Hermite basis.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeIdeal {
    order: Order,
    basis: Matrix,
}

impl LatticeIdeal {
    /// Ideal with the given lattice basis. The span must be full rank and
    /// closed under multiplication by the order.
    pub fn from_basis(order: &Order, rows: &[Vec<BigInt>]) -> Result<Self> {
        let n = order.rank();
        let basis = hnf(rows, n)?;
        let ideal = LatticeIdeal { order: order.clone(), basis };
        for row in &ideal.basis {
            for j in 1..n {
                let prod = order.mul_coords(row, &unit(n, j));
                if !ideal.contains_coords(&prod) {
                    return Err(Error::InvalidTable(format!(
                        "lattice {} is not closed under multiplication by {}",
                        ideal,
                        order.labels()[j]
                    )));
                }
            }
        }
        Ok(ideal)
    }

    pub fn from_basis_i64(order: &Order, rows: &[&[i64]]) -> Result<Self> {
        let rows: Matrix = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_basis(order, &rows)
    }

    pub fn whole(order: &Order) -> Self {
        LatticeIdeal { order: order.clone(), basis: lattice::identity(order.rank()) }
    }

    pub fn principal(mu: &OrderElement) -> Result<Self> {
        ideal_from_generators(mu.order(), std::slice::from_ref(mu))
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    /// Hermite basis: row `i` has its pivot in column `i`, entries to the
    /// left of a pivot are reduced modulo that pivot.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.basis.iter().map(|r| r.iter().map(|x| x.to_i64()).collect()).collect()
    }

    /// Index in the order, `|det(basis)|`.
    pub fn norm(&self) -> BigInt {
        lattice::triangular_det(&self.basis)
    }

    /// The positive generator of the ideal's intersection with `Z`.
    pub fn minimum(&self) -> BigInt {
        self.basis[0][0].clone()
    }

    pub fn is_whole(&self) -> bool {
        self.norm().is_one()
    }

    pub(crate) fn contains_coords(&self, x: &[BigInt]) -> bool {
        solve_lower(&self.basis, x).is_some()
    }

    pub fn contains_element(&self, x: &OrderElement) -> Result<bool> {
        if !x.order().same_as(&self.order) {
            return Err(Error::OrderMismatch);
        }
        Ok(self.contains_coords(x.coords()))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &LatticeIdeal) -> Result<bool> {
        self.check(other)?;
        Ok(self.basis.iter().all(|r| other.contains_coords(r)))
    }

    /// `other` divides `self`, which for ideals of a maximal order is `self ⊆ other`.
    pub fn is_divisible_by(&self, other: &LatticeIdeal) -> Result<bool> {
        self.is_subset_of(other)
    }

    fn check(&self, other: &LatticeIdeal) -> Result<()> {
        if self.order.same_as(&other.order) {
            Ok(())
        } else {
            Err(Error::OrderMismatch)
        }
    }

    /// Span of the pairwise products of the two bases.
    pub fn product(&self, other: &LatticeIdeal) -> Result<LatticeIdeal> {
        self.check(other)?;
        let rows: Matrix = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.order.mul_coords(a, b))
            .collect();
        Ok(LatticeIdeal { order: self.order.clone(), basis: hnf(&rows, self.order.rank())? })
    }

    pub fn pow(&self, e: u32) -> LatticeIdeal {
        let mut acc = LatticeIdeal::whole(&self.order);
        for _ in 0..e {
            acc = acc.product(self).expect("same order");
        }
        acc
    }

    /// Canonical representative of `x` modulo the ideal.
    pub fn reduce(&self, x: &[BigInt]) -> Vec<BigInt> {
        reduce_mod_lattice(&self.basis, x)
    }

    /// Whether the quotient of the order by this ideal is a field.
    ///
    /// The quotient has `q = N` elements; it is a field exactly when `N` is a
    /// prime power and every nonzero class satisfies `x^(q−1) = 1`.
    pub fn is_prime(&self) -> bool {
        let norm = self.norm();
        let p = self.minimum();
        if norm.is_one() || !p.to_u64().is_some_and(crate::fppoly::is_prime) {
            return false;
        }
        let mut rest = norm.clone();
        while rest.is_multiple_of(&p) {
            rest /= &p;
        }
        if !rest.is_one() {
            return false;
        }
        let Some(q) = norm.to_u64() else {
            return false;
        };
        let exp = BigUint::from(q - 1);
        let one = unit(self.order.rank(), 0);
        self.residues().skip(1).all(|x| self.pow_mod(&x, &exp) == one)
    }

    fn pow_mod(&self, x: &[BigInt], e: &BigUint) -> Vec<BigInt> {
        let mut acc = self.reduce(&unit(self.order.rank(), 0));
        for i in (0..e.bits()).rev() {
            acc = self.reduce(&self.order.mul_coords(&acc, &acc));
            if e.bit(i) {
                acc = self.reduce(&self.order.mul_coords(&acc, x));
            }
        }
        acc
    }

    /// Canonical residues `0 ≤ c_j < h_jj` in coordinate-lexicographic
    /// order, first coordinate most significant; zero comes first.
    pub fn residues(&self) -> impl Iterator<Item = Vec<BigInt>> + '_ {
        let n = self.order.rank();
        let bounds: Vec<BigInt> = (0..n).map(|j| self.basis[j][j].clone()).collect();
        let mut next = Some(vec![BigInt::zero(); n]);
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            let mut i = n;
            while i > 0 {
                i -= 1;
                succ[i] += 1;
                if succ[i] < bounds[i] {
                    next = Some(succ);
                    break;
                }
                succ[i] = BigInt::zero();
            }
            Some(cur)
        })
    }

    /// Largest `v` with `prime^v ⊇ self`.
    pub fn valuation(&self, prime: &LatticeIdeal) -> Result<u32> {
        self.check(prime)?;
        if !prime.is_prime() {
            return Err(Error::NotPrimeIdeal);
        }
        let norm = self.norm();
        let mut v = 0;
        let mut power = prime.clone();
        while power.norm() <= norm && self.is_subset_of(&power)? {
            v += 1;
            power = power.product(prime)?;
        }
        Ok(v)
    }

    /// One line per basis row, after an `ideal <rank>` header.
    pub fn to_text(&self) -> String {
        let mut out = format!("ideal {}\n", self.order.rank());
        for r in &self.basis {
            let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            out.push_str(&v.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(order: &Order, text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(m.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("ideal "))
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("expected 'ideal <rank>'"))?;
        if n != order.rank() {
            return Err(Error::DimensionMismatch { expected: order.rank(), got: n });
        }
        let rows: Matrix = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|x| x.parse::<BigInt>().map_err(|_| bad(&format!("bad integer {x}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(bad("ideal basis must be square"));
        }
        Self::from_basis(order, &rows)
    }
}

/// Bracket notation over the order's labels, e.g. `[2, a, 1+b]`.
impl fmt::Display for LatticeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|r| self.order.format_coords(r)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for LatticeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeIdeal{self}")
    }
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// The ideal generated by `gens`: the span of every `g·ωⱼ`.
pub fn ideal_from_generators(order: &Order, gens: &[OrderElement]) -> Result<LatticeIdeal> {
    let n = order.rank();
    let mut rows = Vec::with_capacity(gens.len() * n);
    for g in gens {
        if !g.order().same_as(order) {
            return Err(Error::OrderMismatch);
        }
        for j in 0..n {
            rows.push(order.mul_coords(g.coords(), &unit(n, j)));
        }
    }
    Ok(LatticeIdeal { order: order.clone(), basis: hnf(&rows, n)? })
}

/// The ideal generated by `p` and `P(θ)`.
pub fn two_element_ideal(order: &Order, p: PrimeModulus, poly: &ZPoly, theta: &OrderElement) -> Result<LatticeIdeal> {
    let pe = order.one().scale(&BigInt::from(p.get()));
    ideal_from_generators(order, &[pe, theta.eval_poly(poly)])
}

/// A prime ideal above `p` with its ramification index `e` and residue degree `f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactor {
    pub ideal: LatticeIdeal,
    pub e: usize,
    pub f: usize,
}

/// Shape of a factorization as a [`SplittingShape`].
pub fn factorization_shape(p: PrimeModulus, factors: &[PrimeFactor]) -> Result<SplittingShape> {
    let parts: Vec<ShapePart> = factors.iter().map(|q| ShapePart { f: q.f, e: q.e }).collect();
    let n = parts.iter().map(|s| s.e * s.f).sum();
    SplittingShape::new(p, n, parts)
}

/// Factors `p·O` by enumerating every subspace of `O/pO` closed under
/// multiplication; the maximal proper ones are the primes above `p`.
/// Requires `pⁿ ≤ 10⁴`; see [`factor_p_in_order_with_bound`].
pub fn factor_p_in_order(order: &Order, p: PrimeModulus) -> Result<Vec<PrimeFactor>> {
    factor_p_in_order_with_bound(order, p, DEFAULT_ENUMERATION_BOUND)
}

pub fn factor_p_in_order_with_bound(order: &Order, p: PrimeModulus, bound: u64) -> Result<Vec<PrimeFactor>> {
    let n = order.rank();
    let pu = p.get();
    if pu.checked_pow(n as u32).is_none_or(|c| c > bound) {
        return Err(Error::BoundExceeded(format!("{pu}^{n} exceeds the enumeration bound {bound}")));
    }
    if !p_enlarge(order, p).same_as(order) {
        return Err(Error::NotPMaximal(pu));
    }
    let table_mod_p: Vec<Vec<Vec<u64>>> = (0..n)
        .map(|i| (0..n).map(|j| order.table()[i][j].iter().map(|c| p.reduce(c)).collect()).collect())
        .collect();
    let times = |v: &[u64], j: usize| -> Vec<u64> {
        let mut out = vec![0u64; n];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &t) in out.iter_mut().zip(&table_mod_p[i][j]) {
                *o = p.add(*o, p.mul(c, t));
            }
        }
        out
    };
    debug_assert!(subspace_count(pu, n) < u64::MAX);
    let mut ideals = Vec::new();
    for_each_subspace(p, n, |s| {
        if s.dim() < n && s.rows.iter().all(|r| (1..n).all(|j| s.contains(p, &times(r, j)))) {
            ideals.push(s.clone());
        }
    });
    let maximal: Vec<_> = ideals
        .iter()
        .filter(|s| !ideals.iter().any(|t| t.dim() > s.dim() && s.is_subspace_of(p, t)))
        .collect();
    let pb = BigInt::from(pu);
    let p_order = LatticeIdeal { order: order.clone(), basis: hnf(&lattice::identity(n).iter().map(|r| r.iter().map(|x| x * &pb).collect()).collect::<Matrix>(), n)? };
    let mut factors = Vec::new();
    for s in maximal {
        let mut gens: Matrix = s.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        gens.extend(p_order.basis.iter().cloned());
        let ideal = LatticeIdeal { order: order.clone(), basis: hnf(&gens, n)? };
        let e = p_order.valuation(&ideal)? as usize;
        factors.push(PrimeFactor { ideal, e, f: n - s.dim() });
    }
    factors.sort_by(|a, b| (a.f, a.e, &a.ideal.basis).cmp(&(b.f, b.e, &b.ideal.basis)));
    let mut prod = LatticeIdeal::whole(order);
    for q in &factors {
        prod = prod.product(&q.ideal.pow(q.e as u32))?;
    }
    if prod != p_order {
        return Err(Error::NotPMaximal(pu));
    }
    Ok(factors)
}

/// An element `θ` whose index is prime to `p`, with `char_poly(θ) ≡ Π Pᵢ^eᵢ (mod p)`.
///
/// For each prime `𝔭ᵢ` the smallest residue `αᵢ` with `Pᵢ(αᵢ) ∈ 𝔭ᵢ` is chosen;
/// when `eᵢ ≥ 2` and `Pᵢ(αᵢ) ∈ 𝔭ᵢ²` it is moved by an element of `𝔭ᵢ ∖ 𝔭ᵢ²`.
/// The residues are then combined modulo `Π 𝔭ᵢ²`.
pub fn crt_good_generator(
    order: &Order,
    p: PrimeModulus,
    primes: &[PrimeFactor],
    polys: &[FpPoly],
) -> Result<OrderElement> {
    let n = order.rank();
    if primes.len() != polys.len() {
        return Err(Error::DimensionMismatch { expected: primes.len(), got: polys.len() });
    }
    let shape = factorization_shape(p, primes)?;
    if shape.degree() != n {
        return Err(Error::DimensionMismatch { expected: n, got: shape.degree() });
    }
    if common_index_divisor(p, &shape).common_index_divisor {
        return Err(Error::InfeasibleSupply(p.get()));
    }
    for (i, (q, g)) in primes.iter().zip(polys).enumerate() {
        if g.modulus() != p {
            return Err(Error::ModulusMismatch(p.get(), g.modulus().get()));
        }
        if g.degree() != Some(q.f) {
            return Err(Error::DegreeMismatch { index: i, expected: q.f, got: g.degree().unwrap_or(0) });
        }
        if !g.is_monic() || !g.is_irreducible()? {
            return Err(Error::NotIrreducible(g.to_string()));
        }
        if polys[..i].contains(g) {
            return Err(Error::InfeasibleSupply(p.get()));
        }
        if !q.ideal.order().same_as(order) {
            return Err(Error::OrderMismatch);
        }
    }
    let squares: Vec<LatticeIdeal> = primes.iter().map(|q| q.ideal.pow(2)).collect();
    let mut residues = Vec::with_capacity(primes.len());
    for (q, g) in primes.iter().zip(polys) {
        let lift = ZPoly::lift(g);
        let root = q
            .ideal
            .residues()
            .map(|c| order.element(c).expect("rank matches"))
            .find(|a| q.ideal.contains_coords(a.eval_poly(&lift).coords()))
            .ok_or(Error::InfeasibleSupply(p.get()))?;
        let sq = q.ideal.pow(2);
        let root = if q.e >= 2 && sq.contains_coords(root.eval_poly(&lift).coords()) {
            let lambda = q.ideal.basis.iter().find(|r| !sq.contains_coords(r)).expect("p ≠ p²").clone();
            root.add(&order.element(lambda)?)?
        } else {
            root
        };
        residues.push(root);
    }
    let modulus = squares.iter().try_fold(LatticeIdeal::whole(order), |acc, s| acc.product(s))?;
    let mut theta = vec![BigInt::zero(); n];
    for (i, alpha) in residues.iter().enumerate() {
        let others = squares
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .try_fold(LatticeIdeal::whole(order), |acc, (_, s)| acc.product(s))?;
        // u + v = 1 with u ∈ 𝔭ᵢ², v ∈ Π_{j≠i} 𝔭ⱼ²
        let mut stacked = squares[i].basis.clone();
        stacked.extend(others.basis.iter().cloned());
        let (h, u) = hnf_with_transform(&stacked, n)?;
        debug_assert!(h == lattice::identity(n));
        let mut v = vec![BigInt::zero(); n];
        for (k, row) in others.basis.iter().enumerate() {
            let c = &u[0][n + k];
            for (x, y) in v.iter_mut().zip(row) {
                *x += c * y;
            }
        }
        for (t, x) in theta.iter_mut().zip(order.mul_coords(alpha.coords(), &v)) {
            *t += x;
        }
    }
    let theta = order.element(modulus.reduce(&theta))?;
    let expected = FpPoly::product(p, &polys.iter().cloned().zip(primes.iter().map(|q| q.e)).collect::<Vec<_>>());
    if theta.char_poly().reduce_mod(p) != expected || theta.index().is_multiple_of(&BigInt::from(p.get())) {
        return Err(Error::IndexDivisible(p.get()));
    }
    Ok(theta)
}
