//! Orders of rank `n` given by an integral basis `ω₁ = 1, ω₂, …, ω_n` and
//! integer structure constants for the products `ωᵢ·ωⱼ`.
//!
//! Everything is exact: characteristic polynomials come from the
//! multiplication matrix, discriminants from the trace form, and
//! enlargement toward the maximal order is an exhaustive integrality search
//! over `(1/p)·O`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::fppoly::PrimeModulus;
use crate::lattice::{self, det_bareiss, solve_lower, Matrix, RationalLattice};
use crate::zpoly::ZPoly;
use crate::{Error, Result};

/// Basis of an order written in the coordinates of a larger-denominator
/// parent: `ωᵢ = rows[i] / denom` in the parent's basis.
#[derive(Clone, Debug)]
pub struct Embedding {
    pub parent: Order,
    pub denom: BigInt,
    pub rows: Matrix,
}

struct OrderData {
    labels: Vec<String>,
    /// `table[i][j]` = coordinates of `ωᵢ·ωⱼ`
    table: Vec<Vec<Vec<BigInt>>>,
    parent: Option<Embedding>,
}

/// A commutative, associative rank-`n` ring with identity `ω₁`, presented by
/// its multiplication table. Cheap to clone.
#[derive(Clone)]
pub struct Order(Arc<OrderData>);

impl Order {
    /// Validates shape, symmetry, identity and associativity of the table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<BigInt>>>) -> Result<Self> {
        Self::with_parent(labels, table, None)
    }

    fn with_parent(
        labels: Vec<String>,
        table: Vec<Vec<Vec<BigInt>>>,
        parent: Option<Embedding>,
    ) -> Result<Self> {
        let n = labels.len();
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if n == 0 {
            return bad("rank must be positive".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return bad(format!("table must be {n}x{n} with vectors of length {n}"));
        }
        for i in 0..n {
            let e_i: Vec<BigInt> = unit(n, i);
            if table[0][i] != e_i || table[i][0] != e_i {
                return bad(format!("{} does not act as identity on {}", labels[0], labels[i]));
            }
            for j in 0..i {
                if table[i][j] != table[j][i] {
                    return bad(format!("{}*{} != {}*{}", labels[i], labels[j], labels[j], labels[i]));
                }
            }
        }
        let order = Order(Arc::new(OrderData { labels, table, parent }));
        for i in 1..n {
            for j in 1..n {
                for k in 1..n {
                    let left = order.mul_coords(&order.0.table[i][j], &unit(n, k));
                    let right = order.mul_coords(&unit(n, i), &order.0.table[j][k]);
                    if left != right {
                        let l = &order.0.labels;
                        return bad(format!("({}*{})*{} != {}*({}*{})", l[i], l[j], l[k], l[i], l[j], l[k]));
                    }
                }
            }
        }
        Ok(order)
    }

    /// Table from `i64` structure constants.
    pub fn from_i64(labels: &[&str], table: &[Vec<Vec<i64>>]) -> Result<Self> {
        let table = table
            .iter()
            .map(|r| r.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .collect();
        Self::new(labels.iter().map(|s| s.to_string()).collect(), table)
    }

    pub fn rank(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn table(&self) -> &[Vec<Vec<BigInt>>] {
        &self.0.table
    }

    pub fn parent(&self) -> Option<&Embedding> {
        self.0.parent.as_ref()
    }

    /// Same table and labels (the embedding is not compared).
    pub fn same_as(&self, other: &Order) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.labels == other.0.labels && self.0.table == other.0.table)
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<OrderElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: coords.len() });
        }
        Ok(OrderElement { order: self.clone(), coords })
    }

    pub fn element_i64(&self, coords: &[i64]) -> Result<OrderElement> {
        self.element(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn one(&self) -> OrderElement {
        self.basis_element(0)
    }

    pub fn basis_element(&self, i: usize) -> OrderElement {
        OrderElement { order: self.clone(), coords: unit(self.rank(), i) }
    }

    pub(crate) fn mul_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.rank();
        let mut out = vec![BigInt::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, c) in out.iter_mut().zip(&self.0.table[i][j]) {
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Rows are the coordinates of `x·ω₁, …, x·ω_n`.
    pub(crate) fn mult_matrix(&self, x: &[BigInt]) -> Matrix {
        (0..self.rank()).map(|i| self.mul_coords(x, &unit(self.rank(), i))).collect()
    }

    pub(crate) fn trace_coords(&self, x: &[BigInt]) -> BigInt {
        let m = self.mult_matrix(x);
        (0..self.rank()).map(|i| m[i][i].clone()).sum()
    }

    /// `det(Tr(ωᵢ·ωⱼ))`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.rank();
        let traces: Vec<BigInt> = (0..n).map(|k| self.trace_coords(&unit(n, k))).collect();
        let form: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.0.table[i][j].iter().zip(&traces).map(|(c, t)| c * t).sum())
                    .collect()
            })
            .collect();
        det_bareiss(&form)
    }

    /// Renders coordinates in bracket style: `1+a+b`, `2a`, `-4+a+b`.
    pub fn format_coords(&self, coords: &[BigInt]) -> String {
        let mut out = String::new();
        for (c, label) in coords.iter().zip(&self.0.labels) {
            if c.is_zero() {
                continue;
            }
            let is_one = label == "1";
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if is_one {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(label);
            } else {
                out.push_str(&format!("{mag}{label}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// The basis written over the root of the embedding chain:
    /// `(root, denom, rows)` with `ωᵢ = rows[i]/denom` in root coordinates.
    pub fn basis_in_root(&self) -> (Order, BigInt, Matrix) {
        match &self.0.parent {
            None => (self.clone(), BigInt::one(), lattice::identity(self.rank())),
            Some(emb) => {
                let (root, d0, p_rows) = emb.parent.basis_in_root();
                let n = self.rank();
                let rows: Matrix = emb
                    .rows
                    .iter()
                    .map(|r| (0..n).map(|j| r.iter().zip(&p_rows).map(|(a, pr)| a * &pr[j]).sum()).collect())
                    .collect();
                let mut denom = &emb.denom * d0;
                let mut g = denom.clone();
                for x in rows.iter().flatten() {
                    g = g.gcd(x);
                }
                let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect();
                denom /= g;
                (root, denom, rows)
            }
        }
    }

    /// Each basis element written over the root's labels, e.g. `(a+a^2)/2`.
    pub fn basis_in_root_text(&self) -> Vec<String> {
        let (root, denom, rows) = self.basis_in_root();
        rows.iter()
            .map(|r| {
                let g = r.iter().fold(denom.clone(), |g, x| g.gcd(x));
                let numer: Vec<BigInt> = r.iter().map(|x| x / &g).collect();
                let d = &denom / &g;
                let shown = root.format_coords(&numer);
                if d.is_one() {
                    shown
                } else if numer.iter().filter(|x| !x.is_zero()).count() > 1 {
                    format!("({shown})/{d}")
                } else {
                    format!("{shown}/{d}")
                }
            })
            .collect()
    }

    /// Whether `numer/denom`, given in root coordinates, lies in this order.
    pub fn contains_root_vector(&self, numer: &[BigInt], denom: &BigInt) -> bool {
        let (_, d, rows) = self.basis_in_root();
        // c·rows/d = numer/denom  ⇔  c·rows = numer·d/denom
        let scaled: Option<Vec<BigInt>> = numer
            .iter()
            .map(|x| {
                let (q, r) = (x * &d).div_rem(denom);
                r.is_zero().then_some(q)
            })
            .collect();
        scaled.is_some_and(|x| solve_lower(&rows, &x).is_some())
    }

    /// Structured text form: rank, basis labels and every product `ωᵢ*ωⱼ`
    /// with `i ≤ j`. The embedding into a parent order is not recorded.
    pub fn to_text(&self) -> String {
        let n = self.rank();
        let mut out = format!("order {n}\nbasis {}\n", self.0.labels.join(" "));
        for i in 0..n {
            for j in i..n {
                let v: Vec<String> = self.0.table[i][j].iter().map(|c| c.to_string()).collect();
                out.push_str(&format!("{}*{} = {}\n", self.0.labels[i], self.0.labels[j], v.join(" ")));
            }
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidTable(msg.to_string());
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("order "))
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad("expected 'order <rank>'"))?;
        let labels: Vec<String> = lines
            .next()
            .and_then(|l| l.strip_prefix("basis "))
            .map(|s| s.split_whitespace().map(String::from).collect())
            .ok_or_else(|| bad("expected 'basis <labels>'"))?;
        if labels.len() != n {
            return Err(bad("label count does not match rank"));
        }
        let index = |s: &str| labels.iter().position(|l| l == s).ok_or_else(|| bad(&format!("unknown label {s}")));
        let mut table: Vec<Vec<Option<Vec<BigInt>>>> = vec![vec![None; n]; n];
        for line in lines {
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| bad("expected 'x*y = coords'"))?;
            let (a, b) = lhs.trim().split_once('*').ok_or_else(|| bad("expected 'x*y'"))?;
            let (i, j) = (index(a.trim())?, index(b.trim())?);
            let v: Vec<BigInt> = rhs
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| bad(&format!("bad integer {x}"))))
                .collect::<Result<_>>()?;
            if v.len() != n {
                return Err(bad("coordinate vector has wrong length"));
            }
            table[i][j] = Some(v.clone());
            table[j][i] = Some(v);
        }
        let table = table
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.ok_or_else(|| bad("missing product"))).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels, table)
    }
}

impl fmt::Debug for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Order[{}]", self.0.labels.join(", "))
    }
}

impl PartialEq for Order {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Order {}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

/// An element `h₁ω₁ + ⋯ + h_nω_n` of an order.
#[derive(Clone, PartialEq, Eq)]
pub struct OrderElement {
    order: Order,
    coords: Vec<BigInt>,
}

impl OrderElement {
    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    fn check(&self, other: &OrderElement) -> Result<()> {
        if self.order.same_as(&other.order) {
            Ok(())
        } else {
            Err(Error::OrderMismatch)
        }
    }

    pub fn mul(&self, other: &OrderElement) -> Result<OrderElement> {
        self.check(other)?;
        Ok(OrderElement { order: self.order.clone(), coords: self.order.mul_coords(&self.coords, &other.coords) })
    }

    pub fn add(&self, other: &OrderElement) -> Result<OrderElement> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(OrderElement { order: self.order.clone(), coords })
    }

    pub fn sub(&self, other: &OrderElement) -> Result<OrderElement> {
        self.check(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        Ok(OrderElement { order: self.order.clone(), coords })
    }

    pub fn scale(&self, k: &BigInt) -> OrderElement {
        OrderElement { order: self.order.clone(), coords: self.coords.iter().map(|c| c * k).collect() }
    }

    pub fn pow(&self, e: usize) -> OrderElement {
        let mut acc = self.order.one();
        for _ in 0..e {
            acc.coords = self.order.mul_coords(&acc.coords, &self.coords);
        }
        acc
    }

    /// `P(self)` for an integer polynomial, by Horner's rule.
    pub fn eval_poly(&self, poly: &ZPoly) -> OrderElement {
        let mut acc = vec![BigInt::zero(); self.order.rank()];
        for c in poly.coeffs().iter().rev() {
            acc = self.order.mul_coords(&acc, &self.coords);
            acc[0] += c;
        }
        OrderElement { order: self.order.clone(), coords: acc }
    }

    pub fn mult_matrix(&self) -> Matrix {
        self.order.mult_matrix(&self.coords)
    }

    /// `det(t·I − M)` for the multiplication matrix `M`, by a division-free method.
    pub fn char_poly(&self) -> ZPoly {
        ZPoly::new(lattice::char_poly(&self.mult_matrix()))
    }

    pub fn trace(&self) -> BigInt {
        self.order.trace_coords(&self.coords)
    }

    pub fn norm(&self) -> BigInt {
        det_bareiss(&self.mult_matrix())
    }

    /// Rows: coordinates of `1, θ, …, θ^(n−1)`.
    pub fn embedding_matrix(&self) -> Matrix {
        let n = self.order.rank();
        let mut rows = Vec::with_capacity(n);
        let mut cur = unit(n, 0);
        for _ in 0..n {
            rows.push(cur.clone());
            cur = self.order.mul_coords(&cur, &self.coords);
        }
        rows
    }

    /// `|det|` of the embedding matrix; zero when the element generates no
    /// order of full rank.
    pub fn index(&self) -> BigInt {
        det_bareiss(&self.embedding_matrix()).abs()
    }
}

impl fmt::Display for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.order.format_coords(&self.coords))
    }
}

impl fmt::Debug for OrderElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderElement({})", self)
    }
}

/// The index `k` of `θ`: `|det|` of the coordinates of `1, θ, …, θ^(n−1)`.
pub fn element_index(order: &Order, theta: &OrderElement) -> Result<BigInt> {
    if !order.same_as(theta.order()) {
        return Err(Error::OrderMismatch);
    }
    Ok(theta.index())
}

/// The power-basis order `Z[θ] = [1, θ, …, θ^(n−1)]` of a root `θ` of `F`,
/// with basis labels `1, a, a^2, …`.
pub fn order_from_polynomial(f: &ZPoly) -> Result<Order> {
    let n = match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    // powers[k] = t^k mod F for k < 2n − 1
    let mut powers: Vec<Vec<BigInt>> = Vec::with_capacity(2 * n - 1);
    let mut cur = unit(n, 0);
    for _ in 0..2 * n - 1 {
        powers.push(cur.clone());
        // multiply by t and reduce t^n = −Σ f_k t^k
        let top = cur[n - 1].clone();
        let mut next = vec![BigInt::zero(); n];
        next[1..n].clone_from_slice(&cur[..n - 1]);
        for (k, x) in next.iter_mut().enumerate() {
            *x -= &top * f.coeff(k);
        }
        cur = next;
    }
    let table = (0..n).map(|i| (0..n).map(|j| powers[i + j].clone()).collect()).collect();
    let labels = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "a".to_string(),
            k => format!("a^{k}"),
        })
        .collect();
    Order::new(labels, table)
}

/// Enlarges `order` at `p` until no element of `(1/p)·O` outside it is
/// integral. The new basis is the Hermite normal form of the enlarged lattice
/// in the coordinates of `order`, and the result records that embedding.
///
/// An element `x/p` counts as integral when its characteristic polynomial
/// has integer coefficients. Candidates `x` run over all `pⁿ` residues,
/// smallest coordinate vector first.
pub fn p_enlarge(order: &Order, p: PrimeModulus) -> Order {
    let n = order.rank();
    let disc = order.discriminant();
    let pb = BigInt::from(p.get());
    let p2 = &pb * &pb;
    let mut lat = RationalLattice { denom: BigInt::one(), rows: lattice::identity(n) };
    let mut changed = false;
    loop {
        let index = Pow::pow(&lat.denom, n as u32) / lattice::triangular_det(&lat.rows);
        let current = &disc / (&index * &index);
        if !current.is_multiple_of(&p2) {
            break;
        }
        let Some(v) = find_integral_candidate(order, &lat, p) else {
            break;
        };
        let s = &lat.denom * &pb;
        let mut gens: Matrix = lat.rows.iter().map(|r| r.iter().map(|x| x * &pb).collect()).collect();
        gens.push(v);
        lat = ring_closure(order, RationalLattice::from_generators(&gens, s, n).expect("full rank"));
        changed = true;
    }
    if !changed {
        return order.clone();
    }
    order_from_lattice(order, lat)
}

fn find_integral_candidate(order: &Order, lat: &RationalLattice, p: PrimeModulus) -> Option<Vec<BigInt>> {
    let n = order.rank();
    let pu = p.get();
    let s = &lat.denom * BigInt::from(pu);
    let traces: Vec<BigInt> = lat.rows.iter().map(|r| order.trace_coords(r)).collect();
    let powers: Vec<BigInt> = (0..=n).map(|i| Pow::pow(&s, i as u32)).collect();
    let mut digits = vec![0u64; n];
    loop {
        // next candidate in lexicographic order, first coordinate most significant
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < pu {
                break;
            }
            digits[i] = 0;
        }
        // the trace is the cheapest coefficient; test it first
        let tr: BigInt = digits.iter().zip(&traces).map(|(&c, t)| t * c).sum();
        if !tr.is_multiple_of(&s) {
            continue;
        }
        let v: Vec<BigInt> = (0..n)
            .map(|j| digits.iter().zip(&lat.rows).map(|(&c, r)| &r[j] * c).sum())
            .collect();
        let cp = lattice::char_poly(&order.mult_matrix(&v));
        let integral = (1..=n).all(|i| BigRational::new(cp[n - i].clone(), powers[i].clone()).is_integer());
        if integral {
            return Some(v);
        }
    }
}

fn ring_closure(order: &Order, mut lat: RationalLattice) -> RationalLattice {
    let n = order.rank();
    loop {
        let d = lat.denom.clone();
        let mut gens: Matrix = lat.rows.iter().map(|r| r.iter().map(|x| x * &d).collect()).collect();
        for i in 0..n {
            for j in i..n {
                gens.push(order.mul_coords(&lat.rows[i], &lat.rows[j]));
            }
        }
        let next = RationalLattice::from_generators(&gens, &d * &d, n).expect("full rank");
        if next == lat {
            return lat;
        }
        lat = next;
    }
}

fn order_from_lattice(order: &Order, lat: RationalLattice) -> Order {
    let n = order.rank();
    let d = &lat.denom;
    debug_assert!(lat.rows[0][0] == *d && lat.rows[0][1..].iter().all(Zero::is_zero));
    let table: Vec<Vec<Vec<BigInt>>> = lat
        .rows
        .iter()
        .map(|ri| {
            lat.rows
                .iter()
                .map(|rj| {
                    let x: Vec<BigInt> = order.mul_coords(ri, rj).iter().map(|c| c / d).collect();
                    solve_lower(&lat.rows, &x).expect("closed under multiplication")
                })
                .collect()
        })
        .collect();
    let labels = (0..n).map(|k| if k == 0 { "1".to_string() } else { format!("w{k}") }).collect();
    let emb = Embedding { parent: order.clone(), denom: lat.denom.clone(), rows: lat.rows };
    Order::with_parent(labels, table, Some(emb)).expect("enlarged table is a valid order")
}

/// Limits for [`maximal_order_with`].
#[derive(Clone, Copy, Debug)]
pub struct MaximalOrderBounds {
    /// Primes up to this bound are tried when factoring the discriminant.
    pub trial_division: u64,
    /// Largest `pⁿ` searched by the enlargement step.
    pub enlarge_candidates: u64,
}

impl Default for MaximalOrderBounds {
    fn default() -> Self {
        MaximalOrderBounds { trial_division: 1_000_000, enlarge_candidates: 1_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct MaximalOrder {
    pub order: Order,
    /// Field discriminant (fundamental number).
    pub discriminant: BigInt,
    pub power_order: Order,
    pub polynomial_discriminant: BigInt,
    /// Index of `Z[θ]` in the maximal order.
    pub index: BigInt,
}

/// Maximal order of the field of a monic irreducible `F`, with its discriminant.
pub fn maximal_order(f: &ZPoly) -> Result<MaximalOrder> {
    maximal_order_with(f, MaximalOrderBounds::default())
}

pub fn maximal_order_with(f: &ZPoly, bounds: MaximalOrderBounds) -> Result<MaximalOrder> {
    let power_order = order_from_polynomial(f)?;
    let n = power_order.rank();
    let disc = f.discriminant()?;
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    let mut order = power_order.clone();
    for (q, e) in factor_trial(&disc.abs(), bounds.trial_division)? {
        if e < 2 {
            continue;
        }
        let candidates = q.checked_pow(n as u32).filter(|&c| c <= bounds.enlarge_candidates);
        if candidates.is_none() {
            return Err(Error::BoundExceeded(format!(
                "enlargement at {q} would search {q}^{n} candidates (bound {})",
                bounds.enlarge_candidates
            )));
        }
        order = p_enlarge(&order, PrimeModulus::new(q)?);
    }
    let d = order.discriminant();
    let index = (&disc / &d).abs().sqrt();
    Ok(MaximalOrder { order, discriminant: d, power_order, polynomial_discriminant: disc, index })
}

/// Factors `n` by trial division with primes up to `bound`. Fails when the
/// cofactor left over might be composite.
pub fn factor_trial(n: &BigInt, bound: u64) -> Result<Vec<(u64, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= bound {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while n.is_multiple_of(&bd) {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let b = BigInt::from(bound);
        if n > &b * &b {
            return Err(Error::BoundExceeded(format!("cofactor {n} of the discriminant is not factored below {bound}")));
        }
        let q = n.to_u64().filter(|&q| q < PrimeModulus::BOUND);
        // a larger prime cofactor appears once, so no enlargement is needed there
        if let Some(q) = q {
            out.push((q, 1));
        }
    }
    Ok(out)
}

/// The rank-3 order `[1, α, β]` with `αα = a′α + bβ − bb′`,
/// `ββ = aα + b′β − aa′`, `αβ = ab`.
#[derive(Clone, Debug)]
pub struct CubicFamily {
    pub order: Order,
    /// `a′²b′² + 18aba′b′ − 4aa′³ − 4bb′³ − 27a²b²`
    pub closed_form_discriminant: BigInt,
}

pub fn cubic_family(a: i64, b: i64, a1: i64, b1: i64) -> Result<CubicFamily> {
    let g = a.gcd(&b).gcd(&a1).gcd(&b1);
    if g != 1 {
        return Err(Error::CommonDivisor(g.to_string()));
    }
    let (a, b, a1, b1) = (BigInt::from(a), BigInt::from(b), BigInt::from(a1), BigInt::from(b1));
    let z = BigInt::zero;
    let table = vec![
        vec![vec![BigInt::one(), z(), z()], vec![z(), BigInt::one(), z()], vec![z(), z(), BigInt::one()]],
        vec![vec![z(), BigInt::one(), z()], vec![-(&b * &b1), a1.clone(), b.clone()], vec![&a * &b, z(), z()]],
        vec![vec![z(), z(), BigInt::one()], vec![&a * &b, z(), z()], vec![-(&a * &a1), a.clone(), b1.clone()]],
    ];
    let order = Order::new(vec!["1".into(), "a".into(), "b".into()], table)?;
    let closed = Pow::pow(&a1, 2u32) * Pow::pow(&b1, 2u32) + BigInt::from(18) * &a * &b * &a1 * &b1
        - BigInt::from(4) * &a * Pow::pow(&a1, 3u32)
        - BigInt::from(4) * &b * Pow::pow(&b1, 3u32)
        - BigInt::from(27) * Pow::pow(&a, 2u32) * Pow::pow(&b, 2u32);
    Ok(CubicFamily { order, closed_form_discriminant: closed })
}
