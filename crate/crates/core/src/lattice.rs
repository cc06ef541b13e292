//! Exact integer linear algebra: fraction-free determinants, division-free
//! characteristic polynomials and Hermite normal forms of integer lattices.
//!
//! Lattices are row spans. The Hermite normal form used throughout is lower
//! triangular: row `i` has its positive pivot in column `i`, zeros to the
//! right of it, and entries `0 ≤ h[i][j] < h[j][j]` to the left. With the
//! identity as the first basis vector of an order this reproduces the usual
//! bracket notation for ideals, e.g. `[2, a, 1+b]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_bareiss(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Matrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Characteristic polynomial `det(t·I − m)`, ascending coefficients, by
/// Berkowitz's division-free algorithm.
pub fn char_poly(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    // vect holds the coefficients of the char poly of the leading r×r block,
    // highest degree first.
    let mut vect: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        // Toeplitz column for the block of size r+1
        let a_rr = &m[r][r];
        let row: Vec<&BigInt> = (0..r).map(|j| &m[r][j]).collect();
        let col: Vec<&BigInt> = (0..r).map(|i| &m[i][r]).collect();
        let mut coeffs = Vec::with_capacity(r + 2);
        coeffs.push(BigInt::one());
        coeffs.push(-a_rr.clone());
        // powers: R · A^k · C for k = 0..r-1, with A the leading r×r block
        let mut v: Vec<BigInt> = col.iter().map(|c| (*c).clone()).collect();
        for _ in 0..r {
            let dot: BigInt = row.iter().zip(&v).map(|(a, b)| *a * b).sum();
            coeffs.push(-dot);
            let next: Vec<BigInt> = (0..r)
                .map(|i| (0..r).map(|j| &m[i][j] * &v[j]).sum())
                .collect();
            v = next;
        }
        // multiply the lower-triangular Toeplitz matrix by vect
        let mut out = vec![BigInt::zero(); r + 2];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in vect.iter().enumerate() {
                if i >= j {
                    *o += &coeffs[i - j] * x;
                }
            }
        }
        vect = out;
    }
    vect.reverse();
    vect
}

fn is_zero_row(r: &[BigInt]) -> bool {
    r.iter().all(Zero::is_zero)
}

/// Lower-triangular Hermite normal form of the row span, together with a
/// unimodular transform `u` such that row `i` of the form equals
/// `Σ_k u[i][k]·rows[k]`. Fails if the rows do not span a rank-`n` lattice.
pub fn hnf_with_transform(rows: &[Vec<BigInt>], n: usize) -> Result<(Matrix, Matrix)> {
    let m = rows.len();
    if m < n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::RankDeficient);
    }
    let mut a: Matrix = rows.to_vec();
    let mut u = identity(m);
    let mut active: Vec<usize> = (0..m).collect();
    let mut pivot_of = vec![usize::MAX; n];
    for col in (0..n).rev() {
        // Euclid on column `col` across the active rows
        loop {
            let nonzero: Vec<usize> = active.iter().copied().filter(|&i| !a[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let &best = nonzero.iter().min_by(|&&x, &&y| a[x][col].abs().cmp(&a[y][col].abs())).unwrap();
            for &i in &nonzero {
                if i == best {
                    continue;
                }
                let q = a[i][col].div_floor(&a[best][col]);
                if q.is_zero() {
                    continue;
                }
                let (bi, bu) = (a[best].clone(), u[best].clone());
                for (x, y) in a[i].iter_mut().zip(&bi) {
                    *x -= &q * y;
                }
                for (x, y) in u[i].iter_mut().zip(&bu) {
                    *x -= &q * y;
                }
            }
        }
        let Some(pos) = active.iter().position(|&i| !a[i][col].is_zero()) else {
            return Err(Error::RankDeficient);
        };
        let piv = active.remove(pos);
        if a[piv][col].is_negative() {
            for x in a[piv].iter_mut() {
                *x = -&*x;
            }
            for x in u[piv].iter_mut() {
                *x = -&*x;
            }
        }
        pivot_of[col] = piv;
    }
    debug_assert!(active.iter().all(|&i| is_zero_row(&a[i])));
    // reduce entries left of each pivot
    for i in 0..n {
        let ri = pivot_of[i];
        for j in (0..i).rev() {
            let rj = pivot_of[j];
            let q = a[ri][j].div_floor(&a[rj][j]);
            if q.is_zero() {
                continue;
            }
            let (bj, buj) = (a[rj].clone(), u[rj].clone());
            for (x, y) in a[ri].iter_mut().zip(&bj) {
                *x -= &q * y;
            }
            for (x, y) in u[ri].iter_mut().zip(&buj) {
                *x -= &q * y;
            }
        }
    }
    let h = pivot_of.iter().map(|&r| a[r].clone()).collect();
    let t = pivot_of.iter().map(|&r| u[r].clone()).collect();
    Ok((h, t))
}

/// Canonical lower-triangular Hermite normal form of a full-rank row span.
pub fn hnf(rows: &[Vec<BigInt>], n: usize) -> Result<Matrix> {
    // the transform is cheap at these sizes; keep a single elimination routine
    hnf_with_transform(rows, n).map(|(h, _)| h)
}

/// Product of the diagonal of a triangular basis.
pub fn triangular_det(h: &[Vec<BigInt>]) -> BigInt {
    h.iter().enumerate().map(|(i, r)| r[i].clone()).product()
}

/// Coordinates `c` with `Σ c_k h[k] = x`, or `None` when `x` is not in the
/// lattice spanned by the lower-triangular basis `h`.
pub fn solve_lower(h: &[Vec<BigInt>], x: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = h.len();
    let mut rest = x.to_vec();
    let mut c = vec![BigInt::zero(); n];
    for j in (0..n).rev() {
        let (q, r) = rest[j].div_rem(&h[j][j]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rest.iter_mut().zip(&h[j]) {
            *x -= &q * y;
        }
        c[j] = q;
    }
    Some(c)
}

/// Canonical representative of `x` modulo the lattice: `0 ≤ r_j < h[j][j]`.
pub fn reduce_mod_lattice(h: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    let mut r = x.to_vec();
    for j in (0..h.len()).rev() {
        let q = r[j].div_floor(&h[j][j]);
        if q.is_zero() {
            continue;
        }
        for (a, b) in r.iter_mut().zip(&h[j]) {
            *a -= &q * b;
        }
    }
    r
}

/// A lattice `(1/denom)·rows` with `rows` in Hermite normal form and
/// `gcd(denom, rows) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalLattice {
    pub denom: BigInt,
    pub rows: Matrix,
}

impl RationalLattice {
    /// Span of `gens / denom`, normalized.
    pub fn from_generators(gens: &[Vec<BigInt>], denom: BigInt, n: usize) -> Result<Self> {
        let rows = hnf(gens, n)?;
        let mut g = denom.clone();
        for r in &rows {
            for x in r {
                g = g.gcd(x);
            }
        }
        if g.is_one() {
            return Ok(RationalLattice { denom, rows });
        }
        Ok(RationalLattice {
            denom: &denom / &g,
            rows: rows.into_iter().map(|r| r.into_iter().map(|x| x / &g).collect()).collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn leibniz(m: &Matrix) -> BigInt {
        fn rec(m: &Matrix, row: usize, used: &mut Vec<bool>, sign: i64) -> BigInt {
            let n = m.len();
            if row == n {
                return BigInt::from(sign);
            }
            let mut acc = BigInt::zero();
            let mut s = sign;
            // sign flips by the number of unused columns skipped
            for j in 0..n {
                if used[j] {
                    continue;
                }
                if !m[row][j].is_zero() {
                    used[j] = true;
                    acc += &m[row][j] * rec(m, row + 1, used, s);
                    used[j] = false;
                }
                s = -s;
            }
            acc
        }
        rec(m, 0, &mut vec![false; m.len()], 1)
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let cases = [
            mat(&[&[2, -1, 0], &[3, 4, 5], &[-7, 1, 1]]),
            mat(&[&[0, 1, 2, 3], &[1, 0, 5, 1], &[2, 2, 0, -4], &[9, -3, 1, 0]]),
            mat(&[&[0, 0], &[1, 1]]),
            mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]),
        ];
        for m in &cases {
            assert_eq!(det_bareiss(m), leibniz(m), "{m:?}");
        }
    }

    #[test]
    fn char_poly_of_worked_matrix() {
        // multiplication by δ = −2 − 2α + 3α² on Z[α], α³ = α² + 2α + 8
        let m = mat(&[&[-2, -2, 3], &[24, 4, 1], &[8, 26, 5]]);
        let cp = char_poly(&m);
        assert_eq!(cp, mat(&[&[-2012, 0, -7, 1]])[0]);
        assert_eq!(char_poly(&mat(&[&[1, 0], &[0, 1]])), mat(&[&[1, -2, 1]])[0]);
    }

    #[test]
    fn hnf_examples() {
        let id = identity(3);
        assert_eq!(hnf(&id, 3).unwrap(), id);
        let rows = mat(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 0, 0]]);
        let h = hnf(&rows, 3).unwrap();
        assert_eq!(h[0][0], BigInt::one());
        assert_eq!(h, mat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]));
        assert_eq!(hnf(&mat(&[&[1, 0], &[2, 0]]), 2), Err(Error::RankDeficient));
        assert_eq!(hnf(&mat(&[&[1, 0]]), 2), Err(Error::RankDeficient));
    }

    #[test]
    fn hnf_transform_reproduces_rows() {
        let rows = mat(&[&[4, 6, 2], &[3, -1, 7], &[0, 5, 5], &[8, 8, 1]]);
        let (h, u) = hnf_with_transform(&rows, 3).unwrap();
        for (hi, ui) in h.iter().zip(&u) {
            let comb: Vec<BigInt> =
                (0..3).map(|j| ui.iter().zip(&rows).map(|(c, r)| c * &r[j]).sum()).collect();
            assert_eq!(&comb, hi);
        }
        for (i, r) in h.iter().enumerate() {
            assert!(r[i] > BigInt::zero());
            for j in 0..i {
                assert!(r[j] >= BigInt::zero() && r[j] < h[j][j]);
            }
            assert!(r[i + 1..].iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_and_reduce() {
        let h = mat(&[&[4, 0, 0], &[1, 2, 0], &[3, 1, 1]]);
        let x: Vec<BigInt> = mat(&[&[15, 4, 2]])[0].clone();
        let c = solve_lower(&h, &x).unwrap();
        let back: Vec<BigInt> = (0..3).map(|j| (0..3).map(|k| &c[k] * &h[k][j]).sum()).collect();
        assert_eq!(back, x);
        assert!(solve_lower(&h, &mat(&[&[1, 0, 0]])[0]).is_none());
        let r = reduce_mod_lattice(&h, &mat(&[&[-7, 9, 3]])[0]);
        assert!(r.iter().zip(&h).enumerate().all(|(j, (v, row))| *v >= BigInt::zero() && *v < row[j]));
    }
}
