//! Row-reduced echelon forms over `F_p` and enumeration of subspaces.

use crate::fppoly::PrimeModulus;

/// Reduced row echelon basis of a subspace of `F_p^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Subspace {
    pub n: usize,
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    #[cfg(test)]
    pub fn span(m: PrimeModulus, n: usize, vectors: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut s = Subspace { n, rows: Vec::new(), pivots: Vec::new() };
        for v in vectors {
            s.insert(m, v);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, m: PrimeModulus, mut v: Vec<u64>) -> Vec<u64> {
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = m.sub(*x, m.mul(c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, m: PrimeModulus, v: &[u64]) -> bool {
        self.reduce(m, v.to_vec()).iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, m: PrimeModulus, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(m, r))
    }

    /// Adds `v` to the span, keeping the basis fully reduced. Returns whether
    /// the dimension grew.
    #[cfg(test)]
    pub fn insert(&mut self, m: PrimeModulus, v: Vec<u64>) -> bool {
        let v = self.reduce(m, v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = m.inv(v[pc]);
        let v: Vec<u64> = v.iter().map(|&x| m.mul(x, inv)).collect();
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = m.sub(*x, m.mul(c, y));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, v);
        true
    }
}

/// Calls `visit` on every subspace of `F_p^n` as a reduced echelon basis,
/// by increasing dimension.
pub(crate) fn for_each_subspace(m: PrimeModulus, n: usize, mut visit: impl FnMut(&Subspace)) {
    let p = m.get();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // free positions: (row, col) with col > pivot of row and col not a pivot
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| {
                    let pivots = &pivots;
                    (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut s = Subspace { n, rows: vec![vec![0u64; n]; k], pivots: pivots.clone() };
            for (r, &pc) in pivots.iter().enumerate() {
                s.rows[r][pc] = 1;
            }
            let mut digits = vec![0u64; free.len()];
            loop {
                for (&(r, c), &d) in free.iter().zip(&digits) {
                    s.rows[r][c] = d;
                }
                visit(&s);
                // odometer
                let mut i = 0;
                while i < digits.len() {
                    digits[i] += 1;
                    if digits[i] < p {
                        break;
                    }
                    digits[i] = 0;
                    i += 1;
                }
                if i == digits.len() {
                    break;
                }
            }
        }
    }
}

/// Number of subspaces of `F_p^n`, saturating.
pub(crate) fn subspace_count(p: u64, n: usize) -> u64 {
    (0..=n)
        .map(|k| {
            let mut num = 1u128;
            let mut den = 1u128;
            for i in 0..k {
                num = num.saturating_mul((p as u128).saturating_pow((n - i) as u32) - 1);
                den = den.saturating_mul((p as u128).saturating_pow((i + 1) as u32) - 1);
            }
            u64::try_from(num / den).unwrap_or(u64::MAX)
        })
        .fold(0u64, u64::saturating_add)
}

#[cfg(test)]
fn all_subspaces(m: PrimeModulus, n: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    for_each_subspace(m, n, |s| out.push(s.clone()));
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}
