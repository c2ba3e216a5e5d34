//! Exact ranks over `ℚ` and Betti numbers of built complexes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::complex::ChainComplex;

/// A sparse integer matrix stored by columns; each column is sorted by row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0; self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, v) in c {
                d[i][j] = v;
            }
        }
        d
    }

    /// `self ∘ other`, both as maps on column vectors.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut out = SparseMatrix::zeros(self.rows, other.cols.len());
        for (j, c) in other.cols.iter().enumerate() {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for &(k, v) in c {
                for &(i, w) in &self.cols[k] {
                    *acc.entry(i).or_default() += v * w;
                }
            }
            out.cols[j] = acc.into_iter().filter(|(_, v)| *v != 0).collect();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }
}

type Vector = Vec<(usize, BigInt)>;

fn normalize(v: &mut Vector) {
    let mut g = BigInt::zero();
    for (_, x) in v.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && g != BigInt::from(1) {
        for (_, x) in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    if let Some((_, x)) = v.first() {
        if x.is_negative() {
            for (_, x) in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// `a·v − b·w`, dropping zeros.
fn combine(a: &BigInt, v: &Vector, b: &BigInt, w: &Vector) -> Vector {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push((v[i].0, a * &v[i].1));
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let x = a * &v[i].1 - b * &w[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `ℚ` by fraction-free sparse elimination: each column is
/// reduced against stored pivots (keyed by leading row) with integer
/// combinations and content division.
pub fn rank(m: &SparseMatrix) -> usize {
    let mut pivots: BTreeMap<usize, Vector> = BTreeMap::new();
    let mut order: Vec<usize> = (0..m.cols.len()).collect();
    order.sort_by_key(|&j| m.cols[j].len());
    for j in order {
        let mut v: Vector = m.cols[j].iter().map(|&(i, x)| (i, BigInt::from(x))).collect();
        normalize(&mut v);
        while let Some((lead, _)) = v.first() {
            match pivots.get(lead) {
                Some(p) => {
                    let (a, b) = (p[0].1.clone(), v[0].1.clone());
                    let g = a.gcd(&b);
                    v = combine(&(&a / &g), &v, &(&b / &g), p);
                    normalize(&mut v);
                }
                None => {
                    pivots.insert(*lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Dense fraction-free (Bareiss) rank; used to cross-check `rank`.
pub fn bareiss_rank(dense: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = dense.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for k in c + 1..cols {
                let x = (&a[r][c] * &a[i][k] - &a[i][c] * &a[r][k]) / &prev;
                a[i][k] = x;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiRow {
    pub degree: usize,
    pub dim: usize,
    pub betti: usize,
}

/// `b_k = dim C_k − rank d_k − rank d_{k+1}` for each built degree.
pub fn homology_ranks(c: &ChainComplex) -> Vec<BettiRow> {
    let ranks: BTreeMap<usize, usize> = c.boundaries.iter().map(|(&k, m)| (k, rank(m))).collect();
    c.bases
        .iter()
        .map(|(&k, b)| {
            let r_out = ranks.get(&k).copied().unwrap_or(0);
            let r_in = ranks.get(&(k + 1)).copied().unwrap_or(0);
            BettiRow { degree: k, dim: b.len(), betti: b.len() - r_out - r_in }
        })
        .collect()
}

/// `Σ (−1)^k dim C_k` and `Σ (−1)^k b_k`.
pub fn euler_characteristics(rows: &[BettiRow]) -> (i64, i64) {
    let sign = |k: usize| if k % 2 == 0 { 1 } else { -1 };
    let a = rows.iter().map(|r| sign(r.degree) * r.dim as i64).sum();
    let b = rows.iter().map(|r| sign(r.degree) * r.betti as i64).sum();
    (a, b)
}

pub fn format_tsv(rows: &[BettiRow]) -> String {
    let mut s = String::from("degree\tdim\tbetti\n");
    for r in rows {
        s.push_str(&format!("{}\t{}\t{}\n", r.degree, r.dim, r.betti));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn from_dense(d: &[Vec<i64>]) -> SparseMatrix {
        let rows = d.len();
        let cols = d.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::zeros(rows, cols);
        for j in 0..cols {
            m.cols[j] = (0..rows).filter(|&i| d[i][j] != 0).map(|i| (i, d[i][j])).collect();
        }
        m
    }

    #[test]
    fn small_ranks() {
        let d = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank(&from_dense(&d)), 2);
        assert_eq!(bareiss_rank(&d), 2);
        assert_eq!(rank(&SparseMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn sparse_matches_bareiss() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let r = rng.gen_range(1..8);
            let c = rng.gen_range(1..8);
            let d: Vec<Vec<i64>> =
                (0..r).map(|_| (0..c).map(|_| if rng.gen_bool(0.4) { rng.gen_range(-3..=3) } else { 0 }).collect()).collect();
            assert_eq!(rank(&from_dense(&d)), bareiss_rank(&d));
        }
    }
}
