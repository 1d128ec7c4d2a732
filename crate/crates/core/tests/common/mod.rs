//! Helpers shared by the integration tests: independent oracles written
//! against plain big rationals, and random generators.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use qhoch_core::simplicial::PointedMap;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Rank of a matrix given as sparse rows, by plain Gaussian elimination.
pub fn rank(rows: Vec<BTreeMap<usize, Q>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, Q>> = BTreeMap::new();
    for mut row in rows {
        loop {
            let Some((&lead, _)) = row.iter().next() else { break };
            match pivots.get(&lead) {
                None => {
                    pivots.insert(lead, row);
                    break;
                }
                Some(p) => {
                    let factor = &row[&lead] / &p[&lead];
                    for (c, v) in p {
                        let e = row.entry(*c).or_insert_with(Q::zero);
                        *e -= &factor * v;
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
            }
        }
    }
    pivots.len()
}

/// The classical Hochschild complex of `k[x]/(x^m)` with the alternating
/// differential and the wrap-around last face, graded by total x-degree.
/// Returns `dim HH_n` for `n ≤ top`.
pub fn classical_hochschild(m: usize, top: usize) -> Vec<usize> {
    // rank of b_n, split into weight blocks
    let digits_of = |mut idx: usize, slots: usize| -> Vec<usize> {
        let mut d = vec![0; slots];
        for s in (0..slots).rev() {
            d[s] = idx % m;
            idx /= m;
        }
        d
    };
    let index_of = |d: &[usize]| d.iter().fold(0usize, |acc, &x| acc * m + x);
    let rank_b = |n: usize| -> usize {
        if n == 0 {
            return 0;
        }
        let slots = n + 1;
        let dim = m.pow(slots as u32);
        // rows of the transpose are the images of basis tensors; rank is the same
        let mut by_weight: BTreeMap<usize, Vec<BTreeMap<usize, Q>>> = BTreeMap::new();
        for idx in 0..dim {
            let a = digits_of(idx, slots);
            let mut image: BTreeMap<usize, Q> = BTreeMap::new();
            for i in 0..=n {
                let sign = if i % 2 == 0 { q(1) } else { q(-1) };
                let merged: Option<Vec<usize>> = if i < n {
                    let p = a[i] + a[i + 1];
                    (p < m).then(|| {
                        let mut v = a[..i].to_vec();
                        v.push(p);
                        v.extend_from_slice(&a[i + 2..]);
                        v
                    })
                } else {
                    let p = a[n] + a[0];
                    (p < m).then(|| {
                        let mut v = vec![p];
                        v.extend_from_slice(&a[1..n]);
                        v
                    })
                };
                if let Some(v) = merged {
                    let e = image.entry(index_of(&v)).or_insert_with(Q::zero);
                    *e += sign;
                }
            }
            image.retain(|_, v| !v.is_zero());
            let w: usize = a.iter().sum();
            by_weight.entry(w).or_default().push(image);
        }
        by_weight.into_values().map(rank).sum()
    };
    let ranks: Vec<usize> = (0..=top + 1).map(rank_b).collect();
    (0..=top).map(|n| m.pow(n as u32 + 1) - ranks[n] - ranks[n + 1]).collect()
}

/// For the one-dimensional algebra every level is a line and `b_n` is the
/// scalar `[n+1]_q`, which vanishes exactly when `N | n+1`. Returns
/// `dim H_{i,n}` from that divisibility pattern alone.
pub fn scalar_amplitude_dim(order: usize, n: usize, i: usize) -> usize {
    let vanishes = |k: usize| k == 0 || (k + 1).is_multiple_of(order);
    // b^i out of n kills the line if some factor b_n, …, b_{n−i+1} vanishes
    // (b_0 maps into the zero space)
    let ker = if i > n || (n + 1 - i..=n).any(vanishes) { 1 } else { 0 };
    let im = if (n + 1..=n + order - i).any(vanishes) { 0 } else { 1 };
    ker - im
}

/// A uniformly random pointed map between pointed sets of the given sizes.
pub fn random_pointed_map<R: Rng>(rng: &mut R, src: usize, dst: usize) -> PointedMap {
    let mut table = vec![0];
    table.extend((1..src).map(|_| rng.gen_range(0..dst)));
    PointedMap::new(table, dst).unwrap()
}

/// Dense solve of `A x = b` over the rationals; `None` if inconsistent.
pub fn solve(a_cols: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let rows = b.len();
    let cols = a_cols.len();
    let mut m: Vec<Vec<Q>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Q> = a_cols.iter().map(|c| c[r].clone()).collect();
            row.push(b[r].clone());
            row
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=cols {
                    let t = &f * &m[r][k];
                    m[i][k] -= t;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !m[i][cols].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    Some(x)
}
