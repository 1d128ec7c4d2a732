//! Pointed finite sets, pointed maps and truncated pointed simplicial
//! finite sets.
//!
//! A pointed finite set of size `k` is always `{0, …, k−1}` with basepoint 0.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A basepoint-preserving map `{0,…,m} → {0,…,n}` given by its table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMap {
    dst_size: usize,
    table: Vec<usize>,
}

impl PointedMap {
    pub fn new(table: Vec<usize>, dst_size: usize) -> Result<PointedMap> {
        if table.is_empty() || dst_size == 0 {
            return Err(Error::InvalidPointedMap(format!("empty pointed set (src {}, dst {dst_size})", table.len())));
        }
        if table[0] != 0 {
            return Err(Error::InvalidPointedMap(format!("basepoint sent to {}", table[0])));
        }
        if let Some((i, &v)) = table.iter().enumerate().find(|(_, &v)| v >= dst_size) {
            return Err(Error::InvalidPointedMap(format!("element {i} sent to {v}, target has {dst_size} elements")));
        }
        Ok(PointedMap { dst_size, table })
    }

    /// Skips validation; only for tables known to be well formed.
    pub fn new_unchecked(table: Vec<usize>, dst_size: usize) -> PointedMap {
        PointedMap { dst_size, table }
    }

    pub fn identity(size: usize) -> PointedMap {
        PointedMap { dst_size: size, table: (0..size).collect() }
    }

    pub fn src_size(&self) -> usize {
        self.table.len()
    }

    pub fn dst_size(&self) -> usize {
        self.dst_size
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &PointedMap) -> PointedMap {
        assert_eq!(first.dst_size, self.src_size(), "pointed maps are not composable");
        PointedMap { dst_size: self.dst_size, table: first.table.iter().map(|&x| self.table[x]).collect() }
    }

    /// Whether the table fixes the basepoint and stays in range.
    pub fn is_valid(&self) -> bool {
        !self.table.is_empty() && self.table[0] == 0 && self.table.iter().all(|&v| v < self.dst_size)
    }
}

/// A pointed simplicial finite set truncated at level `T`.
///
/// `faces[n][i]` is `d_i : Y_n → Y_{n−1}` (for `1 ≤ n ≤ T`, `faces[0]` is
/// empty) and `degeneracies[n][i]` is `s_i : Y_n → Y_{n+1}` (for `n < T`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    sizes: Vec<usize>,
    faces: Vec<Vec<PointedMap>>,
    degeneracies: Vec<Vec<PointedMap>>,
}

impl SimplicialSet {
    /// Builds and fully validates a simplicial set.
    pub fn new(sizes: Vec<usize>, faces: Vec<Vec<PointedMap>>, degeneracies: Vec<Vec<PointedMap>>) -> Result<Self> {
        let y = Self::new_unchecked(sizes, faces, degeneracies)?;
        y.validate()?;
        Ok(y)
    }

    /// Checks only that every map has the right shape, so that broken data can
    /// still be fed to the chain-level machinery and reported there.
    pub fn new_unchecked(
        sizes: Vec<usize>,
        faces: Vec<Vec<PointedMap>>,
        degeneracies: Vec<Vec<PointedMap>>,
    ) -> Result<Self> {
        let malformed = |msg: alloc::string::String| Err(Error::MalformedSimplicial(msg));
        if sizes.is_empty() {
            return malformed("no levels".into());
        }
        let t = sizes.len() - 1;
        if let Some(n) = sizes.iter().position(|&s| s == 0) {
            return malformed(format!("level {n} is empty"));
        }
        if faces.len() != t + 1 || !faces[0].is_empty() {
            return malformed(format!("expected face tables for levels 1..={t}"));
        }
        if degeneracies.len() != t {
            return malformed(format!("expected degeneracy tables for levels 0..{t}"));
        }
        for n in 1..=t {
            if faces[n].len() != n + 1 {
                return malformed(format!("level {n} has {} faces, expected {}", faces[n].len(), n + 1));
            }
            for (i, d) in faces[n].iter().enumerate() {
                if d.src_size() != sizes[n] || d.dst_size() != sizes[n - 1] {
                    return malformed(format!("face d_{i} at level {n} has the wrong shape"));
                }
                if d.table.iter().any(|&v| v >= sizes[n - 1]) {
                    return malformed(format!("face d_{i} at level {n} leaves level {}", n - 1));
                }
            }
        }
        for n in 0..t {
            if degeneracies[n].len() != n + 1 {
                return malformed(format!("level {n} has {} degeneracies, expected {}", degeneracies[n].len(), n + 1));
            }
            for (i, s) in degeneracies[n].iter().enumerate() {
                if s.src_size() != sizes[n] || s.dst_size() != sizes[n + 1] {
                    return malformed(format!("degeneracy s_{i} at level {n} has the wrong shape"));
                }
                if s.table.iter().any(|&v| v >= sizes[n + 1]) {
                    return malformed(format!("degeneracy s_{i} at level {n} leaves level {}", n + 1));
                }
            }
        }
        Ok(SimplicialSet { sizes, faces, degeneracies })
    }

    /// Basepoint preservation and all simplicial identities up to `T`.
    pub fn validate(&self) -> Result<()> {
        let t = self.truncation();
        for n in 1..=t {
            for (i, d) in self.faces[n].iter().enumerate() {
                if d.table[0] != 0 {
                    return Err(Error::Basepoint { map: "face", level: n, index: i });
                }
            }
        }
        for n in 0..t {
            for (i, s) in self.degeneracies[n].iter().enumerate() {
                if s.table[0] != 0 {
                    return Err(Error::Basepoint { map: "degeneracy", level: n, index: i });
                }
            }
        }
        let fail = |relation, level, i, j| Err(Error::SimplicialIdentity { relation, level, i, j });
        // d_i d_j = d_{j−1} d_i on Y_n, i < j
        for n in 2..=t {
            for j in 1..=n {
                for i in 0..j {
                    if self.face(n - 1, i).compose(self.face(n, j)) != self.face(n - 1, j - 1).compose(self.face(n, i)) {
                        return fail("d_i d_j = d_{j-1} d_i", n, i, j);
                    }
                }
            }
        }
        // s_i s_j = s_{j+1} s_i on Y_n, i ≤ j
        for n in 0..t.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = self.degeneracy(n + 1, i).compose(self.degeneracy(n, j));
                    let rhs = self.degeneracy(n + 1, j + 1).compose(self.degeneracy(n, i));
                    if lhs != rhs {
                        return fail("s_i s_j = s_{j+1} s_i", n, i, j);
                    }
                }
            }
        }
        // d_i s_j on Y_n
        for n in 0..t {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = self.face(n + 1, i).compose(self.degeneracy(n, j));
                    let (relation, rhs) = if i < j {
                        ("d_i s_j = s_{j-1} d_i", self.degeneracy(n - 1, j - 1).compose(self.face(n, i)))
                    } else if i == j || i == j + 1 {
                        ("d_i s_j = id", PointedMap::identity(self.sizes[n]))
                    } else {
                        ("d_i s_j = s_j d_{i-1}", self.degeneracy(n - 1, j).compose(self.face(n, i - 1)))
                    };
                    if lhs != rhs {
                        return fail(relation, n, i, j);
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-point simplicial set.
    pub fn point(t: usize) -> SimplicialSet {
        let sizes = vec![1; t + 1];
        let faces = (0..=t).map(|n| vec![PointedMap::identity(1); if n == 0 { 0 } else { n + 1 }]).collect();
        let degeneracies = (0..t).map(|n| vec![PointedMap::identity(1); n + 1]).collect();
        SimplicialSet { sizes, faces, degeneracies }
    }

    /// The circle `Δ¹/∂Δ¹` with `Y_n = {0,…,n}`.
    pub fn circle(t: usize) -> SimplicialSet {
        let sizes = (0..=t).map(|n| n + 1).collect();
        let mut faces = vec![Vec::new()];
        for n in 1..=t {
            let level = (0..=n)
                .map(|i| {
                    let table = (0..=n)
                        .map(|j| {
                            if i == n {
                                if j == n { 0 } else { j }
                            } else if j <= i {
                                j
                            } else {
                                j - 1
                            }
                        })
                        .collect();
                    PointedMap::new_unchecked(table, n)
                })
                .collect();
            faces.push(level);
        }
        let degeneracies = (0..t)
            .map(|n| {
                (0..=n)
                    .map(|i| PointedMap::new_unchecked((0..=n).map(|j| if j <= i { j } else { j + 1 }).collect(), n + 2))
                    .collect()
            })
            .collect();
        SimplicialSet { sizes, faces, degeneracies }
    }

    /// The sphere `Δᵖ/∂Δᵖ`: `Y_n` is the basepoint plus the order-preserving
    /// surjections `[n] ↠ [p]`, listed lexicographically by value sequence.
    pub fn sphere(p: usize, t: usize) -> SimplicialSet {
        assert!(p >= 1, "sphere dimension must be positive");
        let levels: Vec<Vec<Vec<usize>>> = (0..=t).map(|n| surjections(n, p)).collect();
        let index = |n: usize, seq: &[usize]| -> usize {
            if !is_surjection(seq, p) {
                return 0;
            }
            levels[n].binary_search_by(|s| s.as_slice().cmp(seq)).map(|k| k + 1).unwrap_or(0)
        };
        let sizes: Vec<usize> = levels.iter().map(|l| l.len() + 1).collect();
        let mut faces = vec![Vec::new()];
        for n in 1..=t {
            let level = (0..=n)
                .map(|i| {
                    let mut table = vec![0];
                    for seq in &levels[n] {
                        let mut s = seq.clone();
                        s.remove(i);
                        table.push(index(n - 1, &s));
                    }
                    PointedMap::new_unchecked(table, sizes[n - 1])
                })
                .collect();
            faces.push(level);
        }
        let degeneracies = (0..t)
            .map(|n| {
                (0..=n)
                    .map(|i| {
                        let mut table = vec![0];
                        for seq in &levels[n] {
                            let mut s = seq.clone();
                            s.insert(i, seq[i]);
                            table.push(index(n + 1, &s));
                        }
                        PointedMap::new_unchecked(table, sizes[n + 1])
                    })
                    .collect()
            })
            .collect();
        SimplicialSet { sizes, faces, degeneracies }
    }

    pub fn truncation(&self) -> usize {
        self.sizes.len() - 1
    }

    pub fn level_sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn level_size(&self, n: usize) -> usize {
        self.sizes[n]
    }

    /// `d_i : Y_n → Y_{n−1}`.
    pub fn face(&self, n: usize, i: usize) -> &PointedMap {
        &self.faces[n][i]
    }

    /// `s_i : Y_n → Y_{n+1}`.
    pub fn degeneracy(&self, n: usize, i: usize) -> &PointedMap {
        &self.degeneracies[n][i]
    }

    pub fn faces(&self, n: usize) -> &[PointedMap] {
        &self.faces[n]
    }

    pub fn degeneracies(&self, n: usize) -> &[PointedMap] {
        &self.degeneracies[n]
    }

    /// Keeps levels `0..=t`.
    pub fn truncate(&self, t: usize) -> SimplicialSet {
        assert!(t <= self.truncation());
        SimplicialSet {
            sizes: self.sizes[..=t].to_vec(),
            faces: self.faces[..=t].to_vec(),
            degeneracies: self.degeneracies[..t].to_vec(),
        }
    }
}

/// Nondecreasing sequences of length `n+1` starting at 0, ending at `p`,
/// with steps of 0 or 1, in lexicographic order.
fn surjections(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        if cur.len() == len {
            if last == p {
                out.push(cur.clone());
            }
            return;
        }
        // remaining slots must be able to climb to p
        if p - last > len - cur.len() {
            return;
        }
        for v in [last, last + 1] {
            if v <= p {
                cur.push(v);
                go(len, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n >= p {
        go(n + 1, p, &mut vec![0], &mut out);
    }
    out
}

fn is_surjection(seq: &[usize], p: usize) -> bool {
    seq.first() == Some(&0) && seq.last() == Some(&p) && seq.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
}
