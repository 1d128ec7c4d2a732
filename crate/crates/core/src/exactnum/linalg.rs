//! Exact sparse elimination over Q(ζ_N): rank, kernel, image and the
//! subquotient machinery used to read off homology and induced maps.
//!
//! Elimination pivots on the first nonzero entry. Stored echelon vectors are
//! normalized to a leading 1 and only their leading entries are eliminated,
//! which is enough for rank and membership and keeps fill-in low; kernels are
//! read off a fully back-substituted row echelon form.

use alloc::vec;
use alloc::vec::Vec;

use super::field::{CyclotomicField, Scalar};
use super::matrix::{QMatrix, SparseVec};
use crate::error::Error;

/// Incrementally built echelon basis of a subspace of an ambient space of
/// fixed dimension.
///
/// With tracking enabled every stored vector remembers how it was formed
/// from the inserted generators, which turns membership tests into
/// coordinate solves.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: CyclotomicField,
    slot: Vec<Option<u32>>,
    vectors: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
    generators: usize,
}

/// Result of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug)]
pub struct Reduction {
    pub remainder: SparseVec,
    /// Coordinates over the inserted generators of the part that was removed.
    pub combo: Option<SparseVec>,
}

impl Echelon {
    pub fn new(dim: usize, field: &CyclotomicField) -> Self {
        Echelon { field: field.clone(), slot: vec![None; dim], vectors: Vec::new(), combos: None, generators: 0 }
    }

    pub fn with_tracking(dim: usize, field: &CyclotomicField) -> Self {
        Echelon { combos: Some(Vec::new()), ..Self::new(dim, field) }
    }

    pub fn dim(&self) -> usize {
        self.slot.len()
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let f = &self.field;
        let mut rem = v.clone();
        let mut combo = self.combos.as_ref().map(|_| SparseVec::new());
        while let Some((lead, c)) = rem.leading() {
            let Some(p) = self.slot[lead] else { break };
            let c = c.clone();
            rem = rem.axpy(&c.neg(), &self.vectors[p as usize], f);
            if let (Some(acc), Some(combos)) = (combo.as_mut(), self.combos.as_ref()) {
                *acc = acc.axpy(&c, &combos[p as usize], f);
            }
        }
        Reduction { remainder: rem, combo }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).remainder.is_zero()
    }

    /// Inserts the next generator; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let gen = self.generators;
        self.generators += 1;
        let Reduction { remainder, combo } = self.reduce(v);
        let Some((lead, c)) = remainder.leading() else { return false };
        let f = &self.field;
        let inv = f.inv(c).expect("leading entry is nonzero");
        let normalized = remainder.scale(&inv, f);
        if let (Some(combos), Some(acc)) = (self.combos.as_mut(), combo) {
            let own = SparseVec::unit(gen, f).sub(&acc, f);
            combos.push(own.scale(&inv, f));
        }
        self.slot[lead] = Some(self.vectors.len() as u32);
        self.vectors.push(normalized);
        true
    }

    /// Coordinates of `v` over the inserted generators, when `v` lies in
    /// their span. Requires tracking.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.combos.is_some(), "coordinates need a tracking echelon");
        let r = self.reduce(v);
        if r.remainder.is_zero() {
            r.combo
        } else {
            None
        }
    }
}

/// Rank by column elimination.
pub fn rank(m: &QMatrix, field: &CyclotomicField) -> usize {
    let mut ech = Echelon::new(m.rows(), field);
    let mut r = 0;
    for col in m.columns() {
        if ech.insert(col) {
            r += 1;
            if r == m.rows() {
                break;
            }
        }
    }
    r
}

pub fn nullity(m: &QMatrix, field: &CyclotomicField) -> usize {
    m.cols() - rank(m, field)
}

/// Indices of the columns that are independent of all earlier columns.
pub fn pivot_columns(m: &QMatrix, field: &CyclotomicField) -> Vec<usize> {
    let mut ech = Echelon::new(m.rows(), field);
    m.columns().iter().enumerate().filter(|(_, c)| ech.insert(c)).map(|(j, _)| j).collect()
}

/// A basis of the column space, made of original columns of `m`.
pub fn image(m: &QMatrix, field: &CyclotomicField) -> Vec<SparseVec> {
    pivot_columns(m, field).into_iter().map(|j| m.column(j).clone()).collect()
}

/// Reduced row echelon form of `m` as `(pivot column, row)` pairs sorted by
/// pivot column. Each row has a 1 at its pivot column and zeros at every
/// other pivot column.
pub fn rref_rows(m: &QMatrix, field: &CyclotomicField) -> Vec<(usize, SparseVec)> {
    let rows = m.transpose();
    let mut ech = Echelon::new(m.cols(), field);
    for r in rows.columns() {
        ech.insert(r);
    }
    let mut pivots: Vec<(usize, SparseVec)> =
        ech.vectors.into_iter().map(|v| (v.leading().expect("stored vectors are nonzero").0, v)).collect();
    pivots.sort_by_key(|(c, _)| *c);
    let mut is_pivot = vec![usize::MAX; m.cols()];
    for (k, (c, _)) in pivots.iter().enumerate() {
        is_pivot[*c] = k;
    }
    // back-substitute from the last pivot up; finished rows are fully reduced
    for k in (0..pivots.len()).rev() {
        let targets: Vec<(usize, Scalar)> = pivots[k]
            .1
            .iter()
            .skip(1)
            .filter(|(c, _)| is_pivot[*c] != usize::MAX)
            .map(|(c, s)| (is_pivot[c], s.clone()))
            .collect();
        for (other, coeff) in targets {
            let reduced = pivots[k].1.axpy(&coeff.neg(), &pivots[other].1, field);
            pivots[k].1 = reduced;
        }
    }
    pivots
}

/// A basis of the kernel: one vector per free column, in increasing column
/// order, with a 1 at its free column.
pub fn nullspace(m: &QMatrix, field: &CyclotomicField) -> Vec<SparseVec> {
    let pivots = rref_rows(m, field);
    let mut is_pivot = vec![false; m.cols()];
    for (c, _) in &pivots {
        is_pivot[*c] = true;
    }
    // kernel vector for free column j: e_j − Σ_p R_p[j] e_{pivot(p)}
    let mut by_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m.cols()];
    for (c, row) in &pivots {
        for (j, s) in row.iter().skip(1) {
            by_free[j].push((*c, s.neg()));
        }
    }
    (0..m.cols())
        .filter(|&j| !is_pivot[j])
        .map(|j| {
            let mut entries = core::mem::take(&mut by_free[j]);
            entries.push((j, field.one()));
            SparseVec::from_entries(entries)
        })
        .collect()
}

/// Rank of a family of vectors in a space of dimension `dim`.
pub fn span_rank(vectors: &[SparseVec], dim: usize, field: &CyclotomicField) -> usize {
    let mut ech = Echelon::new(dim, field);
    vectors.iter().filter(|v| ech.insert(v)).count()
}

/// dim span(ker) − dim span(im).
pub fn quotient_dim(ker: &[SparseVec], im: &[SparseVec], dim: usize, field: &CyclotomicField) -> usize {
    span_rank(ker, dim, field) - span_rank(im, dim, field)
}

/// Fails unless span(im) ⊆ span(ker).
fn check_containment(ker: &[SparseVec], im: &[SparseVec], dim: usize, field: &CyclotomicField) -> Result<Echelon, Error> {
    let mut ker_ech = Echelon::new(dim, field);
    for v in ker {
        ker_ech.insert(v);
    }
    if im.iter().any(|v| !ker_ech.contains(v)) {
        return Err(Error::NotSubquotient("image is not contained in the kernel"));
    }
    Ok(ker_ech)
}

/// Vectors from `ker` (in order) completing an independent subset of `im`
/// to a basis of span(ker). These represent a basis of span(ker)/span(im).
pub fn complement_basis(
    ker: &[SparseVec],
    im: &[SparseVec],
    dim: usize,
    field: &CyclotomicField,
) -> Result<Vec<SparseVec>, Error> {
    check_containment(ker, im, dim, field)?;
    let mut ech = Echelon::new(dim, field);
    for v in im {
        ech.insert(v);
    }
    Ok(ker.iter().filter(|v| ech.insert(v)).cloned().collect())
}

/// Matrix of the map induced by `op` on span(ker)/span(im), in the basis
/// given by [`complement_basis`].
pub fn induced_on_quotient(
    op: &QMatrix,
    ker: &[SparseVec],
    im: &[SparseVec],
    field: &CyclotomicField,
) -> Result<QMatrix, Error> {
    let dim = op.cols();
    if op.rows() != dim {
        return Err(Error::ShapeMismatch { context: "induced_on_quotient", expected: dim, found: op.rows() });
    }
    let ker_ech = check_containment(ker, im, dim, field)?;
    let mut im_ech = Echelon::with_tracking(dim, field);
    let mut im_basis: Vec<SparseVec> = Vec::new();
    for v in im {
        if im_ech.insert(v) {
            im_basis.push(v.clone());
        }
    }
    for v in &im_basis {
        if !im_ech.contains(&op.apply(v, field)) {
            return Err(Error::NotSubquotient("operator does not preserve the image"));
        }
    }
    for v in ker {
        if !ker_ech.contains(&op.apply(v, field)) {
            return Err(Error::NotSubquotient("operator does not preserve the kernel"));
        }
    }
    let reps = complement_basis(ker, &im_basis, dim, field)?;
    // basis of span(ker): independent image vectors first, then representatives
    let mut full = Echelon::with_tracking(dim, field);
    for v in im_basis.iter().chain(&reps) {
        full.insert(v);
    }
    let offset = im_basis.len();
    let h = reps.len();
    let columns = reps
        .iter()
        .map(|r| {
            let coords = full.coordinates(&op.apply(r, field)).expect("image of a cycle stays in the kernel");
            SparseVec::from_entries(coords.iter().filter(|(g, _)| *g >= offset).map(|(g, s)| (g - offset, s.clone())).collect())
        })
        .collect();
    Ok(QMatrix::from_columns(h, columns))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> CyclotomicField {
        CyclotomicField::new(4).unwrap()
    }

    #[test]
    fn zero_and_identity() {
        let f = f4();
        let z = QMatrix::zeros(3, 3);
        assert_eq!(rank(&z, &f), 0);
        assert_eq!(nullspace(&z, &f).len(), 3);
        let i = QMatrix::identity(4, &f);
        assert_eq!(rank(&i, &f), 4);
        assert!(nullspace(&i, &f).is_empty());
    }

    #[test]
    fn gaussian_zeta_matrix_has_rank_one() {
        let f = f4();
        let z = f.zeta_pow(1);
        let m = QMatrix::from_dense(&[vec![f.one(), z.clone()], vec![f.mul(&z, &z), f.from_int(-1)]]);
        // det = −1 − ζ³ = −1 + ζ, nonzero; the rank-one variant has row2 = ζ²·row1
        let m2 = QMatrix::from_dense(&[vec![f.one(), z.clone()], vec![f.mul(&z, &z), f.mul(&f.mul(&z, &z), &z)]]);
        let det = |a: &QMatrix| {
            let d = a.to_dense(&f);
            f.mul(&d[0][0], &d[1][1]).sub(&f.mul(&d[0][1], &d[1][0]))
        };
        assert!(!det(&m).is_zero());
        assert_eq!(rank(&m, &f), 2);
        assert!(det(&m2).is_zero());
        assert_eq!(rank(&m2, &f), 1);
        let ker = nullspace(&m2, &f);
        assert_eq!(ker.len(), 1);
        assert!(m2.apply(&ker[0], &f).is_zero());
    }

    #[test]
    fn quotient_examples() {
        let f = f4();
        let e = |i| SparseVec::unit(i, &f);
        let full = vec![e(0), e(1), e(2)];
        let op = QMatrix::from_triplets(3, 3, vec![(1, 0, f.one()), (0, 2, f.from_int(3))]);
        assert_eq!(quotient_dim(&full, &[], 3, &f), 3);
        assert_eq!(induced_on_quotient(&op, &full, &[], &f).unwrap(), op);
        let empty = induced_on_quotient(&op, &full, &full, &f).unwrap();
        assert_eq!((empty.rows(), empty.cols()), (0, 0));
        let swap = QMatrix::from_triplets(2, 2, vec![(1, 0, f.one()), (0, 1, f.one())]);
        let err = induced_on_quotient(&swap, &[e(0), e(1)], &[e(0)], &f).unwrap_err();
        assert!(matches!(err, Error::NotSubquotient(_)));
        let bad = induced_on_quotient(&QMatrix::identity(2, &f), &[e(0)], &[e(1)], &f).unwrap_err();
        assert!(matches!(bad, Error::NotSubquotient(_)));
    }

    #[test]
    fn tracked_coordinates() {
        let f = f4();
        let z = f.zeta_pow(1);
        let a = SparseVec::from_entries(vec![(0, f.one()), (1, z.clone())]);
        let b = SparseVec::from_entries(vec![(1, f.one()), (2, f.one())]);
        let mut ech = Echelon::with_tracking(3, &f);
        assert!(ech.insert(&a));
        assert!(ech.insert(&b));
        let target = a.scale(&f.from_int(2), &f).axpy(&z, &b, &f);
        let coords = ech.coordinates(&target).unwrap();
        assert_eq!(coords.to_dense(2, &f), vec![f.from_int(2), z]);
        assert!(ech.coordinates(&SparseVec::unit(2, &f)).is_none());
    }
}
