//! Sparse vectors and column-major sparse matrices over Q(ζ_N).

use alloc::vec;
use alloc::vec::Vec;

use super::field::{CyclotomicField, Scalar};

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: &CyclotomicField) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Sorts, merges duplicate indices by addition and drops zeros.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, s) in entries {
            match out.last_mut() {
                Some((j, acc)) if *j == i => acc.add_assign(&s),
                _ => out.push((i, s)),
            }
        }
        out.retain(|(_, s)| !s.is_zero());
        SparseVec { entries: out }
    }

    /// Dense coordinates to sparse form.
    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values.iter().enumerate().filter(|(_, s)| !s.is_zero()).map(|(i, s)| (i, s.clone())).collect(),
        }
    }

    pub fn to_dense(&self, len: usize, field: &CyclotomicField) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, s) in &self.entries {
            out[*i] = s.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, s)| (*i, s))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&index, |(i, _)| *i).ok().map(|k| &self.entries[k].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, s)| (*i, s))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, alpha: &Scalar, field: &CyclotomicField) -> SparseVec {
        if alpha.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, s)| (*i, field.mul(alpha, s))).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, s)| (*i, s.neg())).collect() }
    }

    /// `self + alpha·other`
    pub fn axpy(&self, alpha: &Scalar, other: &SparseVec, field: &CyclotomicField) -> SparseVec {
        if alpha.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, field.mul(alpha, y)));
                        b.next();
                    } else {
                        let mut s = x.clone();
                        field.mul_add_assign(&mut s, alpha, y);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, field.mul(alpha, y)));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec, field: &CyclotomicField) -> SparseVec {
        self.axpy(&field.one(), other, field)
    }

    pub fn sub(&self, other: &SparseVec, field: &CyclotomicField) -> SparseVec {
        self.axpy(&field.from_int(-1), other, field)
    }

    /// Shifts every index by `offset`.
    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, s)| (i + offset, s.clone())).collect() }
    }

    /// Keeps entries with index in `[start, start+len)`, re-based to 0.
    pub fn slice(&self, start: usize, len: usize) -> SparseVec {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= start && *i < start + len)
                .map(|(i, s)| (i - start, s.clone()))
                .collect(),
        }
    }

    pub(crate) fn push_unchecked(&mut self, index: usize, value: Scalar) {
        debug_assert!(self.entries.last().is_none_or(|(i, _)| *i < index));
        debug_assert!(!value.is_zero());
        self.entries.push((index, value));
    }
}

/// Dense scratch buffer for accumulating one sparse column at a time.
pub(crate) struct Accumulator {
    values: Vec<Scalar>,
    touched: Vec<usize>,
    marked: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(len: usize, field: &CyclotomicField) -> Self {
        Accumulator { values: vec![field.zero(); len], touched: Vec::new(), marked: vec![false; len] }
    }

    #[inline]
    fn mark(&mut self, index: usize) {
        if !self.marked[index] {
            self.marked[index] = true;
            self.touched.push(index);
        }
    }

    pub(crate) fn add(&mut self, index: usize, value: &Scalar) {
        self.mark(index);
        self.values[index].add_assign(value);
    }

    pub(crate) fn add_product(&mut self, index: usize, a: &Scalar, b: &Scalar, field: &CyclotomicField) {
        self.mark(index);
        field.mul_add_assign(&mut self.values[index], a, b);
    }

    /// Drains the accumulated column and resets the buffer.
    pub(crate) fn take(&mut self, field: &CyclotomicField) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = SparseVec::new();
        for &i in &self.touched {
            self.marked[i] = false;
            let v = core::mem::replace(&mut self.values[i], field.zero());
            if !v.is_zero() {
                out.push_unchecked(i, v);
            }
        }
        self.touched.clear();
        out
    }
}

/// A `rows × cols` matrix stored column by column.
///
/// Columns are [`SparseVec`]s over row indices, so equality of two matrices
/// is structural equality of a canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize, field: &CyclotomicField) -> Self {
        QMatrix { rows: n, cols: n, columns: (0..n).map(|i| SparseVec::unit(i, field)).collect() }
    }

    pub fn scalar_identity(n: usize, s: &Scalar) -> Self {
        let columns = (0..n)
            .map(|i| if s.is_zero() { SparseVec::new() } else { SparseVec { entries: vec![(i, s.clone())] } })
            .collect();
        QMatrix { rows: n, cols: n, columns }
    }

    /// Panics if a column has an index out of range.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        for c in &columns {
            assert!(c.max_index().is_none_or(|m| m < rows), "row index out of bounds");
        }
        QMatrix { rows, cols: columns.len(), columns }
    }

    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, s) in triplets {
            assert!(r < rows && c < cols, "index out of bounds");
            per_col[c].push((r, s));
        }
        QMatrix { rows, cols, columns: per_col.into_iter().map(SparseVec::from_entries).collect() }
    }

    /// Row-major dense input.
    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                assert_eq!(row.len(), ncols, "ragged dense matrix");
                row.iter().enumerate().map(move |(c, s)| (r, c, s.clone()))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Scalar> {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }

    pub fn is_identity(&self, field: &CyclotomicField) -> bool {
        self.rows == self.cols && self.columns.iter().enumerate().all(|(j, c)| c.entries == [(j, field.one())])
    }

    /// All nonzero entries as `(row, col, value)` in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, s)| (r, c, s)))
    }

    pub fn transpose(&self) -> QMatrix {
        let mut per_row: Vec<SparseVec> = vec![SparseVec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, s) in col.iter() {
                per_row[r].entries.push((c, s.clone()));
            }
        }
        QMatrix { rows: self.cols, cols: self.rows, columns: per_row }
    }

    pub fn add(&self, rhs: &QMatrix, field: &CyclotomicField) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add(b, field)).collect();
        QMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn sub(&self, rhs: &QMatrix, field: &CyclotomicField) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.sub(b, field)).collect();
        QMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn scale(&self, alpha: &Scalar, field: &CyclotomicField) -> QMatrix {
        let columns = self.columns.iter().map(|c| c.scale(alpha, field)).collect();
        QMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn neg(&self) -> QMatrix {
        QMatrix { rows: self.rows, cols: self.cols, columns: self.columns.iter().map(SparseVec::neg).collect() }
    }

    /// `self + alpha·rhs`
    pub fn axpy(&self, alpha: &Scalar, rhs: &QMatrix, field: &CyclotomicField) -> QMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in axpy");
        let columns = self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.axpy(alpha, b, field)).collect();
        QMatrix { rows: self.rows, cols: self.cols, columns }
    }

    pub fn apply(&self, v: &SparseVec, field: &CyclotomicField) -> SparseVec {
        let mut acc = Accumulator::new(self.rows, field);
        for (k, b) in v.iter() {
            for (i, a) in self.columns[k].iter() {
                acc.add_product(i, a, b, field);
            }
        }
        acc.take(field)
    }

    /// The product `self · rhs`, i.e. the composite "rhs first, then self".
    pub fn mul(&self, rhs: &QMatrix, field: &CyclotomicField) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        let mut acc = Accumulator::new(self.rows, field);
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                for (k, b) in col.iter() {
                    for (i, a) in self.columns[k].iter() {
                        acc.add_product(i, a, b, field);
                    }
                }
                acc.take(field)
            })
            .collect();
        QMatrix { rows: self.rows, cols: rhs.cols, columns }
    }

    /// Kronecker product with slot ordering "self most significant".
    pub fn kron(&self, rhs: &QMatrix, field: &CyclotomicField) -> QMatrix {
        let rows = self.rows * rhs.rows;
        let mut columns = Vec::with_capacity(self.cols * rhs.cols);
        for a_col in &self.columns {
            for b_col in &rhs.columns {
                let mut v = SparseVec::new();
                for (i, a) in a_col.iter() {
                    for (k, b) in b_col.iter() {
                        v.push_unchecked(i * rhs.rows + k, field.mul(a, b));
                    }
                }
                columns.push(v);
            }
        }
        QMatrix { rows, cols: self.cols * rhs.cols, columns }
    }

    /// Dense row-major copy, for small matrices in reports and tests.
    pub fn to_dense(&self, field: &CyclotomicField) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![field.zero(); self.cols]; self.rows];
        for (r, c, s) in self.triplets() {
            out[r][c] = s.clone();
        }
        out
    }
}
