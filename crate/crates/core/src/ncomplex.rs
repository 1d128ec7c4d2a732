//! Amplitude homology of N-complexes:
//! `H_{i,n} = Ker(b^i : C_n → C_{n−i}) / Im(b^{N−i} : C_{n+N−i} → C_n)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::exactnum::{complement_basis, image, induced_on_quotient, nullspace, rank, CyclotomicField, QMatrix, SparseVec};
use crate::loday::NChain;

/// A finite stretch `lo..=hi` of an N-complex with differentials of degree −1.
///
/// `diffs[k]` maps degree `lo + k` to degree `lo + k − 1`. When
/// `bottom_exact` holds, everything below degree `lo − 1` is known to be zero,
/// so kernels that run off the bottom are still exact. With an exact top,
/// everything above `hi` is zero as well.
#[derive(Debug)]
pub struct GradedComplex {
    field: CyclotomicField,
    order: u32,
    lo: i64,
    diffs: Vec<QMatrix>,
    bottom_exact: bool,
    top_exact: bool,
    composites: RefCell<BTreeMap<(i64, usize), QMatrix>>,
}

/// One cell `(n, i)` of a homology table. `dim` is `None` when the truncation
/// does not reach the incoming level `n + N − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyCell {
    pub n: i64,
    pub i: usize,
    pub dim: Option<usize>,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub order: u32,
    pub cells: Vec<HomologyCell>,
}

impl HomologyTable {
    pub fn cell(&self, n: i64, i: usize) -> Option<&HomologyCell> {
        self.cells.iter().find(|c| c.n == n && c.i == i)
    }

    /// `dim H_{i,n}` for a valid cell.
    pub fn dim(&self, n: i64, i: usize) -> Option<usize> {
        self.cell(n, i).and_then(|c| c.dim)
    }

    /// `Σ_i dim H_{i,n}` when every amplitude at `n` is valid.
    pub fn total(&self, n: i64) -> Option<usize> {
        let row: Vec<&HomologyCell> = self.cells.iter().filter(|c| c.n == n).collect();
        if row.is_empty() {
            return None;
        }
        row.iter().map(|c| c.dim).sum()
    }

    /// Degrees present in the table, ascending.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.cells.iter().map(|c| c.n).collect();
        out.dedup();
        out
    }
}

impl GradedComplex {
    pub fn new(field: &CyclotomicField, lo: i64, diffs: Vec<QMatrix>, bottom_exact: bool) -> GradedComplex {
        assert!(!diffs.is_empty(), "empty complex");
        for k in 1..diffs.len() {
            assert_eq!(diffs[k].rows(), diffs[k - 1].cols(), "differentials are not composable");
        }
        GradedComplex {
            field: field.clone(),
            order: field.order(),
            lo,
            diffs,
            bottom_exact,
            top_exact: false,
            composites: RefCell::new(BTreeMap::new()),
        }
    }

    /// Declares every degree above `hi` to be zero.
    pub fn with_exact_top(mut self) -> GradedComplex {
        self.top_exact = true;
        self
    }

    /// `b_n` for `0 ≤ n ≤ T`, zero below.
    pub fn from_chain(chain: &NChain) -> GradedComplex {
        let diffs = (0..=chain.truncation()).map(|n| chain.diff(n).clone()).collect();
        GradedComplex::new(chain.field(), 0, diffs, true)
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.diffs.len() as i64 - 1
    }

    pub fn dim(&self, n: i64) -> usize {
        if n == self.lo - 1 {
            self.diffs[0].rows()
        } else if n < self.lo || n > self.hi() {
            0
        } else {
            self.diffs[(n - self.lo) as usize].cols()
        }
    }

    pub fn diff(&self, n: i64) -> &QMatrix {
        &self.diffs[(n - self.lo) as usize]
    }

    /// Whether `b^k` out of degree `n` is known exactly.
    fn power_known(&self, n: i64, k: usize) -> bool {
        n >= self.lo && (n <= self.hi() || self.top_exact) && (self.bottom_exact || n - k as i64 >= self.lo - 1)
    }

    /// `b^k : C_n → C_{n−k}`, into a zero space once the target falls below
    /// the bottom of an exact complex.
    pub fn power(&self, n: i64, k: usize) -> Result<QMatrix> {
        if !self.power_known(n, k) {
            let needed = if n > self.hi() { n } else { n - k as i64 };
            return Err(Error::InsufficientTruncation { needed: needed.unsigned_abs() as usize, truncation: self.hi() as usize });
        }
        if n - (k as i64) < self.lo - 1 {
            return Ok(QMatrix::zeros(0, self.dim(n)));
        }
        if n > self.hi() {
            return Ok(QMatrix::zeros(self.dim(n - k as i64), 0));
        }
        if k == 0 {
            return Ok(QMatrix::identity(self.dim(n), &self.field));
        }
        if let Some(m) = self.composites.borrow().get(&(n, k)) {
            return Ok(m.clone());
        }
        let prev = self.power(n, k - 1)?;
        let m = self.diff(n - k as i64 + 1).mul(&prev, &self.field);
        self.composites.borrow_mut().insert((n, k), m.clone());
        Ok(m)
    }

    /// A cell is valid when the incoming level `n + N − i` is present and the
    /// outgoing composite is known.
    pub fn cell_valid(&self, n: i64, i: usize) -> bool {
        let big_n = self.order as i64;
        (self.top_exact || n + big_n - (i as i64) <= self.hi()) && self.power_known(n, i)
    }

    fn check_cell(&self, n: i64, i: usize) -> Result<()> {
        if i == 0 || i >= self.order as usize || !self.cell_valid(n, i) {
            return Err(Error::InvalidCell { n, i });
        }
        Ok(())
    }

    /// Kernel basis of `b^i` at `n` and the image vectors of `b^{N−i}` into `n`,
    /// after checking `b^i ∘ b^{N−i} = 0`.
    pub fn cycles_and_boundaries(&self, n: i64, i: usize) -> Result<(Vec<SparseVec>, Vec<SparseVec>)> {
        self.check_cell(n, i)?;
        let out = self.power(n, i)?;
        let top = n + (self.order as usize - i) as i64;
        let inc = self.power(top, self.order as usize - i)?;
        if !out.mul(&inc, &self.field).is_zero() {
            return Err(Error::Nilpotency { order: self.order, top });
        }
        Ok((nullspace(&out, &self.field), image(&inc, &self.field)))
    }

    /// `dim H_{i,n}` for a valid cell.
    pub fn cell_dim(&self, n: i64, i: usize) -> Result<usize> {
        self.check_cell(n, i)?;
        let out = self.power(n, i)?;
        let top = n + (self.order as usize - i) as i64;
        let inc = self.power(top, self.order as usize - i)?;
        if !out.mul(&inc, &self.field).is_zero() {
            return Err(Error::Nilpotency { order: self.order, top });
        }
        Ok(out.cols() - rank(&out, &self.field) - rank(&inc, &self.field))
    }

    /// The full table for `lo ≤ n ≤ hi`, `1 ≤ i ≤ N−1`.
    pub fn homology(&self) -> Result<HomologyTable> {
        let mut cells = Vec::new();
        for n in self.lo..=self.hi() {
            for i in 1..self.order as usize {
                let valid = self.cell_valid(n, i);
                let dim = if valid { Some(self.cell_dim(n, i)?) } else { None };
                cells.push(HomologyCell { n, i, dim, valid });
            }
        }
        Ok(HomologyTable { order: self.order, cells })
    }

    /// Cycles spanning a complement of the boundaries; one per homology dimension.
    pub fn representatives(&self, n: i64, i: usize) -> Result<Vec<SparseVec>> {
        let (ker, im) = self.cycles_and_boundaries(n, i)?;
        complement_basis(&ker, &im, self.dim(n), &self.field)
    }

    /// Matrix of the map induced by `op : C_n → C_n` on `H_{i,n}`, in the
    /// basis of [`GradedComplex::representatives`].
    pub fn induced(&self, op: &QMatrix, n: i64, i: usize) -> Result<QMatrix> {
        let (ker, im) = self.cycles_and_boundaries(n, i)?;
        induced_on_quotient(op, &ker, &im, &self.field)
    }
}

/// `b^i : C_n → C_{n−i}` of a chain.
pub fn power_diff(chain: &NChain, n: usize, i: usize) -> Result<QMatrix> {
    chain.power(n, i)
}

/// Amplitude homology of a chain, all cells `0 ≤ n ≤ T`.
pub fn homology(chain: &NChain) -> Result<HomologyTable> {
    GradedComplex::from_chain(chain).homology()
}

pub fn homology_representatives(chain: &NChain, n: usize, i: usize) -> Result<Vec<SparseVec>> {
    GradedComplex::from_chain(chain).representatives(n as i64, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::loday::BuildOptions;
    use crate::simplicial::SimplicialSet;

    fn chain(n: u32, alg: fn(&CyclotomicField) -> Algebra, y: SimplicialSet) -> NChain {
        let f = CyclotomicField::new(n).unwrap();
        NChain::build(&alg(&f), &y, 1, BuildOptions::default()).unwrap()
    }

    #[test]
    fn scalar_circle_order_three() {
        let c = chain(3, Algebra::base_field, SimplicialSet::circle(4));
        let t = homology(&c).unwrap();
        assert_eq!(t.dim(0, 1), Some(1));
        assert_eq!(t.dim(0, 2), Some(0));
    }

    #[test]
    fn dual_numbers_degree_zero() {
        let c = chain(2, Algebra::dual_numbers, SimplicialSet::circle(3));
        let t = homology(&c).unwrap();
        assert_eq!(t.dim(0, 1), Some(2));
        assert_eq!(t.total(0), Some(2));
    }

    #[test]
    fn validity_window() {
        let c = chain(3, Algebra::base_field, SimplicialSet::circle(4));
        let t = homology(&c).unwrap();
        // (n, i) needs level n + 3 − i
        assert!(t.cell(2, 1).unwrap().valid);
        assert!(!t.cell(3, 1).unwrap().valid);
        assert!(t.cell(3, 2).unwrap().valid);
        assert!(!t.cell(4, 2).unwrap().valid);
        assert_eq!(t.total(3), None);
        assert!(homology_representatives(&c, 4, 2).is_err());
    }

    #[test]
    fn power_shapes() {
        let c = chain(3, Algebra::base_field, SimplicialSet::circle(4));
        assert_eq!(power_diff(&c, 1, 1).unwrap(), c.diff(1).clone());
        let into_nothing = power_diff(&c, 0, 2).unwrap();
        assert_eq!((into_nothing.rows(), into_nothing.cols()), (0, 1));
    }

    #[test]
    fn representatives_count_matches_dims() {
        let c = chain(2, Algebra::dual_numbers, SimplicialSet::circle(4));
        let g = GradedComplex::from_chain(&c);
        let t = g.homology().unwrap();
        for cell in t.cells.iter().filter(|c| c.valid) {
            assert_eq!(g.representatives(cell.n, cell.i).unwrap().len(), cell.dim.unwrap());
        }
        let id = QMatrix::identity(c.dim(1), c.field());
        let h = t.dim(1, 1).unwrap();
        assert!(g.induced(&id, 1, 1).unwrap().is_identity(c.field()));
        assert!(g.induced(&QMatrix::zeros(c.dim(1), c.dim(1)), 1, 1).unwrap().is_zero());
        assert_eq!(g.induced(&id, 1, 1).unwrap().rows(), h);
    }

    #[test]
    fn inexact_bottom_needs_lower_levels() {
        let c = chain(3, Algebra::base_field, SimplicialSet::circle(6));
        let diffs: Vec<QMatrix> = (2..=6).map(|n| c.diff(n).clone()).collect();
        let g = GradedComplex::new(c.field(), 2, diffs, false);
        // b^2 out of degree 2 would need b_1, which is not stored
        assert!(!g.cell_valid(2, 2));
        assert!(g.cell_valid(2, 1));
        assert!(g.cell_valid(3, 2));
        let full = homology(&c).unwrap();
        let part = g.homology().unwrap();
        for cell in part.cells.iter().filter(|c| c.valid) {
            assert_eq!(cell.dim, full.dim(cell.n, cell.i));
        }
    }
}
