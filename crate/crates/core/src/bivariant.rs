//! The Hom N-complex of a truncated chain, its q-differential
//! `∂(f)_i = b_{i+n} f_i − q^n f_{i−1} b_i`, the operators
//! `L̄(f)_i = L_{i+n} f_i − q^{mn} f_{i+m} L_i`, and bivariant cohomology.
//!
//! The chain is zero outside `[0, T]`, so `Hom_n` is the finite sum of
//! `Hom(C_i, C_{i+n})` over `max(0, −n) ≤ i ≤ min(T, T−n)` and vanishes for
//! `|n| > T`. With that convention the truncated Hom complex is an honest
//! N-complex; it is not the Hom complex of the untruncated chain, so every
//! cohomology dimension computed here is marked approximate.

use alloc::vec::Vec;

use crate::algebra::Derivation;
use crate::error::{Error, Result};
use crate::exactnum::{Accumulator, QMatrix, Scalar, SparseVec};
use crate::lie::{lie_chain_endo, GradedEndo};
use crate::loday::NChain;
use crate::ncomplex::GradedComplex;

/// Default cap on `dim Hom_n`.
pub const HOM_DIM_LIMIT: usize = 1_000_000;

/// `[max(0, −n), min(T, T−n)]`, the components of a degree-`n` family that
/// can be nonzero. Empty when `|n| > T`.
pub fn component_range(chain: &NChain, n: i64) -> (i64, i64) {
    let t = chain.truncation() as i64;
    ((-n).max(0), t.min(t - n))
}

/// A family `f_i : C_i → C_{i+n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomElement {
    pub degree: i64,
    pub lo: i64,
    pub components: Vec<QMatrix>,
}

impl HomElement {
    pub fn zero(chain: &NChain, degree: i64) -> HomElement {
        let (lo, hi) = component_range(chain, degree);
        let components = (lo..=hi).map(|i| QMatrix::zeros(chain.dim(i + degree), chain.dim(i))).collect();
        HomElement { degree, lo, components }
    }

    /// Builds a family from a closure, evaluated on every admissible component.
    pub fn from_fn(chain: &NChain, degree: i64, mut f: impl FnMut(i64) -> QMatrix) -> HomElement {
        let (lo, hi) = component_range(chain, degree);
        let components = (lo..=hi)
            .map(|i| {
                let m = f(i);
                assert_eq!((m.rows(), m.cols()), (chain.dim(i + degree), chain.dim(i)), "component {i} has the wrong shape");
                m
            })
            .collect();
        HomElement { degree, lo, components }
    }

    /// The identity family in degree 0.
    pub fn identity(chain: &NChain) -> HomElement {
        HomElement::from_fn(chain, 0, |i| QMatrix::identity(chain.dim(i), chain.field()))
    }

    /// The family given by a graded endomorphism.
    pub fn from_endo(chain: &NChain, endo: &GradedEndo) -> HomElement {
        HomElement::from_fn(chain, endo.degree, |i| endo.level_or_zero(chain, i))
    }

    /// The family that is `m` at component `i` and zero elsewhere.
    pub fn one_hot(chain: &NChain, degree: i64, i: i64, m: QMatrix) -> HomElement {
        let mut f = HomElement::zero(chain, degree);
        let k = (i - f.lo) as usize;
        assert!(i >= f.lo && k < f.components.len(), "component {i} is not admissible in degree {degree}");
        assert_eq!((m.rows(), m.cols()), (f.components[k].rows(), f.components[k].cols()));
        f.components[k] = m;
        f
    }

    /// `f_i`, or the zero map when `i` is not admissible.
    pub fn get_or_zero(&self, chain: &NChain, i: i64) -> QMatrix {
        if i >= self.lo {
            if let Some(m) = self.components.get((i - self.lo) as usize) {
                return m.clone();
            }
        }
        QMatrix::zeros(chain.dim(i + self.degree), chain.dim(i))
    }

    pub fn axpy(&self, alpha: &Scalar, other: &HomElement, chain: &NChain) -> HomElement {
        assert_eq!(self.degree, other.degree, "degrees differ");
        let f = chain.field();
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.axpy(alpha, b, f)).collect();
        HomElement { degree: self.degree, lo: self.lo, components }
    }

    pub fn scale(&self, alpha: &Scalar, chain: &NChain) -> HomElement {
        let f = chain.field();
        HomElement { degree: self.degree, lo: self.lo, components: self.components.iter().map(|m| m.scale(alpha, f)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(QMatrix::is_zero)
    }
}

fn b_endo(chain: &NChain) -> GradedEndo {
    GradedEndo { degree: -1, lo: 0, levels: (0..=chain.truncation()).map(|n| chain.diff(n).clone()).collect() }
}

/// `∂(f)_i = b_{i+n} ∘ f_i − q^n f_{i−1} ∘ b_i`, of degree `n − 1`.
pub fn q_partial(chain: &NChain, f: &HomElement) -> HomElement {
    let field = chain.field();
    let n = f.degree;
    let qn = chain.q_pow(n);
    HomElement::from_fn(chain, n - 1, |i| {
        let left = chain.diff_any(i + n).mul(&f.get_or_zero(chain, i), field);
        let right = f.get_or_zero(chain, i - 1).mul(&chain.diff_any(i), field);
        left.axpy(&qn.neg(), &right, field)
    })
}

/// `L̄(f)_i = L_{i+n} ∘ f_i − q^{mn} f_{i+m} ∘ L_i`, of degree `m + n`.
pub fn lbar(chain: &NChain, l: &GradedEndo, f: &HomElement) -> HomElement {
    let field = chain.field();
    let (m, n) = (l.degree, f.degree);
    let qmn = chain.q_pow(m * n);
    HomElement::from_fn(chain, m + n, |i| {
        let left = l.level_or_zero(chain, i + n).mul(&f.get_or_zero(chain, i), field);
        let right = f.get_or_zero(chain, i + m).mul(&l.level_or_zero(chain, i), field);
        left.axpy(&qmn.neg(), &right, field)
    })
}

/// `[g, h] = g∘h − q^{deg g · deg h} h∘g` for graded endomorphisms.
fn graded_commutator(chain: &NChain, g: &GradedEndo, h: &GradedEndo) -> GradedEndo {
    let field = chain.field();
    let c = chain.q_pow(g.degree * h.degree).neg();
    let gh = g.compose(h, chain);
    let hg = h.compose(g, chain);
    let (lo, hi) = (gh.lo.min(hg.lo), (gh.lo + gh.levels.len() as i64).max(hg.lo + hg.levels.len() as i64));
    let levels = (lo..hi).map(|i| gh.level_or_zero(chain, i).axpy(&c, &hg.level_or_zero(chain, i), field)).collect();
    GradedEndo { degree: g.degree + h.degree, lo, levels }
}

/// Both sides of `[∂, L̄](f) = [b, L] f + q^{mn+m+n} f [L, b]`, where
/// `[∂, L̄] = ∂ L̄ − q^{−m} L̄ ∂`. Requires `q^{2m} = 1`.
pub fn graded_commutator_sides(chain: &NChain, l: &GradedEndo, f: &HomElement) -> Result<(HomElement, HomElement)> {
    let m = l.degree;
    if chain.q_pow(2 * m) != chain.field().one() {
        return Err(Error::GradedCommutatorPrecondition(m));
    }
    let field = chain.field();
    let n = f.degree;
    let lhs = q_partial(chain, &lbar(chain, l, f)).axpy(&chain.q_pow(-m).neg(), &lbar(chain, l, &q_partial(chain, f)), chain);
    let b = b_endo(chain);
    let bl = graded_commutator(chain, &b, l);
    let lb = graded_commutator(chain, l, &b);
    let c = chain.q_pow(m * n + m + n);
    let rhs = HomElement::from_fn(chain, m + n - 1, |i| {
        let first = bl.level_or_zero(chain, i + n).mul(&f.get_or_zero(chain, i), field);
        let second = f.get_or_zero(chain, i + m - 1).mul(&lb.level_or_zero(chain, i), field);
        first.axpy(&c, &second, field)
    });
    Ok((lhs, rhs))
}

/// The graded-commutator identity, checked on every component.
pub fn graded_commutator_check(chain: &NChain, l: &GradedEndo, f: &HomElement) -> Result<bool> {
    let (lhs, rhs) = graded_commutator_sides(chain, l, f)?;
    Ok(lhs == rhs)
}

/// Offsets of the blocks `Hom(C_i, C_{i+n})` inside `Hom_n`; each block is
/// stored column-major.
#[derive(Clone, Debug)]
struct Layout {
    degree: i64,
    lo: i64,
    offsets: Vec<usize>,
    dim: usize,
}

impl Layout {
    fn new(chain: &NChain, degree: i64) -> Layout {
        let (lo, hi) = component_range(chain, degree);
        let mut offsets = Vec::new();
        let mut dim = 0;
        for i in lo..=hi {
            offsets.push(dim);
            dim += chain.dim(i) * chain.dim(i + degree);
        }
        Layout { degree, lo, offsets, dim }
    }

    fn offset(&self, i: i64) -> Option<usize> {
        if i < self.lo {
            return None;
        }
        self.offsets.get((i - self.lo) as usize).copied()
    }
}

/// The Hom complex restricted to degrees `n_min..=n_max`, with `∂_n` as
/// matrices on the vectorized spaces.
#[derive(Debug)]
pub struct HomComplexWindow<'a> {
    chain: &'a NChain,
    n_min: i64,
    n_max: i64,
    // layouts for degrees n_min − 1 ..= n_max
    layouts: Vec<Layout>,
    complex: GradedComplex,
}

/// One bivariant cell `HH^{degree}` at amplitude `i`, i.e. `H_{i,−degree}`
/// of the Hom complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariantCell {
    pub degree: i64,
    pub i: usize,
    pub dim: Option<usize>,
    pub valid: bool,
    pub approximate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCell {
    pub degree: i64,
    pub i: usize,
    pub matrix: QMatrix,
}

impl<'a> HomComplexWindow<'a> {
    pub fn new(chain: &'a NChain, n_min: i64, n_max: i64) -> Result<Self> {
        Self::with_limit(chain, n_min, n_max, HOM_DIM_LIMIT)
    }

    pub fn with_limit(chain: &'a NChain, n_min: i64, n_max: i64, limit: usize) -> Result<Self> {
        assert!(n_min <= n_max, "empty degree window");
        let layouts: Vec<Layout> = (n_min - 1..=n_max).map(|n| Layout::new(chain, n)).collect();
        if let Some(l) = layouts.iter().find(|l| l.dim > limit) {
            return Err(Error::HomSizeGuard { degree: l.degree, dim: l.dim, limit });
        }
        let mut w = HomComplexWindow {
            chain,
            n_min,
            n_max,
            layouts,
            complex: GradedComplex::new(chain.field(), 0, alloc::vec![QMatrix::zeros(0, 0)], true),
        };
        let diffs = (n_min..=n_max).map(|n| w.partial_matrix(n)).collect();
        let t = chain.truncation() as i64;
        // Hom vanishes outside [−T, T]
        let mut complex = GradedComplex::new(chain.field(), n_min, diffs, n_min - 2 < -t);
        if n_max >= t {
            complex = complex.with_exact_top();
        }
        w.complex = complex;
        Ok(w)
    }

    pub fn chain(&self) -> &NChain {
        self.chain
    }

    pub fn degrees(&self) -> (i64, i64) {
        (self.n_min, self.n_max)
    }

    pub fn complex(&self) -> &GradedComplex {
        &self.complex
    }

    fn layout(&self, n: i64) -> &Layout {
        &self.layouts[(n - self.n_min + 1) as usize]
    }

    /// `dim Hom_n` for `n_min − 1 ≤ n ≤ n_max`.
    pub fn dim(&self, n: i64) -> usize {
        self.layout(n).dim
    }

    /// Components `i` with `i ≥ N`, `i + n ≥ 0` and both `i + N` and
    /// `i + n + N` at most `T`: every level within `N` steps of the source
    /// and the target lies inside the truncation.
    pub fn interior(&self, n: i64) -> Option<(i64, i64)> {
        let big_n = self.chain.order() as i64;
        let t = self.chain.truncation() as i64;
        let (lo, hi) = (big_n.max(-n), (t - big_n).min(t - n - big_n));
        (lo <= hi).then_some((lo, hi))
    }

    pub fn to_vector(&self, f: &HomElement) -> SparseVec {
        let layout = self.layout(f.degree);
        let mut entries = Vec::new();
        for (k, m) in f.components.iter().enumerate() {
            let off = layout.offsets[k];
            for (r, c, s) in m.triplets() {
                entries.push((off + c * m.rows() + r, s.clone()));
            }
        }
        SparseVec::from_entries(entries)
    }

    pub fn from_vector(&self, degree: i64, v: &SparseVec) -> HomElement {
        let layout = self.layout(degree);
        let chain = self.chain;
        HomElement::from_fn(chain, degree, |i| {
            let off = layout.offset(i).expect("admissible component");
            let rows = chain.dim(i + degree);
            let cols = chain.dim(i);
            let block = v.slice(off, rows * cols);
            QMatrix::from_triplets(rows, cols, block.iter().map(|(k, s)| (k % rows, k / rows, s.clone())))
        })
    }

    /// The matrix of `f ↦ P_{i+n} ∘ f_i + c · f_{i+s} ∘ R_i` from `Hom_n` to
    /// `Hom_{n'}`, where `P_j : C_j → C_{j+n'−n}` and `R_j : C_j → C_{j+s}`.
    fn two_sided(
        &self,
        n: i64,
        target: &Layout,
        left: &dyn Fn(i64) -> QMatrix,
        right: &dyn Fn(i64) -> QMatrix,
        s: i64,
        c: &Scalar,
    ) -> QMatrix {
        let chain = self.chain;
        let field = chain.field();
        let source = self.layout(n);
        let n_target = target.degree;
        let mut acc = Accumulator::new(target.dim, field);
        let mut columns = Vec::with_capacity(source.dim);
        let (lo, hi) = component_range(chain, n);
        for i in lo..=hi {
            let rows = chain.dim(i + n);
            let cols = chain.dim(i);
            let p = left(i + n);
            let p_off = target.offset(i);
            // f_{i} = E appears as f_{j+s} with j = i − s
            let j = i - s;
            let r_t = if c.is_zero() { None } else { target.offset(j).map(|off| (off, right(j).transpose())) };
            for col in 0..cols {
                for row in 0..rows {
                    // P ∘ E: column `col` of the target block gets P's column `row`
                    if let Some(off) = p_off {
                        let t_rows = chain.dim(i + n_target);
                        for (k, v) in p.column(row).iter() {
                            acc.add(off + col * t_rows + k, v);
                        }
                    }
                    // E ∘ R: row `row` of the target block gets R's row `col`
                    if let Some((off, rt)) = &r_t {
                        let t_rows = chain.dim(j + n_target);
                        for (cp, v) in rt.column(col).iter() {
                            acc.add_product(off + cp * t_rows + row, c, v, field);
                        }
                    }
                    columns.push(acc.take(field));
                }
            }
        }
        QMatrix::from_columns(target.dim, columns)
    }

    /// `∂_n : Hom_n → Hom_{n−1}`.
    fn partial_matrix(&self, n: i64) -> QMatrix {
        let chain = self.chain;
        let qn = chain.q_pow(n).neg();
        self.two_sided(n, self.layout(n - 1), &|j| chain.diff_any(j), &|j| chain.diff_any(j), -1, &qn)
    }

    pub fn partial(&self, n: i64) -> &QMatrix {
        self.complex.diff(n)
    }

    /// The matrix of `L̄` for a degree-0 endomorphism on `Hom_n`.
    pub fn lbar_matrix(&self, l: &GradedEndo, n: i64) -> QMatrix {
        assert_eq!(l.degree, 0, "only degree-0 operators act on a fixed Hom degree");
        let chain = self.chain;
        let minus_one = chain.field().from_int(-1);
        self.two_sided(n, self.layout(n), &|j| l.level_or_zero(chain, j), &|j| l.level_or_zero(chain, j), 0, &minus_one)
    }

    /// `∂^N = 0` on every window of `N` consecutive differentials inside the
    /// stored degrees. Reports the top degree of the first failure.
    pub fn nilpotency_check(&self) -> Result<()> {
        let big_n = self.chain.order() as usize;
        for top in self.n_min..=self.n_max {
            if top - (big_n as i64) < self.n_min - 1 {
                continue;
            }
            if !self.complex.power(top, big_n)?.is_zero() {
                return Err(Error::Nilpotency { order: big_n as u32, top });
            }
        }
        Ok(())
    }

    /// `∂^N = 0` restricted to interior components of the source.
    pub fn interior_nilpotency_check(&self) -> Result<()> {
        let big_n = self.chain.order() as usize;
        for top in self.n_min..=self.n_max {
            if top - (big_n as i64) < self.n_min - 1 {
                continue;
            }
            let Some((lo, hi)) = self.interior(top) else { continue };
            let power = self.complex.power(top, big_n)?;
            let layout = self.layout(top);
            for i in lo..=hi {
                let off = layout.offset(i).expect("interior component is admissible");
                let len = self.chain.dim(i) * self.chain.dim(i + top);
                if (off..off + len).any(|c| !power.column(c).is_zero()) {
                    return Err(Error::Nilpotency { order: big_n as u32, top });
                }
            }
        }
        Ok(())
    }
}

/// Amplitude cohomology `HH^{−n}` for every Hom degree `n` in the window.
pub fn bivariant_cohomology(w: &HomComplexWindow) -> Result<Vec<BivariantCell>> {
    let table = w.complex.homology()?;
    Ok(table
        .cells
        .into_iter()
        .map(|c| BivariantCell { degree: -c.n, i: c.i, dim: c.dim, valid: c.valid, approximate: true })
        .collect())
}

/// `L̄_D` on each Hom degree: checks `∂ L̄ = L̄ ∂` exactly, then returns the
/// induced matrix on every valid cell.
pub fn bivariant_induced(w: &HomComplexWindow, d: &Derivation) -> Result<Vec<InducedCell>> {
    let chain = w.chain;
    let field = chain.field();
    let l = lie_chain_endo(chain, d)?;
    let (n_min, n_max) = w.degrees();
    let ops: Vec<QMatrix> = (n_min - 1..=n_max).map(|n| w.lbar_matrix(&l, n)).collect();
    for n in n_min..=n_max {
        let k = (n - n_min + 1) as usize;
        if w.partial(n).mul(&ops[k], field) != ops[k - 1].mul(w.partial(n), field) {
            return Err(Error::Commutation { level: n.unsigned_abs() as usize });
        }
    }
    let mut out = Vec::new();
    for cell in w.complex.homology()?.cells.iter().filter(|c| c.valid) {
        let k = (cell.n - n_min + 1) as usize;
        let matrix = w.complex.induced(&ops[k], cell.n, cell.i)?;
        out.push(InducedCell { degree: -cell.n, i: cell.i, matrix });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::exactnum::CyclotomicField;
    use crate::loday::BuildOptions;
    use crate::simplicial::SimplicialSet;

    fn chain(n: u32, alg: fn(&CyclotomicField) -> Algebra, t: usize) -> NChain {
        let f = CyclotomicField::new(n).unwrap();
        NChain::build(&alg(&f), &SimplicialSet::circle(t), 1, BuildOptions::default()).unwrap()
    }

    #[test]
    fn identity_is_a_cycle() {
        let c = chain(3, Algebra::dual_numbers, 3);
        let id = HomElement::identity(&c);
        let d = q_partial(&c, &id);
        assert_eq!(d.degree, -1);
        assert!(d.is_zero());
    }

    #[test]
    fn one_hot_expansion() {
        // f = b_2 at component 2 of degree −1
        let c = chain(3, Algebra::dual_numbers, 4);
        let field = c.field();
        let f = HomElement::one_hot(&c, -1, 2, c.diff(2).clone());
        let d = q_partial(&c, &f);
        // component 2: b_1 b_2; component 3: −q^{−1} b_2 b_3
        assert_eq!(d.get_or_zero(&c, 2), c.diff(1).mul(c.diff(2), field));
        assert_eq!(d.get_or_zero(&c, 3), c.diff(2).mul(c.diff(3), field).scale(&c.q_pow(-1).neg(), field));
        assert!(d.get_or_zero(&c, 4).is_zero());
    }

    #[test]
    fn lie_family_is_a_cycle() {
        let c = chain(2, Algebra::dual_numbers, 3);
        let e = Derivation::euler(c.algebra()).unwrap();
        let l = lie_chain_endo(&c, &e).unwrap();
        assert!(q_partial(&c, &HomElement::from_endo(&c, &l)).is_zero());
    }

    #[test]
    fn lbar_trivial_cases() {
        let c = chain(3, Algebra::dual_numbers, 3);
        let e = Derivation::euler(c.algebra()).unwrap();
        let l = lie_chain_endo(&c, &e).unwrap();
        let f = HomElement::one_hot(&c, 1, 1, QMatrix::from_triplets(c.dim(2), c.dim(1), [(3, 1, c.field().one())]));
        assert!(lbar(&c, &GradedEndo::identity(&c), &f).is_zero());
        assert!(lbar(&c, &l, &HomElement::identity(&c)).is_zero());
        // two-term formula at the single support level
        let g = lbar(&c, &l, &f);
        let field = c.field();
        let expected = l.levels[2].mul(&f.components[1], field).sub(&f.components[1].mul(&l.levels[1], field), field);
        assert_eq!(g.get_or_zero(&c, 1), expected);
    }

    #[test]
    fn graded_commutator_identity() {
        let c = chain(4, Algebra::base_field, 4);
        let f = HomElement::from_fn(&c, 1, |i| QMatrix::from_triplets(1, 1, [(0, 0, c.field().from_int(i + 2))]));
        // an arbitrary degree-0 endo that is not a chain map
        let l0 = GradedEndo::from_levels((0..=4).map(|i| QMatrix::from_triplets(1, 1, [(0, 0, c.field().from_int(3 * i - 1))])).collect());
        assert!(graded_commutator_check(&c, &l0, &f).unwrap());
        // a degree-2 shift: q^4 = 1
        let shift = GradedEndo { degree: 2, lo: 0, levels: (0..=2).map(|_| QMatrix::from_triplets(1, 1, [(0, 0, c.field().one())])).collect() };
        assert!(graded_commutator_check(&c, &shift, &f).unwrap());
        let one = GradedEndo { degree: 1, lo: 0, levels: alloc::vec![QMatrix::zeros(1, 1)] };
        assert_eq!(graded_commutator_check(&c, &one, &f).unwrap_err(), Error::GradedCommutatorPrecondition(1));
    }

    #[test]
    fn window_matches_elementwise_formula() {
        let c = chain(3, Algebra::dual_numbers, 3);
        let w = HomComplexWindow::new(&c, -3, 3).unwrap();
        for n in -3..=3 {
            let f = HomElement::from_fn(&c, n, |i| {
                let (r, k) = (c.dim(i + n), c.dim(i));
                QMatrix::from_triplets(r, k, (0..r.min(k)).map(|t| (t, (t * 7 + i as usize) % k, c.field().from_int(t as i64 + 1))))
            });
            let v = w.to_vector(&f);
            assert_eq!(w.from_vector(n, &v), f);
            assert_eq!(w.from_vector(n - 1, &w.partial(n).apply(&v, c.field())), q_partial(&c, &f));
        }
        w.nilpotency_check().unwrap();
        w.interior_nilpotency_check().unwrap();
    }

    #[test]
    fn scalar_window_dims() {
        let c = chain(3, Algebra::base_field, 5);
        let w = HomComplexWindow::new(&c, -5, 5).unwrap();
        for n in -5..=5i64 {
            assert_eq!(w.dim(n), (6 - n.abs()) as usize);
        }
        assert_eq!(w.dim(-6), 0);
        let cells = bivariant_cohomology(&w).unwrap();
        assert!(cells.iter().all(|c| c.valid && c.approximate));
    }

    #[test]
    fn induced_zero_derivation() {
        let c = chain(2, Algebra::dual_numbers, 2);
        let w = HomComplexWindow::new(&c, -2, 2).unwrap();
        let cells = bivariant_induced(&w, &Derivation::zero(c.algebra())).unwrap();
        assert!(!cells.is_empty());
        assert!(cells.iter().all(|c| c.matrix.is_zero()));
    }

    #[test]
    fn size_guard() {
        let c = chain(2, Algebra::dual_numbers, 3);
        assert!(matches!(HomComplexWindow::with_limit(&c, -1, 1, 10), Err(Error::HomSizeGuard { .. })));
    }
}
