//! The Loday functor on pointed finite sets, its composite with a
//! simplicial set, and the resulting q-differential N-complex.
//!
//! A pointed set of size `s` goes to `A^{⊗s}` with slot 0 for the basepoint.
//! Basis tensors `e_{i_0} ⊗ … ⊗ e_{i_{s−1}}` are numbered in mixed radix with
//! slot 0 most significant.

use alloc::vec;
use alloc::vec::Vec;

use smallvec::SmallVec;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactnum::{Accumulator, CyclotomicField, QMatrix, Scalar, SparseVec};
use crate::simplicial::{PointedMap, SimplicialSet};

/// Default cap on the dimension of a single chain level.
pub const DEFAULT_DIM_LIMIT: usize = 1_000_000;

/// One level `A^{⊗ slots}` of a chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    pub level: usize,
    pub slots: usize,
    pub dim: usize,
}

/// `d^slots`, or `None` if it does not fit in a `u128`.
pub fn tensor_dim(d: usize, slots: usize) -> Option<u128> {
    (d as u128).checked_pow(u32::try_from(slots).ok()?)
}

/// The level for a pointed set of `size` elements, after relabeling it as
/// `{0, …, size−1}` with basepoint 0.
pub fn loday_of_pointed_set(alg: &Algebra, size: usize) -> ChainLevel {
    ChainLevel { level: 0, slots: size, dim: level_dim(alg, size) }
}

/// Relabels a pointed set given as a list of distinct labels whose first
/// entry is the basepoint, so that element `k` of the list becomes `k`.
/// Returns the pointed map induced by `f` between two such lists.
pub fn relabel<T: PartialEq>(src: &[T], dst: &[T], f: impl Fn(&T) -> T) -> Result<PointedMap> {
    let table = src
        .iter()
        .map(|x| {
            let y = f(x);
            dst.iter().position(|z| *z == y).ok_or_else(|| {
                Error::InvalidPointedMap(alloc::string::String::from("image outside the target set"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    PointedMap::new(table, dst.len())
}

// For each target slot, the source slots multiplied into it.
struct MapPlan {
    fibers: Vec<SmallVec<[usize; 4]>>,
}

impl MapPlan {
    fn new(phi: &PointedMap) -> MapPlan {
        let mut fibers = vec![SmallVec::new(); phi.dst_size()];
        for (i, &j) in phi.table().iter().enumerate() {
            fibers[j].push(i);
        }
        MapPlan { fibers }
    }
}

enum Factor<'a> {
    Basis(usize),
    Vector(&'a SparseVec),
    Owned(SparseVec),
}

struct Expander<'a> {
    alg: &'a Algebra,
    field: &'a CyclotomicField,
    d: usize,
    factors: Vec<Factor<'a>>,
}

impl<'a> Expander<'a> {
    fn new(alg: &'a Algebra) -> Self {
        Expander { alg, field: alg.field(), d: alg.dim(), factors: Vec::new() }
    }

    /// Adds `coeff · L(A)(φ)(e_digits)` into `acc`.
    fn expand(&mut self, plan: &MapPlan, digits: &[usize], coeff: &Scalar, acc: &mut Accumulator) {
        self.factors.clear();
        for fiber in &plan.fibers {
            let factor = match fiber.len() {
                0 => Factor::Vector(self.alg.unit()),
                1 => Factor::Basis(digits[fiber[0]]),
                _ => {
                    let mut prod = self.alg.basis_product(digits[fiber[0]], digits[fiber[1]]).clone();
                    for &s in &fiber[2..] {
                        if prod.is_zero() {
                            break;
                        }
                        prod = self.alg.mul_vec(&prod, &SparseVec::unit(digits[s], self.field));
                    }
                    if prod.is_zero() {
                        return;
                    }
                    Factor::Owned(prod)
                }
            };
            self.factors.push(factor);
        }
        self.tensor_into(0, 0, coeff.clone(), acc);
    }

    fn tensor_into(&self, slot: usize, index: usize, coeff: Scalar, acc: &mut Accumulator) {
        if slot == self.factors.len() {
            acc.add(index, &coeff);
            return;
        }
        let base = index * self.d;
        match &self.factors[slot] {
            Factor::Basis(k) => self.tensor_into(slot + 1, base + k, coeff, acc),
            Factor::Vector(v) => self.tensor_vec(v, slot, base, &coeff, acc),
            Factor::Owned(v) => self.tensor_vec(v, slot, base, &coeff, acc),
        }
    }

    fn tensor_vec(&self, v: &SparseVec, slot: usize, base: usize, coeff: &Scalar, acc: &mut Accumulator) {
        for (k, s) in v.iter() {
            let c = if s.is_rational() && s.rational_part().is_one() { coeff.clone() } else { self.field.mul(coeff, s) };
            self.tensor_into(slot + 1, base + k, c, acc);
        }
    }
}

fn advance(digits: &mut [usize], d: usize) {
    for x in digits.iter_mut().rev() {
        *x += 1;
        if *x < d {
            return;
        }
        *x = 0;
    }
}

fn level_dim(alg: &Algebra, slots: usize) -> usize {
    tensor_dim(alg.dim(), slots).and_then(|v| usize::try_from(v).ok()).expect("tensor power too large")
}

/// Builds `Σ_k coeffs[k] · L(A)(maps[k])` column by column.
fn weighted_loday(alg: &Algebra, maps: &[PointedMap], coeffs: &[Scalar]) -> QMatrix {
    let f = alg.field();
    let d = alg.dim();
    let src_slots = maps[0].src_size();
    let dst_slots = maps[0].dst_size();
    let src_dim = level_dim(alg, src_slots);
    let dst_dim = level_dim(alg, dst_slots);
    let plans: Vec<MapPlan> = maps.iter().map(MapPlan::new).collect();
    let mut acc = Accumulator::new(dst_dim, f);
    let mut ex = Expander::new(alg);
    let mut digits = vec![0usize; src_slots];
    let mut columns = Vec::with_capacity(src_dim);
    for _ in 0..src_dim {
        for (plan, c) in plans.iter().zip(coeffs) {
            if !c.is_zero() {
                ex.expand(plan, &digits, c, &mut acc);
            }
        }
        columns.push(acc.take(f));
        advance(&mut digits, d);
    }
    QMatrix::from_columns(dst_dim, columns)
}

/// The matrix of `L(A)(φ) : A^{⊗(m+1)} → A^{⊗(n+1)}`: each target slot gets
/// the product of the source factors in its fiber, or 1 if the fiber is empty.
pub fn loday_map(alg: &Algebra, phi: &PointedMap) -> QMatrix {
    weighted_loday(alg, core::slice::from_ref(phi), &[alg.field().one()])
}

/// `L(A)(φ∘ψ) = L(A)(φ)·L(A)(ψ)`.
pub fn functoriality_check(alg: &Algebra, phi: &PointedMap, psi: &PointedMap) -> bool {
    if psi.dst_size() != phi.src_size() {
        return false;
    }
    loday_map(alg, &phi.compose(psi)) == loday_map(alg, phi).mul(&loday_map(alg, psi), alg.field())
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Largest allowed level dimension; `None` disables the guard.
    pub dim_limit: Option<usize>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { dim_limit: Some(DEFAULT_DIM_LIMIT) }
    }
}

/// The N-complex `(L^Y(A), b)` with `b_n = Σ_{i=0}^n q^i d_i`, truncated at
/// the truncation of `Y`. Below level 0 everything is zero.
#[derive(Clone, Debug)]
pub struct NChain {
    alg: Algebra,
    space: SimplicialSet,
    q_exponent: i64,
    q: Scalar,
    levels: Vec<ChainLevel>,
    // diffs[n] = b_n : C_n → C_{n−1}; diffs[0] has zero rows
    diffs: Vec<QMatrix>,
}

impl NChain {
    /// Builds the chain and checks that every `N`-fold composite of `b` vanishes.
    pub fn build(alg: &Algebra, space: &SimplicialSet, q_exponent: i64, opts: BuildOptions) -> Result<NChain> {
        let chain = Self::build_unchecked(alg, space, q_exponent, opts)?;
        if let Some(top) = chain.nilpotency_violation() {
            return Err(Error::Nilpotency { order: chain.order(), top: top as i64 });
        }
        Ok(chain)
    }

    /// Builds the chain without the nilpotency check.
    pub fn build_unchecked(alg: &Algebra, space: &SimplicialSet, q_exponent: i64, opts: BuildOptions) -> Result<NChain> {
        let f = alg.field();
        let q = f.q_root(q_exponent)?;
        let t = space.truncation();
        let mut levels = Vec::with_capacity(t + 1);
        for n in 0..=t {
            let slots = space.level_size(n);
            let dim = tensor_dim(alg.dim(), slots).unwrap_or(u128::MAX);
            let limit = opts.dim_limit.unwrap_or(usize::MAX);
            if dim > limit as u128 {
                return Err(Error::DimensionGuard { level: n, dim, limit });
            }
            levels.push(ChainLevel { level: n, slots, dim: dim as usize });
        }
        let powers: Vec<Scalar> = (0..=t as u32).map(|i| f.pow(&q, i)).collect();
        let mut diffs = vec![QMatrix::zeros(0, levels[0].dim)];
        for n in 1..=t {
            diffs.push(weighted_loday(alg, space.faces(n), &powers[..=n]));
        }
        Ok(NChain { alg: alg.clone(), space: space.clone(), q_exponent, q, levels, diffs })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> &CyclotomicField {
        self.alg.field()
    }

    pub fn space(&self) -> &SimplicialSet {
        &self.space
    }

    /// `N`, the order of `q`.
    pub fn order(&self) -> u32 {
        self.field().order()
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn q_exponent(&self) -> i64 {
        self.q_exponent
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(&self, k: i64) -> Scalar {
        self.field().zeta_pow(self.q_exponent * k)
    }

    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[ChainLevel] {
        &self.levels
    }

    /// `dim C_n`, zero outside `[0, T]`.
    pub fn dim(&self, n: i64) -> usize {
        if n < 0 || n as usize > self.truncation() {
            0
        } else {
            self.levels[n as usize].dim
        }
    }

    /// `b_n : C_n → C_{n−1}` for `0 ≤ n ≤ T`.
    pub fn diff(&self, n: usize) -> &QMatrix {
        &self.diffs[n]
    }

    /// `b` from `C_n` to `C_{n−1}` for any integer `n`, with zero spaces
    /// outside `[0, T]`.
    pub fn diff_any(&self, n: i64) -> QMatrix {
        if n >= 0 && n as usize <= self.truncation() {
            self.diffs[n as usize].clone()
        } else {
            QMatrix::zeros(self.dim(n - 1), self.dim(n))
        }
    }

    /// The face matrix `L(A)(d_i) : C_n → C_{n−1}`.
    pub fn face_matrix(&self, n: usize, i: usize) -> QMatrix {
        loday_map(&self.alg, self.space.face(n, i))
    }

    /// `b^k : C_n → C_{n−k}`; maps into the zero space once `n − k < 0`.
    pub fn power(&self, n: usize, k: usize) -> Result<QMatrix> {
        if n > self.truncation() {
            return Err(Error::InsufficientTruncation { needed: n, truncation: self.truncation() });
        }
        let f = self.field();
        if k > n {
            return Ok(QMatrix::zeros(0, self.levels[n].dim));
        }
        let mut out = QMatrix::identity(self.levels[n].dim, f);
        for j in 0..k {
            out = self.diffs[n - j].mul(&out, f);
        }
        Ok(out)
    }

    /// The lowest top level `n` at which `b^N : C_n → C_{n−N}` is nonzero.
    pub fn nilpotency_violation(&self) -> Option<usize> {
        let big_n = self.order() as usize;
        (big_n..=self.truncation()).find(|&n| !self.power(n, big_n).expect("in range").is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn field(n: u32) -> CyclotomicField {
        CyclotomicField::new(n).unwrap()
    }

    #[test]
    fn identity_goes_to_identity() {
        let f = field(2);
        let a = Algebra::truncated_polynomial(&f, 3);
        assert!(loday_map(&a, &PointedMap::identity(3)).is_identity(&f));
    }

    #[test]
    fn multiplying_fibers() {
        let f = field(2);
        let dual = Algebra::dual_numbers(&f);
        let phi = PointedMap::new(vec![0, 1, 1], 2).unwrap();
        let m = loday_map(&dual, &phi);
        assert_eq!((m.rows(), m.cols()), (4, 8));
        // e_1 ⊗ ε ⊗ ε ↦ e_1 ⊗ ε² = 0, with e_1 read as ε in slot 0
        assert!(m.column(0b111).is_zero());
        // 1 ⊗ ε ⊗ 1 ↦ 1 ⊗ ε
        assert_eq!(m.column(0b010), &SparseVec::unit(0b01, &f));
    }

    #[test]
    fn empty_fiber_gets_unit() {
        let f = field(2);
        let dual = Algebra::dual_numbers(&f);
        let phi = PointedMap::new(vec![0], 2).unwrap();
        let m = loday_map(&dual, &phi);
        // a ↦ a ⊗ 1
        assert_eq!(m.column(0), &SparseVec::unit(0b00, &f));
        assert_eq!(m.column(1), &SparseVec::unit(0b10, &f));
        // the same matrix through a two-step factorization
        let inc = PointedMap::new(vec![0, 2], 3).unwrap();
        let fold = PointedMap::new(vec![0, 1, 0], 2).unwrap();
        assert!(functoriality_check(&dual, &fold, &inc));
    }

    #[test]
    fn bijection_is_slot_permutation() {
        let f = field(2);
        let dual = Algebra::dual_numbers(&f);
        // permutes the two non-base slots of a three-slot tensor
        let swap = PointedMap::new(vec![0, 2, 1], 3).unwrap();
        let m = loday_map(&dual, &swap);
        for c in 0..8usize {
            let (a, b, e) = (c >> 2, (c >> 1) & 1, c & 1);
            assert_eq!(m.column(c), &SparseVec::unit((a << 2) | (e << 1) | b, &f));
        }
        assert_eq!(loday_of_pointed_set(&dual, 3).dim, 8);
        assert_eq!(loday_of_pointed_set(&dual, 1).dim, 2);
    }

    #[test]
    fn relabeling_labels() {
        let src = ['*', 'a', 'b'];
        let dst = ['*', 'x'];
        let phi = relabel(&src, &dst, |c| if *c == 'b' { 'x' } else { '*' }).unwrap();
        assert_eq!(phi.table(), &[0, 0, 1]);
    }

    #[test]
    fn scalar_chain_is_q_integers() {
        for n in [2u32, 3, 4, 6] {
            let f = field(n);
            let k = Algebra::base_field(&f);
            let c = NChain::build(&k, &SimplicialSet::circle(8), 1, BuildOptions::default()).unwrap();
            for m in 1..=8 {
                let b = c.diff(m);
                assert_eq!((b.rows(), b.cols()), (1, 1));
                let expected = f.q_integer(c.q(), m + 1);
                assert_eq!(b.get(0, 0).cloned().unwrap_or_else(|| f.zero()), expected);
            }
        }
    }

    #[test]
    fn dual_numbers_first_differential() {
        // q = −1: b_1(a ⊗ b) = ab − ba = 0
        let f = field(2);
        let dual = Algebra::dual_numbers(&f);
        let c = NChain::build(&dual, &SimplicialSet::circle(3), 1, BuildOptions::default()).unwrap();
        assert!(c.diff(1).is_zero());

        // q = ζ_3: b_1 = (1+q)·mult, rank 2
        let f3 = field(3);
        let dual3 = Algebra::dual_numbers(&f3);
        let c3 = NChain::build(&dual3, &SimplicialSet::circle(3), 1, BuildOptions::default()).unwrap();
        assert_eq!(crate::exactnum::rank(c3.diff(1), &f3), 2);
        let one_plus_q = f3.one().add(c3.q());
        assert_eq!(c3.diff(1).get(1, 0b01), Some(&one_plus_q));
    }

    #[test]
    fn nilpotent_on_builtins() {
        for n in [2u32, 3, 4, 6] {
            let f = field(n);
            for alg in [Algebra::dual_numbers(&f), Algebra::truncated_polynomial(&f, 3)] {
                for y in [SimplicialSet::circle(6), SimplicialSet::sphere(2, 4), SimplicialSet::point(6)] {
                    NChain::build(&alg, &y, 1, BuildOptions::default()).unwrap();
                }
            }
        }
    }

    #[test]
    fn dimension_guard() {
        let f = field(2);
        let a = Algebra::truncated_polynomial(&f, 3);
        let err = NChain::build(&a, &SimplicialSet::circle(13), 1, BuildOptions::default()).unwrap_err();
        assert!(matches!(err, Error::DimensionGuard { level: 12, .. }), "{err:?}");
    }

    #[test]
    fn broken_faces_break_nilpotency() {
        let f = field(2);
        let dual = Algebra::dual_numbers(&f);
        let c = SimplicialSet::circle(3);
        let mut faces: Vec<Vec<PointedMap>> = (0..=3).map(|n| c.faces(n).to_vec()).collect();
        let degs: Vec<Vec<PointedMap>> = (0..3).map(|n| c.degeneracies(n).to_vec()).collect();
        faces[2].swap(0, 1);
        let y = SimplicialSet::new_unchecked(c.level_sizes().to_vec(), faces, degs).unwrap();
        let err = NChain::build(&dual, &y, 1, BuildOptions::default()).unwrap_err();
        assert!(matches!(err, Error::Nilpotency { order: 2, .. }), "{err:?}");
    }

    #[test]
    fn powers_into_zero_space() {
        let f = field(3);
        let k = Algebra::base_field(&f);
        let c = NChain::build(&k, &SimplicialSet::circle(4), 1, BuildOptions::default()).unwrap();
        assert_eq!(c.power(1, 2).unwrap().rows(), 0);
        // [3]_q·[2]_q = 0
        assert!(c.power(2, 2).unwrap().is_zero());
        assert_eq!(c.power(1, 1).unwrap(), c.diff(1).clone());
        assert!(c.power(5, 1).is_err());
        assert_eq!(c.q_pow(3), f.from_rational(Rational::one()));
    }
}
