//! Lie derivatives of derivations and higher derivations on the chain
//! levels `A^{⊗ s}`, the action of words in derivations, and the identities
//! relating them.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{composition_coefficient, compositions, Algebra, Derivation, HigherDerivation};
use crate::error::{Error, Result};
use crate::exactnum::{Accumulator, QMatrix, Scalar};
use crate::loday::{loday_map, NChain};
use crate::ncomplex::GradedComplex;
use crate::simplicial::PointedMap;

/// Cap on the number of weak compositions summed per level by
/// [`higher_lie_on_slots`].
pub const COMPOSITION_CAP: u128 = 100_000;

/// A family of maps `g_i : C_i → C_{i+m}` for `lo ≤ i < lo + levels.len()`.
/// Levels outside the stored range are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndo {
    pub degree: i64,
    pub lo: i64,
    pub levels: Vec<QMatrix>,
}

impl GradedEndo {
    /// A degree-0 endomorphism with `levels[n]` acting on `C_n`.
    pub fn from_levels(levels: Vec<QMatrix>) -> GradedEndo {
        GradedEndo { degree: 0, lo: 0, levels }
    }

    pub fn identity(chain: &NChain) -> GradedEndo {
        let f = chain.field();
        GradedEndo::from_levels(chain.levels().iter().map(|l| QMatrix::identity(l.dim, f)).collect())
    }

    pub fn zero(chain: &NChain) -> GradedEndo {
        GradedEndo::from_levels(chain.levels().iter().map(|l| QMatrix::zeros(l.dim, l.dim)).collect())
    }

    /// `g_i`, if stored.
    pub fn get(&self, i: i64) -> Option<&QMatrix> {
        if i < self.lo {
            return None;
        }
        self.levels.get((i - self.lo) as usize)
    }

    /// `g_i` on `C_i → C_{i+m}`, with zero maps where nothing is stored.
    pub fn level_or_zero(&self, chain: &NChain, i: i64) -> QMatrix {
        match self.get(i) {
            Some(m) => m.clone(),
            None => QMatrix::zeros(chain.dim(i + self.degree), chain.dim(i)),
        }
    }

    /// Levelwise `self ∘ other`.
    pub fn compose(&self, other: &GradedEndo, chain: &NChain) -> GradedEndo {
        let lo = other.lo;
        let levels = (0..other.levels.len() as i64)
            .map(|k| self.level_or_zero(chain, lo + k + other.degree).mul(&other.levels[k as usize], chain.field()))
            .collect();
        GradedEndo { degree: self.degree + other.degree, lo, levels }
    }
}

/// `Σ_j I^{⊗j} ⊗ D ⊗ I^{⊗(s−1−j)}` on `A^{⊗s}`.
pub fn lie_on_slots(alg: &Algebra, d: &QMatrix, slots: usize) -> QMatrix {
    let f = alg.field();
    let dim = alg.dim();
    let total = dim.pow(slots as u32);
    let mut acc = Accumulator::new(total, f);
    let mut columns = Vec::with_capacity(total);
    let mut digits = vec![0usize; slots];
    for col in 0..total {
        let mut weight = 1;
        for j in (0..slots).rev() {
            let base = col - digits[j] * weight;
            for (k, s) in d.column(digits[j]).iter() {
                acc.add(base + k * weight, s);
            }
            weight *= dim;
        }
        columns.push(acc.take(f));
        advance(&mut digits, dim);
    }
    QMatrix::from_columns(total, columns)
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

/// Per-level `lie_on_slots` without any checks.
pub fn lie_levels(chain: &NChain, d: &QMatrix) -> GradedEndo {
    let alg = chain.algebra();
    GradedEndo::from_levels(chain.levels().iter().map(|l| lie_on_slots(alg, d, l.slots)).collect())
}

/// `g_{n−1} ∘ L(A)(d_i) = L(A)(d_i) ∘ g_n` for every face of the space.
pub fn check_face_naturality(chain: &NChain, endo: &GradedEndo) -> Result<()> {
    let f = chain.field();
    for n in 1..=chain.truncation() {
        for i in 0..=n {
            let face = chain.face_matrix(n, i);
            let lhs = endo.level_or_zero(chain, n as i64 - 1).mul(&face, f);
            let rhs = face.mul(&endo.level_or_zero(chain, n as i64), f);
            if lhs != rhs {
                return Err(Error::Naturality { level: n, face: i });
            }
        }
    }
    Ok(())
}

/// `g_{n−1} ∘ b_n = b_n ∘ g_n` for `1 ≤ n ≤ T`.
pub fn check_commutes(chain: &NChain, endo: &GradedEndo) -> Result<()> {
    let f = chain.field();
    for n in 1..=chain.truncation() {
        let b = chain.diff(n);
        if endo.level_or_zero(chain, n as i64 - 1).mul(b, f) != b.mul(&endo.level_or_zero(chain, n as i64), f) {
            return Err(Error::Commutation { level: n });
        }
    }
    Ok(())
}

/// The chain endomorphism `L_D`, checked against every face and against `b`.
pub fn lie_chain_endo(chain: &NChain, d: &Derivation) -> Result<GradedEndo> {
    let endo = lie_levels(chain, d.matrix());
    check_face_naturality(chain, &endo)?;
    check_commutes(chain, &endo)?;
    Ok(endo)
}

/// The map induced by a degree-0 chain endomorphism on `H_{i,n}`.
pub fn induced_on_homology(endo: &GradedEndo, complex: &GradedComplex, n: i64, i: usize) -> Result<QMatrix> {
    let op = endo.get(n).ok_or(Error::InvalidCell { n, i })?;
    complex.induced(op, n, i)
}

/// `L_D L_{D′} − L_{D′} L_D = L_{[D,D′]}` on every level.
pub fn bracket_identity_check(chain: &NChain, d: &Derivation, e: &Derivation) -> Result<bool> {
    let alg = chain.algebra();
    let f = chain.field();
    let bracket = d.bracket(e, alg)?;
    Ok(chain.levels().iter().all(|l| {
        let ld = lie_on_slots(alg, d.matrix(), l.slots);
        let le = lie_on_slots(alg, e.matrix(), l.slots);
        ld.mul(&le, f).sub(&le.mul(&ld, f), f) == lie_on_slots(alg, bracket.matrix(), l.slots)
    }))
}

/// A linear combination of words `d_{w_1} d_{w_2} … d_{w_k}` in an alphabet of
/// derivations, i.e. an element of the universal enveloping algebra.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HopfWord {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl HopfWord {
    /// The unit, i.e. the empty word.
    pub fn unit(chain: &NChain) -> HopfWord {
        HopfWord { terms: vec![(chain.field().one(), Vec::new())] }
    }

    pub fn letter(chain: &NChain, index: usize) -> HopfWord {
        HopfWord { terms: vec![(chain.field().one(), vec![index])] }
    }

    pub fn add(&self, other: &HopfWord) -> HopfWord {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        HopfWord { terms }
    }

    pub fn scale(&self, alpha: &Scalar, chain: &NChain) -> HopfWord {
        HopfWord { terms: self.terms.iter().map(|(c, w)| (chain.field().mul(alpha, c), w.clone())).collect() }
    }

    /// Concatenation product `self · other`.
    pub fn mul(&self, other: &HopfWord, chain: &NChain) -> HopfWord {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((chain.field().mul(a, b), w));
            }
        }
        HopfWord { terms }
    }

    /// `D_k` of the higher derivation generated by `d_1, d_2, …`: the sum over
    /// compositions `(r_1, …, r_i)` of `k` of `∏_j 1/(r_j+…+r_i) · d_{r_1}⋯d_{r_i}`,
    /// with letter `r − 1` standing for `d_r`.
    pub fn higher_component(chain: &NChain, k: usize, alphabet_len: usize) -> HopfWord {
        let f = chain.field();
        let terms = compositions(k)
            .into_iter()
            .filter(|c| c.iter().all(|&r| r <= alphabet_len))
            .map(|c| (f.from_rational(composition_coefficient(&c)), c.iter().map(|r| r - 1).collect()))
            .collect();
        HopfWord { terms }
    }
}

/// Acts by `Σ c · L_{d_{w_1}} ∘ … ∘ L_{d_{w_k}}` on every level.
pub fn hopf_act(word: &HopfWord, alphabet: &[Derivation], chain: &NChain) -> Result<GradedEndo> {
    for (_, w) in &word.terms {
        if let Some(&letter) = w.iter().find(|&&l| l >= alphabet.len()) {
            return Err(Error::LetterOutOfRange { letter, len: alphabet.len() });
        }
    }
    let alg = chain.algebra();
    let f = chain.field();
    let levels = chain
        .levels()
        .iter()
        .map(|l| {
            let lie: Vec<QMatrix> = alphabet.iter().map(|d| lie_on_slots(alg, d.matrix(), l.slots)).collect();
            let mut total = QMatrix::zeros(l.dim, l.dim);
            for (c, w) in &word.terms {
                let mut m = QMatrix::identity(l.dim, f);
                for &letter in w.iter().rev() {
                    m = lie[letter].mul(&m, f);
                }
                total = total.axpy(c, &m, f);
            }
            total
        })
        .collect();
    Ok(GradedEndo::from_levels(levels))
}

fn binomial(n: u128, k: u128) -> u128 {
    let mut out: u128 = 1;
    for i in 0..k {
        out = out.saturating_mul(n - i) / (i + 1);
    }
    out
}

/// `Σ_{p_0+…+p_{s−1} = k} D_{p_0} ⊗ … ⊗ D_{p_{s−1}}` on `A^{⊗s}`.
pub fn higher_lie_on_slots(alg: &Algebra, hs: &HigherDerivation, k: usize, slots: usize) -> Result<QMatrix> {
    if k > hs.order() {
        return Err(Error::OrderExceeded { k, order: hs.order() });
    }
    let count = binomial((slots + k - 1) as u128, k as u128);
    if count > COMPOSITION_CAP {
        return Err(Error::CompositionCap { count, cap: COMPOSITION_CAP });
    }
    let f = alg.field();
    let dim = alg.dim();
    let total = dim.pow(slots as u32);
    let mut acc = Accumulator::new(total, f);
    let mut columns = Vec::with_capacity(total);
    let mut digits = vec![0usize; slots];
    for _ in 0..total {
        if slots > 0 {
            spread(hs.maps(), &digits, 0, k, 0, &f.one(), dim, &mut acc, alg);
        }
        columns.push(acc.take(f));
        advance(&mut digits, dim);
    }
    Ok(QMatrix::from_columns(total, columns))
}

// Distributes `remaining` over slots `slot..`, the last slot taking the rest.
#[allow(clippy::too_many_arguments)]
fn spread(
    maps: &[QMatrix],
    digits: &[usize],
    slot: usize,
    remaining: usize,
    index: usize,
    coeff: &Scalar,
    dim: usize,
    acc: &mut Accumulator,
    alg: &Algebra,
) {
    let f = alg.field();
    let last = slot + 1 == digits.len();
    let choices = if last { remaining..=remaining } else { 0..=remaining };
    for p in choices {
        for (k, s) in maps[p].column(digits[slot]).iter() {
            let c = f.mul(coeff, s);
            let idx = index * dim + k;
            if last {
                acc.add(idx, &c);
            } else {
                spread(maps, digits, slot + 1, remaining - p, idx, &c, dim, acc, alg);
            }
        }
    }
}

/// `L^k_D([n]) ∘ L(A)(φ) = L(A)(φ) ∘ L^k_D([m])`.
pub fn naturality_check_higher(alg: &Algebra, hs: &HigherDerivation, k: usize, phi: &PointedMap) -> Result<bool> {
    let f = alg.field();
    let map = loday_map(alg, phi);
    let src = higher_lie_on_slots(alg, hs, k, phi.src_size())?;
    let dst = higher_lie_on_slots(alg, hs, k, phi.dst_size())?;
    Ok(dst.mul(&map, f) == map.mul(&src, f))
}

/// Per-level `higher_lie_on_slots`, checked against every face and `b`.
pub fn higher_chain_endo(chain: &NChain, hs: &HigherDerivation, k: usize) -> Result<GradedEndo> {
    let alg = chain.algebra();
    let levels = chain
        .levels()
        .iter()
        .map(|l| higher_lie_on_slots(alg, hs, k, l.slots))
        .collect::<Result<Vec<_>>>()?;
    let endo = GradedEndo::from_levels(levels);
    check_face_naturality(chain, &endo)?;
    check_commutes(chain, &endo)?;
    Ok(endo)
}

/// Compares the action of `D_k`, written as a word in the extracted ordinary
/// derivations, with the slotwise sum `L^k_D`. Exact per level.
pub fn coproduct_theorem_check(chain: &NChain, hs: &HigherDerivation, k: usize) -> Result<bool> {
    let ds = hs.extract(chain.algebra())?;
    let word = HopfWord::higher_component(chain, k, ds.len());
    let lhs = hopf_act(&word, &ds, chain)?;
    let rhs = higher_chain_endo(chain, hs, k)?;
    Ok(lhs == rhs)
}
