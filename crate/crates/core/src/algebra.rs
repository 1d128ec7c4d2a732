//! Finite-dimensional commutative unital algebras given by structure
//! constants, their derivations and normalized Hasse–Schmidt derivations.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactnum::{CyclotomicField, QMatrix, Rational, Scalar, SparseVec};

/// A commutative, associative, unital algebra with a chosen basis.
///
/// `e_i · e_j = Σ_k c[i][j][k] e_k`. The constructor checks all three axioms.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: CyclotomicField,
    names: Vec<String>,
    // products of basis elements, row-major in (i, j)
    table: Vec<SparseVec>,
    unit: SparseVec,
}

impl Algebra {
    /// Validates and builds an algebra from `structure[i][j][k]` and the
    /// coordinates of the unit.
    pub fn new(
        field: &CyclotomicField,
        names: Vec<String>,
        structure: Vec<Vec<Vec<Scalar>>>,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        let d = names.len();
        if d == 0 {
            return Err(Error::ShapeMismatch { context: "algebra dimension", expected: 1, found: 0 });
        }
        if unit.len() != d {
            return Err(Error::ShapeMismatch { context: "unit vector", expected: d, found: unit.len() });
        }
        if structure.len() != d {
            return Err(Error::ShapeMismatch { context: "structure constants", expected: d, found: structure.len() });
        }
        let mut table = Vec::with_capacity(d * d);
        for row in &structure {
            if row.len() != d {
                return Err(Error::ShapeMismatch { context: "structure constants", expected: d, found: row.len() });
            }
            for entry in row {
                if entry.len() != d {
                    return Err(Error::ShapeMismatch {
                        context: "structure constants",
                        expected: d,
                        found: entry.len(),
                    });
                }
                if entry.iter().any(|s| !field.owns(s)) {
                    return Err(Error::ForeignScalar);
                }
                table.push(SparseVec::from_dense(entry));
            }
        }
        if unit.iter().any(|s| !field.owns(s)) {
            return Err(Error::ForeignScalar);
        }
        let alg = Algebra { field: field.clone(), names, table, unit: SparseVec::from_dense(&unit) };
        alg.check_axioms()?;
        Ok(alg)
    }

    fn check_axioms(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in i + 1..d {
                if self.basis_product(i, j) != self.basis_product(j, i) {
                    return Err(Error::NonCommutative(i, j));
                }
            }
        }
        for i in 0..d {
            let ei = SparseVec::unit(i, &self.field);
            if self.mul_vec(&self.unit, &ei) != ei {
                return Err(Error::UnitLaw(i));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let ek = SparseVec::unit(k, &self.field);
                    let left = self.mul_vec(ij, &ek);
                    let jk = self.basis_product(j, k);
                    let right = self.mul_vec(&SparseVec::unit(i, &self.field), jk);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// k[ε]/(ε²) with basis (1, ε).
    pub fn dual_numbers(field: &CyclotomicField) -> Algebra {
        let mut alg = Algebra::truncated_polynomial(field, 2);
        alg.names = vec![String::from("1"), String::from("eps")];
        alg
    }

    /// k[x]/(x^m) with basis (1, x, …, x^{m−1}). `m = 1` is the ground field.
    pub fn truncated_polynomial(field: &CyclotomicField, m: usize) -> Algebra {
        assert!(m >= 1, "k[x]/(x^0) is the zero ring");
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(if i + j < m { SparseVec::unit(i + j, field) } else { SparseVec::new() });
            }
        }
        let names = (0..m)
            .map(|i| match i {
                0 => String::from("1"),
                1 => String::from("x"),
                _ => format!("x^{i}"),
            })
            .collect();
        Algebra { field: field.clone(), names, table, unit: SparseVec::unit(0, field) }
    }

    pub fn base_field(field: &CyclotomicField) -> Algebra {
        Algebra::truncated_polynomial(field, 1)
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// `e_i · e_j` in coordinates.
    pub fn basis_product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    /// Structure constant `c[i][j][k]`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.basis_product(i, j).get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Bilinear product. Errors if either vector has an index `≥ dim`.
    pub fn multiply(&self, x: &SparseVec, y: &SparseVec) -> Result<SparseVec> {
        for v in [x, y] {
            if let Some(m) = v.max_index() {
                if m >= self.dim() {
                    return Err(Error::ShapeMismatch { context: "algebra element", expected: self.dim(), found: m + 1 });
                }
            }
        }
        Ok(self.mul_vec(x, y))
    }

    pub(crate) fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = self.field.mul(a, b);
                out = out.axpy(&ab, self.basis_product(i, j), &self.field);
            }
        }
        out
    }
}

/// A derivation `D : A → A`, stored as its matrix on the basis
/// (column `j` is `D(e_j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    matrix: QMatrix,
}

impl Derivation {
    /// Validates the Leibniz rule on every basis pair.
    pub fn new(alg: &Algebra, matrix: QMatrix) -> Result<Derivation> {
        let d = alg.dim();
        if matrix.rows() != d || matrix.cols() != d {
            return Err(Error::ShapeMismatch {
                context: "derivation matrix",
                expected: d,
                found: if matrix.rows() != d { matrix.rows() } else { matrix.cols() },
            });
        }
        if let Some((i, j)) = leibniz_violation(alg, &matrix) {
            return Err(Error::Leibniz(i, j));
        }
        if !matrix.apply(alg.unit(), alg.field()).is_zero() {
            return Err(Error::NonzeroOnUnit(1));
        }
        Ok(Derivation { matrix })
    }

    pub fn zero(alg: &Algebra) -> Derivation {
        Derivation { matrix: QMatrix::zeros(alg.dim(), alg.dim()) }
    }

    /// On `k[x]/(x^m)`, the derivation with `D(x) = x·g`, hence
    /// `D(x^j) = j·x^j·g`. Any derivation of this algebra has this form.
    pub fn truncpoly(alg: &Algebra, g: &SparseVec) -> Result<Derivation> {
        let f = alg.field();
        let d = alg.dim();
        let mut columns = vec![SparseVec::new(); d];
        if d >= 2 {
            alg.multiply(&SparseVec::unit(1, f), g)?;
            for (j, col) in columns.iter_mut().enumerate().skip(1) {
                let xj = alg.mul_vec(&SparseVec::unit(j, f), g);
                *col = xj.scale(&f.from_int(j as i64), f);
            }
        }
        Derivation::new(alg, QMatrix::from_columns(d, columns))
    }

    /// The degree derivation: `e_j ↦ j·e_j` on `k[x]/(x^m)`, `E(ε) = ε` on dual numbers.
    pub fn euler(alg: &Algebra) -> Result<Derivation> {
        Derivation::truncpoly(alg, &SparseVec::unit(0, alg.field()))
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> QMatrix {
        self.matrix
    }

    /// `[D, D′] = D∘D′ − D′∘D`, revalidated.
    pub fn bracket(&self, other: &Derivation, alg: &Algebra) -> Result<Derivation> {
        let f = alg.field();
        let m = self.matrix.mul(&other.matrix, f).sub(&other.matrix.mul(&self.matrix, f), f);
        Derivation::new(alg, m)
    }
}

fn leibniz_violation(alg: &Algebra, m: &QMatrix) -> Option<(usize, usize)> {
    let f = alg.field();
    let d = alg.dim();
    for i in 0..d {
        for j in i..d {
            let lhs = m.apply(alg.basis_product(i, j), f);
            let rhs = alg
                .mul_vec(m.column(i), &SparseVec::unit(j, f))
                .add(&alg.mul_vec(&SparseVec::unit(i, f), m.column(j)), f);
            if lhs != rhs {
                return Some((i, j));
            }
        }
    }
    None
}

/// A normalized higher (Hasse–Schmidt) derivation `D_0 = I, D_1, …, D_K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HigherDerivation {
    maps: Vec<QMatrix>,
}

impl HigherDerivation {
    /// Validates normalization, the Hasse–Schmidt identity and `D_n(1) = 0`.
    pub fn new(alg: &Algebra, maps: Vec<QMatrix>) -> Result<HigherDerivation> {
        hs_validate(alg, &maps)?;
        Ok(HigherDerivation { maps })
    }

    /// `{d^n / n!}` for `n ≤ k`.
    pub fn exponential(alg: &Algebra, d: &Derivation, k: usize) -> HigherDerivation {
        let f = alg.field();
        let mut maps = Vec::with_capacity(k + 1);
        maps.push(QMatrix::identity(alg.dim(), f));
        for n in 1..=k {
            let next = d.matrix.mul(&maps[n - 1], f).scale(&f.from_rational(Rational::new(1, n as i64)), f);
            maps.push(next);
        }
        HigherDerivation { maps }
    }

    pub fn order(&self) -> usize {
        self.maps.len() - 1
    }

    pub fn maps(&self) -> &[QMatrix] {
        &self.maps
    }

    pub fn get(&self, n: usize) -> Option<&QMatrix> {
        self.maps.get(n)
    }

    /// The ordinary derivations `d_1, …, d_K` with
    /// `(M+1)·D_{M+1} = Σ_{m=0}^{M} d_{m+1}·D_{M−m}`.
    /// Each extracted map is checked to be a derivation.
    pub fn extract(&self, alg: &Algebra) -> Result<Vec<Derivation>> {
        let f = alg.field();
        let k = self.order();
        let mut ds: Vec<QMatrix> = Vec::with_capacity(k);
        for m in 0..k {
            let mut next = self.maps[m + 1].scale(&f.from_int(m as i64 + 1), f);
            for (r, dr) in ds.iter().enumerate() {
                next = next.sub(&dr.mul(&self.maps[m - r], f), f);
            }
            if let Some((i, j)) = leibniz_violation(alg, &next) {
                return Err(Error::ExtractedNotDerivation { n: m + 1, i, j });
            }
            ds.push(next);
        }
        Ok(ds.into_iter().map(|matrix| Derivation { matrix }).collect())
    }

    /// Builds `D_0, …, D_K` from `d_1, …, d_K` by the closed formula
    /// `D_k = Σ_{r_1+…+r_i = k} (∏_j 1/(r_j+…+r_i)) d_{r_1}∘…∘d_{r_i}`.
    /// Derivations beyond the end of `ds` count as zero.
    pub fn compose(alg: &Algebra, ds: &[Derivation], k: usize) -> HigherDerivation {
        let f = alg.field();
        let d = alg.dim();
        let mut maps = vec![QMatrix::identity(d, f)];
        for n in 1..=k {
            let mut total = QMatrix::zeros(d, d);
            for comp in compositions(n) {
                if comp.iter().any(|&r| r > ds.len()) {
                    continue;
                }
                let mut word = QMatrix::identity(d, f);
                for &r in comp.iter().rev() {
                    word = ds[r - 1].matrix.mul(&word, f);
                }
                if word.is_zero() {
                    continue;
                }
                total = total.axpy(&f.from_rational(composition_coefficient(&comp)), &word, f);
            }
            maps.push(total);
        }
        HigherDerivation { maps }
    }
}

/// Checks a candidate list `D_0, …, D_K` and reports the first violation.
pub fn hs_validate(alg: &Algebra, maps: &[QMatrix]) -> Result<()> {
    let f = alg.field();
    let d = alg.dim();
    if maps.is_empty() {
        return Err(Error::NotNormalized);
    }
    for m in maps {
        if m.rows() != d || m.cols() != d {
            return Err(Error::ShapeMismatch { context: "higher derivation map", expected: d, found: m.rows() });
        }
    }
    if !maps[0].is_identity(f) {
        return Err(Error::NotNormalized);
    }
    for (n, m) in maps.iter().enumerate().skip(1) {
        if !m.apply(alg.unit(), f).is_zero() {
            return Err(Error::NonzeroOnUnit(n));
        }
    }
    for n in 1..maps.len() {
        for i in 0..d {
            for j in i..d {
                let lhs = maps[n].apply(alg.basis_product(i, j), f);
                let mut rhs = SparseVec::new();
                for k in 0..=n {
                    let p = alg.mul_vec(maps[k].column(i), maps[n - k].column(j));
                    rhs = rhs.add(&p, f);
                }
                if lhs != rhs {
                    return Err(Error::HasseSchmidt { n, i, j });
                }
            }
        }
    }
    Ok(())
}

/// All compositions of `n` (ordered tuples of positive integers summing to
/// `n`), in lexicographic order. There are `2^{n−1}` of them for `n ≥ 1`.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `∏_{j} 1/(r_j + … + r_i)` for a composition `(r_1, …, r_i)`.
pub fn composition_coefficient(comp: &[usize]) -> Rational {
    let mut coeff = Rational::one();
    let mut tail = 0i64;
    for &r in comp.iter().rev() {
        tail += r as i64;
        coeff = coeff.div(&Rational::from_integer(tail));
    }
    coeff
}
