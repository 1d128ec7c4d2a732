//! JSON file schemas for algebras, derivations and simplicial sets.
//!
//! Matrices are lists of rows: `matrix[r][c]` is the coefficient of basis
//! element `r` in the image of basis element `c`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use qhoch_core::algebra::{Algebra, Derivation, HigherDerivation};
use qhoch_core::exactnum::{CyclotomicField, QMatrix, Scalar};
use qhoch_core::simplicial::{PointedMap, SimplicialSet};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};
use crate::scalar;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Value>,
    /// `mult[i][j]` is the coefficient vector of `e_i · e_j`.
    pub mult: Vec<Vec<Vec<Value>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DerivationFile {
    pub matrix: Vec<Vec<Value>>,
}

/// `maps` holds `D_0, D_1, …, D_order`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HigherFile {
    pub order: usize,
    pub maps: Vec<Vec<Vec<Value>>>,
}

/// Face and degeneracy tables keyed by level. `faces["n"][i]` lists the
/// images of `d_i : Y_n → Y_{n−1}`; `degeneracies["n"][i]` those of
/// `s_i : Y_n → Y_{n+1}`.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialFile {
    pub truncation: usize,
    pub levels: Vec<usize>,
    pub faces: BTreeMap<String, Vec<Vec<usize>>>,
    pub degeneracies: BTreeMap<String, Vec<Vec<usize>>>,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_path_buf(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| CliError::format(path.display().to_string(), e.to_string()))
}

fn scalars(field: &CyclotomicField, values: &[Value], context: &str) -> CliResult<Vec<Scalar>> {
    values.iter().map(|v| scalar::parse_value(field, v).map_err(|m| CliError::format(context, m))).collect()
}

pub fn matrix_from_rows(field: &CyclotomicField, rows: &[Vec<Value>], size: usize, context: &str) -> CliResult<QMatrix> {
    if rows.len() != size || rows.iter().any(|r| r.len() != size) {
        return Err(CliError::format(context, format!("expected a {size}x{size} matrix")));
    }
    let dense = rows.iter().map(|r| scalars(field, r, context)).collect::<CliResult<Vec<_>>>()?;
    Ok(QMatrix::from_dense(&dense))
}

pub fn matrix_to_rows(m: &QMatrix, field: &CyclotomicField) -> Vec<Vec<Value>> {
    m.to_dense(field).iter().map(|row| row.iter().map(scalar::to_value).collect()).collect()
}

impl AlgebraFile {
    pub fn into_algebra(self, field: &CyclotomicField) -> CliResult<Algebra> {
        let d = self.dim;
        if self.basis.len() != d || self.unit.len() != d {
            return Err(CliError::format("algebra", format!("basis and unit must have length dim = {d}")));
        }
        if self.mult.len() != d || self.mult.iter().any(|row| row.len() != d || row.iter().any(|v| v.len() != d)) {
            return Err(CliError::format("algebra", format!("mult must be a {d}x{d} table of length-{d} vectors")));
        }
        let unit = scalars(field, &self.unit, "algebra.unit")?;
        let structure = self
            .mult
            .iter()
            .map(|row| row.iter().map(|v| scalars(field, v, "algebra.mult")).collect::<CliResult<Vec<_>>>())
            .collect::<CliResult<Vec<_>>>()?;
        Ok(Algebra::new(field, self.basis, structure, unit)?)
    }

    pub fn from_algebra(alg: &Algebra) -> AlgebraFile {
        let f = alg.field();
        let d = alg.dim();
        AlgebraFile {
            dim: d,
            basis: alg.basis_names().to_vec(),
            unit: alg.unit().to_dense(d, f).iter().map(scalar::to_value).collect(),
            mult: (0..d)
                .map(|i| (0..d).map(|j| alg.basis_product(i, j).to_dense(d, f).iter().map(scalar::to_value).collect()).collect())
                .collect(),
        }
    }
}

impl DerivationFile {
    pub fn into_derivation(self, alg: &Algebra) -> CliResult<Derivation> {
        let m = matrix_from_rows(alg.field(), &self.matrix, alg.dim(), "derivation.matrix")?;
        Ok(Derivation::new(alg, m)?)
    }
}

impl HigherFile {
    /// The raw maps, without the Hasse–Schmidt check.
    pub fn into_maps(self, alg: &Algebra) -> CliResult<Vec<QMatrix>> {
        if self.maps.len() != self.order + 1 {
            return Err(CliError::format("higher", format!("order {} needs {} maps D_0..D_{}", self.order, self.order + 1, self.order)));
        }
        self.maps.iter().map(|m| matrix_from_rows(alg.field(), m, alg.dim(), "higher.maps")).collect()
    }

    pub fn into_higher(self, alg: &Algebra) -> CliResult<HigherDerivation> {
        let maps = self.into_maps(alg)?;
        Ok(HigherDerivation::new(alg, maps)?)
    }
}

/// Per-level lists of face or degeneracy maps.
type Tables = Vec<Vec<PointedMap>>;

impl SimplicialFile {
    fn tables(&self) -> CliResult<(Tables, Tables)> {
        let t = self.truncation;
        if self.levels.len() != t + 1 {
            return Err(CliError::format("simplicial", format!("truncation {t} needs {} level sizes", t + 1)));
        }
        let lookup = |table: &BTreeMap<String, Vec<Vec<usize>>>, kind: &str, n: usize| -> CliResult<Vec<Vec<usize>>> {
            table.get(&n.to_string()).cloned().ok_or_else(|| CliError::format("simplicial", format!("missing {kind} for level {n}")))
        };
        let mut faces = vec![Vec::new()];
        for n in 1..=t {
            let maps = lookup(&self.faces, "faces", n)?;
            faces.push(maps.into_iter().map(|tab| PointedMap::new_unchecked(tab, self.levels[n - 1])).collect());
        }
        let mut degeneracies = Vec::new();
        for n in 0..t {
            let maps = lookup(&self.degeneracies, "degeneracies", n)?;
            degeneracies.push(maps.into_iter().map(|tab| PointedMap::new_unchecked(tab, self.levels[n + 1])).collect());
        }
        Ok((faces, degeneracies))
    }

    /// Validates basepoints and all simplicial identities.
    pub fn into_simplicial(self) -> CliResult<SimplicialSet> {
        let (faces, degeneracies) = self.tables()?;
        Ok(SimplicialSet::new(self.levels, faces, degeneracies)?)
    }

    /// Checks only table shapes.
    pub fn into_simplicial_unchecked(self) -> CliResult<SimplicialSet> {
        let (faces, degeneracies) = self.tables()?;
        Ok(SimplicialSet::new_unchecked(self.levels, faces, degeneracies)?)
    }

    pub fn from_simplicial(y: &SimplicialSet) -> SimplicialFile {
        let t = y.truncation();
        let tables = |maps: &[PointedMap]| maps.iter().map(|m| m.table().to_vec()).collect::<Vec<_>>();
        SimplicialFile {
            truncation: t,
            levels: y.level_sizes().to_vec(),
            faces: (1..=t).map(|n| (n.to_string(), tables(y.faces(n)))).collect(),
            degeneracies: (0..t).map(|n| (n.to_string(), tables(y.degeneracies(n)))).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_round_trip() {
        let y = SimplicialSet::circle(4);
        let text = serde_json::to_string(&SimplicialFile::from_simplicial(&y)).unwrap();
        let back: SimplicialFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.into_simplicial().unwrap(), y);
    }

    #[test]
    fn algebra_round_trip() {
        let f = CyclotomicField::new(3).unwrap();
        let alg = Algebra::truncated_polynomial(&f, 3);
        let text = serde_json::to_string(&AlgebraFile::from_algebra(&alg)).unwrap();
        let back: AlgebraFile = serde_json::from_str(&text).unwrap();
        let again = AlgebraFile::from_algebra(&back.into_algebra(&f).unwrap());
        assert_eq!(serde_json::to_string(&again).unwrap(), text);
    }

    #[test]
    fn perturbed_circle_is_rejected() {
        let mut file = SimplicialFile::from_simplicial(&SimplicialSet::circle(3));
        file.faces.get_mut("2").unwrap().swap(0, 1);
        let err = file.into_simplicial().unwrap_err();
        assert_eq!(err.code(), "simplicial_identity");
        let mut file = SimplicialFile::from_simplicial(&SimplicialSet::circle(3));
        file.faces.get_mut("2").unwrap()[0][0] = 1;
        assert_eq!(file.into_simplicial().unwrap_err().code(), "basepoint");
    }
}
