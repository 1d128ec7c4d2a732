//! The four subcommands. Each returns an [`Output`] or a [`CliError`].

use qhoch_core::algebra::{Algebra, Derivation, HigherDerivation};
use qhoch_core::bivariant::{bivariant_cohomology, bivariant_induced, HomComplexWindow, BivariantCell};
use qhoch_core::exactnum::{CyclotomicField, QMatrix};
use qhoch_core::lie::{higher_chain_endo, induced_on_homology, lie_chain_endo, lie_levels, GradedEndo};
use qhoch_core::loday::NChain;
use qhoch_core::ncomplex::{GradedComplex, HomologyTable};
use qhoch_core::Error;
use serde_json::{json, Value};

use crate::bank;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::formats::{matrix_from_rows, matrix_to_rows, read_json, DerivationFile, HigherFile};
use crate::suite::{self, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

/// One `n,i,dim,valid` table row.
pub type Row = (i64, usize, Option<usize>, bool);

/// A rendered result: the JSON document, an optional `n,i,dim,valid` table
/// for CSV output, and whether any identity failed.
#[derive(Debug)]
pub struct Output {
    pub value: Value,
    pub rows: Option<Vec<Row>>,
    pub failed: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.value).expect("serializable") + "\n"),
            Format::Csv => {
                let rows = self.rows.as_ref().ok_or_else(|| CliError::Usage("CSV output is only available for homology and bivariant tables".into()))?;
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["n", "i", "dim", "valid"]).expect("in-memory write");
                for (n, i, dim, valid) in rows {
                    let dim = dim.map(|d| d.to_string()).unwrap_or_default();
                    w.write_record([n.to_string(), i.to_string(), dim, valid.to_string()]).expect("in-memory write");
                }
                Ok(String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii"))
            }
        }
    }
}

/// Bivariant degree window, `n_min ≤ n_max` in Hom degrees.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub n_min: i64,
    pub n_max: i64,
}

fn matrix_json(m: &QMatrix, field: &CyclotomicField) -> Value {
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": matrix_to_rows(m, field) })
}

fn table_json(table: &HomologyTable) -> Vec<Value> {
    table.cells.iter().map(|c| json!({ "n": c.n, "i": c.i, "dim": c.dim, "valid": c.valid })).collect()
}

fn table_rows(table: &HomologyTable) -> Vec<Row> {
    table.cells.iter().map(|c| (c.n, c.i, c.dim, c.valid)).collect()
}

fn chain_from(cfg: &RunConfig) -> CliResult<(Algebra, NChain)> {
    let field = cfg.field()?;
    let alg = cfg.algebra(&field)?;
    let space = cfg.space(true)?;
    let chain = cfg.chain(&alg, &space)?;
    Ok((alg, chain))
}

/// Derivations to act with: the file if given, else the built-in bank.
fn derivations(cfg: &RunConfig, alg: &Algebra) -> CliResult<Vec<(String, Derivation)>> {
    match &cfg.derivation {
        Some(path) => Ok(vec![(path.display().to_string(), read_json::<DerivationFile>(path)?.into_derivation(alg)?)]),
        None => Ok(bank::derivations(&cfg.algebra, alg)),
    }
}

fn higher_derivations(cfg: &RunConfig, alg: &Algebra) -> CliResult<Vec<(String, HigherDerivation)>> {
    match &cfg.higher {
        Some(path) => Ok(vec![(path.display().to_string(), read_json::<HigherFile>(path)?.into_higher(alg)?)]),
        None => Ok(bank::higher_derivations(&cfg.algebra, alg)),
    }
}

pub fn homology(cfg: &RunConfig) -> CliResult<Output> {
    let (_, chain) = chain_from(cfg)?;
    let table = qhoch_core::ncomplex::homology(&chain)?;
    let totals: Vec<Value> =
        table.degrees().into_iter().filter_map(|n| table.total(n).map(|t| json!({ "n": n, "dim": t }))).collect();
    let levels: Vec<usize> = (0..=cfg.truncation as i64).map(|n| chain.dim(n)).collect();
    let value = json!({
        "command": "homology",
        "config": cfg.to_json(),
        "levels": levels,
        "cells": table_json(&table),
        "totals": totals,
    });
    Ok(Output { value, rows: Some(table_rows(&table)), failed: false })
}

fn induced_cells(endo: &GradedEndo, complex: &GradedComplex, table: &HomologyTable) -> CliResult<Vec<Value>> {
    let field = complex.field();
    table
        .cells
        .iter()
        .filter(|c| c.valid)
        .map(|c| {
            let m = induced_on_homology(endo, complex, c.n, c.i)?;
            Ok(json!({ "n": c.n, "i": c.i, "dim": c.dim, "matrix": matrix_json(&m, field) }))
        })
        .collect()
}

/// Induced maps of `L_D` (or `L^k_D` when `--higher` or `--k` is given) on
/// every valid homology cell.
pub fn lie(cfg: &RunConfig) -> CliResult<Output> {
    let (alg, chain) = chain_from(cfg)?;
    let complex = GradedComplex::from_chain(&chain);
    let table = complex.homology()?;
    let mut operators = Vec::new();
    if cfg.higher.is_some() || cfg.k.is_some() {
        for (name, hs) in higher_derivations(cfg, &alg)? {
            let ks: Vec<usize> = match cfg.k {
                Some(k) => vec![k],
                None => (0..=hs.order()).collect(),
            };
            for k in ks {
                let endo = higher_chain_endo(&chain, &hs, k)?;
                operators.push(json!({ "name": name, "kind": "higher", "k": k, "cells": induced_cells(&endo, &complex, &table)? }));
            }
        }
    } else {
        let ds = derivations(cfg, &alg)?;
        if ds.is_empty() {
            return Err(CliError::Usage("no derivation: pass --derivation for this algebra".into()));
        }
        for (name, d) in ds {
            let endo = lie_chain_endo(&chain, &d)?;
            operators.push(json!({ "name": name, "kind": "derivation", "cells": induced_cells(&endo, &complex, &table)? }));
        }
    }
    let value = json!({ "command": "lie", "config": cfg.to_json(), "operators": operators });
    Ok(Output { value, rows: None, failed: false })
}

fn bivariant_rows(cells: &[BivariantCell]) -> Vec<Row> {
    cells.iter().map(|c| (c.degree, c.i, c.dim, c.valid)).collect()
}

/// Windowed bivariant cohomology and the induced maps of `L̄_D`.
pub fn bivariant(cfg: &RunConfig, window: Window) -> CliResult<Output> {
    if window.n_min > window.n_max {
        return Err(CliError::Usage(format!("empty window {}..={}", window.n_min, window.n_max)));
    }
    let (alg, chain) = chain_from(cfg)?;
    let field = chain.field().clone();
    let w = HomComplexWindow::new(&chain, window.n_min, window.n_max)?;
    let cells = bivariant_cohomology(&w)?;
    let mut ds = derivations(cfg, &alg)?;
    if ds.is_empty() && cfg.derivation.is_none() {
        ds.push(("zero".into(), Derivation::zero(&alg)));
    }
    let mut induced = Vec::new();
    for (name, d) in &ds {
        let maps: Vec<Value> = bivariant_induced(&w, d)?
            .iter()
            .map(|c| json!({ "n": c.degree, "i": c.i, "matrix": matrix_json(&c.matrix, &field) }))
            .collect();
        induced.push(json!({ "name": name, "cells": maps }));
    }
    let value = json!({
        "command": "bivariant",
        "config": cfg.to_json(),
        "window": { "n_min": window.n_min, "n_max": window.n_max },
        "cells": cells.iter().map(|c| json!({ "n": c.degree, "i": c.i, "dim": c.dim, "valid": c.valid, "approximate": c.approximate })).collect::<Vec<_>>(),
        "induced": induced,
    });
    Ok(Output { value, rows: Some(bivariant_rows(&cells)), failed: false })
}

/// Largest level used by the naturality and coproduct checks.
pub const VERIFY_LEVEL_CAP: usize = 4;
/// Largest order `k` checked for higher derivations.
pub const VERIFY_K_CAP: usize = 3;
/// Truncation of the chain used for the bivariant checks.
pub const VERIFY_HOM_TRUNCATION: usize = 3;

/// Runs the identity suite. Inputs are loaded without validation so that
/// violations are reported as failed checks rather than input errors.
pub fn verify(cfg: &RunConfig) -> CliResult<Output> {
    let field = cfg.field()?;
    let alg = cfg.algebra(&field)?;
    let space = cfg.space(false)?;
    let mut s = Suite::default();
    s.record("simplicial_identities", suite::simplicial_identities(&space));
    let chain = NChain::build_unchecked(&alg, &space, cfg.q_exponent, cfg.build_options())?;
    s.record(format!("nilpotency(N = {})", cfg.order), suite::nilpotency(&chain));

    let mut ds = bank::derivations(&cfg.algebra, &alg);
    if let Some(path) = &cfg.derivation {
        let file: DerivationFile = read_json(path)?;
        let m = matrix_from_rows(&field, &file.matrix, alg.dim(), "derivation.matrix")?;
        let name = path.display().to_string();
        match Derivation::new(&alg, m) {
            Ok(d) => {
                s.record(format!("leibniz[{name}]"), Ok(()));
                ds.push((name, d));
            }
            Err(e) => {
                s.record(format!("leibniz[{name}]"), Err(format!("{}: {e}", e.code())));
            }
        }
    }
    for (name, d) in &ds {
        s.record(format!("lie_chain_map[{name}]"), suite::lie_chain_map(&chain, d));
    }
    for (a, (na, da)) in ds.iter().enumerate() {
        for (nb, db) in &ds[a + 1..] {
            s.record(format!("bracket[{na}, {nb}]"), suite::bracket(&chain, da, db));
        }
    }

    let mut hss: Vec<(String, Vec<QMatrix>)> =
        bank::higher_derivations(&cfg.algebra, &alg).into_iter().map(|(n, h)| (n, h.maps().to_vec())).collect();
    if let Some(path) = &cfg.higher {
        hss.push((path.display().to_string(), read_json::<HigherFile>(path)?.into_maps(&alg)?));
    }
    let level_cap = VERIFY_LEVEL_CAP.min(cfg.truncation);
    let coproduct_chain = chain_truncated(&alg, &space, cfg, level_cap)?;
    for (name, maps) in &hss {
        let hs = match suite::hasse_schmidt(&alg, maps) {
            Ok(hs) => {
                s.record(format!("hasse_schmidt[{name}]"), Ok(()));
                hs
            }
            Err(w) => {
                s.record(format!("hasse_schmidt[{name}]"), Err(w));
                continue;
            }
        };
        for k in 0..=VERIFY_K_CAP.min(hs.order()) {
            s.record(format!("higher_naturality[{name}, k = {k}]"), suite::higher_naturality(&alg, &space, &hs, k, level_cap));
            s.record(format!("coproduct[{name}, k = {k}]"), suite::coproduct(&coproduct_chain, &hs, k));
        }
    }

    bivariant_checks(&mut s, cfg, &alg, &space, &ds)?;
    let failed = !s.all_passed();
    let value = json!({
        "command": "verify",
        "config": cfg.to_json(),
        "checks": s.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        "passed": !failed,
    });
    Ok(Output { value, rows: None, failed })
}

fn chain_truncated(alg: &Algebra, space: &qhoch_core::simplicial::SimplicialSet, cfg: &RunConfig, t: usize) -> CliResult<NChain> {
    Ok(NChain::build_unchecked(alg, &space.truncate(t), cfg.q_exponent, cfg.build_options())?)
}

fn bivariant_checks(
    s: &mut Suite,
    cfg: &RunConfig,
    alg: &Algebra,
    space: &qhoch_core::simplicial::SimplicialSet,
    ds: &[(String, Derivation)],
) -> CliResult<()> {
    let t = VERIFY_HOM_TRUNCATION.min(cfg.truncation);
    let chain = chain_truncated(alg, space, cfg, t)?;
    let mut endos = vec![("identity".to_string(), GradedEndo::identity(&chain))];
    endos.extend(ds.iter().map(|(name, d)| (format!("L[{name}]"), lie_levels(&chain, d.matrix()))));
    let families = suite::hom_families(&chain, &endos[1..]);
    for (lname, l) in &endos {
        for (fname, f) in &families {
            s.record(format!("graded_commutator[m = 0, {lname}, {fname}]"), suite::graded_commutator(&chain, l, f));
        }
    }
    if cfg.order.is_multiple_of(2) && alg.dim() == 1 {
        let m = cfg.order as i64 / 2;
        let shift = suite::shift_endo(&chain, m);
        for (fname, f) in &families {
            s.record(format!("graded_commutator[m = {m}, shift, {fname}]"), suite::graded_commutator(&chain, &shift, f));
        }
    }
    let ti = t as i64;
    let w = match HomComplexWindow::new(&chain, -ti, ti) {
        Ok(w) => w,
        Err(e @ Error::HomSizeGuard { .. }) => {
            s.skip("hom_nilpotency", e.to_string());
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    s.record("hom_nilpotency", suite::hom_nilpotency(&w));
    s.record("hom_nilpotency_interior", suite::hom_interior_nilpotency(&w));
    for (name, d) in ds {
        s.record(format!("lbar_commutes[{name}]"), suite::lbar_commutes(&w, &lie_levels(&chain, d.matrix())));
    }
    Ok(())
}
