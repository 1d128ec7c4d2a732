//! The named identity checks behind `qhoch verify`.

use qhoch_core::algebra::{hs_validate, Algebra, Derivation, HigherDerivation};
use qhoch_core::bivariant::{graded_commutator_check, HomComplexWindow, HomElement};
use qhoch_core::exactnum::QMatrix;
use qhoch_core::lie::{bracket_identity_check, check_commutes, check_face_naturality, coproduct_theorem_check, lie_levels, naturality_check_higher, GradedEndo};
use qhoch_core::loday::NChain;
use qhoch_core::simplicial::SimplicialSet;
use qhoch_core::Error;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn to_json(&self) -> Value {
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        };
        json!({ "name": self.name, "status": status, "witness": self.witness })
    }
}

#[derive(Debug, Default)]
pub struct Suite {
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn record(&mut self, name: impl Into<String>, outcome: Result<(), String>) -> bool {
        let passed = outcome.is_ok();
        let (status, witness) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(w) => (Status::Fail, Some(w)),
        };
        self.checks.push(Check { name: name.into(), status, witness });
        passed
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(Check { name: name.into(), status: Status::Skipped, witness: Some(reason.into()) });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }
}

fn describe(e: Error) -> String {
    format!("{}: {e}", e.code())
}

fn truth(ok: bool, witness: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(witness())
    }
}

pub fn simplicial_identities(y: &SimplicialSet) -> Result<(), String> {
    y.validate().map_err(describe)
}

/// Every composite of `N` consecutive differentials vanishes.
pub fn nilpotency(chain: &NChain) -> Result<(), String> {
    match chain.nilpotency_violation() {
        None => Ok(()),
        Some(top) => {
            let n = chain.order() as usize;
            Err(format!("b^{n} != 0 on the window of degrees {}..={top}", top + 1 - n))
        }
    }
}

/// `L_D` commutes with every face and with `b`.
pub fn lie_chain_map(chain: &NChain, d: &Derivation) -> Result<(), String> {
    let endo = lie_levels(chain, d.matrix());
    check_face_naturality(chain, &endo).map_err(describe)?;
    check_commutes(chain, &endo).map_err(describe)
}

pub fn bracket(chain: &NChain, d: &Derivation, e: &Derivation) -> Result<(), String> {
    truth(bracket_identity_check(chain, d, e).map_err(describe)?, || "L_D L_E - L_E L_D != L_[D,E]".into())
}

/// The Hasse–Schmidt identity, extraction to ordinary derivations, and the
/// round trip through the composition formula.
pub fn hasse_schmidt(alg: &Algebra, maps: &[QMatrix]) -> Result<HigherDerivation, String> {
    hs_validate(alg, maps).map_err(describe)?;
    let hs = HigherDerivation::new(alg, maps.to_vec()).map_err(describe)?;
    let ds = hs.extract(alg).map_err(describe)?;
    let back = HigherDerivation::compose(alg, &ds, hs.order());
    truth(back == hs, || "compose(extract(D)) != D".into())?;
    Ok(hs)
}

/// `L^k_D` commutes with every face and degeneracy up to level `top`.
pub fn higher_naturality(alg: &Algebra, y: &SimplicialSet, hs: &HigherDerivation, k: usize, top: usize) -> Result<(), String> {
    let top = top.min(y.truncation());
    for n in 0..=top {
        let mut maps: Vec<(&str, usize, _)> = y.faces(n).iter().enumerate().map(|(i, m)| ("d", i, m)).collect();
        if n < top {
            maps.extend(y.degeneracies(n).iter().enumerate().map(|(i, m)| ("s", i, m)));
        }
        for (kind, i, phi) in maps {
            if !naturality_check_higher(alg, hs, k, phi).map_err(describe)? {
                return Err(format!("naturality fails for {kind}_{i} at level {n}"));
            }
        }
    }
    Ok(())
}

pub fn coproduct(chain: &NChain, hs: &HigherDerivation, k: usize) -> Result<(), String> {
    truth(coproduct_theorem_check(chain, hs, k).map_err(describe)?, || format!("L_(D_{k}) != L^{k}_D"))
}

/// Deterministic test families of the Hom complex in degrees −1, 0, 1.
pub fn hom_families(chain: &NChain, lie: &[(String, GradedEndo)]) -> Vec<(String, HomElement)> {
    let f = chain.field();
    let pattern = |degree: i64| {
        HomElement::from_fn(chain, degree, |i| {
            let (rows, cols) = (chain.dim(i + degree), chain.dim(i));
            QMatrix::from_triplets(
                rows,
                cols,
                (0..rows * cols).filter_map(|k| {
                    let (r, c) = (k / cols, k % cols);
                    let v = (r as i64 + 2 * c as i64 + i) % 3 - 1;
                    (v != 0).then(|| (r, c, f.from_int(v)))
                }),
            )
        })
    };
    let mut out = vec![
        ("identity".to_string(), HomElement::identity(chain)),
        ("b".to_string(), HomElement::from_fn(chain, -1, |i| chain.diff_any(i))),
        ("pattern(-1)".to_string(), pattern(-1)),
        ("pattern(0)".to_string(), pattern(0)),
        ("pattern(1)".to_string(), pattern(1)),
    ];
    out.extend(lie.iter().map(|(name, l)| (format!("L[{name}]"), HomElement::from_endo(chain, l))));
    out
}

/// A degree-`m` family of identity maps; only meaningful when every level is
/// one-dimensional.
pub fn shift_endo(chain: &NChain, m: i64) -> GradedEndo {
    let t = chain.truncation() as i64;
    let levels = (0..=(t - m).max(-1)).map(|_| QMatrix::identity(1, chain.field())).collect();
    GradedEndo { degree: m, lo: 0, levels }
}

pub fn graded_commutator(chain: &NChain, l: &GradedEndo, f: &HomElement) -> Result<(), String> {
    truth(graded_commutator_check(chain, l, f).map_err(describe)?, || "[∂, L̄](f) != [b, L] f + q^(mn+m+n) f [L, b]".into())
}

pub fn hom_nilpotency(w: &HomComplexWindow) -> Result<(), String> {
    w.nilpotency_check().map_err(describe)
}

pub fn hom_interior_nilpotency(w: &HomComplexWindow) -> Result<(), String> {
    w.interior_nilpotency_check().map_err(describe)
}

/// `∂ L̄_D = L̄_D ∂` on every degree of the window.
pub fn lbar_commutes(w: &HomComplexWindow, l: &GradedEndo) -> Result<(), String> {
    let f = w.chain().field();
    let (lo, hi) = w.degrees();
    for n in lo..=hi {
        let lhs = w.partial(n).mul(&w.lbar_matrix(l, n), f);
        let rhs = w.lbar_matrix(l, n - 1).mul(w.partial(n), f);
        if lhs != rhs {
            return Err(format!("∂ L̄ != L̄ ∂ on Hom degree {n}"));
        }
    }
    Ok(())
}
