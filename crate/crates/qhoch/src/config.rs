use std::path::PathBuf;
use std::str::FromStr;

use qhoch_core::algebra::Algebra;
use qhoch_core::exactnum::CyclotomicField;
use qhoch_core::loday::{BuildOptions, NChain};
use qhoch_core::simplicial::SimplicialSet;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};
use crate::formats::{read_json, AlgebraFile, SimplicialFile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    Field,
    Dual,
    TruncPoly(usize),
    File(PathBuf),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceSource {
    Point,
    Circle,
    Sphere(usize),
    File(PathBuf),
}

impl FromStr for AlgebraSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(AlgebraSource::File(PathBuf::from(path)));
        }
        match s {
            "builtin:field" => Ok(AlgebraSource::Field),
            "builtin:dual" => Ok(AlgebraSource::Dual),
            _ => match s.strip_prefix("builtin:truncpoly:").map(str::parse::<usize>) {
                Some(Ok(m)) if m >= 1 => Ok(AlgebraSource::TruncPoly(m)),
                _ => Err(format!("unknown algebra {s:?}; use builtin:field, builtin:dual, builtin:truncpoly:M or file:PATH")),
            },
        }
    }
}

impl std::fmt::Display for AlgebraSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraSource::Field => write!(f, "builtin:field"),
            AlgebraSource::Dual => write!(f, "builtin:dual"),
            AlgebraSource::TruncPoly(m) => write!(f, "builtin:truncpoly:{m}"),
            AlgebraSource::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for SpaceSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(SpaceSource::File(PathBuf::from(path)));
        }
        match s {
            "point" => Ok(SpaceSource::Point),
            "circle" => Ok(SpaceSource::Circle),
            _ => match s.strip_prefix("sphere:").map(str::parse::<usize>) {
                Some(Ok(p)) if p >= 1 => Ok(SpaceSource::Sphere(p)),
                _ => Err(format!("unknown space {s:?}; use point, circle, sphere:P or file:PATH")),
            },
        }
    }
}

impl std::fmt::Display for SpaceSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceSource::Point => write!(f, "point"),
            SpaceSource::Circle => write!(f, "circle"),
            SpaceSource::Sphere(p) => write!(f, "sphere:{p}"),
            SpaceSource::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub order: u32,
    pub q_exponent: i64,
    pub truncation: usize,
    pub algebra: AlgebraSource,
    pub space: SpaceSource,
    pub derivation: Option<PathBuf>,
    pub higher: Option<PathBuf>,
    pub k: Option<usize>,
    pub force_dims: bool,
}

impl RunConfig {
    pub fn new(order: u32, truncation: usize, algebra: AlgebraSource, space: SpaceSource) -> Self {
        RunConfig { order, q_exponent: 1, truncation, algebra, space, derivation: None, higher: None, k: None, force_dims: false }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.order,
            "q_exp": self.q_exponent,
            "T": self.truncation,
            "algebra": self.algebra.to_string(),
            "space": self.space.to_string(),
            "derivation": self.derivation.as_ref().map(|p| p.display().to_string()),
            "higher": self.higher.as_ref().map(|p| p.display().to_string()),
            "k": self.k,
        })
    }

    pub fn field(&self) -> CliResult<CyclotomicField> {
        let field = CyclotomicField::new(self.order)?;
        field.q_root(self.q_exponent)?;
        Ok(field)
    }

    pub fn algebra(&self, field: &CyclotomicField) -> CliResult<Algebra> {
        Ok(match &self.algebra {
            AlgebraSource::Field => Algebra::base_field(field),
            AlgebraSource::Dual => Algebra::dual_numbers(field),
            AlgebraSource::TruncPoly(m) => Algebra::truncated_polynomial(field, *m),
            AlgebraSource::File(p) => read_json::<AlgebraFile>(p)?.into_algebra(field)?,
        })
    }

    /// The space truncated at `T`. With `checked = false` a file is only
    /// shape-checked, so identity failures can be reported downstream.
    pub fn space(&self, checked: bool) -> CliResult<SimplicialSet> {
        let t = self.truncation;
        Ok(match &self.space {
            SpaceSource::Point => SimplicialSet::point(t),
            SpaceSource::Circle => SimplicialSet::circle(t),
            SpaceSource::Sphere(p) => SimplicialSet::sphere(*p, t),
            SpaceSource::File(path) => {
                let file: SimplicialFile = read_json(path)?;
                let y = if checked { file.into_simplicial()? } else { file.into_simplicial_unchecked()? };
                if y.truncation() < t {
                    return Err(CliError::Usage(format!("{} is truncated at {}, below T = {t}", path.display(), y.truncation())));
                }
                y.truncate(t)
            }
        })
    }

    pub fn build_options(&self) -> BuildOptions {
        if self.force_dims {
            BuildOptions { dim_limit: None }
        } else {
            BuildOptions::default()
        }
    }

    pub fn chain(&self, alg: &Algebra, space: &SimplicialSet) -> CliResult<NChain> {
        Ok(NChain::build(alg, space, self.q_exponent, self.build_options())?)
    }
}
