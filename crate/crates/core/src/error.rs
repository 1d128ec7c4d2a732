use alloc::string::String;

use thiserror::Error;

/// Everything that can go wrong in the core crate.
///
/// Each variant maps to a stable machine-readable code via [`Error::code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root of unity order must be at least 2, got {0}")]
    InvalidFieldOrder(u32),
    #[error("zeta^{exponent} is not a primitive {order}-th root of unity")]
    NotPrimitiveRoot { exponent: i64, order: u32 },
    #[error("{context}: expected dimension {expected}, found {found}")]
    ShapeMismatch { context: &'static str, expected: usize, found: usize },
    #[error("not a subquotient operator: {0}")]
    NotSubquotient(&'static str),
    #[error("scalar does not belong to the working field")]
    ForeignScalar,

    #[error("algebra is not commutative at basis pair ({0}, {1})")]
    NonCommutative(usize, usize),
    #[error("algebra is not associative at basis triple ({0}, {1}, {2})")]
    NonAssociative(usize, usize, usize),
    #[error("unit law fails for basis element {0}")]
    UnitLaw(usize),
    #[error("Leibniz rule fails at basis pair ({0}, {1})")]
    Leibniz(usize, usize),
    #[error("higher derivation is not normalized: D_0 is not the identity")]
    NotNormalized,
    #[error("Hasse-Schmidt identity fails at order {n}, basis pair ({i}, {j})")]
    HasseSchmidt { n: usize, i: usize, j: usize },
    #[error("D_{0} does not vanish on the unit")]
    NonzeroOnUnit(usize),
    #[error("extracted d_{n} is not a derivation (basis pair ({i}, {j}))")]
    ExtractedNotDerivation { n: usize, i: usize, j: usize },
    #[error("order {k} exceeds the stored order {order}")]
    OrderExceeded { k: usize, order: usize },

    #[error("malformed simplicial data: {0}")]
    MalformedSimplicial(String),
    #[error("basepoint not preserved by {map} at level {level}, index {index}")]
    Basepoint { map: &'static str, level: usize, index: usize },
    #[error("simplicial identity {relation} fails at level {level} for (i, j) = ({i}, {j})")]
    SimplicialIdentity { relation: &'static str, level: usize, i: usize, j: usize },
    #[error("invalid pointed map: {0}")]
    InvalidPointedMap(String),

    #[error("level {level} has dimension {dim}, above the limit {limit}")]
    DimensionGuard { level: usize, dim: u128, limit: usize },
    #[error("composite of {order} differentials starting at degree {top} is not zero")]
    Nilpotency { order: u32, top: i64 },
    #[error("insufficient truncation: need level {needed}, truncation is {truncation}")]
    InsufficientTruncation { needed: usize, truncation: usize },
    #[error("cell (n = {n}, i = {i}) is outside the computed range")]
    InvalidCell { n: i64, i: usize },

    #[error("naturality fails at level {level}, face {face}")]
    Naturality { level: usize, face: usize },
    #[error("endomorphism does not commute with the differential at level {level}")]
    Commutation { level: usize },
    #[error("{count} compositions exceed the enumeration cap {cap}")]
    CompositionCap { count: u128, cap: u128 },
    #[error("word letter {letter} is out of range for an alphabet of {len} derivations")]
    LetterOutOfRange { letter: usize, len: usize },

    #[error("q^(2m) != 1 for m = {0}")]
    GradedCommutatorPrecondition(i64),
    #[error("Hom degree {degree} has dimension {dim}, above the limit {limit}")]
    HomSizeGuard { degree: i64, dim: usize, limit: usize },
    #[error("degree {0} is outside the Hom window")]
    OutsideWindow(i64),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidFieldOrder(_) => "invalid_field_order",
            Error::NotPrimitiveRoot { .. } => "not_primitive_root",
            Error::ShapeMismatch { .. } => "shape_mismatch",
            Error::NotSubquotient(_) => "not_subquotient",
            Error::ForeignScalar => "foreign_scalar",
            Error::NonCommutative(..) => "non_commutative",
            Error::NonAssociative(..) => "non_associative",
            Error::UnitLaw(_) => "unit_law",
            Error::Leibniz(..) => "leibniz",
            Error::NotNormalized => "not_normalized",
            Error::HasseSchmidt { .. } => "hasse_schmidt",
            Error::NonzeroOnUnit(_) => "nonzero_on_unit",
            Error::ExtractedNotDerivation { .. } => "extracted_not_derivation",
            Error::OrderExceeded { .. } => "order_exceeded",
            Error::MalformedSimplicial(_) => "malformed_simplicial",
            Error::Basepoint { .. } => "basepoint",
            Error::SimplicialIdentity { .. } => "simplicial_identity",
            Error::InvalidPointedMap(_) => "invalid_pointed_map",
            Error::DimensionGuard { .. } => "dimension_guard",
            Error::Nilpotency { .. } => "nilpotency",
            Error::InsufficientTruncation { .. } => "insufficient_truncation",
            Error::InvalidCell { .. } => "invalid_cell",
            Error::Naturality { .. } => "naturality",
            Error::Commutation { .. } => "commutation",
            Error::CompositionCap { .. } => "composition_cap",
            Error::LetterOutOfRange { .. } => "letter_out_of_range",
            Error::GradedCommutatorPrecondition(_) => "graded_commutator_precondition",
            Error::HomSizeGuard { .. } => "hom_size_guard",
            Error::OutsideWindow(_) => "outside_window",
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
