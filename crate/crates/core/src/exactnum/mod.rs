//! Exact arithmetic in Q(ζ_N) and exact sparse linear algebra over it.

mod field;
pub mod linalg;
mod matrix;
mod rational;

pub use field::{cyclotomic_polynomial, CyclotomicField, Scalar};
pub use linalg::{
    complement_basis, image, induced_on_quotient, nullity, nullspace, quotient_dim, rank, Echelon,
};
pub(crate) use matrix::Accumulator;
pub use matrix::{QMatrix, SparseVec};
pub use rational::{ParseRationalError, Rational};
