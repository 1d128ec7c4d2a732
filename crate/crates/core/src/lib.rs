//! Exact q-Hochschild homology of order Y.
//!
//! For a finite-dimensional commutative algebra `A`, a pointed simplicial
//! finite set `Y` and a primitive N-th root of unity `q`, the Loday functor
//! turns `Y` into a simplicial vector space whose q-weighted face sums form
//! an N-complex. This crate builds that N-complex exactly over Q(ζ_N),
//! computes its amplitude homology, and realizes the Lie-derivative actions
//! of derivations, Hasse–Schmidt derivations and the bivariant Hom complex.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod bivariant;
pub mod error;
pub mod exactnum;
pub mod lie;
pub mod loday;
pub mod ncomplex;
pub mod simplicial;

pub use error::{Error, Result};
