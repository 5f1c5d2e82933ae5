//! Exact-arithmetic toolkit for orthogonal arrays and the coarse-grained
//! entanglement classification of array-based quantum states.
//!
//! Pipeline: verify and measure orthogonal arrays ([`oa`], [`jchar`]),
//! compute the generating arrays of the OA cone ([`cone`]), map arrays to
//! multipartite pure states and evaluate entanglement invariants exactly
//! ([`quantum`]), test array isomorphism ([`iso`]), and produce the
//! classification catalogs ([`classify`]).

pub mod alphabet;
pub mod cone;
pub mod error;
pub mod iso;
pub mod jchar;
pub mod oa;
pub mod quantum;

pub mod classify;

pub use alphabet::AlphabetSpec;
pub use error::{Error, Result};
pub use oa::{CoefficientVector, OrthogonalArray};
