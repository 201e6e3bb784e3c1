//! Exact symbolic verification of Lie bialgebra and twist identities.
//!
//! Everything is computed over Gaussian rationals with polynomial
//! dependence on named deformation parameters. Series in those parameters
//! are truncated at a fixed total degree, so every identity is checked as an
//! exact equality order by order.

// Dense matrix code reads better with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod enveloping;
pub mod error;
pub mod linalg;
pub mod qdeform;
pub mod rmatrix;
pub mod scalar;
pub mod suite;
pub mod twist;

pub use error::{Error, Result};
