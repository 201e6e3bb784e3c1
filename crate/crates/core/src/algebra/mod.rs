//! Lie algebras given by structure constants, their catalog presentations,
//! changes of basis and `*`-involutions.

mod basis;
pub mod catalog;
mod file;
mod involution;
mod lie;

pub use basis::{change_basis, BasisMap};
pub(crate) use file::{number_strings, parse_number};
pub use file::{AlgebraFile, AliasDef, BracketDef, GenCoeff, StarDef};
pub use involution::{involution_apply, InvolutionSpec, Lifting};
pub use lie::{BracketEntry, JacobiViolation, LieAlgebra, LieElement};
