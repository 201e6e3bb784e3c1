//! The q-deformed Lorentz algebra as two commuting `U_q(sl(2))` copies with
//! exact generator-level Hopf structure.

mod algebra;
mod cartan;
mod hopf;
mod qexp;
mod scalar;
mod star;

pub use algebra::{Cartan, CopyMono, QAlgebra, QElement, QMonomial, QTensor};
pub use cartan::CartanTwist;
pub use hopf::{
    base_identification_check, hopf_axiom_check, rename_bases, AxiomFamily, AxiomOutcome,
    AxiomReport, Identification, QGen, QHopf, Relation, Variant,
};
pub use qexp::{cocycle_residual, inv_q_factorial, q_exponential, r4_prime_twist};
pub use scalar::{cyclotomic, LPoly, QScalar, QVar};
pub use star::{
    base_star, star_check, star_check_with, star_scalar, GroupLikeStar, Star, StarReport,
};
