//! PBW-normal-ordered arithmetic in `U(g)^{⊗L}`.

mod analytic;
mod format;
mod hopf;
mod pbw;
mod tensor;

pub use analytic::{analytic_apply, coefficients, exp, series_inverse, AnalyticFn};
pub use format::{from_records, to_records, TermRecord};
pub use hopf::{
    antipode, antipode_axiom_residual, coproduct, counit, leg_embed, wedge, LegPattern,
};
pub use pbw::{gen_mono, mono_degree, mul_mono, unit_mono, Mono, PbwCache};
pub use tensor::{Key, Tensor};
