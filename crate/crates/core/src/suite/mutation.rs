//! Single-sign corruptions of catalog data, for checking that the suites
//! notice them.

use std::fmt;

use super::config::CatalogSuite;
use super::defs::Definitions;
use super::report::{Report, Status};
use crate::algebra::catalog::ALGEBRA_NAMES;
use crate::enveloping::Tensor;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};
use crate::twist::catalog::{self as tcat, Conventions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Negate the `k`-th coefficient of the stored bracket `[lhs, rhs]`.
    StructureConstant {
        algebra: String,
        lhs: usize,
        rhs: usize,
        k: usize,
    },
    /// Negate the `k`-th term of the canonical listing of a twist.
    TwistTerm { twist: String, k: usize },
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mutation::StructureConstant {
                algebra,
                lhs,
                rhs,
                k,
            } => {
                write!(f, "{algebra}: sign of term {k} of [#{lhs}, #{rhs}]")
            }
            Mutation::TwistTerm { twist, k } => write!(f, "{twist}: sign of term {k}"),
        }
    }
}

impl Mutation {
    /// The bundled suite that exercises the mutated object.
    pub fn suite(&self) -> CatalogSuite {
        let name = match self {
            Mutation::StructureConstant { algebra, .. } => algebra,
            Mutation::TwistTerm { twist, .. } => twist,
        };
        if name.starts_with("lorentz") {
            CatalogSuite::Lorentz
        } else {
            CatalogSuite::Poincare
        }
    }
}

/// Every single structure-constant sign flip in the catalog algebras.
pub fn structure_constant_mutations(defs: &Definitions) -> Result<Vec<Mutation>> {
    let mut out = Vec::new();
    for name in ALGEBRA_NAMES {
        let alg = defs.algebra(name)?;
        for b in alg.nonzero_brackets() {
            for k in 0..b.result.len() {
                out.push(Mutation::StructureConstant {
                    algebra: name.to_owned(),
                    lhs: b.lhs,
                    rhs: b.rhs,
                    k,
                });
            }
        }
    }
    Ok(out)
}

/// Single scalar terms `(key, parameter monomial)` of a tensor, in the
/// tensor's own order.
fn scalar_terms(t: &Tensor) -> Vec<Tensor> {
    let alg = t.algebra();
    let mut out = Vec::new();
    for (key, c) in t.terms() {
        for (m, v) in c.terms() {
            out.push(Tensor::from_key(
                alg,
                t.legs(),
                key.clone(),
                Scalar::term(m.clone(), *v),
            ));
        }
    }
    out
}

/// Every single term sign flip of the catalog twists at `order`.
pub fn twist_mutations(defs: &Definitions, order: u32, conv: Conventions) -> Result<Vec<Mutation>> {
    let mut out = Vec::new();
    for e in tcat::TWISTS {
        let f = defs.twist(e.name, order, conv)?;
        for k in 0..scalar_terms(f.body()).len() {
            out.push(Mutation::TwistTerm {
                twist: e.name.to_owned(),
                k,
            });
        }
    }
    Ok(out)
}

/// `defs` with the mutation applied.
pub fn apply(
    defs: &Definitions,
    m: &Mutation,
    order: u32,
    conv: Conventions,
) -> Result<Definitions> {
    let mut out = defs.clone();
    match m {
        Mutation::StructureConstant {
            algebra,
            lhs,
            rhs,
            k,
        } => {
            let alg = defs.algebra(algebra)?;
            let mut result = alg
                .nonzero_brackets()
                .into_iter()
                .find(|b| b.lhs == *lhs && b.rhs == *rhs)
                .ok_or_else(|| Error::Precondition(format!("no bracket for {m}")))?
                .result;
            let c = result
                .get_mut(*k)
                .ok_or_else(|| Error::Precondition(format!("no term for {m}")))?;
            c.1 = -c.1;
            out.replace_algebra(algebra, alg.with_bracket(*lhs, *rhs, result)?)?;
        }
        Mutation::TwistTerm { twist, k } => {
            let f = defs.twist(twist, order, conv)?;
            let term = scalar_terms(f.body())
                .into_iter()
                .nth(*k)
                .ok_or_else(|| Error::Precondition(format!("no term for {m}")))?;
            let body = f.body().sub(&term.scale_num(GaussianRational::from_int(2)));
            let r = tcat::entry(twist)?.rmatrix.to_owned();
            out.replace_twist(twist, body, order, Some(r));
        }
    }
    Ok(out)
}

/// Checks passing in `baseline` that do not pass in `mutant`.
pub fn newly_failing<'a>(baseline: &Report, mutant: &'a Report) -> Vec<&'a str> {
    mutant
        .results
        .iter()
        .filter(|r| r.status != Status::Pass)
        .filter(|r| {
            baseline
                .get(&r.check_name)
                .is_some_and(|b| b.status == Status::Pass)
        })
        .map(|r| r.check_name.as_str())
        .collect()
}
