//! Named algebras, r-matrices and twists as the checks see them: the
//! bundled catalog, optionally overridden by a suite file or a mutation.
//!
//! A suite file is JSON:
//!
//! ```json
//! {
//!   "base": ["poincare"],
//!   "algebras": [ <algebra file> ],
//!   "rmatrices": {"poincare.r2": {"algebra": "poincare", "wedges": [ <wedge term> ]}},
//!   "twists": {"poincare.F_r2": {"algebra": "poincare", "rmatrix": "poincare.r2",
//!                                "order": 3, "terms": [ <term record> ]}}
//! }
//! ```
//!
//! Every section is optional. Entries whose name is a catalog name replace
//! that entry wherever the `base` suites use it; other entries get checks
//! of their own. Twist terms use the canonical listing printed by
//! `expand`, so an expansion can be edited and fed back.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::config::CatalogSuite;
use crate::algebra::catalog as algebras;
use crate::algebra::{AlgebraFile, InvolutionSpec, LieAlgebra};
use crate::enveloping::{from_records, Tensor, TermRecord};
use crate::error::{Error, Result};
use crate::rmatrix::catalog as rcat;
use crate::rmatrix::{JordanianShape, RMatrix, RMatrixFile, WedgeTerm};
use crate::twist::catalog::{self as tcat, Conventions};
use crate::twist::Twist;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteFile {
    #[serde(default)]
    pub base: Vec<String>,
    #[serde(default)]
    pub algebras: Vec<AlgebraFile>,
    #[serde(default)]
    pub rmatrices: BTreeMap<String, RMatrixDef>,
    #[serde(default)]
    pub twists: BTreeMap<String, TwistDef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDef {
    pub algebra: String,
    pub wedges: Vec<WedgeTerm>,
    /// `C(r)` is expected nonzero but invariant instead of zero.
    #[serde(default)]
    pub modified: bool,
}

/// Unknown keys are ignored, so the output of `expand` can be used as is.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistDef {
    pub algebra: String,
    /// The r-matrix the twist quantizes, if any.
    #[serde(default)]
    pub rmatrix: Option<String>,
    /// Order through which `terms` is complete.
    pub order: u32,
    pub terms: Vec<TermRecord>,
}

impl SuiteFile {
    pub fn parse(text: &str) -> Result<SuiteFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "suite file, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn load(path: &Path) -> Result<SuiteFile> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        SuiteFile::parse(&text).map_err(|e| match e {
            Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    pub fn base_suites(&self) -> Result<Vec<CatalogSuite>> {
        let mut out: Vec<CatalogSuite> = self
            .base
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_>>()
            .map_err(|e| Error::Definition(format!("base: {e}")))?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone)]
struct UserTwist {
    body: Tensor,
    order: u32,
    rmatrix: Option<String>,
}

/// Resolves names to objects. Cloning is cheap; everything is shared.
#[derive(Clone)]
pub struct Definitions {
    algebras: BTreeMap<String, (Arc<LieAlgebra>, Option<InvolutionSpec>)>,
    rmatrices: BTreeMap<String, (RMatrix, bool)>,
    twists: BTreeMap<String, UserTwist>,
}

impl Definitions {
    pub fn catalog() -> Result<Definitions> {
        let mut algebras = BTreeMap::new();
        for name in algebras::ALGEBRA_NAMES {
            algebras.insert(
                name.to_owned(),
                (algebras::algebra(name)?, Some(algebras::star(name)?)),
            );
        }
        Ok(Definitions {
            algebras,
            rmatrices: BTreeMap::new(),
            twists: BTreeMap::new(),
        })
    }

    /// The catalog with the definitions of `file` laid over it.
    pub fn with_file(file: &SuiteFile) -> Result<Definitions> {
        let mut d = Definitions::catalog()?;
        for (n, a) in file.algebras.iter().enumerate() {
            let (alg, star) = a
                .build()
                .map_err(|e| Error::Definition(format!("algebras[{n}] (`{}`): {e}", a.name)))?;
            d.algebras.insert(a.name.clone(), (alg, star));
        }
        for (name, r) in &file.rmatrices {
            let alg = d
                .algebra(&r.algebra)
                .map_err(|e| Error::Definition(format!("rmatrices.{name}.algebra: {e}")))?;
            let built = RMatrixFile {
                terms: r.wedges.clone(),
            }
            .build(&alg)
            .map_err(|e| Error::Definition(format!("rmatrices.{name}: {e}")))?;
            d.rmatrices.insert(name.clone(), (built, r.modified));
        }
        for (name, t) in &file.twists {
            let ctx = |e: Error| Error::Definition(format!("twists.{name}: {e}"));
            let alg = d.algebra(&t.algebra).map_err(ctx)?;
            let body = from_records(&alg, 2, &t.terms).map_err(ctx)?;
            if let Some(r) = &t.rmatrix {
                d.rmatrix(r).map_err(ctx)?;
            }
            d.twists.insert(
                name.clone(),
                UserTwist {
                    body,
                    order: t.order,
                    rmatrix: t.rmatrix.clone(),
                },
            );
        }
        Ok(d)
    }

    pub fn algebra(&self, name: &str) -> Result<Arc<LieAlgebra>> {
        self.algebras
            .get(name)
            .map(|(a, _)| a.clone())
            .ok_or_else(|| Error::UnknownName(name.to_owned()))
    }

    pub fn star(&self, name: &str) -> Result<InvolutionSpec> {
        self.algebras
            .get(name)
            .and_then(|(_, s)| s.clone())
            .ok_or_else(|| Error::Definition(format!("algebra `{name}` declares no star")))
    }

    pub fn rmatrix(&self, name: &str) -> Result<RMatrix> {
        if let Some((r, _)) = self.rmatrices.get(name) {
            return Ok(r.clone());
        }
        let e = rcat::entry(name)?;
        e.file().build(&self.algebra(e.algebra)?)
    }

    /// The twist `name` through `order`. A user twist is cut at the order
    /// its listing is complete to.
    pub fn twist(&self, name: &str, order: u32, conv: Conventions) -> Result<Twist> {
        if let Some(u) = self.twists.get(name) {
            let n = order.min(u.order);
            let f = Twist::new(u.body.clone(), n)?;
            return Ok(match &u.rmatrix {
                Some(r) => f.with_source(self.rmatrix(r)?),
                None => f,
            });
        }
        let e = tcat::entry(name)?;
        tcat::catalog_twist_in(
            name,
            &self.algebra(e.algebra)?,
            self.rmatrix(e.rmatrix)?,
            order,
            conv,
        )
    }

    /// The generic-constructor route for a Poincaré composite twist.
    pub fn generic_twist(&self, name: &str, order: u32, conv: Conventions) -> Result<Twist> {
        tcat::generic_twist_in(name, &self.algebra(algebras::POINCARE)?, order, conv)
    }

    pub fn jordanian_shape(&self, name: &str) -> Result<(Arc<LieAlgebra>, JordanianShape)> {
        let (alg, shape) = rcat::jordanian_shape(name)?;
        Ok((self.algebra(alg)?, shape))
    }

    /// Names defined here that are not catalog names, by kind.
    pub fn user_algebras(&self) -> Vec<String> {
        self.algebras
            .keys()
            .filter(|n| !algebras::ALGEBRA_NAMES.contains(&n.as_str()))
            .cloned()
            .collect()
    }

    pub fn user_rmatrices(&self) -> Vec<(String, bool)> {
        self.rmatrices
            .iter()
            .filter(|(n, _)| rcat::entry(n).is_err())
            .map(|(n, (_, m))| (n.clone(), *m))
            .collect()
    }

    pub fn user_twists(&self) -> Vec<String> {
        self.twists
            .keys()
            .filter(|n| tcat::entry(n).is_err())
            .cloned()
            .collect()
    }

    /// Replaces an algebra by a modified copy (same generators).
    pub fn replace_algebra(&mut self, name: &str, alg: Arc<LieAlgebra>) -> Result<()> {
        let slot = self
            .algebras
            .get_mut(name)
            .ok_or_else(|| Error::UnknownName(name.to_owned()))?;
        slot.0 = alg;
        Ok(())
    }

    /// Replaces a twist by an explicit body, complete through `order`.
    pub fn replace_twist(&mut self, name: &str, body: Tensor, order: u32, rmatrix: Option<String>) {
        self.twists.insert(
            name.to_owned(),
            UserTwist {
                body,
                order,
                rmatrix,
            },
        );
    }
}
