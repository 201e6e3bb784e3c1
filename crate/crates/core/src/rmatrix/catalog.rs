//! Bundled r-matrices, their subordinated splits and Jordanian shapes.

use super::{JordanianShape, RMatrix, RMatrixFile};
use crate::algebra::catalog::{self as algebras, LORENTZ_CANONICAL, LORENTZ_COMPLEX, POINCARE};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, ParamSymbol, Reality};

pub struct Entry {
    pub name: &'static str,
    pub algebra: &'static str,
    /// Defining formula, for reports.
    pub formula: &'static str,
    source: &'static str,
}

macro_rules! entry {
    ($name:literal, $alg:expr, $formula:literal) => {
        Entry {
            name: $name,
            algebra: $alg,
            formula: $formula,
            source: include_str!(concat!("../../data/rmatrix/", $name, ".json")),
        }
    };
}

pub static ENTRIES: &[Entry] = &[
    entry!("lorentz.r1", LORENTZ_CANONICAL, "α e+∧h"),
    entry!(
        "lorentz.r2",
        LORENTZ_CANONICAL,
        "α(e+∧h − e'+∧h') + 2β e'+∧e+"
    ),
    entry!(
        "lorentz.r3",
        LORENTZ_CANONICAL,
        "α(e'+∧e− + e+∧e'−) + β(e+∧e− − e'+∧e'−) − 2γ h∧h'"
    ),
    entry!(
        "lorentz.r4",
        LORENTZ_CANONICAL,
        "α(e'+∧e− + e+∧e'− − 2h∧h') + 2λ e+∧e'+"
    ),
    entry!("lorentz.r3.complex", LORENTZ_COMPLEX, "r3' + r3''"),
    entry!(
        "lorentz.r3.complex.prime",
        LORENTZ_COMPLEX,
        "2(β + ια) E1+∧E1− + 2(β − ια) E2+∧E2−"
    ),
    entry!(
        "lorentz.r3.complex.double_prime",
        LORENTZ_COMPLEX,
        "4ιγ H2∧H1"
    ),
    entry!("lorentz.r4.complex", LORENTZ_COMPLEX, "r4' + r4''"),
    entry!(
        "lorentz.r4.complex.prime",
        LORENTZ_COMPLEX,
        "2ια(E1+∧E1− − E2+∧E2− − 2H1∧H2)"
    ),
    entry!(
        "lorentz.r4.complex.double_prime",
        LORENTZ_COMPLEX,
        "4ιλ E1+∧E2+"
    ),
    entry!("poincare.r1", POINCARE, "γ h'∧h + α(P+∧P− − P1∧P2)"),
    entry!("poincare.r1.prime", POINCARE, "α(P+∧P− − P1∧P2)"),
    entry!("poincare.r1.double_prime", POINCARE, "γ h'∧h"),
    entry!(
        "poincare.r2",
        POINCARE,
        "γ e'+∧e+ + β1(e+∧P1 − e'+∧P2 + h∧P+) + β2 h'∧P+"
    ),
    entry!("poincare.r2.prime", POINCARE, "β1(e+∧P1 − e'+∧P2 + h∧P+)"),
    entry!("poincare.r2.double_prime", POINCARE, "γ e'+∧e+"),
    entry!("poincare.r2.triple_prime", POINCARE, "β2 h'∧P+"),
    entry!(
        "poincare.r3",
        POINCARE,
        "γ e'+∧e+ + β1(e+∧P1 − e'+∧P2 + h∧P+) + α P1∧P+"
    ),
    entry!(
        "poincare.r3.prime",
        POINCARE,
        "β1(e+∧P1 − e'+∧P2 + h∧P+) + α P1∧P+"
    ),
    entry!("poincare.r3.double_prime", POINCARE, "γ e'+∧e+"),
    entry!(
        "poincare.r4",
        POINCARE,
        "γ(e'+∧e+ + e+∧P1 + e'+∧P2 − P1∧P2) + P+∧(α1 P1 + α2 P2)"
    ),
    entry!("poincare.r4.prime", POINCARE, "P+∧(α1 P1 + α2 P2)"),
    entry!(
        "poincare.r4.double_prime",
        POINCARE,
        "γ(e'+ − P1)∧(e+ + P2)"
    ),
    entry!("poincare.r5", POINCARE, "γ1(h∧e+ − h'∧e'+) + γ2 e+∧e'+"),
];

pub fn entry(name: &str) -> Result<&'static Entry> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_owned()))
}

impl Entry {
    pub fn file(&self) -> RMatrixFile {
        RMatrixFile::parse(self.source).expect("bundled r-matrix parses")
    }

    pub fn build(&self) -> Result<RMatrix> {
        self.file().build(&algebras::algebra(self.algebra)?)
    }
}

pub fn rmatrix(name: &str) -> Result<RMatrix> {
    entry(name)?.build()
}

/// A catalog r-matrix written as a sum of parts, each subordinated to the
/// next in the sense `parts[0] ≻ parts[1] ≻ …`.
pub struct Chain {
    pub total: &'static str,
    pub parts: &'static [&'static str],
}

pub static CHAINS: &[Chain] = &[
    Chain {
        total: "lorentz.r3.complex",
        parts: &[
            "lorentz.r3.complex.prime",
            "lorentz.r3.complex.double_prime",
        ],
    },
    Chain {
        total: "poincare.r1",
        parts: &["poincare.r1.prime", "poincare.r1.double_prime"],
    },
    Chain {
        total: "poincare.r2",
        parts: &[
            "poincare.r2.prime",
            "poincare.r2.double_prime",
            "poincare.r2.triple_prime",
        ],
    },
    Chain {
        total: "poincare.r3",
        parts: &["poincare.r3.prime", "poincare.r3.double_prime"],
    },
    Chain {
        total: "poincare.r4",
        parts: &["poincare.r4.prime", "poincare.r4.double_prime"],
    },
];

/// Catalog names of the homogeneous (`C(r) = 0`) r-matrices.
pub const HOMOGENEOUS: [&str; 7] = [
    "lorentz.r1",
    "lorentz.r2",
    "poincare.r1",
    "poincare.r2",
    "poincare.r3",
    "poincare.r4",
    "poincare.r5",
];

/// Catalog names with `C(r)` nonzero but invariant.
pub const MODIFIED: [&str; 2] = ["lorentz.r3", "lorentz.r4"];

pub const POINCARE_TOTALS: [&str; 5] = [
    "poincare.r1",
    "poincare.r2",
    "poincare.r3",
    "poincare.r4",
    "poincare.r5",
];

pub const SHAPE_NAMES: [&str; 2] = ["lorentz.r1", "poincare.r2.prime"];

/// Jordanian shapes behind the catalog twists:
///
/// * `lorentz.r1`: `x₀ = h, y₀ = e₊`, parameter `α`
/// * `poincare.r2.prime`: `x₀ = h, y₀ = P₊`, pairs `(e₊, P₁), (−e'₊, P₂)`,
///   parameter `β₁` (also the Jordanian part of `poincare.r3.prime`)
pub fn jordanian_shape(name: &str) -> Result<(&'static str, JordanianShape)> {
    match name {
        "lorentz.r1" => {
            let alg = algebras::algebra(LORENTZ_CANONICAL)?;
            Ok((
                LORENTZ_CANONICAL,
                JordanianShape::new(alg.element("h")?, alg.element("e+")?, "alpha"),
            ))
        }
        "poincare.r2.prime" => {
            let alg = algebras::algebra(POINCARE)?;
            let shape = JordanianShape::new(alg.element("h")?, alg.element("P+")?, "beta_1")
                .with_pair(alg.element("e+")?, alg.element("P1")?)
                .with_pair(
                    alg.element("e'+")?.scale_num(-GaussianRational::ONE),
                    alg.element("P2")?,
                );
            Ok((POINCARE, shape))
        }
        _ => Err(Error::UnknownName(name.to_owned())),
    }
}

/// Every parameter of `r` declared with the same reality.
pub fn parameter_symbols(r: &RMatrix, reality: Reality) -> Vec<ParamSymbol> {
    r.parameter_names()
        .iter()
        .map(|n| ParamSymbol::new(n, reality))
        .collect()
}
