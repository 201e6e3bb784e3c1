//! JSON definition files for r-matrices.
//!
//! A file is an array of wedge terms; each term is a number times a
//! parameter monomial times `x ∧ y`, with `x`, `y` linear combinations of
//! generators:
//!
//! ```json
//! [
//!   {"coeff": {"re": "1", "im": "0"}, "params": {"alpha": 1},
//!    "wedge": [[{"gen": "e+", "re": "1"}], [{"gen": "h", "re": "1"}]]}
//! ]
//! ```

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::RMatrix;
use crate::algebra::{parse_number, GenCoeff, LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::scalar::{Param, ParamMono, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff {
    #[serde(default = "zero")]
    pub re: String,
    #[serde(default = "zero")]
    pub im: String,
}

fn zero() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeTerm {
    pub coeff: Coeff,
    #[serde(default)]
    pub params: BTreeMap<String, u16>,
    pub wedge: [Vec<GenCoeff>; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RMatrixFile {
    pub terms: Vec<WedgeTerm>,
}

impl RMatrixFile {
    pub fn parse(text: &str) -> Result<RMatrixFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "r-matrix file, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn build(&self, alg: &Arc<LieAlgebra>) -> Result<RMatrix> {
        let mut terms = Vec::new();
        for (n, t) in self.terms.iter().enumerate() {
            let ctx = format!("terms[{n}]");
            let c = parse_number(&t.coeff.re, &t.coeff.im, &ctx)?;
            let mono = ParamMono::from_pairs(t.params.iter().map(|(p, &e)| (Param::new(p), e)));
            let element = |side: &[GenCoeff]| -> Result<LieElement> {
                let mut e = LieElement::zero();
                for gc in side {
                    let i = alg.index_of(&gc.gen).map_err(|_| {
                        Error::Definition(format!("{ctx}: unknown generator `{}`", gc.gen))
                    })?;
                    e.add_term(i, &Scalar::constant(parse_number(&gc.re, &gc.im, &ctx)?));
                }
                Ok(e)
            };
            terms.push((
                Scalar::term(mono, c),
                element(&t.wedge[0])?,
                element(&t.wedge[1])?,
            ));
        }
        RMatrix::from_wedges(alg, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog;

    #[test]
    fn parse_errors_carry_context() {
        let alg = catalog::algebra("lorentz_canonical").unwrap();
        let text = r#"[{"coeff": {"re": "1"}, "params": {"alpha": 1},
                       "wedge": [[{"gen": "e+", "re": "1"}], [{"gen": "zz", "re": "1"}]]}]"#;
        let err = RMatrixFile::parse(text).unwrap().build(&alg).unwrap_err();
        assert!(
            matches!(err, Error::Definition(ref m) if m.contains("terms[0]") && m.contains("zz"))
        );
        assert!(
            matches!(RMatrixFile::parse("[{]"), Err(Error::Parse(ref m)) if m.contains("line 1"))
        );
    }
}
