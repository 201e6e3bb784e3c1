//! JSON definition files for Lie algebras.
//!
//! ```json
//! {
//!   "name": "sl2",
//!   "generators": ["e", "h", "f"],
//!   "parameters": [{"name": "alpha", "reality": "real"}],
//!   "brackets": [
//!     {"lhs": "h", "rhs": "e", "result": [{"gen": "e", "re": "1", "im": "0"}]}
//!   ]
//! }
//! ```
//!
//! `aliases` (named linear combinations such as `P0`) and `star` (images of
//! the generators under the *-involution) are optional.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::involution::InvolutionSpec;
use super::lie::{BracketEntry, LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, ParamSymbol, Rational, Scalar};

/// One `{gen, re, im}` entry of a linear combination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenCoeff {
    pub gen: String,
    #[serde(default = "zero_str")]
    pub re: String,
    #[serde(default = "zero_str")]
    pub im: String,
}

fn zero_str() -> String {
    "0".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketDef {
    pub lhs: String,
    pub rhs: String,
    pub result: Vec<GenCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AliasDef {
    pub name: String,
    pub element: Vec<GenCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarDef {
    pub gen: String,
    pub image: Vec<GenCoeff>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub parameters: Vec<ParamSymbol>,
    pub brackets: Vec<BracketDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<AliasDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub star: Vec<StarDef>,
}

pub(crate) fn parse_number(re: &str, im: &str, ctx: &str) -> Result<GaussianRational> {
    let re: Rational = re
        .parse()
        .map_err(|e: Error| Error::Parse(format!("{ctx}: {e}")))?;
    let im: Rational = im
        .parse()
        .map_err(|e: Error| Error::Parse(format!("{ctx}: {e}")))?;
    Ok(GaussianRational::new(re, im))
}

pub(crate) fn number_strings(c: GaussianRational) -> (String, String) {
    (c.re.to_string(), c.im.to_string())
}

fn lookup(index: &BTreeMap<&str, usize>, name: &str, ctx: &str) -> Result<usize> {
    index
        .get(name)
        .copied()
        .ok_or_else(|| Error::Definition(format!("{ctx}: unknown generator `{name}`")))
}

fn combo(
    index: &BTreeMap<&str, usize>,
    terms: &[GenCoeff],
    ctx: &str,
) -> Result<Vec<(usize, GaussianRational)>> {
    terms
        .iter()
        .map(|t| {
            Ok((
                lookup(index, &t.gen, ctx)?,
                parse_number(&t.re, &t.im, ctx)?,
            ))
        })
        .collect()
}

fn element_of(combo: Vec<(usize, GaussianRational)>) -> LieElement {
    let mut e = LieElement::zero();
    for (i, c) in combo {
        e.add_term(i, &Scalar::constant(c));
    }
    e
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "algebra file, line {} column {}: {e}",
                e.line(),
                e.column()
            ))
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra file serializes")
    }

    /// Builds the algebra (and its star structure, when declared).
    pub fn build(&self) -> Result<(Arc<LieAlgebra>, Option<InvolutionSpec>)> {
        let index: BTreeMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), i))
            .collect();
        let mut entries = Vec::new();
        for (n, b) in self.brackets.iter().enumerate() {
            let ctx = format!("brackets[{n}]");
            entries.push(BracketEntry {
                lhs: lookup(&index, &b.lhs, &ctx)?,
                rhs: lookup(&index, &b.rhs, &ctx)?,
                result: combo(&index, &b.result, &ctx)?,
            });
        }
        let alg = LieAlgebra::new(
            &self.name,
            self.generators.clone(),
            entries,
            self.parameters.clone(),
        )?;
        let mut aliases = BTreeMap::new();
        for (n, a) in self.aliases.iter().enumerate() {
            let ctx = format!("aliases[{n}]");
            aliases.insert(a.name.clone(), element_of(combo(&index, &a.element, &ctx)?));
        }
        let alg = alg.with_aliases(aliases)?;
        let star = if self.star.is_empty() {
            None
        } else {
            let mut images = vec![None; self.generators.len()];
            for (n, s) in self.star.iter().enumerate() {
                let ctx = format!("star[{n}]");
                let i = lookup(&index, &s.gen, &ctx)?;
                images[i] = Some(element_of(combo(&index, &s.image, &ctx)?));
            }
            let images = images
                .into_iter()
                .enumerate()
                .map(|(i, im)| {
                    im.ok_or_else(|| {
                        Error::Definition(format!("star image of `{}` missing", self.generators[i]))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Some(InvolutionSpec::new(images))
        };
        Ok((alg, star))
    }

    /// Serializes an algebra (with optional star images) back to file form.
    pub fn from_algebra(alg: &LieAlgebra, star: Option<&InvolutionSpec>) -> AlgebraFile {
        let to_terms = |e: &LieElement| -> Vec<GenCoeff> {
            e.coeffs()
                .map(|(i, c)| {
                    let (re, im) = number_strings(c.constant_term());
                    GenCoeff {
                        gen: alg.generator_name(i).to_owned(),
                        re,
                        im,
                    }
                })
                .collect()
        };
        let brackets = alg
            .nonzero_brackets()
            .into_iter()
            .map(|b| BracketDef {
                lhs: alg.generator_name(b.lhs).to_owned(),
                rhs: alg.generator_name(b.rhs).to_owned(),
                result: b
                    .result
                    .iter()
                    .map(|&(k, c)| {
                        let (re, im) = number_strings(c);
                        GenCoeff {
                            gen: alg.generator_name(k).to_owned(),
                            re,
                            im,
                        }
                    })
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: alg.name().to_owned(),
            generators: alg.generators().to_vec(),
            parameters: alg.parameters().to_vec(),
            brackets,
            aliases: alg
                .aliases()
                .iter()
                .map(|(n, e)| AliasDef {
                    name: n.clone(),
                    element: to_terms(e),
                })
                .collect(),
            star: star
                .map(|s| {
                    s.images()
                        .iter()
                        .enumerate()
                        .map(|(i, e)| StarDef {
                            gen: alg.generator_name(i).to_owned(),
                            image: to_terms(e),
                        })
                        .collect()
                })
                .unwrap_or_default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL2: &str = r#"{
        "name": "sl2",
        "generators": ["e", "h", "f"],
        "brackets": [
            {"lhs": "h", "rhs": "e", "result": [{"gen": "e", "re": "1"}]},
            {"lhs": "h", "rhs": "f", "result": [{"gen": "f", "re": "-1"}]},
            {"lhs": "e", "rhs": "f", "result": [{"gen": "h", "re": "2", "im": "0"}]}
        ]
    }"#;

    #[test]
    fn parse_build_roundtrip() {
        let f = AlgebraFile::parse(SL2).unwrap();
        let (alg, star) = f.build().unwrap();
        assert!(star.is_none());
        assert_eq!(alg.dim(), 3);
        assert!(alg.jacobi_check().is_empty());
        let again = AlgebraFile::from_algebra(&alg, None);
        let (alg2, _) = again.build().unwrap();
        assert_eq!(alg2.nonzero_brackets(), alg.nonzero_brackets());
    }

    #[test]
    fn malformed_files_report_context() {
        let err = AlgebraFile::parse("{ \"name\": 3 }").unwrap_err();
        assert!(matches!(err, Error::Parse(ref m) if m.contains("line")));
        let bad = SL2.replace(
            "\"lhs\": \"h\", \"rhs\": \"f\"",
            "\"lhs\": \"h\", \"rhs\": \"q\"",
        );
        let err = AlgebraFile::parse(&bad).unwrap().build().unwrap_err();
        assert!(matches!(err, Error::Definition(ref m) if m.contains("brackets[1]")));
        let bad = SL2.replace("\"re\": \"-1\"", "\"re\": \"-1/0\"");
        assert!(AlgebraFile::parse(&bad).unwrap().build().is_err());
    }
}
