//! Canonical term listing of tensors, shared by reports and the CLI.
//!
//! Each term is `{legs, param, re, im}`: one monomial string per leg
//! (`"e+^2 h"`, `"1"` for the unit), a parameter monomial (`"alpha^2*beta"`,
//! `"1"` when parameter-free) and the exact coefficient. Terms are sorted by
//! legs, then by parameter string.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::tensor::Tensor;
use crate::algebra::{number_strings, parse_number, LieAlgebra};
use crate::error::{Error, Result};
use crate::scalar::{Param, ParamMono, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TermRecord {
    pub legs: Vec<String>,
    pub param: String,
    pub re: String,
    pub im: String,
}

pub fn to_records(t: &Tensor) -> Vec<TermRecord> {
    let mut out = Vec::new();
    for (k, c) in t.terms() {
        let legs: Vec<String> = (0..t.legs())
            .map(|l| t.render_mono(t.leg_of(k, l)))
            .collect();
        for (m, v) in c.terms() {
            let (re, im) = number_strings(*v);
            out.push(TermRecord {
                legs: legs.clone(),
                param: m.render(),
                re,
                im,
            });
        }
    }
    out.sort();
    out
}

/// Inverse of the monomial rendering: `"e+^2 h"` in the algebra's
/// generator names. Factors may come in any order and are normal-ordered.
fn parse_mono(alg: &Arc<LieAlgebra>, s: &str) -> Result<Tensor> {
    let mut acc = Tensor::one(alg, 1);
    if s.trim() == "1" {
        return Ok(acc);
    }
    for factor in s.split_whitespace() {
        let (name, exp) = match factor.rsplit_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u8>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        let g = Tensor::generator(alg, alg.index_of(name)?);
        for _ in 0..exp {
            acc = acc.mul(&g, None);
        }
    }
    Ok(acc)
}

fn parse_param(s: &str) -> Result<ParamMono> {
    if s.trim() == "1" {
        return Ok(ParamMono::one());
    }
    let mut m = ParamMono::one();
    for factor in s.split('*') {
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => (
                n,
                e.parse::<u16>()
                    .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?,
            ),
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!("empty parameter name in `{s}`")));
        }
        m = m.mul(&ParamMono::pow(Param::new(name), exp));
    }
    Ok(m)
}

pub fn from_records(alg: &Arc<LieAlgebra>, legs: usize, records: &[TermRecord]) -> Result<Tensor> {
    let mut out = Tensor::zero(alg, legs);
    for (n, r) in records.iter().enumerate() {
        if r.legs.len() != legs {
            return Err(Error::LegMismatch(format!(
                "term {n}: {} legs, expected {legs}",
                r.legs.len()
            )));
        }
        let c = parse_number(&r.re, &r.im, &format!("term {n}"))?;
        let s = Scalar::term(parse_param(&r.param)?, c);
        let mut t = Tensor::scalar(alg, 0, s);
        for leg in &r.legs {
            t = t.outer(&parse_mono(alg, leg)?, None);
        }
        out = out.add(&t);
    }
    Ok(out)
}
