use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::basis::BasisMap;
use super::lie::{LieAlgebra, LieElement};
use crate::enveloping::{Key, Mono, Tensor};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Param, ParamSymbol, Reality, Scalar};

/// How a `*`-operation on the algebra extends to tensor products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lifting {
    /// `(x ⊗ y)* = x* ⊗ y*`
    Direct,
    /// `(x ⊗ y)* = y* ⊗ x*`
    Flipped,
}

impl Lifting {
    /// Parameter reality under which catalog r-matrices are anti-Hermitian:
    /// imaginary for the direct lifting, real for the flipped one.
    pub fn natural_reality(self) -> Reality {
        match self {
            Lifting::Direct => Reality::Imaginary,
            Lifting::Flipped => Reality::Real,
        }
    }
}

impl fmt::Display for Lifting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Lifting::Direct => "direct",
            Lifting::Flipped => "flipped",
        })
    }
}

impl FromStr for Lifting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(Lifting::Direct),
            "flipped" => Ok(Lifting::Flipped),
            _ => Err(Error::Config(format!(
                "unknown lifting `{s}` (direct|flipped)"
            ))),
        }
    }
}

/// Antilinear antiautomorphism of `U(g)` fixed by its values on the
/// generators, together with its lifting to tensor powers.
#[derive(Clone, Debug, PartialEq)]
pub struct InvolutionSpec {
    images: Vec<LieElement>,
    lifting: Lifting,
}

impl InvolutionSpec {
    pub fn new(images: Vec<LieElement>) -> InvolutionSpec {
        InvolutionSpec {
            images,
            lifting: Lifting::Direct,
        }
    }

    pub fn with_lifting(mut self, lifting: Lifting) -> InvolutionSpec {
        self.lifting = lifting;
        self
    }

    pub fn images(&self) -> &[LieElement] {
        &self.images
    }

    pub fn lifting(&self) -> Lifting {
        self.lifting
    }

    /// `x*` for a parameter-free Lie element.
    pub fn apply_lie(&self, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, c) in x.coeffs() {
            let c = Scalar::constant(c.constant_term().conj());
            out = out.add(&self.images[i].scale(&c));
        }
        out
    }

    /// Generators `x` with `x** != x`.
    pub fn involutivity_defects(&self, alg: &LieAlgebra) -> Vec<String> {
        (0..self.images.len())
            .filter(|&i| {
                let g = LieElement::generator(i);
                self.apply_lie(&self.apply_lie(&g)) != g
            })
            .map(|i| alg.generator_name(i).to_owned())
            .collect()
    }

    /// Moves the involution along a change of basis: the result acts on the
    /// target of `map` and agrees with `self` on the source.
    pub fn transport(&self, map: &BasisMap) -> Result<InvolutionSpec> {
        let back = map.inverse()?;
        let images = back
            .images()
            .iter()
            .map(|x| map.apply(&self.apply_lie(x)))
            .collect();
        Ok(InvolutionSpec {
            images,
            lifting: self.lifting,
        })
    }

    fn check(&self, alg: &LieAlgebra) -> Result<()> {
        if self.images.len() != alg.dim() {
            return Err(Error::Definition(format!(
                "involution has {} images for {} generators",
                self.images.len(),
                alg.dim()
            )));
        }
        if let Some(x) = self.images.iter().find(|x| !x.is_parameter_free()) {
            return Err(Error::Definition(format!(
                "involution image {} depends on parameters",
                alg.render(x)
            )));
        }
        Ok(())
    }
}

/// Conjugates parameters according to `params`; anything undeclared or
/// declared `free` is an error.
fn reality_of(params: &[ParamSymbol]) -> impl Fn(Param) -> Reality + '_ {
    move |p: Param| {
        params
            .iter()
            .find(|s| s.name == p.name())
            .map_or(Reality::Free, |s| s.reality)
    }
}

/// `T*`: antilinear, reverses the factors inside each leg, and reverses the
/// leg order iff the lifting is flipped.
pub fn involution_apply(
    spec: &InvolutionSpec,
    t: &Tensor,
    params: &[ParamSymbol],
) -> Result<Tensor> {
    let alg: &Arc<LieAlgebra> = t.algebra();
    spec.check(alg)?;
    let reality = reality_of(params);
    let mut out = t.map_coeffs(&|c: &Scalar| c.conj(&reality))?;
    let images: Vec<Tensor> = spec
        .images
        .iter()
        .map(|x| Tensor::from_lie(alg, x))
        .collect();
    let memo: std::sync::Mutex<HashMap<Mono, Vec<(Key, GaussianRational)>>> = Default::default();
    let star_mono = |m: &Mono| -> Vec<(Key, GaussianRational)> {
        if let Some(hit) = memo.lock().unwrap().get(m) {
            return hit.clone();
        }
        let mut acc = Tensor::one(alg, 1);
        for i in (0..m.len()).rev() {
            for _ in 0..m[i] {
                acc = acc.mul(&images[i], None);
            }
        }
        let v: Vec<(Key, GaussianRational)> = acc
            .terms()
            .map(|(k, c)| (k.clone(), c.constant_term()))
            .collect();
        memo.lock().unwrap().insert(m.clone(), v.clone());
        v
    };
    for l in 0..out.legs() {
        out = out.map_leg(l, 1, None, &star_mono);
    }
    if spec.lifting == Lifting::Flipped && out.legs() > 1 {
        let perm: SmallVec<[usize; 4]> = (0..out.legs()).rev().collect();
        out = out.permute_legs(&perm);
    }
    Ok(out)
}
