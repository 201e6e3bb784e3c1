//! The `*`-involution on the quantum generators and its compatibility with
//! the Hopf structure under the direct and flipped liftings.

use super::algebra::{QMonomial, QTensor};
use super::hopf::{QGen, QHopf, Variant};
use super::scalar::{Exps, QScalar, QVar, NVARS};
use crate::algebra::Lifting;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Reality};

/// Image `q_b* = q_{b'}^{s}` of a base, fixed by the parameter reality.
///
/// `z₋ = z₊*` for real `α, β` gives `q_{z+}* = q_{z−}`; `z₋ = −z₊*` for
/// imaginary ones gives `q_{z+}* = q_{z−}⁻¹`. `ξ = ια` is imaginary when
/// `α` is real. `q_γ` is taken to be a phase for real parameters, the choice
/// under which `q_γ^{H₁∧H₂}` is unitary.
pub fn base_star(reality: Reality, b: QVar) -> Result<(QVar, i32)> {
    use QVar::*;
    Ok(match (reality, b) {
        (Reality::Free, _) => return Err(Error::UndeclaredReality("alpha, beta, gamma".into())),
        (_, Lambda) => (Lambda, 1),
        (Reality::Real, ZPlus) => (ZMinus, 1),
        (Reality::Real, ZMinus) => (ZPlus, 1),
        (Reality::Real, Gamma) => (Gamma, -1),
        (Reality::Real, Xi) => (Xi, -1),
        (Reality::Imaginary, ZPlus) => (ZMinus, -1),
        (Reality::Imaginary, ZMinus) => (ZPlus, -1),
        (Reality::Imaginary, Gamma) => (Gamma, 1),
        (Reality::Imaginary, Xi) => (Xi, 1),
    })
}

/// Antilinear action on scalars.
pub fn star_scalar(s: &QScalar, reality: Reality) -> Result<QScalar> {
    let mut table = [([0; NVARS], GaussianRational::ONE); NVARS];
    for v in QVar::ALL {
        let (w, e) = base_star(reality, v)?;
        let mut ex: Exps = [0; NVARS];
        ex[w.index()] = e;
        table[v.index()].0 = ex;
    }
    if reality == Reality::Imaginary {
        table[QVar::Lambda.index()].1 = -GaussianRational::ONE;
    }
    Ok(s.substitute(&table, &|c| c.conj()))
}

/// Which images the group-likes get.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupLikeStar {
    /// `(q_b^{H_k})* = (q_b*)^{H_k*}` with `H_k* = −H_{k'}`, the classical
    /// star carried through the bases.
    Transported,
    /// `(q_b^{±H_k})* = q_b^{∓H_k}` as printed.
    Printed,
}

#[derive(Clone, Copy, Debug)]
pub struct Star {
    pub reality: Reality,
    pub group_likes: GroupLikeStar,
}

impl Star {
    pub fn new(reality: Reality) -> Star {
        Star {
            reality,
            group_likes: GroupLikeStar::Transported,
        }
    }

    fn group_like(&self, copy: usize, cartan: &[i32; 4]) -> Result<QMonomial> {
        let mut m = QMonomial::one();
        match self.group_likes {
            GroupLikeStar::Transported => {
                let other = 1 - copy;
                for b in QVar::BASES {
                    let (w, s) = base_star(self.reality, b)?;
                    m.0[other].cartan[w.index()] -= s * cartan[b.index()];
                }
            }
            GroupLikeStar::Printed => {
                m.0[copy].cartan = cartan.map(|v| -v);
            }
        }
        Ok(m)
    }

    pub fn generator(&self, g: &QGen) -> Result<QTensor> {
        match *g {
            // E_{1±}* = −E_{2±}, E_{2±}* = −E_{1±}
            QGen::E { copy, raising } => Ok(QGen::e(1 - copy, raising).element().neg()),
            QGen::GroupLike { copy, base, power } => {
                let mut c = [0; 4];
                c[base.index()] = power;
                Ok(QTensor::mono(self.group_like(copy, &c)?))
            }
        }
    }

    /// Antilinear anti-automorphism on one-leg elements.
    pub fn element(&self, h: &QHopf, x: &QTensor) -> Result<QTensor> {
        let alg = h.algebra();
        let mut out = QTensor::zero(1);
        for (k, c) in x.terms() {
            let m = k[0];
            let mut acc = QTensor::scalar(1, star_scalar(c, self.reality)?);
            for copy in (0..2).rev() {
                let part = m.0[copy];
                let up = self.generator(&QGen::e(copy, true))?;
                for _ in 0..part.upper {
                    acc = alg.mul(&acc, &up)?;
                }
                if part.cartan != [0; 4] {
                    acc = alg.mul(&acc, &QTensor::mono(self.group_like(copy, &part.cartan)?))?;
                }
                let down = self.generator(&QGen::e(copy, false))?;
                for _ in 0..part.lower {
                    acc = alg.mul(&acc, &down)?;
                }
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Star on a tensor under a lifting: leg-wise, then reversed for flipped.
    pub fn tensor(&self, h: &QHopf, x: &QTensor, lifting: Lifting) -> Result<QTensor> {
        let legs = x.legs();
        let mut out = QTensor::zero(legs);
        for (k, c) in x.terms() {
            let mut acc = QTensor::scalar(0, star_scalar(c, self.reality)?);
            let order: Vec<usize> = match lifting {
                Lifting::Direct => (0..legs).collect(),
                Lifting::Flipped => (0..legs).rev().collect(),
            };
            for i in order {
                acc = acc.outer(&self.element(h, &QTensor::mono(k[i]))?);
            }
            out = out.add(&acc);
        }
        Ok(out)
    }
}

/// Outcome of [`star_check`]; every count is a number of residual terms.
#[derive(Clone, Debug)]
pub struct StarReport {
    pub variant: Variant,
    pub lifting: Lifting,
    pub reality: Reality,
    /// `a** = a` on generators.
    pub involutive: usize,
    /// Star of every defining relation, read as an anti-homomorphism.
    pub relations: usize,
    /// `Δ(a*) − (Δ(a))*` under the lifting.
    pub coproduct: usize,
    /// `S((S(a*))*) − a`.
    pub antipode: usize,
    /// `S(a*) − (S(a))*`, reported for comparison.
    pub antipode_commutes: usize,
}

impl StarReport {
    /// The stated consistency conditions: Δ-compatibility and
    /// `S((S(a*))*) = a`, on a well-defined involution.
    pub fn passed(&self) -> bool {
        self.involutive == 0 && self.relations == 0 && self.coproduct == 0 && self.antipode == 0
    }

    pub fn residual_terms(&self) -> usize {
        self.involutive + self.relations + self.coproduct + self.antipode
    }
}

pub fn star_check(h: &QHopf, lifting: Lifting, reality: Reality) -> Result<StarReport> {
    star_check_with(h, lifting, Star::new(reality))
}

pub fn star_check_with(h: &QHopf, lifting: Lifting, star: Star) -> Result<StarReport> {
    let mut report = StarReport {
        variant: h.variant(),
        lifting,
        reality: star.reality,
        involutive: 0,
        relations: 0,
        coproduct: 0,
        antipode: 0,
        antipode_commutes: 0,
    };
    for rel in h.relations() {
        let img = rel.evaluate(
            h.algebra(),
            1,
            &mut |g| star.generator(g),
            &|c| star_scalar(c, star.reality),
            true,
        )?;
        report.relations += img.len();
    }
    for g in h.generators() {
        let a = g.element();
        let a_star = star.element(h, &a)?;
        report.involutive += star.element(h, &a_star)?.sub(&a).len();

        let lhs = h.coproduct(&a_star, 0)?;
        let rhs = star.tensor(h, &h.coproduct_gen(&g), lifting)?;
        report.coproduct += lhs.sub(&rhs).len();

        let s_a_star = h.antipode(&a_star, 0)?;
        let round = h.antipode(&star.element(h, &s_a_star)?, 0)?;
        report.antipode += round.sub(&a).len();

        let s_then_star = star.element(h, &h.antipode(&a, 0)?)?;
        report.antipode_commutes += s_a_star.sub(&s_then_star).len();
    }
    Ok(report)
}
