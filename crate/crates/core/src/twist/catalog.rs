//! The bundled twists, written out literally from their defining
//! expressions, and the same twists assembled from the generic
//! constructors for cross-checking.

use std::sync::Arc;

use super::{abelian_twist, compose, exp_twist, jordanian_sigma, jordanian_twist, Twist};
use crate::algebra::catalog::{self as algebras, LORENTZ_CANONICAL, POINCARE};
use crate::algebra::LieAlgebra;
use crate::enveloping::{
    analytic_apply, coproduct, exp, series_inverse, wedge, AnalyticFn, Tensor,
};
use crate::error::{Error, Result};
use crate::rmatrix::catalog as rcat;
use crate::rmatrix::RMatrix;
use crate::scalar::{GaussianRational, Param, ParamMono, Scalar};

/// Convention switches for the catalog expressions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Conventions {
    /// Write the exponentials of wedges in the Poincaré twists as
    /// `exp(½ x∧y)` (the Abelian-twist normalization) instead of the
    /// literal `exp(x∧y)`.
    pub abelian_half_factor: bool,
    /// `exp(2h⊗σ)` for the Lorentz Jordanian twist, as in the general
    /// Jordanian form, instead of the literal `exp(h⊗σ)`.
    pub jordanian_double_cartan: bool,
    /// `exp(P+∧(α1P1 + α2P2))` for the momentum factor of the Poincaré `r4`
    /// twist instead of the literal `exp(P+⊗(α1P1 + α2P2))`.
    pub momentum_wedge: bool,
}

impl Conventions {
    pub const FLAGS: [&'static str; 3] = [
        "abelian_half_factor",
        "jordanian_double_cartan",
        "momentum_wedge",
    ];

    /// Sets a flag by name from `on`/`off`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = match value {
            "on" => true,
            "off" => false,
            _ => {
                return Err(Error::Config(format!(
                    "flag `{key}` takes on|off, got `{value}`"
                )))
            }
        };
        match key {
            "abelian_half_factor" => self.abelian_half_factor = v,
            "jordanian_double_cartan" => self.jordanian_double_cartan = v,
            "momentum_wedge" => self.momentum_wedge = v,
            _ => {
                return Err(Error::Config(format!(
                    "unknown flag `{key}`; known: {}",
                    Self::FLAGS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// `(name, on)` for every flag, in a fixed order.
    pub fn pairs(&self) -> [(&'static str, bool); 3] {
        [
            ("abelian_half_factor", self.abelian_half_factor),
            ("jordanian_double_cartan", self.jordanian_double_cartan),
            ("momentum_wedge", self.momentum_wedge),
        ]
    }
}

pub struct TwistEntry {
    pub name: &'static str,
    pub algebra: &'static str,
    pub formula: &'static str,
    /// Catalog r-matrix the twist quantizes.
    pub rmatrix: &'static str,
}

pub static TWISTS: &[TwistEntry] = &[
    TwistEntry {
        name: "lorentz.F_r1",
        algebra: LORENTZ_CANONICAL,
        formula: "exp(h⊗σ), σ = ½ln(1 + αe+)",
        rmatrix: "lorentz.r1",
    },
    TwistEntry {
        name: "lorentz.F_r1_ohn",
        algebra: LORENTZ_CANONICAL,
        formula: "exp(½Δh − ½(h·sinh(αe+)/(αe+) ⊗ e^{−αe+} + e^{αe+} ⊗ h·sinh(αe+)/(αe+))·αΔe+/sinh(αΔe+))",
        rmatrix: "lorentz.r1",
    },
    TwistEntry {
        name: "lorentz.F_r2",
        algebra: LORENTZ_CANONICAL,
        formula: "exp((ιβ/α²)σ∧φ) exp(h⊗σ − h'⊗φ)",
        rmatrix: "lorentz.r2",
    },
    TwistEntry {
        name: "poincare.F_r1",
        algebra: POINCARE,
        formula: "exp(γh'∧h) exp(α(P+∧P− − P1∧P2))",
        rmatrix: "poincare.r1",
    },
    TwistEntry {
        name: "poincare.F_r2",
        algebra: POINCARE,
        formula: "exp(β2 h'∧σ+) exp(γe'+∧e+) exp(β1(e+⊗P1 − e'+⊗P2)) exp(2h⊗σ+)",
        rmatrix: "poincare.r2",
    },
    TwistEntry {
        name: "poincare.F_r3",
        algebra: POINCARE,
        formula: "exp(γe'+∧e+) exp(β1(e+⊗P1 − e'+⊗P2)) exp(αP1∧σ+) exp(2h⊗σ+)",
        rmatrix: "poincare.r3",
    },
    TwistEntry {
        name: "poincare.F_r4",
        algebra: POINCARE,
        formula: "exp(γ(e'+ − P1)∧(e+ + P2)) exp(P+⊗(α1P1 + α2P2))",
        rmatrix: "poincare.r4",
    },
];

pub fn entry(name: &str) -> Result<&'static TwistEntry> {
    TWISTS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_owned()))
}

struct Builder {
    alg: Arc<LieAlgebra>,
    order: u32,
    conv: Conventions,
}

impl Builder {
    fn new(alg: &Arc<LieAlgebra>, order: u32, conv: Conventions) -> Builder {
        Builder {
            alg: alg.clone(),
            order,
            conv,
        }
    }

    fn n(&self) -> Option<u32> {
        Some(self.order)
    }

    fn g(&self, name: &str) -> Tensor {
        Tensor::named(&self.alg, name).expect("catalog generator")
    }

    fn p(&self, name: &str) -> Scalar {
        Scalar::param(name)
    }

    fn exp(&self, t: &Tensor) -> Result<Tensor> {
        exp(t, self.order)
    }

    /// `exp(x∧y)`, or `exp(½ x∧y)` under the half-factor convention.
    fn exp_wedge(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let mut w = wedge(x, y)?.truncate(self.n());
        if self.conv.abelian_half_factor {
            w = w.scale_num(GaussianRational::ratio(1, 2));
        }
        self.exp(&w)
    }

    /// `½ ln(1 + c·x)`.
    fn half_log(&self, x: &Tensor, c: &Scalar, order: u32) -> Result<Tensor> {
        Ok(
            analytic_apply(AnalyticFn::Log1p, &x.scale(c, Some(order)), order)?
                .scale_num(GaussianRational::ratio(1, 2)),
        )
    }

    fn product(&self, factors: &[Tensor]) -> Tensor {
        let mut acc = Tensor::one(&self.alg, 2);
        for f in factors {
            acc = acc.mul(f, self.n());
        }
        acc
    }

    fn lorentz_f_r1(&self) -> Result<Tensor> {
        let sigma = self.half_log(&self.g("e+"), &self.p("alpha"), self.order)?;
        let mut t = self.g("h").outer(&sigma, self.n());
        if self.conv.jordanian_double_cartan {
            t = t.scale_num(GaussianRational::from_int(2));
        }
        self.exp(&t)
    }

    fn lorentz_f_r2(&self) -> Result<Tensor> {
        // the prefactor ιβ/α² lowers the degree by one, so σ∧φ is needed
        // one order further out
        let hi = self.order + 1;
        let a = self.p("alpha");
        let (e, e2) = (self.g("e+"), self.g("e'+"));
        let one = Tensor::one(&self.alg, 1);
        let ae = e.scale(&a, None);
        let ae2 = e2.scale(&a, None);
        // (1 + αe+)² + (αe'+)² − 1
        let opening = one.add(&ae);
        let quad = opening
            .mul(&opening, Some(hi))
            .add(&ae2.mul(&ae2, Some(hi)))
            .sub(&one);
        let sigma =
            analytic_apply(AnalyticFn::Log1p, &quad, hi)?.scale_num(GaussianRational::ratio(1, 2));
        let ratio = ae2.mul(&series_inverse(&opening, hi)?, Some(hi));
        let phi = analytic_apply(AnalyticFn::Arctan, &ratio, hi)?;
        let sw = wedge(&sigma, &phi)?
            .truncate(Some(hi))
            .scale(&Scalar::i().mul_trunc(&self.p("beta"), None), None);
        let alpha2 = ParamMono::pow(Param::new("alpha"), 2);
        let prefactor = sw
            .map_coeffs(&|c: &Scalar| c.div_mono(&alpha2))?
            .truncate(self.n());
        let sigma = sigma.truncate(self.n());
        let phi = phi.truncate(self.n());
        let inner = self
            .g("h")
            .outer(&sigma, self.n())
            .sub(&self.g("h'").outer(&phi, self.n()));
        Ok(self.product(&[self.exp(&prefactor)?, self.exp(&inner)?]))
    }

    fn lorentz_f_r1_ohn(&self) -> Result<Tensor> {
        let n = self.n();
        let a = self.p("alpha");
        let h = self.g("h");
        let ae = self.g("e+").scale(&a, None);
        let dh = coproduct(&h)?;
        let sinc = analytic_apply(AnalyticFn::SinhXOverX, &ae, self.order)?;
        let h_sinc = h.mul(&sinc, n);
        let e_pos = self.exp(&ae)?;
        let e_neg = self.exp(&ae.neg())?;
        let mixed = h_sinc.outer(&e_neg, n).add(&e_pos.outer(&h_sinc, n));
        let ade = coproduct(&ae)?;
        let damp = analytic_apply(AnalyticFn::XOverSinhX, &ade, self.order)?;
        let half = GaussianRational::ratio(1, 2);
        let exponent = dh.scale_num(half).sub(&mixed.mul(&damp, n).scale_num(half));
        self.exp(&exponent)
    }

    fn sigma_plus(&self) -> Result<Tensor> {
        self.half_log(&self.g("P+"), &self.p("beta_1"), self.order)
    }

    /// `exp(β₁(e+⊗P1 − e'+⊗P2))` and `exp(2h⊗σ+)`.
    fn poincare_jordanian(&self) -> Result<(Tensor, Tensor)> {
        let n = self.n();
        let pairs = self
            .g("e+")
            .outer(&self.g("P1"), n)
            .sub(&self.g("e'+").outer(&self.g("P2"), n))
            .scale(&self.p("beta_1"), n);
        let cartan = self
            .g("h")
            .outer(&self.sigma_plus()?, n)
            .scale_num(GaussianRational::from_int(2));
        Ok((self.exp(&pairs)?, self.exp(&cartan)?))
    }

    fn poincare_f_r1(&self) -> Result<Tensor> {
        let n = self.n();
        let gamma = self.exp_wedge(&self.g("h'").scale(&self.p("gamma"), n), &self.g("h"))?;
        let a = self.p("alpha");
        let mut w = wedge(&self.g("P+"), &self.g("P-"))?
            .sub(&wedge(&self.g("P1"), &self.g("P2"))?)
            .scale(&a, n);
        if self.conv.abelian_half_factor {
            w = w.scale_num(GaussianRational::ratio(1, 2));
        }
        Ok(self.product(&[gamma, self.exp(&w)?]))
    }

    fn poincare_f_r2(&self) -> Result<Tensor> {
        let n = self.n();
        let (pairs, cartan) = self.poincare_jordanian()?;
        let f3 = self.exp_wedge(
            &self.g("h'").scale(&self.p("beta_2"), n),
            &self.sigma_plus()?,
        )?;
        let f2 = self.exp_wedge(&self.g("e'+").scale(&self.p("gamma"), n), &self.g("e+"))?;
        Ok(self.product(&[f3, f2, pairs, cartan]))
    }

    fn poincare_f_r3(&self) -> Result<Tensor> {
        let n = self.n();
        let (pairs, cartan) = self.poincare_jordanian()?;
        let mid = self.exp_wedge(
            &self.g("P1").scale(&self.p("alpha"), n),
            &self.sigma_plus()?,
        )?;
        let f2 = self.exp_wedge(&self.g("e'+").scale(&self.p("gamma"), n), &self.g("e+"))?;
        Ok(self.product(&[f2, pairs, mid, cartan]))
    }

    fn poincare_f_r4(&self) -> Result<Tensor> {
        let n = self.n();
        let q = self
            .g("P1")
            .scale(&self.p("alpha_1"), n)
            .add(&self.g("P2").scale(&self.p("alpha_2"), n));
        let f1 = if self.conv.momentum_wedge {
            self.exp_wedge(&self.g("P+"), &q)?
        } else {
            self.exp(&self.g("P+").outer(&q, n))?
        };
        let x = self.g("e'+").sub(&self.g("P1")).scale(&self.p("gamma"), n);
        let y = self.g("e+").add(&self.g("P2"));
        let f2 = self.exp_wedge(&x, &y)?;
        Ok(self.product(&[f2, f1]))
    }
}

/// The catalog twist `name` written out literally, truncated at `order`.
pub fn catalog_twist(name: &str, order: u32, conv: Conventions) -> Result<Twist> {
    let e = entry(name)?;
    catalog_twist_in(
        name,
        &algebras::algebra(e.algebra)?,
        rcat::rmatrix(e.rmatrix)?,
        order,
        conv,
    )
}

/// [`catalog_twist`] over a given copy of its algebra (for instance a
/// corrupted one), attached to `source` as its classical r-matrix.
pub fn catalog_twist_in(
    name: &str,
    alg: &Arc<LieAlgebra>,
    source: RMatrix,
    order: u32,
    conv: Conventions,
) -> Result<Twist> {
    entry(name)?;
    let b = Builder::new(alg, order, conv);
    let body = match name {
        "lorentz.F_r1" => b.lorentz_f_r1()?,
        "lorentz.F_r1_ohn" => b.lorentz_f_r1_ohn()?,
        "lorentz.F_r2" => b.lorentz_f_r2()?,
        "poincare.F_r1" => b.poincare_f_r1()?,
        "poincare.F_r2" => b.poincare_f_r2()?,
        "poincare.F_r3" => b.poincare_f_r3()?,
        "poincare.F_r4" => b.poincare_f_r4()?,
        _ => unreachable!("entry exists"),
    };
    Ok(Twist::new(body, order)?.with_source(source))
}

/// Abelian factor in the catalog normalization: `exp(r)` literally, or
/// `exp(r/2)` with the half factor.
fn abelian_factor(
    name: &str,
    alg: &Arc<LieAlgebra>,
    order: u32,
    conv: Conventions,
) -> Result<Twist> {
    let r = rcat::entry(name)?.file().build(alg)?;
    let exponent = if conv.abelian_half_factor {
        r.clone()
    } else {
        r.scale(&Scalar::int(2))
    };
    Ok(abelian_twist(&exponent, order)?.with_source(r))
}

/// The Poincaré composite twists rebuilt from `abelian_twist`,
/// `jordanian_twist` and `compose`, for comparison with the literal
/// catalog expressions. `poincare.F_r3` keeps its literal middle factor,
/// which no generic constructor produces.
pub fn generic_twist(name: &str, order: u32, conv: Conventions) -> Result<Twist> {
    generic_twist_in(name, &algebras::algebra(POINCARE)?, order, conv)
}

pub fn generic_twist_in(
    name: &str,
    alg: &Arc<LieAlgebra>,
    order: u32,
    conv: Conventions,
) -> Result<Twist> {
    let (_, shape) = rcat::jordanian_shape("poincare.r2.prime")?;
    let jordanian = || jordanian_twist(&shape, alg, order);
    let sigma = || jordanian_sigma(&shape, alg, order);
    let wedge_factor = |x: Tensor| -> Result<Twist> {
        let w = wedge(&x, &sigma()?)?.truncate(Some(order));
        let w = if conv.abelian_half_factor {
            w.scale_num(GaussianRational::ratio(1, 2))
        } else {
            w
        };
        exp_twist(&w, order)
    };
    match name {
        "poincare.F_r1" => compose(
            &abelian_factor("poincare.r1.double_prime", alg, order, conv)?,
            &abelian_factor("poincare.r1.prime", alg, order, conv)?,
        ),
        "poincare.F_r2" => {
            let h1 = Tensor::named(alg, "h'")?.scale(&Scalar::param("beta_2"), None);
            let f3 = wedge_factor(h1)?;
            let f2 = abelian_factor("poincare.r2.double_prime", alg, order, conv)?;
            compose(&f3, &compose(&f2, &jordanian()?)?)
        }
        "poincare.F_r3" => {
            let b = Builder::new(alg, order, conv);
            let (pairs, cartan) = b.poincare_jordanian()?;
            let p1 = Tensor::named(alg, "P1")?.scale(&Scalar::param("alpha"), None);
            let mid = wedge_factor(p1)?;
            let prime = Twist::new(b.product(&[pairs, mid.body().clone(), cartan]), order)?;
            compose(
                &abelian_factor("poincare.r3.double_prime", alg, order, conv)?,
                &prime,
            )
        }
        "poincare.F_r4" => {
            let q = Tensor::named(alg, "P1")?
                .scale(&Scalar::param("alpha_1"), None)
                .add(&Tensor::named(alg, "P2")?.scale(&Scalar::param("alpha_2"), None));
            let f1 = if conv.momentum_wedge {
                abelian_factor("poincare.r4.prime", alg, order, conv)?
            } else {
                exp_twist(&Tensor::named(alg, "P+")?.outer(&q, None), order)?
            };
            compose(
                &abelian_factor("poincare.r4.double_prime", alg, order, conv)?,
                &f1,
            )
        }
        _ => Err(Error::UnknownName(name.to_owned())),
    }
}
