//! The individual checks of the bundled suites and of suite files.

use std::sync::Arc;

use super::config::CatalogSuite;
use super::defs::Definitions;
use crate::algebra::catalog::{
    self as algebras, LORENTZ_CANONICAL, LORENTZ_COMPLEX, POINCARE, POINCARE_PHYSICAL,
};
use crate::algebra::{BasisMap, Lifting};
use crate::enveloping::Tensor;
use crate::error::{Error, Result};
use crate::qdeform::{self, CartanTwist, QHopf, QTensor, QVar, Variant};
use crate::rmatrix::{self, catalog as rcat, RMatrix};
use crate::scalar::{GaussianRational, Reality};
use crate::twist::catalog::{self as tcat, Conventions};
use crate::twist::{self, Residual, Twist};

/// What a check computes before it is turned into a report line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub first_failing_order: Option<u32>,
    pub residual_terms: usize,
    /// Size of the objects the check had to build, a proxy for work done.
    pub computed_terms: usize,
}

impl Outcome {
    /// Passes iff every residual vanishes.
    pub fn residual(parts: &[Tensor], computed_terms: usize) -> Outcome {
        let r = Residual {
            parts: parts.to_vec(),
        };
        Outcome {
            passed: r.passed(),
            first_failing_order: r.first_failing_order(),
            residual_terms: r.term_count(),
            computed_terms,
        }
    }

    /// Passes iff `residual_terms` is zero; no grading by order.
    pub fn count(residual_terms: usize, computed_terms: usize) -> Outcome {
        Outcome {
            passed: residual_terms == 0,
            first_failing_order: None,
            residual_terms,
            computed_terms,
        }
    }

    /// A yes/no property; a failure counts as one residual term.
    pub fn holds(ok: bool, computed_terms: usize) -> Outcome {
        Outcome::count(usize::from(!ok), computed_terms)
    }

    fn at_order(mut self, order: u32) -> Outcome {
        if !self.passed {
            self.first_failing_order = Some(order);
        }
        self
    }
}

/// Everything a check may read.
pub struct Ctx<'a> {
    pub defs: &'a Definitions,
    pub order: u32,
    pub lifting: Lifting,
    pub conv: Conventions,
}

type Run = Arc<dyn Fn(&Ctx) -> Result<Outcome> + Send + Sync>;

#[derive(Clone)]
pub struct Check {
    pub name: String,
    pub anchor: String,
    run: Run,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        anchor: impl Into<String>,
        run: impl Fn(&Ctx) -> Result<Outcome> + Send + Sync + 'static,
    ) -> Check {
        Check {
            name: name.into(),
            anchor: anchor.into(),
            run: Arc::new(run),
        }
    }

    pub fn run(&self, ctx: &Ctx) -> Result<Outcome> {
        (self.run)(ctx)
    }
}

/// Abelian catalog r-matrices, each the classical limit of `exp(r/2)`.
pub const ABELIAN: [&str; 9] = [
    "lorentz.r3.complex.double_prime",
    "lorentz.r4.complex.double_prime",
    "poincare.r1.prime",
    "poincare.r1.double_prime",
    "poincare.r2.double_prime",
    "poincare.r2.triple_prime",
    "poincare.r3.double_prime",
    "poincare.r4.prime",
    "poincare.r4.double_prime",
];

/// Expected local r-symmetry of a twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RSymmetry {
    Absent,
    Nonzero,
}

fn short(name: &str) -> &str {
    name.split_once('.').map_or(name, |(_, rest)| rest)
}

fn formula(name: &str) -> String {
    rcat::entry(name)
        .map(|e| e.formula.to_owned())
        .unwrap_or_default()
}

fn jacobi(suite: &str, alg: &'static str) -> Check {
    Check::new(
        format!("{suite}.structure.jacobi.{alg}"),
        format!("[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on {alg}"),
        move |c| {
            let a = c.defs.algebra(alg)?;
            let n = a.dim();
            Ok(Outcome::count(
                a.jacobi_check().len(),
                n * (n - 1) * (n - 2) / 6,
            ))
        },
    )
}

fn cybe_homogeneous(suite: &str, name: &'static str) -> Check {
    Check::new(
        format!("{suite}.cybe.{}", short(name)),
        format!("[[r,r]] = 0 for r = {}", formula(name)),
        move |c| {
            let r = c.defs.rmatrix(name)?;
            Ok(Outcome::residual(&[rmatrix::cybe(&r)], r.body().len()))
        },
    )
}

fn cybe_modified_outcome(r: &RMatrix) -> Outcome {
    let cy = rmatrix::cybe(r);
    if cy.is_zero() {
        return Outcome::holds(false, r.body().len());
    }
    Outcome::residual(
        &rmatrix::invariance_residuals(&cy),
        r.body().len() + cy.len(),
    )
}

fn cybe_modified(suite: &str, name: &'static str) -> Check {
    Check::new(
        format!("{suite}.cybe.{}", short(name)),
        format!("[[r,r]] nonzero and invariant for r = {}", formula(name)),
        move |c| Ok(cybe_modified_outcome(&c.defs.rmatrix(name)?)),
    )
}

fn chain(suite: &str, ch: &'static rcat::Chain) -> Check {
    Check::new(
        format!("{suite}.subordination.{}", short(ch.total)),
        format!(
            "{} = {} with each part subordinated to the next",
            ch.total,
            ch.parts.join(" + ")
        ),
        move |c| {
            let parts = ch
                .parts
                .iter()
                .map(|p| c.defs.rmatrix(p))
                .collect::<Result<Vec<_>>>()?;
            let sum = parts[1..].iter().fold(parts[0].clone(), |a, b| a.add(b));
            let total = c.defs.rmatrix(ch.total)?;
            let sub = parts
                .windows(2)
                .filter(|w| !rmatrix::subordination(&w[0], &w[1]))
                .count();
            let mut o = Outcome::residual(&[sum.body().sub(total.body())], total.body().len());
            o.residual_terms += sub;
            o.passed &= sub == 0;
            Ok(o)
        },
    )
}

fn jordanian(suite: &str, shape: &'static str, zero_weights: bool) -> Check {
    Check::new(
        format!("{suite}.jordanian.{}", short(shape)),
        format!("Jordanian relations of the shape behind {}", formula(shape)),
        move |c| {
            let (alg, s) = c.defs.jordanian_shape(shape)?;
            let report = rmatrix::jordanian_relations_check(&s, &alg)?;
            let mut bad = report.violations.len();
            if zero_weights {
                bad += report
                    .weights
                    .iter()
                    .filter(|w| **w != Some(GaussianRational::ZERO))
                    .count();
            }
            Ok(Outcome::count(bad, s.pairs.len() + 1))
        },
    )
}

fn twist_checks(suite: &str, name: &'static str, rsym: Option<RSymmetry>) -> Vec<Check> {
    let anchor = tcat::entry(name)
        .map(|e| e.formula.to_owned())
        .unwrap_or_default();
    let n = short(name);
    let mut out = vec![
        Check::new(format!("{suite}.cocycle.{n}"), anchor.clone(), move |c| {
            let f = c.defs.twist(name, c.order, c.conv)?;
            Ok(Outcome::residual(
                &twist::cocycle_check(&f).parts,
                f.body().len(),
            ))
        }),
        Check::new(format!("{suite}.counit.{n}"), anchor.clone(), move |c| {
            let f = c.defs.twist(name, c.order, c.conv)?;
            Ok(Outcome::residual(
                &twist::counit_residual(&f).parts,
                f.body().len(),
            ))
        }),
        Check::new(format!("{suite}.hopf.{n}"), anchor.clone(), move |c| {
            let f = c.defs.twist(name, c.order, c.conv)?;
            Ok(hopf_outcome(&f))
        }),
    ];
    if let Some(expect) = rsym {
        out.push(Check::new(
            format!("{suite}.rsymmetry.{n}"),
            anchor,
            move |c| {
                let f = c.defs.twist(name, 1, c.conv)?;
                let r = f
                    .source_r()
                    .cloned()
                    .ok_or_else(|| Error::Precondition(format!("`{name}` names no r-matrix")))?;
                let sym = twist::local_r_symmetry(&f, &r);
                let ok = match expect {
                    RSymmetry::Absent => sym.is_none(),
                    RSymmetry::Nonzero => sym.is_some(),
                };
                Ok(Outcome::holds(ok, f.body().len()).at_order(1))
            },
        ));
    }
    out
}

fn hopf_outcome(f: &Twist) -> Outcome {
    let h = twist::twisted_hopf_residuals(f);
    let parts: Vec<Tensor> = [h.coassociativity, h.counit, h.morphism, h.antipode]
        .into_iter()
        .flat_map(|r| r.parts)
        .collect();
    Outcome::residual(&parts, f.body().len())
}

fn abelian_rsymmetry(suite: &str, name: &'static str) -> Check {
    Check::new(
        format!("{suite}.rsymmetry.abelian.{}", short(name)),
        format!("exp(r/2) = 1⊗1 + ½r + … for r = {}", formula(name)),
        move |c| {
            let r = c.defs.rmatrix(name)?;
            let f = twist::abelian_twist(&r, 1)?;
            let ok = twist::local_r_symmetry(&f, &r) == Some(GaussianRational::ratio(1, 2));
            Ok(Outcome::holds(ok, f.body().len()).at_order(1))
        },
    )
}

fn lorentz() -> Vec<Check> {
    let s = "lorentz";
    let mut out = vec![
        jacobi(s, LORENTZ_CANONICAL),
        jacobi(s, LORENTZ_COMPLEX),
        Check::new(
            "lorentz.structure.complexification",
            "H_k, E_k± built from h, h', e±, e'± close into two commuting sl(2) copies",
            |c| {
                let can = c.defs.algebra(LORENTZ_CANONICAL)?;
                let cx = c.defs.algebra(LORENTZ_COMPLEX)?;
                let images = algebras::complexification_brackets_in(&can, &cx)?;
                let mut bad = 0;
                for ((a, b), v) in &images {
                    if cx.bracket(&cx.element(a)?, &cx.element(b)?)? != *v {
                        bad += 1;
                    }
                }
                Ok(Outcome::count(bad, images.len()))
            },
        ),
        cybe_homogeneous(s, "lorentz.r1"),
        cybe_homogeneous(s, "lorentz.r2"),
        cybe_modified(s, "lorentz.r3"),
        cybe_modified(s, "lorentz.r4"),
        Check::new(
            "lorentz.subordination.reflexive.r1",
            "r ≻ r fails for r = α e+∧h",
            |c| {
                let r = c.defs.rmatrix("lorentz.r1")?;
                Ok(Outcome::holds(
                    !rmatrix::subordination(&r, &r),
                    r.body().len(),
                ))
            },
        ),
        jordanian(s, "lorentz.r1", false),
    ];
    for ch in rcat::CHAINS
        .iter()
        .filter(|c| c.total.starts_with("lorentz"))
    {
        out.push(chain(s, ch));
    }
    for name in ["lorentz.r1", "lorentz.r2", "lorentz.r3", "lorentz.r4"] {
        out.push(Check::new(
            format!("lorentz.antihermitian.{}", short(name)),
            format!("r* = −r for r = {}", formula(name)),
            move |c| {
                let r = c.defs.rmatrix(name)?;
                let alg = rcat::entry(name)?.algebra;
                let star = c.defs.star(alg)?.with_lifting(c.lifting);
                let params = rcat::parameter_symbols(&r, c.lifting.natural_reality());
                Ok(Outcome::holds(
                    rmatrix::antihermitian_check(&r, &star, &params)?,
                    r.body().len(),
                ))
            },
        ));
    }
    out.extend(twist_checks(s, "lorentz.F_r1", Some(RSymmetry::Absent)));
    out.extend(twist_checks(
        s,
        "lorentz.F_r1_ohn",
        Some(RSymmetry::Nonzero),
    ));
    out.extend(twist_checks(s, "lorentz.F_r2", Some(RSymmetry::Absent)));
    for name in ABELIAN.iter().filter(|n| n.starts_with("lorentz")) {
        out.push(abelian_rsymmetry(s, name));
    }
    out
}

fn poincare() -> Vec<Check> {
    let s = "poincare";
    let mut out = vec![
        jacobi(s, POINCARE),
        jacobi(s, POINCARE_PHYSICAL),
        Check::new(
            "poincare.structure.basis_map",
            "the canonical generators satisfy the physical Poincaré brackets",
            |c| {
                let phys = c.defs.algebra(POINCARE_PHYSICAL)?;
                let can = c.defs.algebra(POINCARE)?;
                let images = phys
                    .generators()
                    .iter()
                    .map(|g| can.element(g))
                    .collect::<Result<Vec<_>>>()?;
                let m = BasisMap::new(phys.clone(), can, images)?;
                Ok(Outcome::count(
                    m.homomorphism_defects().len(),
                    phys.dim() * phys.dim(),
                ))
            },
        ),
        jordanian(s, "poincare.r2.prime", true),
    ];
    for name in rcat::POINCARE_TOTALS {
        out.push(cybe_homogeneous(s, name));
        out.push(Check::new(
            format!("poincare.split.{}", short(name)),
            format!(
                "Schouten conditions of the momentum split of {}",
                formula(name)
            ),
            move |c| {
                let r = c.defs.rmatrix(name)?;
                let split = rmatrix::split_poincare(&r)?;
                let mut parts = split.schouten_conditions().to_vec();
                parts.push(split.sum().body().sub(r.body()));
                Ok(Outcome::residual(&parts, r.body().len()))
            },
        ));
    }
    for ch in rcat::CHAINS
        .iter()
        .filter(|c| c.total.starts_with("poincare"))
    {
        out.push(chain(s, ch));
    }
    for e in tcat::TWISTS.iter().filter(|e| e.algebra == POINCARE) {
        let name = e.name;
        out.extend(twist_checks(s, name, None));
        out.push(Check::new(
            format!("poincare.generic.{}", short(name)),
            format!(
                "{} equals its assembly from the generic constructors",
                e.formula
            ),
            move |c| {
                let lit = c.defs.twist(name, c.order, c.conv)?;
                let gen = c.defs.generic_twist(name, c.order, c.conv)?;
                let diff = lit.body().sub(gen.body());
                Ok(Outcome::residual(
                    &[diff],
                    lit.body().len() + gen.body().len(),
                ))
            },
        ));
    }
    for name in ABELIAN.iter().filter(|n| n.starts_with("poincare")) {
        out.push(abelian_rsymmetry(s, name));
    }
    out
}

/// Lowest power of `λ` among the residual coefficients.
fn lambda_order(t: &QTensor) -> Option<u32> {
    let li = QVar::Lambda.index();
    t.terms()
        .flat_map(|(_, c)| c.numerator().terms().map(move |(e, _)| e[li]))
        .min()
        .map(|e| e.max(0) as u32)
}

fn other_reality(r: Reality) -> Reality {
    match r {
        Reality::Real => Reality::Imaginary,
        _ => Reality::Real,
    }
}

fn qdeform_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for v in Variant::ALL {
        out.push(Check::new(
            format!("qdeform.hopf.{v}"),
            v.formula(),
            move |_| {
                let report = qdeform::hopf_axiom_check(&QHopf::new(v))?;
                Ok(Outcome::count(
                    report.residual_terms(),
                    report.outcomes.len(),
                ))
            },
        ));
        out.push(Check::new(
            format!("qdeform.star.{v}"),
            format!("Δ(a*) = Δ(a)* and S(S(a*)*) = a for {}", v.formula()),
            move |c| {
                let h = QHopf::new(v);
                let r = qdeform::star_check(&h, c.lifting, c.lifting.natural_reality())?;
                Ok(Outcome::count(r.residual_terms(), h.generators().len()))
            },
        ));
        out.push(Check::new(
            format!("qdeform.star_mismatch.{v}"),
            format!(
                "the star fails with the other parameter reality for {}",
                v.formula()
            ),
            move |c| {
                let h = QHopf::new(v);
                let r =
                    qdeform::star_check(&h, c.lifting, other_reality(c.lifting.natural_reality()))?;
                Ok(Outcome::holds(!r.passed(), h.generators().len()))
            },
        ));
    }
    out.push(Check::new(
        "qdeform.twist.conjugation",
        "q_γ^{H1∧H2} Δ_{r3'} q_γ^{−H1∧H2} = Δ_{r3}",
        |_| {
            let r3p = QHopf::new(Variant::R3Prime);
            let r3 = QHopf::new(Variant::R3);
            let f = CartanTwist::gamma_wedge();
            let mut bad = 0;
            for g in r3p.generators() {
                let twisted = f.conjugate(r3p.algebra(), &r3p.coproduct_gen(&g))?;
                bad += twisted.sub(&r3.coproduct_gen(&g)).len();
            }
            Ok(Outcome::count(bad, r3p.generators().len()))
        },
    ));
    out.push(Check::new(
        "qdeform.twist.unitarity",
        "(q_γ^{H1∧H2})* = q_γ^{−H1∧H2}",
        |c| {
            let ok =
                CartanTwist::gamma_wedge().is_unitary(c.lifting, c.lifting.natural_reality())?;
            Ok(Outcome::holds(ok, 1))
        },
    ));
    out.push(Check::new(
        "qdeform.twist.identification",
        "r3 at β = 0, γ = α matches r4' under exactly one base identification",
        |_| {
            let ids = qdeform::base_identification_check();
            let hits = ids.iter().filter(|i| i.reconciles).count();
            Ok(Outcome::holds(hits == 1, ids.len()))
        },
    ));
    out.push(Check::new(
        "qdeform.cocycle.F_r4_prime",
        "exp_{q_ξ²}(λ E1+ q_ξ^{H1+H2} ⊗ E2+ q_ξ^{H1+H2})",
        |c| {
            let h = QHopf::new(Variant::R4Prime);
            let f = qdeform::r4_prime_twist(c.order)?;
            let res = qdeform::cocycle_residual(&h, &f, c.order)?;
            Ok(Outcome {
                passed: res.is_zero(),
                first_failing_order: lambda_order(&res),
                residual_terms: res.len(),
                computed_terms: f.len(),
            })
        },
    ));
    out
}

/// The checks of a bundled suite.
pub fn catalog_checks(suite: CatalogSuite) -> Vec<Check> {
    match suite {
        CatalogSuite::Lorentz => lorentz(),
        CatalogSuite::Poincare => poincare(),
        CatalogSuite::Qdeform => qdeform_checks(),
    }
}

/// Checks for the entries of a suite file that are not catalog names.
pub fn user_checks(defs: &Definitions) -> Vec<Check> {
    let mut out = Vec::new();
    for name in defs.user_algebras() {
        let n = name.clone();
        out.push(Check::new(
            format!("file.structure.jacobi.{name}"),
            format!("[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0 on {name}"),
            move |c| {
                let a = c.defs.algebra(&n)?;
                let d = a.dim();
                Ok(Outcome::count(
                    a.jacobi_check().len(),
                    d * d.saturating_sub(1) * d.saturating_sub(2) / 6,
                ))
            },
        ));
    }
    for (name, modified) in defs.user_rmatrices() {
        let n = name.clone();
        let anchor = if modified {
            "[[r,r]] nonzero and invariant"
        } else {
            "[[r,r]] = 0"
        };
        out.push(Check::new(format!("file.cybe.{name}"), anchor, move |c| {
            let r = c.defs.rmatrix(&n)?;
            Ok(if modified {
                cybe_modified_outcome(&r)
            } else {
                Outcome::residual(&[rmatrix::cybe(&r)], r.body().len())
            })
        }));
    }
    for name in defs.user_twists() {
        let (a, b, d) = (name.clone(), name.clone(), name.clone());
        out.push(Check::new(
            format!("file.cocycle.{name}"),
            "user twist",
            move |c| {
                let f = c.defs.twist(&a, c.order, c.conv)?;
                Ok(Outcome::residual(
                    &twist::cocycle_check(&f).parts,
                    f.body().len(),
                ))
            },
        ));
        out.push(Check::new(
            format!("file.counit.{name}"),
            "user twist",
            move |c| {
                let f = c.defs.twist(&b, c.order, c.conv)?;
                Ok(Outcome::residual(
                    &twist::counit_residual(&f).parts,
                    f.body().len(),
                ))
            },
        ));
        out.push(Check::new(
            format!("file.hopf.{name}"),
            "user twist",
            move |c| Ok(hopf_outcome(&c.defs.twist(&d, c.order, c.conv)?)),
        ));
    }
    out
}
