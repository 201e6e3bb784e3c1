//! Generator-level Hopf structures of the three q-deformed variants and the
//! exact axiom check.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::algebra::{Cartan, QAlgebra, QMonomial, QTensor};
use super::scalar::{QScalar, QVar, NVARS};
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// Which coproduct family: `Δ_{r'₃}`, the `q_γ`-twisted `Δ_{r₃}`, or `Δ_{r'₄}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    R3Prime,
    R3,
    R4Prime,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::R3Prime, Variant::R3, Variant::R4Prime];

    pub fn name(self) -> &'static str {
        match self {
            Variant::R3Prime => "r3_prime",
            Variant::R3 => "r3",
            Variant::R4Prime => "r4_prime",
        }
    }

    pub fn algebra(self) -> QAlgebra {
        match self {
            Variant::R3Prime | Variant::R3 => QAlgebra {
                relation_base: [QVar::ZPlus, QVar::ZMinus],
            },
            Variant::R4Prime => QAlgebra {
                relation_base: [QVar::Xi, QVar::Xi],
            },
        }
    }

    /// Bases whose group-likes `q_b^{±H_k}` are generators.
    pub fn bases(self) -> &'static [QVar] {
        match self {
            Variant::R3Prime => &[QVar::ZPlus, QVar::ZMinus],
            Variant::R3 => &[QVar::ZPlus, QVar::ZMinus, QVar::Gamma],
            Variant::R4Prime => &[QVar::Xi],
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            Variant::R3Prime => "Δ(E1±) = E1± ⊗ q_z+^H1 + q_z+^-H1 ⊗ E1±",
            Variant::R3 => "Δ(E1+) = E1+ ⊗ q_z+^H1 q_γ^H2 + q_z+^-H1 q_γ^-H2 ⊗ E1+",
            Variant::R4Prime => "Δ(E1+) = E1+ ⊗ q_ξ^(H1+H2) + q_ξ^(-H1-H2) ⊗ E1+",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_owned()))
    }
}

/// A quantum generator: `E_{k±}` or a group-like `q_b^{power·H_k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QGen {
    E { copy: usize, raising: bool },
    GroupLike { copy: usize, base: QVar, power: i32 },
}

impl QGen {
    pub fn e(copy: usize, raising: bool) -> QGen {
        QGen::E { copy, raising }
    }

    pub fn monomial(&self) -> QMonomial {
        match *self {
            QGen::E {
                copy,
                raising: true,
            } => QMonomial::e_plus(copy),
            QGen::E {
                copy,
                raising: false,
            } => QMonomial::e_minus(copy),
            QGen::GroupLike { copy, base, power } => QMonomial::group_like(copy, base, power),
        }
    }

    pub fn element(&self) -> QTensor {
        QTensor::mono(self.monomial())
    }

    pub fn name(&self) -> String {
        match *self {
            QGen::E { copy, raising } => {
                format!("E{}{}", copy + 1, if raising { '+' } else { '-' })
            }
            QGen::GroupLike { copy, base, power } => match power {
                1 => format!("{}^H{}", base.symbol(), copy + 1),
                -1 => format!("{}^-H{}", base.symbol(), copy + 1),
                p => format!("{}^({p}H{})", base.symbol(), copy + 1),
            },
        }
    }
}

const E_GENS: [QGen; 4] = [
    QGen::E {
        copy: 0,
        raising: true,
    },
    QGen::E {
        copy: 0,
        raising: false,
    },
    QGen::E {
        copy: 1,
        raising: true,
    },
    QGen::E {
        copy: 1,
        raising: false,
    },
];

fn cartan_pair(entries: &[(usize, QVar, i32)]) -> [Cartan; 2] {
    let mut c = [[0; 4]; 2];
    for &(copy, base, p) in entries {
        c[copy][base.index()] += p;
    }
    c
}

fn neg_pair(c: [Cartan; 2]) -> [Cartan; 2] {
    c.map(|x| x.map(|v| -v))
}

/// Right group-like factor `G` in `Δ(E) = E ⊗ G + G⁻¹ ⊗ E`.
fn coproduct_factor(variant: Variant, copy: usize, raising: bool) -> [Cartan; 2] {
    use QVar::*;
    match (variant, copy, raising) {
        (Variant::R3Prime, 0, _) => cartan_pair(&[(0, ZPlus, 1)]),
        (Variant::R3Prime, _, _) => cartan_pair(&[(1, ZMinus, 1)]),
        (Variant::R3, 0, true) => cartan_pair(&[(0, ZPlus, 1), (1, Gamma, 1)]),
        (Variant::R3, 0, false) => cartan_pair(&[(0, ZPlus, 1), (1, Gamma, -1)]),
        (Variant::R3, _, true) => cartan_pair(&[(1, ZMinus, 1), (0, Gamma, -1)]),
        (Variant::R3, _, false) => cartan_pair(&[(1, ZMinus, 1), (0, Gamma, 1)]),
        (Variant::R4Prime, 0, true) => cartan_pair(&[(0, Xi, 1), (1, Xi, 1)]),
        (Variant::R4Prime, 0, false) => cartan_pair(&[(0, Xi, 1), (1, Xi, -1)]),
        (Variant::R4Prime, _, true) => cartan_pair(&[(0, Xi, -1), (1, Xi, -1)]),
        (Variant::R4Prime, _, false) => cartan_pair(&[(0, Xi, 1), (1, Xi, -1)]),
    }
}

/// `s` in `S(E) = −s·E`. The r'₄ images follow from the r₃ ones under the
/// base identification `q_{z+} → q_ξ, q_{z−} → q_ξ⁻¹`.
fn antipode_factor(variant: Variant, copy: usize, raising: bool) -> QScalar {
    let sign = if raising { 1 } else { -1 };
    match (variant, copy) {
        (Variant::R4Prime, 0) => QScalar::var_pow(QVar::Xi, sign),
        (Variant::R4Prime, _) => QScalar::var_pow(QVar::Xi, -sign),
        (_, 0) => QScalar::var_pow(QVar::ZPlus, sign),
        (_, _) => QScalar::var_pow(QVar::ZMinus, sign),
    }
}

/// Hopf structure on generators, extended multiplicatively.
#[derive(Clone, Debug)]
pub struct QHopf {
    variant: Variant,
    algebra: QAlgebra,
    delta: BTreeMap<QGen, QTensor>,
    antipode: BTreeMap<QGen, QTensor>,
}

impl QHopf {
    pub fn new(variant: Variant) -> QHopf {
        let algebra = variant.algebra();
        let mut delta = BTreeMap::new();
        let mut antipode = BTreeMap::new();
        for g in E_GENS {
            let QGen::E { copy, raising } = g else {
                unreachable!()
            };
            let right = QMonomial::from_cartan(coproduct_factor(variant, copy, raising));
            let left = QMonomial::from_cartan(neg_pair(coproduct_factor(variant, copy, raising)));
            let e = g.element();
            let d = e
                .outer(&QTensor::mono(right))
                .add(&QTensor::mono(left).outer(&e));
            delta.insert(g, d);
            antipode.insert(g, e.scale(&antipode_factor(variant, copy, raising).neg()));
        }
        QHopf {
            variant,
            algebra,
            delta,
            antipode,
        }
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn algebra(&self) -> &QAlgebra {
        &self.algebra
    }

    /// Replaces the coproduct image of an `E` generator (used to plant faults).
    pub fn with_coproduct(mut self, g: QGen, image: QTensor) -> Result<QHopf> {
        if !matches!(g, QGen::E { .. }) || image.legs() != 2 {
            return Err(Error::Precondition(
                "override needs an E generator and a two-leg image".into(),
            ));
        }
        self.delta.insert(g, image);
        Ok(self)
    }

    pub fn generators(&self) -> Vec<QGen> {
        let mut gens = E_GENS.to_vec();
        for &b in self.variant.bases() {
            for copy in 0..2 {
                // q_{z+} only acts on copy 1 and q_{z−} only on copy 2
                let skip = matches!(
                    (self.variant, b, copy),
                    (Variant::R3Prime | Variant::R3, QVar::ZPlus, 1)
                        | (Variant::R3Prime | Variant::R3, QVar::ZMinus, 0)
                );
                if skip {
                    continue;
                }
                for power in [1, -1] {
                    gens.push(QGen::GroupLike {
                        copy,
                        base: b,
                        power,
                    });
                }
            }
        }
        gens
    }

    pub fn coproduct_gen(&self, g: &QGen) -> QTensor {
        match g {
            QGen::E { .. } => self.delta[g].clone(),
            QGen::GroupLike { .. } => {
                let m = g.monomial();
                QTensor::term(vec![m, m], QScalar::one())
            }
        }
    }

    pub fn antipode_gen(&self, g: &QGen) -> QTensor {
        match *g {
            QGen::E { .. } => self.antipode[g].clone(),
            QGen::GroupLike { copy, base, power } => QGen::GroupLike {
                copy,
                base,
                power: -power,
            }
            .element(),
        }
    }

    pub fn counit_gen(&self, g: &QGen) -> QScalar {
        match g {
            QGen::E { .. } => QScalar::zero(),
            QGen::GroupLike { .. } => QScalar::one(),
        }
    }

    /// Δ of a normal-ordered monomial as the product of generator images.
    pub fn coproduct_mono(&self, m: &QMonomial) -> Result<QTensor> {
        let mut acc = QTensor::one(2);
        for copy in 0..2 {
            let c = m.0[copy];
            let lower = self.coproduct_gen(&QGen::e(copy, false));
            for _ in 0..c.lower {
                acc = self.algebra.mul(&acc, &lower)?;
            }
            if c.cartan != [0; 4] {
                let mut g = QMonomial::one();
                g.0[copy].cartan = c.cartan;
                acc = self
                    .algebra
                    .mul(&acc, &QTensor::term(vec![g, g], QScalar::one()))?;
            }
            let upper = self.coproduct_gen(&QGen::e(copy, true));
            for _ in 0..c.upper {
                acc = self.algebra.mul(&acc, &upper)?;
            }
        }
        Ok(acc)
    }

    /// S of a monomial: the anti-automorphism `S(E₋^a K E₊^c) = S(E₊)^c S(K) S(E₋)^a`.
    pub fn antipode_mono(&self, m: &QMonomial) -> Result<QTensor> {
        let mut acc = QTensor::one(1);
        for copy in 0..2 {
            let c = m.0[copy];
            let mut part = QTensor::one(1);
            let upper = self.antipode_gen(&QGen::e(copy, true));
            for _ in 0..c.upper {
                part = self.algebra.mul(&part, &upper)?;
            }
            if c.cartan != [0; 4] {
                let mut g = QMonomial::one();
                g.0[copy].cartan = c.cartan.map(|v| -v);
                part = self.algebra.mul(&part, &QTensor::mono(g))?;
            }
            let lower = self.antipode_gen(&QGen::e(copy, false));
            for _ in 0..c.lower {
                part = self.algebra.mul(&part, &lower)?;
            }
            acc = self.algebra.mul(&acc, &part)?;
        }
        Ok(acc)
    }

    fn counit_mono(m: &QMonomial) -> QScalar {
        if m.is_group_like() {
            QScalar::one()
        } else {
            QScalar::zero()
        }
    }

    /// Δ applied to leg `leg`.
    pub fn coproduct(&self, x: &QTensor, leg: usize) -> Result<QTensor> {
        self.map_leg(x, leg, x.legs() + 1, &mut |m| self.coproduct_mono(m))
    }

    /// S applied to leg `leg`.
    pub fn antipode(&self, x: &QTensor, leg: usize) -> Result<QTensor> {
        self.map_leg(x, leg, x.legs(), &mut |m| self.antipode_mono(m))
    }

    /// ε applied to leg `leg` (removes it).
    pub fn counit(&self, x: &QTensor, leg: usize) -> Result<QTensor> {
        self.map_leg(x, leg, x.legs() - 1, &mut |m| {
            Ok(QTensor::scalar(0, QHopf::counit_mono(m)))
        })
    }

    /// Multiplies leg `leg` into leg `leg + 1`.
    pub fn multiply(&self, x: &QTensor, leg: usize) -> Result<QTensor> {
        if leg + 1 >= x.legs() {
            return Err(Error::LegMismatch(format!(
                "cannot multiply legs {leg},{} of a {}-leg tensor",
                leg + 1,
                x.legs()
            )));
        }
        x.map_terms(x.legs() - 1, &mut |k| {
            let prod = self
                .algebra
                .mul(&QTensor::mono(k[leg]), &QTensor::mono(k[leg + 1]))?;
            let left = QTensor::term(k[..leg].to_vec(), QScalar::one());
            let right = QTensor::term(k[leg + 2..].to_vec(), QScalar::one());
            Ok(left.outer(&prod).outer(&right))
        })
    }

    fn map_leg(
        &self,
        x: &QTensor,
        leg: usize,
        legs: usize,
        f: &mut dyn FnMut(&QMonomial) -> Result<QTensor>,
    ) -> Result<QTensor> {
        if leg >= x.legs() {
            return Err(Error::LegMismatch(format!(
                "leg {leg} of a {}-leg tensor",
                x.legs()
            )));
        }
        x.map_terms(legs, &mut |k| {
            let img = f(&k[leg])?;
            let left = QTensor::term(k[..leg].to_vec(), QScalar::one());
            let right = QTensor::term(k[leg + 1..].to_vec(), QScalar::one());
            Ok(left.outer(&img).outer(&right))
        })
    }

    pub fn relations(&self) -> Vec<Relation> {
        relations(self.variant, &self.generators())
    }
}

/// A defining relation `Σ c·(word) = 0`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub terms: Vec<(QScalar, Vec<QGen>)>,
}

impl Relation {
    /// Evaluates the relation under a generator map into `legs`-leg tensors.
    /// `reverse` reads every word backwards (for anti-homomorphisms).
    pub fn evaluate(
        &self,
        alg: &QAlgebra,
        legs: usize,
        image: &mut dyn FnMut(&QGen) -> Result<QTensor>,
        scalar: &dyn Fn(&QScalar) -> Result<QScalar>,
        reverse: bool,
    ) -> Result<QTensor> {
        let mut total = QTensor::zero(legs);
        for (c, word) in &self.terms {
            let mut acc = QTensor::scalar(legs, scalar(c)?);
            let gens: Vec<&QGen> = if reverse {
                word.iter().rev().collect()
            } else {
                word.iter().collect()
            };
            for g in gens {
                acc = alg.mul(&acc, &image(g)?)?;
            }
            total = total.add(&acc);
        }
        Ok(total)
    }
}

fn relations(variant: Variant, gens: &[QGen]) -> Vec<Relation> {
    let alg = variant.algebra();
    let mut out = Vec::new();
    for g in gens {
        let QGen::GroupLike { copy, base, power } = *g else {
            continue;
        };
        for e in E_GENS {
            let QGen::E { copy: ec, raising } = e else {
                unreachable!()
            };
            let shift = if ec == copy {
                power * if raising { 1 } else { -1 }
            } else {
                0
            };
            out.push(Relation {
                name: format!("{} {} exchange", g.name(), e.name()),
                terms: vec![
                    (QScalar::one(), vec![*g, e]),
                    (QScalar::var_pow(base, shift).neg(), vec![e, *g]),
                ],
            });
        }
    }
    for copy in 0..2 {
        let q = alg.relation_base[copy];
        let inv = QScalar::inv_q_difference(q);
        out.push(Relation {
            name: format!("[E{0}+, E{0}-]", copy + 1),
            terms: vec![
                (
                    QScalar::one(),
                    vec![QGen::e(copy, true), QGen::e(copy, false)],
                ),
                (
                    QScalar::int(-1),
                    vec![QGen::e(copy, false), QGen::e(copy, true)],
                ),
                (
                    inv.neg(),
                    vec![QGen::GroupLike {
                        copy,
                        base: q,
                        power: 2,
                    }],
                ),
                (
                    inv,
                    vec![QGen::GroupLike {
                        copy,
                        base: q,
                        power: -2,
                    }],
                ),
            ],
        });
    }
    for a in [true, false] {
        for b in [true, false] {
            let (x, y) = (QGen::e(0, a), QGen::e(1, b));
            out.push(Relation {
                name: format!("[{}, {}]", x.name(), y.name()),
                terms: vec![(QScalar::one(), vec![x, y]), (QScalar::int(-1), vec![y, x])],
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomFamily {
    Coassociativity,
    Counit,
    Antipode,
    Morphism,
}

impl AxiomFamily {
    pub const ALL: [AxiomFamily; 4] = [
        AxiomFamily::Coassociativity,
        AxiomFamily::Counit,
        AxiomFamily::Antipode,
        AxiomFamily::Morphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomFamily::Coassociativity => "coassociativity",
            AxiomFamily::Counit => "counit",
            AxiomFamily::Antipode => "antipode",
            AxiomFamily::Morphism => "morphism",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomOutcome {
    pub family: AxiomFamily,
    pub item: String,
    pub residual_terms: usize,
}

#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub variant: Variant,
    pub outcomes: Vec<AxiomOutcome>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.residual_terms == 0)
    }

    pub fn family_passed(&self, f: AxiomFamily) -> bool {
        self.outcomes
            .iter()
            .filter(|o| o.family == f)
            .all(|o| o.residual_terms == 0)
    }

    pub fn residual_terms(&self) -> usize {
        self.outcomes.iter().map(|o| o.residual_terms).sum()
    }

    pub fn failures(&self) -> Vec<&AxiomOutcome> {
        self.outcomes
            .iter()
            .filter(|o| o.residual_terms > 0)
            .collect()
    }
}

/// Coassociativity, counit, both antipode axioms and the morphism property
/// on every defining relation, all exact.
pub fn hopf_axiom_check(h: &QHopf) -> Result<AxiomReport> {
    let mut outcomes = Vec::new();
    let mut push = |family, item: String, residual: QTensor| {
        outcomes.push(AxiomOutcome {
            family,
            item,
            residual_terms: residual.len(),
        })
    };
    for g in h.generators() {
        let x = g.element();
        let d = h.coproduct_gen(&g);
        let left = h.coproduct(&d, 0)?;
        let right = h.coproduct(&d, 1)?;
        push(AxiomFamily::Coassociativity, g.name(), left.sub(&right));

        let l = h.counit(&d, 0)?;
        let r = h.counit(&d, 1)?;
        push(
            AxiomFamily::Counit,
            format!("(ε⊗id)Δ({})", g.name()),
            l.sub(&x),
        );
        push(
            AxiomFamily::Counit,
            format!("(id⊗ε)Δ({})", g.name()),
            r.sub(&x),
        );

        let unit = QTensor::scalar(1, h.counit_gen(&g));
        let sl = h.multiply(&h.antipode(&d, 0)?, 0)?;
        let sr = h.multiply(&h.antipode(&d, 1)?, 0)?;
        push(
            AxiomFamily::Antipode,
            format!("m(S⊗id)Δ({})", g.name()),
            sl.sub(&unit),
        );
        push(
            AxiomFamily::Antipode,
            format!("m(id⊗S)Δ({})", g.name()),
            sr.sub(&unit),
        );
    }
    for rel in h.relations() {
        let in_algebra = rel.evaluate(
            h.algebra(),
            1,
            &mut |g| Ok(g.element()),
            &|c| Ok(c.clone()),
            false,
        )?;
        if !in_algebra.is_zero() {
            return Err(Error::Definition(format!(
                "relation {} does not hold in the algebra",
                rel.name
            )));
        }
        let image = rel.evaluate(
            h.algebra(),
            2,
            &mut |g| Ok(h.coproduct_gen(g)),
            &|c| Ok(c.clone()),
            false,
        )?;
        push(AxiomFamily::Morphism, rel.name.clone(), image);
    }
    Ok(AxiomReport {
        variant: h.variant(),
        outcomes,
    })
}

/// Renames bases by Laurent monomials `q_b ↦ q_ξ^{s_b}` on scalars and on
/// group-like exponents alike.
pub fn rename_bases(t: &QTensor, images: &[(QVar, QVar, i32)]) -> QTensor {
    let mut table = [([0; NVARS], GaussianRational::ONE); NVARS];
    for v in QVar::ALL {
        table[v.index()].0[v.index()] = 1;
    }
    for &(from, to, s) in images {
        let mut e = [0; NVARS];
        e[to.index()] = s;
        table[from.index()].0 = e;
    }
    let mut out = QTensor::zero(t.legs());
    for (k, c) in t.terms() {
        let key: Vec<QMonomial> = k
            .iter()
            .map(|m| {
                let mut n = *m;
                for copy in 0..2 {
                    let old = m.0[copy].cartan;
                    let mut new = old;
                    for &(from, _, _) in images {
                        new[from.index()] = 0;
                    }
                    for &(from, to, s) in images {
                        new[to.index()] += s * old[from.index()];
                    }
                    n.0[copy].cartan = new;
                }
                n
            })
            .collect();
        out.add_term(key, c.substitute(&table, &|x| x));
    }
    out
}

/// One candidate identification `q_{z+} → q_ξ^{s₀}, q_{z−} → q_ξ^{s₁},
/// q_γ → q_ξ^{s₂}` and whether it turns the r₃ coproducts into the r'₄ ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub signs: [i32; 3],
    pub reconciles: bool,
}

/// Tests all eight sign choices of the base identification between the r₃
/// and r'₄ coproduct families.
pub fn base_identification_check() -> Vec<Identification> {
    let r3 = QHopf::new(Variant::R3);
    let r4 = QHopf::new(Variant::R4Prime);
    let mut out = Vec::new();
    for s0 in [1, -1] {
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                let images = [
                    (QVar::ZPlus, QVar::Xi, s0),
                    (QVar::ZMinus, QVar::Xi, s1),
                    (QVar::Gamma, QVar::Xi, s2),
                ];
                let reconciles = E_GENS
                    .iter()
                    .all(|g| rename_bases(&r3.coproduct_gen(g), &images) == r4.coproduct_gen(g));
                out.push(Identification {
                    signs: [s0, s1, s2],
                    reconciles,
                });
            }
        }
    }
    out
}
