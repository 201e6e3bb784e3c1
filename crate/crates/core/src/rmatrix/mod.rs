//! Classical r-matrices: the Yang-Baxter operator, Schouten conditions,
//! supports, subordination and the bundled catalog.

pub mod catalog;
mod file;
mod jordanian;

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{involution_apply, BasisMap, InvolutionSpec, LieAlgebra, LieElement};
use crate::enveloping::{leg_embed, wedge, LegPattern, Tensor};
use crate::error::{Error, Result};
use crate::linalg::EchelonBasis;
use crate::scalar::{GaussianRational, ParamMono, ParamSymbol, Scalar};

pub use file::{RMatrixFile, WedgeTerm};
pub use jordanian::{jordanian_relations_check, JordanianReport, JordanianShape};

/// Antisymmetric two-tensor, linear in the generators on each leg.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    body: Tensor,
}

impl RMatrix {
    pub fn new(body: Tensor) -> Result<RMatrix> {
        if body.legs() != 2 {
            return Err(Error::LegMismatch("an r-matrix has two legs".into()));
        }
        if body.linear_legs().is_none() {
            return Err(Error::Definition(
                "r-matrix legs must be linear in the generators".into(),
            ));
        }
        if body.flip() != body.neg() {
            return Err(Error::Definition("r-matrix is not antisymmetric".into()));
        }
        Ok(RMatrix { body })
    }

    pub fn zero(alg: &Arc<LieAlgebra>) -> RMatrix {
        RMatrix {
            body: Tensor::zero(alg, 2),
        }
    }

    /// `Σ c_k x_k ∧ y_k`.
    pub fn from_wedges(
        alg: &Arc<LieAlgebra>,
        terms: &[(Scalar, LieElement, LieElement)],
    ) -> Result<RMatrix> {
        let mut body = Tensor::zero(alg, 2);
        for (c, x, y) in terms {
            let w = wedge(&Tensor::from_lie(alg, x), &Tensor::from_lie(alg, y))?;
            body = body.add(&w.scale(c, None));
        }
        RMatrix::new(body)
    }

    pub fn body(&self) -> &Tensor {
        &self.body
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.body.algebra()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn add(&self, other: &RMatrix) -> RMatrix {
        RMatrix {
            body: self.body.add(&other.body),
        }
    }

    pub fn sub(&self, other: &RMatrix) -> RMatrix {
        RMatrix {
            body: self.body.sub(&other.body),
        }
    }

    pub fn scale(&self, c: &Scalar) -> RMatrix {
        RMatrix {
            body: self.body.scale(c, None),
        }
    }

    /// Parameter names occurring in the coefficients, sorted.
    pub fn parameter_names(&self) -> Vec<String> {
        let mut names = BTreeSet::new();
        for (_, c) in self.body.terms() {
            for (m, _) in c.terms() {
                for (p, _) in m.factors() {
                    names.insert(p.name().to_owned());
                }
            }
        }
        names.into_iter().collect()
    }

    /// Image under a linear map applied to both legs.
    pub fn transport(&self, map: &BasisMap) -> Result<RMatrix> {
        if !Arc::ptr_eq(map.source(), self.algebra()) {
            return Err(Error::Definition(format!(
                "basis map starts at `{}`, not `{}`",
                map.source().name(),
                self.algebra().name()
            )));
        }
        let alg = map.target();
        let mut body = Tensor::zero(alg, 2);
        for (i, j, c) in self.entries() {
            let x = Tensor::from_lie(alg, &map.images()[i]);
            let y = Tensor::from_lie(alg, &map.images()[j]);
            body = body.add(&x.outer(&y, None).scale(&c, None));
        }
        RMatrix::new(body)
    }

    /// `(i, j, c)` with `r = Σ c·x_i ⊗ x_j`.
    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        self.body
            .linear_legs()
            .expect("r-matrix legs are linear")
            .into_iter()
            .map(|(g, c)| (g[0], g[1], c))
            .collect()
    }
}

fn commutator(a: &Tensor, b: &Tensor) -> Tensor {
    a.mul(b, None).sub(&b.mul(a, None))
}

/// `[r¹², r¹³] + [r¹², r²³] + [r¹³, r²³]`, exactly.
pub fn cybe(r: &RMatrix) -> Tensor {
    let r12 = leg_embed(r.body(), LegPattern::P12).unwrap();
    let r13 = leg_embed(r.body(), LegPattern::P13).unwrap();
    let r23 = leg_embed(r.body(), LegPattern::P23).unwrap();
    commutator(&r12, &r13)
        .add(&commutator(&r12, &r23))
        .add(&commutator(&r13, &r23))
}

/// `x` acting on every leg: `x⊗1⊗…⊗1 + … + 1⊗…⊗1⊗x`.
fn diagonal(alg: &Arc<LieAlgebra>, x: &Tensor, legs: usize) -> Tensor {
    let mut d = Tensor::zero(alg, legs);
    for l in 0..legs {
        d = d.add(&x.embed(&[l], legs).unwrap());
    }
    d
}

/// True iff `T` commutes with the diagonal action of every generator.
pub fn is_invariant(t: &Tensor) -> bool {
    invariance_residuals(t).iter().all(Tensor::is_zero)
}

/// `[x⊗1⊗… + … + …⊗1⊗x, T]` for every generator `x`.
pub fn invariance_residuals(t: &Tensor) -> Vec<Tensor> {
    let alg = t.algebra();
    (0..alg.dim())
        .map(|i| {
            let d = diagonal(alg, &Tensor::generator(alg, i), t.legs());
            commutator(&d, t)
        })
        .collect()
}

/// Schouten bracket by polarization of the Yang-Baxter operator:
/// `[[a, b]] = C(a + b) − C(a) − C(b)`, so `[[r, r]] = 2·C(r)`.
pub fn schouten(a: &RMatrix, b: &RMatrix) -> Tensor {
    cybe(&a.add(b)).sub(&cybe(a)).sub(&cybe(b))
}

/// A Lie subalgebra given by a basis of parameter-free elements.
#[derive(Clone, Debug)]
pub struct SupportAlgebra {
    alg: Arc<LieAlgebra>,
    basis: Vec<LieElement>,
}

impl SupportAlgebra {
    pub fn basis(&self) -> &[LieElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, x: &LieElement) -> bool {
        let mut ech = EchelonBasis::new();
        for b in &self.basis {
            ech.insert(&coords(&self.alg, b));
        }
        ech.contains(&coords(&self.alg, x))
    }

    pub fn render(&self) -> Vec<String> {
        self.basis.iter().map(|b| self.alg.render(b)).collect()
    }
}

fn coords(alg: &LieAlgebra, x: &LieElement) -> Vec<GaussianRational> {
    let mut v = vec![GaussianRational::ZERO; alg.dim()];
    for (i, c) in x.coeffs() {
        v[i] = c.constant_term();
    }
    v
}

fn from_coords(v: &[GaussianRational]) -> LieElement {
    let mut e = LieElement::zero();
    for (i, c) in v.iter().enumerate() {
        e.add_term(i, &Scalar::constant(*c));
    }
    e
}

/// `Sup(r)`: the subalgebra generated by the leg factors of `r`.
///
/// The leg factors are read off per parameter monomial (generic parameter
/// values): the row and column spaces of every coefficient matrix. The span
/// is then closed under brackets.
pub fn support(r: &RMatrix) -> SupportAlgebra {
    let alg = r.algebra().clone();
    let n = alg.dim();
    let mut monos: BTreeSet<ParamMono> = BTreeSet::new();
    let entries = r.entries();
    for (_, _, c) in &entries {
        monos.extend(c.terms().map(|(m, _)| m.clone()));
    }
    let mut ech = EchelonBasis::new();
    for m in &monos {
        let mut mat = vec![vec![GaussianRational::ZERO; n]; n];
        for (i, j, c) in &entries {
            let v = c.terms().find(|(mm, _)| *mm == m).map(|(_, v)| *v);
            if let Some(v) = v {
                mat[*i][*j] = v;
            }
        }
        for row in &mat {
            ech.insert(row);
        }
        for j in 0..n {
            let col: Vec<GaussianRational> = mat.iter().map(|row| row[j]).collect();
            ech.insert(&col);
        }
    }
    let mut basis: Vec<LieElement> = ech.rows().iter().map(|v| from_coords(v)).collect();
    // close under brackets
    let mut i = 0;
    while i < basis.len() {
        for j in 0..i {
            let b = alg.bracket(&basis[j], &basis[i]).unwrap();
            let v = coords(&alg, &b);
            if ech.insert(&v) {
                basis.push(from_coords(&ech.reduce(&v)));
            }
        }
        i += 1;
    }
    let basis = ech.rows().iter().map(|v| from_coords(v)).collect();
    SupportAlgebra { alg, basis }
}

/// `δ_r(x) = [x⊗1 + 1⊗x, r]`.
pub fn coboundary(r: &RMatrix, x: &LieElement) -> Tensor {
    let alg = r.algebra();
    let d = diagonal(alg, &Tensor::from_lie(alg, x), 2);
    commutator(&d, r.body())
}

/// `r1 ≻ r2`: `δ_{r1}` vanishes on all of `Sup(r2)`.
pub fn subordination(r1: &RMatrix, r2: &RMatrix) -> bool {
    support(r2)
        .basis()
        .iter()
        .all(|x| coboundary(r1, x).is_zero())
}

/// `r = a + b + c` with `a ∈ P∧P`, `b` mixed, `c` in the complement.
#[derive(Clone, Debug, PartialEq)]
pub struct PoincareSplit {
    pub a: RMatrix,
    pub b: RMatrix,
    pub c: RMatrix,
}

/// Splits term by term according to which legs lie in the span of the
/// generators flagged in `momenta`.
pub fn split_by(r: &RMatrix, momenta: &[bool]) -> PoincareSplit {
    let alg = r.algebra();
    let mut parts = [
        Tensor::zero(alg, 2),
        Tensor::zero(alg, 2),
        Tensor::zero(alg, 2),
    ];
    for (i, j, c) in r.entries() {
        let t = Tensor::generator(alg, i)
            .outer(&Tensor::generator(alg, j), None)
            .scale(&c, None);
        let slot = match (momenta[i], momenta[j]) {
            (true, true) => 0,
            (false, false) => 2,
            _ => 1,
        };
        parts[slot] = parts[slot].add(&t);
    }
    let [a, b, c] = parts;
    PoincareSplit {
        a: RMatrix { body: a },
        b: RMatrix { body: b },
        c: RMatrix { body: c },
    }
}

/// Split with respect to the momentum generators `P±, P1, P2`.
pub fn split_poincare(r: &RMatrix) -> Result<PoincareSplit> {
    let alg = r.algebra();
    let momenta: Vec<bool> = alg
        .generators()
        .iter()
        .map(|g| g.starts_with('P'))
        .collect();
    if !momenta.iter().any(|&m| m) {
        return Err(Error::Precondition(format!(
            "`{}` has no momentum generators",
            alg.name()
        )));
    }
    Ok(split_by(r, &momenta))
}

impl PoincareSplit {
    /// Residuals of `[[c,c]] = 0`, `[[b,c]] = 0`, `2[[a,c]] + [[b,b]] = 0`,
    /// `[[a,b]] = 0`, in that order.
    pub fn schouten_conditions(&self) -> [Tensor; 4] {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        [
            schouten(c, c),
            schouten(b, c),
            schouten(a, c)
                .scale_num(GaussianRational::from_int(2))
                .add(&schouten(b, b)),
            schouten(a, b),
        ]
    }

    pub fn sum(&self) -> RMatrix {
        self.a.add(&self.b).add(&self.c)
    }
}

/// True iff `r* = −r` under `spec`, with parameter realities from `params`.
pub fn antihermitian_check(
    r: &RMatrix,
    spec: &InvolutionSpec,
    params: &[ParamSymbol],
) -> Result<bool> {
    let star = involution_apply(spec, r.body(), params)?;
    Ok(star == r.body().neg())
}
