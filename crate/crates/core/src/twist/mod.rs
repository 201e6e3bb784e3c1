//! Drinfeld twists of the primitive Hopf structure, as parameter series
//! truncated at a fixed order: Abelian and Jordanian constructors, the
//! cocycle and counit conditions, local r-symmetry and the twisted Hopf
//! structure.

pub mod catalog;

use std::sync::Arc;

use crate::algebra::LieAlgebra;
use crate::enveloping::{analytic_apply, exp, series_inverse, AnalyticFn, Tensor};
use crate::error::{Error, Result};
use crate::rmatrix::{jordanian_relations_check, support, JordanianShape, RMatrix};
use crate::scalar::{GaussianRational, Scalar};

/// Invertible two-tensor `F = 1⊗1 + O(params)`, truncated at `order`.
#[derive(Clone, Debug, PartialEq)]
pub struct Twist {
    body: Tensor,
    order: u32,
    source: Option<RMatrix>,
}

impl Twist {
    pub fn new(body: Tensor, order: u32) -> Result<Twist> {
        if body.legs() != 2 {
            return Err(Error::LegMismatch("a twist has two legs".into()));
        }
        let alg = body.algebra().clone();
        if body.degree_part(0) != Tensor::one(&alg, 2) {
            return Err(Error::Precondition("twist must start with 1⊗1".into()));
        }
        Ok(Twist {
            body: body.truncate(Some(order)),
            order,
            source: None,
        })
    }

    pub fn identity(alg: &Arc<LieAlgebra>, order: u32) -> Twist {
        Twist {
            body: Tensor::one(alg, 2),
            order,
            source: None,
        }
    }

    pub fn with_source(mut self, r: RMatrix) -> Twist {
        self.source = Some(r);
        self
    }

    pub fn body(&self) -> &Tensor {
        &self.body
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn source_r(&self) -> Option<&RMatrix> {
        self.source.as_ref()
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        self.body.algebra()
    }

    fn trunc(&self) -> Option<u32> {
        Some(self.order)
    }

    pub fn inverse(&self) -> Tensor {
        series_inverse(&self.body, self.order).expect("twists start with 1⊗1")
    }
}

/// `exp(T)` for a two-tensor `T` without parameter-free part.
pub fn exp_twist(exponent: &Tensor, order: u32) -> Result<Twist> {
    if exponent.legs() != 2 {
        return Err(Error::LegMismatch("twist exponent has two legs".into()));
    }
    Twist::new(exp(exponent, order)?, order)
}

/// `exp(r/2)`; the support of `r` must be Abelian.
pub fn abelian_twist(r: &RMatrix, order: u32) -> Result<Twist> {
    let alg = r.algebra();
    let sup = support(r);
    for (i, x) in sup.basis().iter().enumerate() {
        for y in &sup.basis()[i + 1..] {
            if !alg.bracket(x, y)?.is_zero() {
                return Err(Error::Precondition(format!(
                    "support is not Abelian: [{}, {}] ≠ 0",
                    alg.render(x),
                    alg.render(y)
                )));
            }
        }
    }
    let half = r.body().scale_num(GaussianRational::ratio(1, 2));
    Ok(exp_twist(&half, order)?.with_source(r.clone()))
}

/// `σ = ½ ln(1 + ξ y₀)` as a one-leg series.
pub fn jordanian_sigma(
    shape: &JordanianShape,
    alg: &Arc<LieAlgebra>,
    order: u32,
) -> Result<Tensor> {
    let arg = Tensor::from_lie(alg, &shape.y0).scale(&Scalar::param(&shape.xi), None);
    Ok(analytic_apply(AnalyticFn::Log1p, &arg, order)?.scale_num(GaussianRational::ratio(1, 2)))
}

/// `exp(ξ Σ x_i ⊗ y_i e^{−2t_iσ}) exp(c·x₀ ⊗ σ)` with `c = x0_factor`;
/// the generic Jordanian-type twist has `c = 2`.
pub fn jordanian_twist_with(
    shape: &JordanianShape,
    alg: &Arc<LieAlgebra>,
    order: u32,
    x0_factor: GaussianRational,
) -> Result<Twist> {
    let report = jordanian_relations_check(shape, alg)?;
    if !report.passed() {
        return Err(Error::Precondition(format!(
            "Jordanian relations fail: {}",
            report.violations.join("; ")
        )));
    }
    let n = Some(order);
    let sigma = jordanian_sigma(shape, alg, order)?;
    let xi = Scalar::param(&shape.xi);
    let mut pairs = Tensor::zero(alg, 2);
    for ((x, y), t) in shape.pairs.iter().zip(&report.weights) {
        let t = t.expect("weights exist when the relations pass");
        let damp = exp(&sigma.scale_num(GaussianRational::from_int(-2) * t), order)?;
        let y = Tensor::from_lie(alg, y).mul(&damp, n);
        pairs = pairs.add(&Tensor::from_lie(alg, x).outer(&y, n));
    }
    let left = exp(&pairs.scale(&xi, n), order)?;
    let right = exp(
        &Tensor::from_lie(alg, &shape.x0)
            .outer(&sigma, n)
            .scale_num(x0_factor),
        order,
    )?;
    let r = shape.r_matrix(alg)?;
    Ok(Twist::new(left.mul(&right, n), order)?.with_source(r))
}

pub fn jordanian_twist(shape: &JordanianShape, alg: &Arc<LieAlgebra>, order: u32) -> Result<Twist> {
    jordanian_twist_with(shape, alg, order, GaussianRational::from_int(2))
}

/// `F2·F1`: quantize along `F1` first, then along `F2`.
pub fn compose(f2: &Twist, f1: &Twist) -> Result<Twist> {
    if !Arc::ptr_eq(f2.algebra(), f1.algebra()) {
        return Err(Error::AlgebraMismatch(
            f2.algebra().name().into(),
            f1.algebra().name().into(),
        ));
    }
    if f2.order != f1.order {
        return Err(Error::Precondition(format!(
            "truncation orders differ: {} and {}",
            f2.order, f1.order
        )));
    }
    let source = match (&f2.source, &f1.source) {
        (Some(a), Some(b)) => Some(a.add(b)),
        _ => None,
    };
    Ok(Twist {
        body: f2.body.mul(&f1.body, f1.trunc()),
        order: f1.order,
        source,
    })
}

/// Residual tensors of an identity check; zero iff the check passes.
#[derive(Clone, Debug, PartialEq)]
pub struct Residual {
    pub parts: Vec<Tensor>,
}

impl Residual {
    pub fn passed(&self) -> bool {
        self.parts.iter().all(Tensor::is_zero)
    }

    /// Lowest parameter degree with a nonzero residual.
    pub fn first_failing_order(&self) -> Option<u32> {
        self.parts.iter().filter_map(Tensor::min_param_degree).min()
    }

    pub fn term_count(&self) -> usize {
        self.parts.iter().map(Tensor::len).sum()
    }

    pub fn merge(mut self, other: Residual) -> Residual {
        self.parts.extend(other.parts);
        self
    }
}

/// `F¹²(Δ⊗id)(F) − F²³(id⊗Δ)(F)`.
pub fn cocycle_check(f: &Twist) -> Residual {
    let n = f.trunc();
    let b = &f.body;
    let f12 = b.embed(&[0, 1], 3).unwrap();
    let f23 = b.embed(&[1, 2], 3).unwrap();
    let lhs = f12.mul(&b.coproduct_leg(0, n), n);
    let rhs = f23.mul(&b.coproduct_leg(1, n), n);
    Residual {
        parts: vec![lhs.sub(&rhs)],
    }
}

/// `(ε⊗id)(F) − 1` and `(id⊗ε)(F) − 1`.
pub fn counit_residual(f: &Twist) -> Residual {
    let one = Tensor::one(f.algebra(), 1);
    Residual {
        parts: vec![
            f.body.counit_leg(0).sub(&one),
            f.body.counit_leg(1).sub(&one),
        ],
    }
}

pub fn counit_check(f: &Twist) -> bool {
    counit_residual(f).passed()
}

/// `c` with `F = 1⊗1 + c·r + O(2)`, if the degree-one part of `F` is a
/// nonzero multiple of `r`.
pub fn local_r_symmetry(f: &Twist, r: &RMatrix) -> Option<GaussianRational> {
    let f1 = f.body.degree_part(1);
    let (k, c) = f1.terms().next()?;
    let rc = r.body().terms().find(|(rk, _)| *rk == k)?.1;
    let ratio = c.ratio_constant(rc)?;
    (!ratio.is_zero() && f1 == r.body().scale_num(ratio)).then_some(ratio)
}

/// `F·Δ(x)·F⁻¹`.
pub fn twisted_coproduct(f: &Twist, x: &Tensor) -> Result<Tensor> {
    if x.legs() != 1 {
        return Err(Error::LegMismatch(
            "twisted coproduct takes a one-leg element".into(),
        ));
    }
    Ok(conjugate_leg(f, &f.inverse(), x, 0))
}

/// `Δ^F` on leg `l` of `t`: `F^{l,l+1} (Δ on leg l)(t) (F^{l,l+1})⁻¹`.
fn conjugate_leg(f: &Twist, f_inv: &Tensor, t: &Tensor, l: usize) -> Tensor {
    let n = f.trunc();
    let total = t.legs() + 1;
    let fe = f.body.embed(&[l, l + 1], total).unwrap();
    let fi = f_inv.embed(&[l, l + 1], total).unwrap();
    fe.mul(&t.coproduct_leg(l, n), n).mul(&fi, n)
}

/// `u = Σ f⁽¹⁾ S(f⁽²⁾)`.
pub fn drinfeld_element(f: &Twist) -> Tensor {
    f.body.antipode_leg(1).contract_legs(0).truncate(f.trunc())
}

/// `u·S(x)·u⁻¹`.
pub fn twisted_antipode(f: &Twist, x: &Tensor) -> Result<Tensor> {
    if x.legs() != 1 {
        return Err(Error::LegMismatch(
            "twisted antipode takes a one-leg element".into(),
        ));
    }
    let n = f.trunc();
    let u = drinfeld_element(f);
    let u_inv = series_inverse(&u, f.order)?;
    Ok(u.mul(&x.antipode_leg(0), n).mul(&u_inv, n))
}

/// Residuals of the twisted Hopf axioms on the generators, grouped as
/// coassociativity, counit, morphism (on ordered generator pairs) and
/// antipode.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfResiduals {
    pub coassociativity: Residual,
    pub counit: Residual,
    pub morphism: Residual,
    pub antipode: Residual,
}

pub fn twisted_hopf_residuals(f: &Twist) -> HopfResiduals {
    let alg = f.algebra().clone();
    let n = f.trunc();
    let f_inv = f.inverse();
    let u = drinfeld_element(f);
    let u_inv = series_inverse(&u, f.order).expect("u starts with 1");
    let gens: Vec<Tensor> = (0..alg.dim()).map(|i| Tensor::generator(&alg, i)).collect();
    let deltas: Vec<Tensor> = gens
        .iter()
        .map(|x| conjugate_leg(f, &f_inv, x, 0))
        .collect();

    let mut coassoc = Vec::new();
    let mut counit = Vec::new();
    let mut antipode = Vec::new();
    for (x, d) in gens.iter().zip(&deltas) {
        coassoc.push(conjugate_leg(f, &f_inv, d, 0).sub(&conjugate_leg(f, &f_inv, d, 1)));
        counit.push(d.counit_leg(0).sub(x));
        counit.push(d.counit_leg(1).sub(x));
        // S^F on the first leg: (u⊗1)(S⊗id)(Δ^F x)(u⁻¹⊗1), then multiply out;
        // ε(x) = 0 for a generator
        let ue = u.embed(&[0], 2).unwrap();
        let uie = u_inv.embed(&[0], 2).unwrap();
        let s = ue.mul(&d.antipode_leg(0), n).mul(&uie, n);
        antipode.push(s.contract_legs(0).truncate(n));
    }
    let mut morphism = Vec::new();
    for (i, x) in gens.iter().enumerate() {
        for (j, y) in gens.iter().enumerate() {
            let lhs = conjugate_leg(f, &f_inv, &x.mul(y, None), 0);
            morphism.push(lhs.sub(&deltas[i].mul(&deltas[j], n)));
        }
    }
    HopfResiduals {
        coassociativity: Residual { parts: coassoc },
        counit: Residual { parts: counit },
        morphism: Residual { parts: morphism },
        antipode: Residual { parts: antipode },
    }
}
