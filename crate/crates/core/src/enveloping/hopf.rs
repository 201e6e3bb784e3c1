//! Primitive Hopf structure of `U(g)`: every generator is primitive,
//! `Δx = x⊗1 + 1⊗x`, `ε(x) = 0`, `S(x) = −x`.

use std::collections::HashMap;

use smallvec::SmallVec;

use super::pbw::{self, Mono};
use super::tensor::{Key, Tensor};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Order, Scalar};

fn binomial(n: u8, k: u8) -> i64 {
    let (n, k) = (n as i64, k as i64);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Δ` of a PBW monomial. No straightening is needed: splitting each power
/// keeps both legs in PBW order.
fn coproduct_mono(m: &Mono) -> Vec<(Key, GaussianRational)> {
    let d = m.len();
    let mut out: Vec<(Key, GaussianRational)> =
        vec![(SmallVec::from_elem(0, 2 * d), GaussianRational::ONE)];
    for (i, &e) in m.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for (k, c) in &out {
            for left in 0..=e {
                let mut nk = k.clone();
                nk[i] = left;
                nk[d + i] = e - left;
                next.push((nk, *c * GaussianRational::from_int(binomial(e, left))));
            }
        }
        out = next;
    }
    out
}

/// `S` of a PBW monomial: reverse the factors, negate each generator.
fn antipode_mono(t: &Tensor, m: &Mono) -> Vec<(Key, GaussianRational)> {
    let alg = t.algebra();
    let d = m.len();
    let deg = pbw::mono_degree(m);
    let sign = if deg.is_multiple_of(2) {
        GaussianRational::ONE
    } else {
        -GaussianRational::ONE
    };
    let mut cur: HashMap<Mono, GaussianRational> = HashMap::new();
    cur.insert(pbw::unit_mono(d), sign);
    for i in (0..d).rev() {
        if m[i] == 0 {
            continue;
        }
        let mut p = pbw::unit_mono(d);
        p[i] = m[i];
        let mut next: HashMap<Mono, GaussianRational> = HashMap::new();
        for (a, c) in cur {
            for (r, rc) in pbw::mul_mono(alg, &a, &p).iter() {
                *next.entry(r.clone()).or_insert(GaussianRational::ZERO) += c * *rc;
            }
        }
        cur = next;
    }
    cur.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m.into_iter().collect(), c))
        .collect()
}

impl Tensor {
    /// Primitive coproduct applied to leg `l` (`L` legs become `L+1`).
    pub fn coproduct_leg(&self, l: usize, order: Order) -> Tensor {
        assert!(l < self.legs());
        self.map_leg(l, 2, order, &coproduct_mono)
    }

    /// Counit applied to leg `l` (`L` legs become `L-1`).
    pub fn counit_leg(&self, l: usize) -> Tensor {
        assert!(l < self.legs());
        self.map_leg(l, 0, None, &|m: &Mono| {
            if m.iter().all(|&e| e == 0) {
                vec![(SmallVec::new(), GaussianRational::ONE)]
            } else {
                vec![]
            }
        })
    }

    /// Primitive antipode applied to leg `l`.
    pub fn antipode_leg(&self, l: usize) -> Tensor {
        assert!(l < self.legs());
        let me = self.clone();
        self.map_leg(l, 1, None, &move |m: &Mono| antipode_mono(&me, m))
    }
}

/// `Δ(x)` for `x ∈ U(g)`.
pub fn coproduct(x: &Tensor) -> Result<Tensor> {
    require_legs(x, 1)?;
    Ok(x.coproduct_leg(0, None))
}

/// `ε(x)` for `x ∈ U(g)`: the coefficient of the unit monomial.
pub fn counit(x: &Tensor) -> Result<Scalar> {
    require_legs(x, 1)?;
    Ok(x.unit_coeff())
}

/// `S(x)` for `x ∈ U(g)`.
pub fn antipode(x: &Tensor) -> Result<Tensor> {
    require_legs(x, 1)?;
    Ok(x.antipode_leg(0))
}

/// `x ⊗ y − y ⊗ x`.
pub fn wedge(x: &Tensor, y: &Tensor) -> Result<Tensor> {
    require_legs(x, 1)?;
    require_legs(y, 1)?;
    Ok(x.outer(y, None).sub(&y.outer(x, None)))
}

/// Leg pattern for embedding a two-tensor into three legs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegPattern {
    P12,
    P13,
    P23,
}

/// `T^{12}`, `T^{13}` or `T^{23}`.
pub fn leg_embed(t: &Tensor, pattern: LegPattern) -> Result<Tensor> {
    require_legs(t, 2)?;
    let pos: [usize; 2] = match pattern {
        LegPattern::P12 => [0, 1],
        LegPattern::P13 => [0, 2],
        LegPattern::P23 => [1, 2],
    };
    t.embed(&pos, 3)
}

/// `m(S ⊗ id)Δ(x)`; equals `ε(x)·1` in any Hopf algebra.
pub fn antipode_axiom_residual(x: &Tensor) -> Result<Tensor> {
    let dx = coproduct(x)?;
    let lhs = dx.antipode_leg(0).contract_legs(0);
    let rhs = Tensor::scalar(x.algebra(), 1, counit(x)?);
    Ok(lhs.sub(&rhs))
}

fn require_legs(t: &Tensor, n: usize) -> Result<()> {
    if t.legs() != n {
        return Err(Error::LegMismatch(format!(
            "expected {n} leg(s), got {}",
            t.legs()
        )));
    }
    Ok(())
}
