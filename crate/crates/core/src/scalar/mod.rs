//! Exact coefficient arithmetic.
//!
//! Coefficients of every tensor in the crate are [`Scalar`]s: polynomials in
//! the deformation parameters with [`GaussianRational`] coefficients. All
//! parameters have degree one, so truncating at order `N` keeps exactly the
//! monomials of total degree `<= N`.

mod gaussian;
mod param;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use gaussian::GaussianRational;
pub use param::{Param, ParamMono, ParamSymbol, Reality};
pub use rational::Rational;

use crate::error::{Error, Result};

/// Truncation bound on total parameter degree. `None` means exact.
pub type Order = Option<u32>;

#[inline]
pub(crate) fn within(degree: u32, order: Order) -> bool {
    order.is_none_or(|n| degree <= n)
}

/// Polynomial in the deformation parameters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<ParamMono, GaussianRational>,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::default()
    }

    pub fn one() -> Scalar {
        Scalar::constant(GaussianRational::ONE)
    }

    pub fn i() -> Scalar {
        Scalar::constant(GaussianRational::I)
    }

    pub fn constant(c: GaussianRational) -> Scalar {
        Scalar::term(ParamMono::one(), c)
    }

    pub fn rational(p: i64, q: i64) -> Scalar {
        Scalar::constant(GaussianRational::ratio(p, q))
    }

    pub fn int(n: i64) -> Scalar {
        Scalar::constant(GaussianRational::from_int(n))
    }

    pub fn param(name: &str) -> Scalar {
        Scalar::term(ParamMono::var(Param::new(name)), GaussianRational::ONE)
    }

    pub fn term(mono: ParamMono, c: GaussianRational) -> Scalar {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMono, &GaussianRational)> {
        self.terms.iter()
    }

    /// Coefficient of the parameter-free monomial.
    pub fn constant_term(&self) -> GaussianRational {
        self.terms
            .get(&ParamMono::one())
            .copied()
            .unwrap_or(GaussianRational::ZERO)
    }

    /// Lowest total degree present; `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(ParamMono::degree).min()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(ParamMono::degree).max()
    }

    pub fn add_term(&mut self, mono: ParamMono, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Scalar, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), *v * c);
        }
    }

    pub fn scale(&self, c: GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), *v * c))
                .collect(),
        }
    }

    /// Product, dropping every monomial above `order`.
    pub fn mul_trunc(&self, other: &Scalar, order: Order) -> Scalar {
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            let da = ma.degree();
            for (mb, cb) in &other.terms {
                if !within(da + mb.degree(), order) {
                    continue;
                }
                out.add_term(ma.mul(mb), *ca * *cb);
            }
        }
        out
    }

    pub fn truncate(&self, order: Order) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| within(m.degree(), order))
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn degree_part(&self, d: u32) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), *c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32, order: Order) -> Scalar {
        (0..exp).fold(Scalar::one(), |acc, _| acc.mul_trunc(self, order))
    }

    /// Exact division by a parameter monomial; fails if a negative power
    /// would remain.
    pub fn div_mono(&self, mono: &ParamMono) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let q = m.div(mono).ok_or_else(|| {
                Error::NotPolynomial(format!(
                    "{} is not divisible by {}",
                    m.render(),
                    mono.render()
                ))
            })?;
            out.add_term(q, *c);
        }
        Ok(out)
    }

    /// Complex conjugation: ι ↦ −ι, real parameters fixed, imaginary
    /// parameters negated.
    pub fn conj(&self, reality: &dyn Fn(Param) -> Reality) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut sign = 1i64;
            for (p, e) in m.factors() {
                match reality(p) {
                    Reality::Real => {}
                    Reality::Imaginary => {
                        if e % 2 == 1 {
                            sign = -sign;
                        }
                    }
                    Reality::Free => return Err(Error::UndeclaredReality(p.name().to_owned())),
                }
            }
            out.add_term(m.clone(), c.conj() * GaussianRational::from_int(sign));
        }
        Ok(out)
    }

    /// If `self = c·other` for a single number `c`, returns `c`.
    pub fn ratio_constant(&self, other: &Scalar) -> Option<GaussianRational> {
        if other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let mut ratio = None;
        for (m, c) in &other.terms {
            let s = self.terms.get(m)?;
            let r = *s / *c;
            match ratio {
                None => ratio = Some(r),
                Some(prev) if prev != r => return None,
                _ => {}
            }
        }
        ratio
    }

    /// Substitutes every parameter monomial through `f`, which returns a
    /// replacement scalar.
    pub fn map_monos(&self, f: &dyn Fn(&ParamMono) -> Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            out.add_assign_scaled(&f(m), *c);
        }
        out
    }

    /// Human-readable form with monomials in canonical name order.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut parts: Vec<(String, GaussianRational)> =
            self.terms.iter().map(|(m, c)| (m.render(), *c)).collect();
        parts.sort_by(|a, b| a.0.cmp(&b.0));
        parts
            .iter()
            .map(|(m, c)| {
                if m == "1" {
                    c.to_string()
                } else if c.is_one() {
                    m.clone()
                } else {
                    format!("{c}*{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Scalar {
        Scalar::constant(c)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, GaussianRational::ONE);
        out
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -GaussianRational::ONE);
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.scale(-GaussianRational::ONE)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        self.mul_trunc(rhs, None)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha() -> Scalar {
        Scalar::param("alpha")
    }

    #[test]
    fn exact_ring_ops() {
        let a = alpha();
        let one = Scalar::one();
        let s = &one + &a;
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(
            sq.truncate(Some(1)),
            &one + &a.scale(GaussianRational::from_int(2))
        );
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn conjugation_respects_reality() {
        let z = Scalar::param("beta").scale(GaussianRational::I);
        let real = |_: Param| Reality::Real;
        let imag = |_: Param| Reality::Imaginary;
        let free = |_: Param| Reality::Free;
        assert_eq!(z.conj(&real).unwrap(), -&z);
        assert_eq!(z.conj(&imag).unwrap(), z);
        assert!(z.conj(&free).is_err());
    }

    #[test]
    fn div_mono_rejects_negative_powers() {
        let a = Param::new("alpha");
        let s = Scalar::term(ParamMono::pow(a, 3), GaussianRational::ONE);
        assert!(s.div_mono(&ParamMono::pow(a, 2)).is_ok());
        assert!(Scalar::one().div_mono(&ParamMono::pow(a, 1)).is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        let names = ["alpha", "beta", "gamma"];
        prop::collection::vec((0usize..3, 0u16..4, -5i64..5, 1i64..4), 0..6).prop_map(
            move |terms| {
                let mut s = Scalar::zero();
                for (p, e, n, d) in terms {
                    s.add_term(
                        ParamMono::pow(Param::new(names[p]), e),
                        GaussianRational::ratio(n, d),
                    );
                }
                s
            },
        )
    }

    proptest! {
        #[test]
        fn truncation_idempotent_and_monotone(s in arb_scalar(), n in 0u32..5, m in 0u32..5) {
            let (hi, lo) = (n.max(m), n.min(m));
            prop_assert_eq!(s.truncate(Some(hi)).truncate(Some(hi)), s.truncate(Some(hi)));
            prop_assert_eq!(s.truncate(Some(hi)).truncate(Some(lo)), s.truncate(Some(lo)));
        }

        #[test]
        fn truncated_product_matches_exact(a in arb_scalar(), b in arb_scalar(), n in 0u32..6) {
            prop_assert_eq!(a.mul_trunc(&b, Some(n)), (&a * &b).truncate(Some(n)));
        }

        #[test]
        fn multiplication_distributes(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
