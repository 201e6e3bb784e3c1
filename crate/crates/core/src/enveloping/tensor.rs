use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use super::pbw::{self, Mono};
use crate::algebra::{LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::scalar::{within, GaussianRational, Order, Scalar};

/// Concatenated exponent vectors of all legs.
pub type Key = SmallVec<[u8; 32]>;

/// Element of `U(g)^{⊗L}` with every leg in PBW normal order.
///
/// A one-leg tensor is an element of the enveloping algebra itself; the
/// zero-leg case holds plain scalars (the image of a full counit).
#[derive(Clone)]
pub struct Tensor {
    alg: Arc<LieAlgebra>,
    legs: usize,
    terms: BTreeMap<Key, Scalar>,
}

impl PartialEq for Tensor {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &other.alg) && self.legs == other.legs && self.terms == other.terms
    }
}

impl Tensor {
    pub fn zero(alg: &Arc<LieAlgebra>, legs: usize) -> Tensor {
        Tensor {
            alg: alg.clone(),
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(alg: &Arc<LieAlgebra>, legs: usize, s: Scalar) -> Tensor {
        let mut t = Tensor::zero(alg, legs);
        if !s.is_zero() {
            t.terms.insert(SmallVec::from_elem(0, legs * alg.dim()), s);
        }
        t
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(alg: &Arc<LieAlgebra>, legs: usize) -> Tensor {
        Tensor::scalar(alg, legs, Scalar::one())
    }

    /// A single generator as an element of `U(g)`.
    pub fn generator(alg: &Arc<LieAlgebra>, i: usize) -> Tensor {
        Tensor::from_mono(alg, pbw::gen_mono(alg.dim(), i), Scalar::one())
    }

    /// Generator looked up by name (aliases allowed).
    pub fn named(alg: &Arc<LieAlgebra>, name: &str) -> Result<Tensor> {
        Ok(Tensor::from_lie(alg, &alg.element(name)?))
    }

    pub fn from_mono(alg: &Arc<LieAlgebra>, m: Mono, c: Scalar) -> Tensor {
        let mut t = Tensor::zero(alg, 1);
        if !c.is_zero() {
            t.terms.insert(m.into_iter().collect(), c);
        }
        t
    }

    /// Single term `c·key` on `legs` legs.
    pub fn from_key(alg: &Arc<LieAlgebra>, legs: usize, key: Key, c: Scalar) -> Tensor {
        assert_eq!(
            key.len(),
            legs * alg.dim(),
            "key length does not match legs"
        );
        let mut t = Tensor::zero(alg, legs);
        t.add_term(key, &c);
        t
    }

    pub fn from_lie(alg: &Arc<LieAlgebra>, x: &LieElement) -> Tensor {
        let mut t = Tensor::zero(alg, 1);
        for (i, c) in x.coeffs() {
            t.add_term(pbw::gen_mono(alg.dim(), i).into_iter().collect(), c);
        }
        t
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.alg
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Scalar)> {
        self.terms.iter()
    }

    /// Exponent vector of leg `l` inside a key.
    pub fn leg_of<'a>(&self, key: &'a Key, l: usize) -> &'a [u8] {
        let d = self.alg.dim();
        &key[l * d..(l + 1) * d]
    }

    pub(crate) fn add_term(&mut self, key: Key, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn same_shape(&self, other: &Tensor) -> Result<()> {
        if !Arc::ptr_eq(&self.alg, &other.alg) {
            return Err(Error::AlgebraMismatch(
                self.alg.name().to_owned(),
                other.alg.name().to_owned(),
            ));
        }
        if self.legs != other.legs {
            return Err(Error::LegMismatch(format!(
                "{} vs {} legs",
                self.legs, other.legs
            )));
        }
        Ok(())
    }

    fn from_map(alg: &Arc<LieAlgebra>, legs: usize, acc: HashMap<Key, Scalar>) -> Tensor {
        Tensor {
            alg: alg.clone(),
            legs,
            terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        }
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        self.same_shape(other).expect("tensor add");
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor {
        self.scale_num(-GaussianRational::ONE)
    }

    pub fn scale(&self, s: &Scalar, order: Order) -> Tensor {
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.mul_trunc(s, order));
        }
        out
    }

    pub fn scale_num(&self, c: GaussianRational) -> Tensor {
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &v.scale(c));
        }
        out
    }

    pub fn truncate(&self, order: Order) -> Tensor {
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.truncate(order));
        }
        out
    }

    /// Lowest total parameter degree among the coefficients.
    pub fn min_param_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Scalar::min_degree).min()
    }

    pub fn max_param_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Scalar::max_degree).max()
    }

    /// Component of total parameter degree `d`.
    pub fn degree_part(&self, d: u32) -> Tensor {
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &c.degree_part(d));
        }
        out
    }

    /// Scalar coefficient of `1 ⊗ … ⊗ 1`.
    pub fn unit_coeff(&self) -> Scalar {
        let unit: Key = SmallVec::from_elem(0, self.legs * self.alg.dim());
        self.terms.get(&unit).cloned().unwrap_or_default()
    }

    /// Leg-wise product, dropping parameter degrees above `order`.
    pub fn mul(&self, other: &Tensor, order: Order) -> Tensor {
        self.try_mul(other, order).expect("tensor multiply")
    }

    pub fn try_mul(&self, other: &Tensor, order: Order) -> Result<Tensor> {
        self.same_shape(other)?;
        let d = self.alg.dim();
        let mut acc: HashMap<Key, Scalar> = HashMap::new();
        let other_min: Vec<(u32, &Key, &Scalar)> = other
            .terms
            .iter()
            .map(|(k, s)| (s.min_degree().unwrap_or(0), k, s))
            .collect();
        for (ka, sa) in &self.terms {
            let da = sa.min_degree().unwrap_or(0);
            for &(db, kb, sb) in &other_min {
                if !within(da + db, order) {
                    continue;
                }
                let s = sa.mul_trunc(sb, order);
                if s.is_zero() {
                    continue;
                }
                // per-leg expansions, then their cartesian product
                let mut partial: Vec<(Key, GaussianRational)> =
                    vec![(SmallVec::new(), GaussianRational::ONE)];
                for l in 0..self.legs {
                    let a: Mono = ka[l * d..(l + 1) * d].iter().copied().collect();
                    let b: Mono = kb[l * d..(l + 1) * d].iter().copied().collect();
                    let prod = pbw::mul_mono(&self.alg, &a, &b);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (pk, pc) in &partial {
                        for (m, c) in prod.iter() {
                            let mut k = pk.clone();
                            k.extend_from_slice(m);
                            next.push((k, *pc * *c));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    acc.entry(k).or_default().add_assign_scaled(&s, c);
                }
            }
        }
        Ok(Tensor::from_map(&self.alg, self.legs, acc))
    }

    /// `self ⊗ other` (legs concatenated).
    pub fn outer(&self, other: &Tensor, order: Order) -> Tensor {
        assert!(
            Arc::ptr_eq(&self.alg, &other.alg),
            "outer product across algebras"
        );
        let mut out = Tensor::zero(&self.alg, self.legs + other.legs);
        for (ka, sa) in &self.terms {
            for (kb, sb) in &other.terms {
                let s = sa.mul_trunc(sb, order);
                let mut k = ka.clone();
                k.extend_from_slice(kb);
                out.add_term(k, &s);
            }
        }
        out
    }

    /// Places leg `l` of `self` at position `positions[l]` of a
    /// `total`-leg tensor, with units elsewhere.
    pub fn embed(&self, positions: &[usize], total: usize) -> Result<Tensor> {
        if positions.len() != self.legs || positions.iter().any(|&p| p >= total) {
            return Err(Error::LegMismatch("bad embedding pattern".into()));
        }
        let d = self.alg.dim();
        let mut out = Tensor::zero(&self.alg, total);
        for (k, c) in &self.terms {
            let mut nk: Key = SmallVec::from_elem(0, total * d);
            for (l, &p) in positions.iter().enumerate() {
                nk[p * d..(p + 1) * d].copy_from_slice(&k[l * d..(l + 1) * d]);
            }
            out.add_term(nk, c);
        }
        Ok(out)
    }

    /// Reorders legs: leg `l` of the result is leg `perm[l]` of `self`.
    pub fn permute_legs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.legs);
        let d = self.alg.dim();
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, c) in &self.terms {
            let mut nk: Key = SmallVec::with_capacity(k.len());
            for &p in perm {
                nk.extend_from_slice(&k[p * d..(p + 1) * d]);
            }
            out.add_term(nk, c);
        }
        out
    }

    /// Swap of the two legs of a two-tensor.
    pub fn flip(&self) -> Tensor {
        self.permute_legs(&[1, 0])
    }

    /// Applies a linear map on monomials to leg `l`, which may change the
    /// number of legs by `new_legs - 1`.
    pub(crate) fn map_leg(
        &self,
        l: usize,
        new_legs: usize,
        order: Order,
        f: &dyn Fn(&Mono) -> Vec<(Key, GaussianRational)>,
    ) -> Tensor {
        let d = self.alg.dim();
        let total = self.legs - 1 + new_legs;
        let mut acc: HashMap<Key, Scalar> = HashMap::new();
        let mut memo: HashMap<Mono, Vec<(Key, GaussianRational)>> = HashMap::new();
        for (k, c) in &self.terms {
            let c = c.truncate(order);
            if c.is_zero() {
                continue;
            }
            let m: Mono = k[l * d..(l + 1) * d].iter().copied().collect();
            let img = memo.entry(m.clone()).or_insert_with(|| f(&m));
            for (mk, mc) in img.iter() {
                let mut nk: Key = SmallVec::with_capacity(total * d);
                nk.extend_from_slice(&k[..l * d]);
                nk.extend_from_slice(mk);
                nk.extend_from_slice(&k[(l + 1) * d..]);
                acc.entry(nk).or_default().add_assign_scaled(&c, *mc);
            }
        }
        Tensor::from_map(&self.alg, total, acc)
    }

    /// Multiplies legs `l` and `l+1` together: `a ⊗ b ↦ ab`.
    pub fn contract_legs(&self, l: usize) -> Tensor {
        assert!(l + 1 < self.legs, "contract needs two adjacent legs");
        let d = self.alg.dim();
        let mut acc: HashMap<Key, Scalar> = HashMap::new();
        for (k, c) in &self.terms {
            let a: Mono = k[l * d..(l + 1) * d].iter().copied().collect();
            let b: Mono = k[(l + 1) * d..(l + 2) * d].iter().copied().collect();
            for (m, mc) in pbw::mul_mono(&self.alg, &a, &b).iter() {
                let mut nk: Key = SmallVec::with_capacity(k.len() - d);
                nk.extend_from_slice(&k[..l * d]);
                nk.extend_from_slice(m);
                nk.extend_from_slice(&k[(l + 2) * d..]);
                acc.entry(nk).or_default().add_assign_scaled(c, *mc);
            }
        }
        Tensor::from_map(&self.alg, self.legs - 1, acc)
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: &dyn Fn(&Scalar) -> Result<Scalar>) -> Result<Tensor> {
        let mut out = Tensor::zero(&self.alg, self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// If every leg of every term has PBW degree exactly one, returns the
    /// generator indices per term; used to read r-matrices.
    pub fn linear_legs(&self) -> Option<Vec<(Vec<usize>, Scalar)>> {
        let d = self.alg.dim();
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            let mut gens = Vec::with_capacity(self.legs);
            for l in 0..self.legs {
                let leg = &k[l * d..(l + 1) * d];
                if pbw::mono_degree(leg) != 1 {
                    return None;
                }
                gens.push(leg.iter().position(|&e| e == 1).unwrap());
            }
            out.push((gens, c.clone()));
        }
        Some(out)
    }

    /// Renders a monomial with generator names, e.g. `e+^2 h`; `1` if empty.
    pub fn render_mono(&self, m: &[u8]) -> String {
        let parts: Vec<String> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let n = self.alg.generator_name(i);
                if e == 1 {
                    n.to_owned()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut lines: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> = (0..self.legs)
                    .map(|l| self.render_mono(self.leg_of(k, l)))
                    .collect();
                format!("({}) {}", c.render(), legs.join(" ⊗ "))
            })
            .collect();
        lines.sort();
        lines.join("\n")
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tensor[{} legs over {}]\n{}",
            self.legs,
            self.alg.name(),
            self.render()
        )
    }
}
