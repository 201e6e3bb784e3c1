//! Two commuting q-deformed `sl(2)` copies with normal-ordered monomials
//! `E₋^a · Π_b q_b^{g_b H} · E₊^c` per copy.

use std::collections::BTreeMap;
use std::fmt;

use super::scalar::{LPoly, QScalar, QVar, NVARS};
use crate::error::{Error, Result};

/// Group-like exponents per base `q_{z+}, q_{z−}, q_γ, q_ξ` for one copy.
pub type Cartan = [i32; 4];

/// One copy's normal-ordered factor `E₋^lower · q^{cartan·H} · E₊^upper`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CopyMono {
    pub lower: u16,
    pub cartan: Cartan,
    pub upper: u16,
}

impl CopyMono {
    pub fn is_one(&self) -> bool {
        *self == CopyMono::default()
    }

    /// Eigenvalue of `H` under the adjoint action.
    pub fn weight(&self) -> i32 {
        self.upper as i32 - self.lower as i32
    }
}

/// Product of the two copies' factors; copies commute.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QMonomial(pub [CopyMono; 2]);

impl QMonomial {
    pub fn one() -> QMonomial {
        QMonomial::default()
    }

    pub fn e_plus(copy: usize) -> QMonomial {
        let mut m = QMonomial::one();
        m.0[copy].upper = 1;
        m
    }

    pub fn e_minus(copy: usize) -> QMonomial {
        let mut m = QMonomial::one();
        m.0[copy].lower = 1;
        m
    }

    /// `q_b^{power·H_copy}`.
    pub fn group_like(copy: usize, base: QVar, power: i32) -> QMonomial {
        let mut m = QMonomial::one();
        m.0[copy].cartan[base.index()] = power;
        m
    }

    pub fn from_cartan(cartan: [Cartan; 2]) -> QMonomial {
        let mut m = QMonomial::one();
        m.0[0].cartan = cartan[0];
        m.0[1].cartan = cartan[1];
        m
    }

    pub fn is_group_like(&self) -> bool {
        self.0.iter().all(|c| c.lower == 0 && c.upper == 0)
    }

    /// Monomial degree in the `E` generators.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|c| (c.lower + c.upper) as u32).sum()
    }

    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate() {
            let copy = k + 1;
            match c.lower {
                0 => {}
                1 => parts.push(format!("E{copy}-")),
                n => parts.push(format!("E{copy}-^{n}")),
            }
            for b in QVar::BASES {
                match c.cartan[b.index()] {
                    0 => {}
                    1 => parts.push(format!("{}^H{copy}", b.symbol())),
                    n => parts.push(format!("{}^({n}H{copy})", b.symbol())),
                }
            }
            match c.upper {
                0 => {}
                1 => parts.push(format!("E{copy}+")),
                n => parts.push(format!("E{copy}+^{n}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// The algebra: per copy, the base `q` of `[E₊, E₋] = (q^{2H} − q^{−2H})/(q − q⁻¹)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QAlgebra {
    pub relation_base: [QVar; 2],
}

fn base_monomial(exps: &Cartan, scale: i32) -> QScalar {
    let mut e = [0; NVARS];
    for (i, &g) in exps.iter().enumerate() {
        e[i] = g * scale;
    }
    QScalar::from_poly(LPoly::monomial(e, crate::scalar::GaussianRational::ONE))
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, QScalar>, k: K, c: QScalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl QAlgebra {
    /// `x·y` within one copy, normal-ordered.
    pub fn mul_copy(&self, copy: usize, x: &CopyMono, y: &CopyMono) -> BTreeMap<CopyMono, QScalar> {
        let q = self.relation_base[copy];
        let mut cur: BTreeMap<CopyMono, QScalar> = BTreeMap::new();
        cur.insert(*x, QScalar::one());
        for _ in 0..y.lower {
            cur = right_mul_lower(q, cur);
        }
        if y.cartan != [0; 4] {
            let mut next = BTreeMap::new();
            for (m, c) in cur {
                // E₊^c q^{h·H} = Π q_b^{−c·h_b} q^{h·H} E₊^c
                let f = base_monomial(&y.cartan, -(m.upper as i32));
                let mut n = m;
                for i in 0..4 {
                    n.cartan[i] += y.cartan[i];
                }
                add_into(&mut next, n, c.mul(&f));
            }
            cur = next;
        }
        if y.upper > 0 {
            cur = cur
                .into_iter()
                .map(|(mut m, c)| {
                    m.upper += y.upper;
                    (m, c)
                })
                .collect();
        }
        cur
    }

    pub fn mul_mono(&self, x: &QMonomial, y: &QMonomial) -> BTreeMap<QMonomial, QScalar> {
        let a = self.mul_copy(0, &x.0[0], &y.0[0]);
        let b = self.mul_copy(1, &x.0[1], &y.0[1]);
        let mut out = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                add_into(&mut out, QMonomial([*ma, *mb]), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul(&self, x: &QTensor, y: &QTensor) -> Result<QTensor> {
        if x.legs != y.legs {
            return Err(Error::LegMismatch(format!("{} vs {} legs", x.legs, y.legs)));
        }
        let mut out = QTensor::zero(x.legs);
        for (kx, cx) in &x.terms {
            for (ky, cy) in &y.terms {
                let mut partial: BTreeMap<Vec<QMonomial>, QScalar> = BTreeMap::new();
                partial.insert(Vec::with_capacity(x.legs), cx.mul(cy));
                for leg in 0..x.legs {
                    let prod = self.mul_mono(&kx[leg], &ky[leg]);
                    let mut next = BTreeMap::new();
                    for (key, c) in &partial {
                        for (m, cm) in &prod {
                            let mut k = key.clone();
                            k.push(*m);
                            add_into(&mut next, k, c.mul(cm));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    out.add_term(k, c);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, x: &QTensor, n: u32) -> Result<QTensor> {
        let mut acc = QTensor::one(x.legs);
        for _ in 0..n {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `xy − yx`.
    pub fn commutator(&self, x: &QTensor, y: &QTensor) -> Result<QTensor> {
        Ok(self.mul(x, y)?.sub(&self.mul(y, x)?))
    }
}

/// `(E₋^a K^g E₊^c)·E₋ = Π q_b^{−g_b} E₋^{a+1} K^g E₊^c + E₋^a K^g X_c E₊^{c−1}`
/// with `X_c = (q^{2H} Σ_{j<c} q^{−2j} − q^{−2H} Σ_{j<c} q^{2j})/(q − q⁻¹)`.
fn right_mul_lower(q: QVar, cur: BTreeMap<CopyMono, QScalar>) -> BTreeMap<CopyMono, QScalar> {
    let mut next = BTreeMap::new();
    let qi = q.index();
    let inv = QScalar::inv_q_difference(q);
    for (m, c) in cur {
        let shift = base_monomial(&m.cartan, -1);
        let mut n = m;
        n.lower += 1;
        add_into(&mut next, n, c.mul(&shift));
        if m.upper > 0 {
            let mut s_minus = LPoly::zero();
            let mut s_plus = LPoly::zero();
            for j in 0..m.upper as i32 {
                s_minus = s_minus.add(&LPoly::var_pow(q, -2 * j));
                s_plus = s_plus.add(&LPoly::var_pow(q, 2 * j));
            }
            let mut up = m;
            up.upper -= 1;
            up.cartan[qi] += 2;
            add_into(&mut next, up, c.mul(&QScalar::from_poly(s_minus)).mul(&inv));
            let mut down = m;
            down.upper -= 1;
            down.cartan[qi] -= 2;
            add_into(
                &mut next,
                down,
                c.mul(&QScalar::from_poly(s_plus)).mul(&inv).neg(),
            );
        }
    }
    next
}

/// Element of the `legs`-fold tensor power; `legs = 1` is a plain element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QTensor {
    legs: usize,
    terms: BTreeMap<Vec<QMonomial>, QScalar>,
}

pub type QElement = QTensor;

impl QTensor {
    pub fn zero(legs: usize) -> QTensor {
        QTensor {
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(legs: usize) -> QTensor {
        QTensor::term(vec![QMonomial::one(); legs], QScalar::one())
    }

    pub fn term(key: Vec<QMonomial>, c: QScalar) -> QTensor {
        let mut t = QTensor::zero(key.len());
        t.add_term(key, c);
        t
    }

    pub fn mono(m: QMonomial) -> QElement {
        QTensor::term(vec![m], QScalar::one())
    }

    pub fn scalar(legs: usize, c: QScalar) -> QTensor {
        QTensor::term(vec![QMonomial::one(); legs], c)
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<QMonomial>, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[QMonomial]) -> QScalar {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: Vec<QMonomial>, c: QScalar) {
        assert_eq!(key.len(), self.legs, "term has the wrong number of legs");
        add_into(&mut self.terms, key, c);
    }

    pub fn add(&self, o: &QTensor) -> QTensor {
        assert_eq!(self.legs, o.legs, "leg mismatch");
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &QTensor) -> QTensor {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> QTensor {
        self.scale(&QScalar::int(-1))
    }

    pub fn scale(&self, c: &QScalar) -> QTensor {
        let mut out = QTensor::zero(self.legs);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.mul(c));
        }
        out
    }

    /// `x ⊗ y`.
    pub fn outer(&self, o: &QTensor) -> QTensor {
        let mut out = QTensor::zero(self.legs + o.legs);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                out.add_term(k, c1.mul(c2));
            }
        }
        out
    }

    /// Reverses the order of the legs.
    pub fn reverse_legs(&self) -> QTensor {
        let mut out = QTensor::zero(self.legs);
        for (k, c) in &self.terms {
            let mut k = k.clone();
            k.reverse();
            out.add_term(k, c.clone());
        }
        out
    }

    /// Drops terms whose total `E`-degree exceeds `max`.
    pub fn truncate_degree(&self, max: u32) -> QTensor {
        let mut out = QTensor::zero(self.legs);
        for (k, c) in &self.terms {
            if k.iter().map(QMonomial::degree).sum::<u32>() <= max {
                out.add_term(k.clone(), c.clone());
            }
        }
        out
    }

    /// Truncates every coefficient at degree `max` in `λ`.
    pub fn truncate_lambda(&self, max: u32) -> QTensor {
        self.map_coeffs(&|c| c.truncate_var(QVar::Lambda, max as i32))
    }

    /// Applies `f` to every term; `f` returns the image of a single leg tuple.
    pub fn map_terms(
        &self,
        legs: usize,
        f: &mut dyn FnMut(&[QMonomial]) -> Result<QTensor>,
    ) -> Result<QTensor> {
        let mut out = QTensor::zero(legs);
        for (k, c) in &self.terms {
            let img = f(k)?;
            if img.legs != legs {
                return Err(Error::LegMismatch(format!(
                    "image has {} legs, expected {legs}",
                    img.legs
                )));
            }
            out = out.add(&img.scale(c));
        }
        Ok(out)
    }

    pub fn map_coeffs(&self, f: &dyn Fn(&QScalar) -> QScalar) -> QTensor {
        let mut out = QTensor::zero(self.legs);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let lines: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let legs: Vec<String> = k.iter().map(QMonomial::render).collect();
                format!("[{}] {}", c, legs.join(" ⊗ "))
            })
            .collect();
        lines.join("\n")
    }
}

impl fmt::Display for QTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
