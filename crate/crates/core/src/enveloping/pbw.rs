//! Straightening of products of PBW monomials.
//!
//! A monomial is an exponent vector over the algebra's generators in PBW
//! order. Products are normal-ordered by moving generators left past larger
//! ones, each swap `x_j x_i = x_i x_j + [x_j, x_i]` adding bracket terms of
//! lower degree. Results are memoized per algebra.

use std::collections::HashMap;
use std::sync::Arc;

use dashmap::DashMap;
use smallvec::SmallVec;

use crate::algebra::LieAlgebra;
use crate::scalar::GaussianRational;

pub type Mono = SmallVec<[u8; 12]>;

pub(crate) type Expansion = Arc<Vec<(Mono, GaussianRational)>>;

/// Memo tables for straightening, shared by every element of an algebra.
#[derive(Default)]
pub struct PbwCache {
    by_gen: DashMap<(Mono, u8), Expansion>,
    by_mono: DashMap<(Mono, Mono), Expansion>,
}

impl PbwCache {
    pub fn len(&self) -> usize {
        self.by_gen.len() + self.by_mono.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn unit_mono(dim: usize) -> Mono {
    SmallVec::from_elem(0, dim)
}

pub fn gen_mono(dim: usize, i: usize) -> Mono {
    let mut m = unit_mono(dim);
    m[i] = 1;
    m
}

pub fn mono_degree(m: &[u8]) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

fn accumulate(acc: &mut HashMap<Mono, GaussianRational>, m: Mono, c: GaussianRational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(m).or_insert(GaussianRational::ZERO);
    *e += c;
}

fn finish(acc: HashMap<Mono, GaussianRational>) -> Expansion {
    let mut v: Vec<(Mono, GaussianRational)> =
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Arc::new(v)
}

/// `m · x_g` in normal order.
pub fn mul_mono_gen(alg: &LieAlgebra, m: &Mono, g: usize) -> Expansion {
    let top = m.iter().rposition(|&e| e > 0);
    if top.is_none_or(|j| g >= j) {
        let mut out = m.clone();
        out[g] += 1;
        return Arc::new(vec![(out, GaussianRational::ONE)]);
    }
    let key = (m.clone(), g as u8);
    if let Some(hit) = alg.cache.by_gen.get(&key) {
        return hit.clone();
    }
    let j = top.unwrap();
    let mut rest = m.clone();
    rest[j] -= 1;
    let mut acc = HashMap::new();
    // rest · x_j · x_g = (rest · x_g) · x_j + rest · [x_j, x_g]
    for (m2, c2) in mul_mono_gen(alg, &rest, g).iter() {
        for (m3, c3) in mul_mono_gen(alg, m2, j).iter() {
            accumulate(&mut acc, m3.clone(), *c2 * *c3);
        }
    }
    for &(k, ck) in alg.bracket_basis(j, g) {
        for (m2, c2) in mul_mono_gen(alg, &rest, k).iter() {
            accumulate(&mut acc, m2.clone(), ck * *c2);
        }
    }
    let out = finish(acc);
    alg.cache.by_gen.insert(key, out.clone());
    out
}

/// `a · b` for normal-ordered monomials.
pub fn mul_mono(alg: &LieAlgebra, a: &Mono, b: &Mono) -> Expansion {
    let a_top = a.iter().rposition(|&e| e > 0);
    let b_low = b.iter().position(|&e| e > 0);
    match (a_top, b_low) {
        (_, None) => return Arc::new(vec![(a.clone(), GaussianRational::ONE)]),
        (None, _) => return Arc::new(vec![(b.clone(), GaussianRational::ONE)]),
        (Some(t), Some(l)) if t <= l => {
            let m: Mono = a.iter().zip(b.iter()).map(|(x, y)| x + y).collect();
            return Arc::new(vec![(m, GaussianRational::ONE)]);
        }
        _ => {}
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = alg.cache.by_mono.get(&key) {
        return hit.clone();
    }
    let mut cur: HashMap<Mono, GaussianRational> = HashMap::new();
    cur.insert(a.clone(), GaussianRational::ONE);
    for (g, &e) in b.iter().enumerate() {
        for _ in 0..e {
            let mut next = HashMap::new();
            for (m, c) in cur {
                for (m2, c2) in mul_mono_gen(alg, &m, g).iter() {
                    accumulate(&mut next, m2.clone(), c * *c2);
                }
            }
            cur = next;
        }
    }
    let out = finish(cur);
    alg.cache.by_mono.insert(key, out.clone());
    out
}
