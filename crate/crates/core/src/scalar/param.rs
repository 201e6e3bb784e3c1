use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Interned deformation-parameter symbol (α, β, γ, ...).
///
/// Ids are process-global and assigned on first use. Anything user-visible
/// is ordered by name, never by id, so the assignment order does not leak
/// into reports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Param(u32);

struct Interner {
    ids: HashMap<&'static str, u32>,
    names: Vec<&'static str>,
}

fn interner() -> &'static RwLock<Interner> {
    static INTERNER: OnceLock<RwLock<Interner>> = OnceLock::new();
    INTERNER.get_or_init(|| {
        RwLock::new(Interner {
            ids: HashMap::new(),
            names: Vec::new(),
        })
    })
}

impl Param {
    pub fn new(name: &str) -> Param {
        if let Some(&id) = interner().read().unwrap().ids.get(name) {
            return Param(id);
        }
        let mut guard = interner().write().unwrap();
        if let Some(&id) = guard.ids.get(name) {
            return Param(id);
        }
        let id = guard.names.len() as u32;
        let leaked: &'static str = Box::leak(name.to_owned().into_boxed_str());
        guard.names.push(leaked);
        guard.ids.insert(leaked, id);
        Param(id)
    }

    pub fn name(self) -> &'static str {
        interner().read().unwrap().names[self.0 as usize]
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How complex conjugation acts on a parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reality {
    Real,
    Imaginary,
    Free,
}

/// A declared parameter: a name plus its reality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamSymbol {
    pub name: String,
    pub reality: Reality,
}

impl ParamSymbol {
    pub fn new(name: &str, reality: Reality) -> Self {
        ParamSymbol {
            name: name.to_owned(),
            reality,
        }
    }

    pub fn param(&self) -> Param {
        Param::new(&self.name)
    }
}

/// Monomial in the deformation parameters, e.g. `alpha^2*beta`.
///
/// Stored as `(param, exponent)` pairs sorted by param id with no zero
/// exponents; the empty monomial is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ParamMono(SmallVec<[(Param, u16); 3]>);

impl ParamMono {
    pub fn one() -> Self {
        ParamMono(SmallVec::new())
    }

    pub fn var(p: Param) -> Self {
        Self::pow(p, 1)
    }

    pub fn pow(p: Param, exp: u16) -> Self {
        let mut v = SmallVec::new();
        if exp > 0 {
            v.push((p, exp));
        }
        ParamMono(v)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Param, u16)>) -> Self {
        pairs.into_iter().fold(ParamMono::one(), |acc, (p, e)| {
            acc.mul(&ParamMono::pow(p, e))
        })
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    pub fn exponent(&self, p: Param) -> u16 {
        self.0
            .iter()
            .find(|(q, _)| *q == p)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn factors(&self) -> impl Iterator<Item = (Param, u16)> + '_ {
        self.0.iter().copied()
    }

    pub fn mul(&self, other: &ParamMono) -> ParamMono {
        if other.0.is_empty() {
            return self.clone();
        }
        if self.0.is_empty() {
            return other.clone();
        }
        let mut out = SmallVec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            match a.cmp(&b) {
                std::cmp::Ordering::Less => {
                    out.push((a, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((b, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        ParamMono(out)
    }

    /// Exact division; `None` if any exponent would go negative.
    pub fn div(&self, other: &ParamMono) -> Option<ParamMono> {
        let mut out: SmallVec<[(Param, u16); 3]> = self.0.clone();
        for &(p, e) in other.0.iter() {
            let slot = out.iter_mut().find(|(q, _)| *q == p)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        out.retain(|(_, e)| *e > 0);
        Some(ParamMono(out))
    }

    /// Canonical rendering with factors sorted by name, e.g. `alpha^2*beta`.
    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_owned();
        }
        let mut parts: Vec<(&str, u16)> = self.0.iter().map(|&(p, e)| (p.name(), e)).collect();
        parts.sort();
        parts
            .iter()
            .map(|&(n, e)| {
                if e == 1 {
                    n.to_owned()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for ParamMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        assert_eq!(Param::new("alpha"), Param::new("alpha"));
        assert_ne!(Param::new("alpha"), Param::new("beta"));
        assert_eq!(Param::new("gamma_1").name(), "gamma_1");
    }

    #[test]
    fn mono_mul_div() {
        let a = Param::new("alpha");
        let b = Param::new("beta");
        let m = ParamMono::pow(a, 2).mul(&ParamMono::var(b));
        assert_eq!(m.degree(), 3);
        assert_eq!(m.render(), "alpha^2*beta");
        assert_eq!(m.div(&ParamMono::pow(a, 2)), Some(ParamMono::var(b)));
        assert_eq!(m.div(&ParamMono::pow(b, 2)), None);
    }
}
