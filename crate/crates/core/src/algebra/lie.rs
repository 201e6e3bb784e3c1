use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::enveloping::PbwCache;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, ParamSymbol, Scalar};

/// Linear combination of generators with [`Scalar`] coefficients.
///
/// Generators are addressed by their index in the owning algebra's PBW
/// order; the element itself does not hold the algebra.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LieElement {
    coeffs: BTreeMap<usize, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(index: usize) -> Self {
        Self::term(index, Scalar::one())
    }

    pub fn term(index: usize, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(index, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, index: usize) -> Scalar {
        self.coeffs.get(&index).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, index: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(index).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.coeffs.remove(&index);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (i, c) in other.coeffs() {
            out.add_term(i, c);
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&Scalar::int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        for (i, v) in self.coeffs() {
            out.add_term(i, &(v * c));
        }
        out
    }

    pub fn scale_num(&self, c: GaussianRational) -> LieElement {
        self.scale(&Scalar::constant(c))
    }

    /// True when every coefficient is a plain number (no parameters).
    pub fn is_parameter_free(&self) -> bool {
        self.coeffs
            .values()
            .all(|c| c.terms().all(|(m, _)| m.is_one()))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("({})*g{}", c.render(), i))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A finite-dimensional Lie algebra given by structure constants.
///
/// Generators are listed in PBW order. Only pairs with a nonzero bracket are
/// stored; every other pair commutes.
pub struct LieAlgebra {
    name: String,
    generators: Vec<String>,
    index: HashMap<String, usize>,
    /// Dense antisymmetric table: `table[i][j]` is `[x_i, x_j]`.
    table: Vec<Vec<Vec<(usize, GaussianRational)>>>,
    aliases: BTreeMap<String, LieElement>,
    parameters: Vec<ParamSymbol>,
    pub(crate) cache: PbwCache,
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieAlgebra")
            .field("name", &self.name)
            .field("generators", &self.generators)
            .finish()
    }
}

/// One structure constant entry `[lhs, rhs] = Σ c_k x_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketEntry {
    pub lhs: usize,
    pub rhs: usize,
    pub result: Vec<(usize, GaussianRational)>,
}

impl LieAlgebra {
    /// Builds an algebra from explicit brackets. Each unordered pair may be
    /// listed at most once; the opposite order is implied by antisymmetry.
    pub fn new(
        name: &str,
        generators: Vec<String>,
        brackets: Vec<BracketEntry>,
        parameters: Vec<ParamSymbol>,
    ) -> Result<Arc<LieAlgebra>> {
        let n = generators.len();
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.clone(), i).is_some() {
                return Err(Error::Definition(format!("duplicate generator `{g}`")));
            }
        }
        if n > u8::MAX as usize {
            return Err(Error::Definition("too many generators".into()));
        }
        let mut table = vec![vec![Vec::new(); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for b in brackets {
            if b.lhs >= n || b.rhs >= n || b.result.iter().any(|&(k, _)| k >= n) {
                return Err(Error::Definition(
                    "bracket refers to a missing generator".into(),
                ));
            }
            if b.lhs == b.rhs {
                if b.result.iter().any(|(_, c)| !c.is_zero()) {
                    return Err(Error::Definition(format!(
                        "[{0}, {0}] must vanish",
                        generators[b.lhs]
                    )));
                }
                continue;
            }
            if seen[b.lhs][b.rhs] {
                return Err(Error::Definition(format!(
                    "bracket [{}, {}] listed twice",
                    generators[b.lhs], generators[b.rhs]
                )));
            }
            seen[b.lhs][b.rhs] = true;
            seen[b.rhs][b.lhs] = true;
            let mut acc: BTreeMap<usize, GaussianRational> = BTreeMap::new();
            for (k, c) in b.result {
                *acc.entry(k).or_insert(GaussianRational::ZERO) += c;
            }
            let pos: Vec<(usize, GaussianRational)> =
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            let neg = pos.iter().map(|&(k, c)| (k, -c)).collect();
            table[b.lhs][b.rhs] = pos;
            table[b.rhs][b.lhs] = neg;
        }
        Ok(Arc::new(LieAlgebra {
            name: name.to_owned(),
            generators,
            index,
            table,
            aliases: BTreeMap::new(),
            parameters,
            cache: PbwCache::default(),
        }))
    }

    pub(crate) fn with_aliases(
        self: Arc<Self>,
        aliases: BTreeMap<String, LieElement>,
    ) -> Result<Arc<LieAlgebra>> {
        let mut alg = Arc::try_unwrap(self)
            .map_err(|_| Error::Definition("algebra already shared".into()))?;
        for name in aliases.keys() {
            if alg.index.contains_key(name) {
                return Err(Error::Definition(format!(
                    "alias `{name}` shadows a generator"
                )));
            }
        }
        alg.aliases = aliases;
        Ok(Arc::new(alg))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.generators[i]
    }

    pub fn parameters(&self) -> &[ParamSymbol] {
        &self.parameters
    }

    pub fn aliases(&self) -> &BTreeMap<String, LieElement> {
        &self.aliases
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    /// Resolves a generator or alias name (`P0`, `N3`, ...) to an element.
    pub fn element(&self, name: &str) -> Result<LieElement> {
        if let Some(&i) = self.index.get(name) {
            return Ok(LieElement::generator(i));
        }
        self.aliases
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownGenerator(name.to_owned()))
    }

    /// `[x_i, x_j]` on basis generators.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, GaussianRational)] {
        &self.table[i][j]
    }

    /// All stored nonzero brackets with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<BracketEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                if !self.table[i][j].is_empty() {
                    out.push(BracketEntry {
                        lhs: i,
                        rhs: j,
                        result: self.table[i][j].clone(),
                    });
                }
            }
        }
        out
    }

    fn check_element(&self, x: &LieElement) -> Result<()> {
        match x.coeffs().find(|&(i, _)| i >= self.dim()) {
            Some((i, _)) => Err(Error::UnknownGenerator(format!("#{i} in {}", self.name))),
            None => Ok(()),
        }
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let mut out = LieElement::zero();
        for (i, a) in x.coeffs() {
            for (j, b) in y.coeffs() {
                let ab = a * b;
                for &(k, c) in &self.table[i][j] {
                    out.add_term(k, &ab.scale(c));
                }
            }
        }
        Ok(out)
    }

    /// Every basis triple `i < j < k` whose Jacobiator is nonzero.
    pub fn jacobi_check(&self) -> Vec<JacobiViolation> {
        let n = self.dim();
        let mut out = Vec::new();
        let g = LieElement::generator;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let t1 = self
                        .bracket(&self.bracket(&g(i), &g(j)).unwrap(), &g(k))
                        .unwrap();
                    let t2 = self
                        .bracket(&self.bracket(&g(j), &g(k)).unwrap(), &g(i))
                        .unwrap();
                    let t3 = self
                        .bracket(&self.bracket(&g(k), &g(i)).unwrap(), &g(j))
                        .unwrap();
                    let sum = t1.add(&t2).add(&t3);
                    if !sum.is_zero() {
                        out.push(JacobiViolation {
                            triple: [
                                self.generators[i].clone(),
                                self.generators[j].clone(),
                                self.generators[k].clone(),
                            ],
                            jacobiator: self.render(&sum),
                        });
                    }
                }
            }
        }
        out
    }

    /// Renders an element with generator names, e.g. `2*h + i*e+`.
    pub fn render(&self, x: &LieElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.coeffs()
            .map(|(i, c)| {
                if c.is_one() {
                    self.generators[i].clone()
                } else {
                    format!("({})*{}", c.render(), self.generators[i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Copy with one structure constant replaced; used to build corrupted
    /// algebras in tests and mutation runs.
    pub fn with_bracket(
        &self,
        lhs: usize,
        rhs: usize,
        result: Vec<(usize, GaussianRational)>,
    ) -> Result<Arc<LieAlgebra>> {
        let mut entries: Vec<BracketEntry> = self
            .nonzero_brackets()
            .into_iter()
            .filter(|b| !((b.lhs == lhs && b.rhs == rhs) || (b.lhs == rhs && b.rhs == lhs)))
            .collect();
        entries.push(BracketEntry { lhs, rhs, result });
        let alg = LieAlgebra::new(
            &self.name,
            self.generators.clone(),
            entries,
            self.parameters.clone(),
        )?;
        alg.with_aliases(self.aliases.clone())
    }
}

/// A basis triple violating the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: [String; 3],
    pub jacobiator: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl2() -> Arc<LieAlgebra> {
        let gens = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        let one = GaussianRational::ONE;
        LieAlgebra::new(
            "sl2",
            gens,
            vec![
                BracketEntry {
                    lhs: 1,
                    rhs: 0,
                    result: vec![(0, one)],
                },
                BracketEntry {
                    lhs: 1,
                    rhs: 2,
                    result: vec![(2, -one)],
                },
                BracketEntry {
                    lhs: 0,
                    rhs: 2,
                    result: vec![(1, GaussianRational::from_int(2))],
                },
            ],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn antisymmetry_is_implied() {
        let a = sl2();
        let e = LieElement::generator(0);
        let h = LieElement::generator(1);
        assert_eq!(a.bracket(&h, &e).unwrap(), e);
        assert_eq!(a.bracket(&e, &h).unwrap(), e.scale(&Scalar::int(-1)));
        assert!(a.bracket(&h, &h).unwrap().is_zero());
    }

    #[test]
    fn jacobi_detects_corruption() {
        let a = sl2();
        assert!(a.jacobi_check().is_empty());
        // [h, e] = f instead of e
        let bad = a
            .with_bracket(1, 0, vec![(2, GaussianRational::ONE)])
            .unwrap();
        assert!(!bad.jacobi_check().is_empty());
    }

    #[test]
    fn rejects_bad_definitions() {
        let gens: Vec<String> = vec!["x".into(), "x".into()];
        assert!(LieAlgebra::new("dup", gens, vec![], vec![]).is_err());
        let gens: Vec<String> = vec!["x".into()];
        let b = BracketEntry {
            lhs: 0,
            rhs: 3,
            result: vec![],
        };
        assert!(LieAlgebra::new("oob", gens, vec![b], vec![]).is_err());
    }

    #[test]
    fn unknown_generator_errors() {
        let a = sl2();
        assert!(matches!(a.element("zz"), Err(Error::UnknownGenerator(_))));
        assert!(a
            .bracket(&LieElement::generator(9), &LieElement::generator(0))
            .is_err());
    }
}
