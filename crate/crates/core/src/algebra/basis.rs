use std::collections::BTreeMap;
use std::sync::Arc;

use super::lie::{BracketEntry, LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{GaussianRational, Scalar};

/// Linear map between two algebras given by the images of the source
/// generators.
#[derive(Clone, Debug)]
pub struct BasisMap {
    source: Arc<LieAlgebra>,
    target: Arc<LieAlgebra>,
    images: Vec<LieElement>,
}

impl BasisMap {
    pub fn new(
        source: Arc<LieAlgebra>,
        target: Arc<LieAlgebra>,
        images: Vec<LieElement>,
    ) -> Result<BasisMap> {
        if images.len() != source.dim() {
            return Err(Error::Definition(format!(
                "basis map needs {} images, got {}",
                source.dim(),
                images.len()
            )));
        }
        for im in &images {
            if let Some((i, _)) = im.coeffs().find(|&(i, _)| i >= target.dim()) {
                return Err(Error::UnknownGenerator(format!(
                    "#{i} in {}",
                    target.name()
                )));
            }
            if !im.is_parameter_free() {
                return Err(Error::Definition(
                    "basis map images must be parameter-free".into(),
                ));
            }
        }
        Ok(BasisMap {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> &Arc<LieAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<LieAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[LieElement] {
        &self.images
    }

    pub fn apply(&self, x: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, c) in x.coeffs() {
            out = out.add(&self.images[i].scale(c));
        }
        out
    }

    fn matrix(&self) -> linalg::Matrix {
        // column i holds the image of source generator i
        let mut m = vec![vec![GaussianRational::ZERO; self.source.dim()]; self.target.dim()];
        for (i, im) in self.images.iter().enumerate() {
            for (k, c) in im.coeffs() {
                m[k][i] = c.constant_term();
            }
        }
        m
    }

    /// Inverse map, computed by exact linear solve.
    pub fn inverse(&self) -> Result<BasisMap> {
        if self.source.dim() != self.target.dim() {
            return Err(Error::Definition("basis map is not square".into()));
        }
        let inv = linalg::invert(&self.matrix())
            .ok_or_else(|| Error::Definition("basis map is singular".into()))?;
        let n = self.source.dim();
        let images = (0..n)
            .map(|j| {
                let mut e = LieElement::zero();
                for (i, row) in inv.iter().enumerate() {
                    e.add_term(i, &Scalar::constant(row[j]));
                }
                e
            })
            .collect();
        BasisMap::new(self.target.clone(), self.source.clone(), images)
    }

    /// Source generator pairs whose bracket is not carried to the target
    /// bracket of the images.
    pub fn homomorphism_defects(&self) -> Vec<(String, String)> {
        let n = self.source.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.apply(
                    &self
                        .source
                        .bracket(&LieElement::generator(i), &LieElement::generator(j))
                        .unwrap(),
                );
                let rhs = self
                    .target
                    .bracket(&self.images[i], &self.images[j])
                    .unwrap();
                if lhs != rhs {
                    out.push((
                        self.source.generator_name(i).to_owned(),
                        self.source.generator_name(j).to_owned(),
                    ));
                }
            }
        }
        out
    }
}

/// Re-expresses `source` in a new basis.
///
/// `new_in_old[k]` gives new generator `k` as a combination of the old
/// ones. The returned algebra carries the old generators as aliases, and the
/// map sends old-basis elements to new-basis elements.
pub fn change_basis(
    source: &Arc<LieAlgebra>,
    name: &str,
    new_names: Vec<String>,
    new_in_old: Vec<LieElement>,
) -> Result<(Arc<LieAlgebra>, BasisMap)> {
    let n = source.dim();
    if new_names.len() != n || new_in_old.len() != n {
        return Err(Error::Definition(
            "basis change must keep the dimension".into(),
        ));
    }
    // Scratch algebra to host the coordinate map before brackets are known.
    let scratch = LieAlgebra::new(
        name,
        new_names.clone(),
        vec![],
        source.parameters().to_vec(),
    )?;
    let new_to_old = BasisMap::new(scratch, source.clone(), new_in_old.clone())?;
    let old_to_new = new_to_old.inverse()?;
    let mut entries = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let b = source.bracket(&new_in_old[i], &new_in_old[j])?;
            let b = old_to_new.apply(&b);
            if !b.is_zero() {
                entries.push(BracketEntry {
                    lhs: i,
                    rhs: j,
                    result: b.coeffs().map(|(k, c)| (k, c.constant_term())).collect(),
                });
            }
        }
    }
    let mut aliases = BTreeMap::new();
    for (i, img) in old_to_new.images().iter().enumerate() {
        let old = source.generator_name(i);
        // an old generator kept under the same name needs no alias
        if let Some(k) = new_names.iter().position(|n| n == old) {
            if *img != LieElement::generator(k) {
                return Err(Error::Definition(format!(
                    "`{old}` names different elements in the two bases"
                )));
            }
            continue;
        }
        aliases.insert(old.to_owned(), img.clone());
    }
    for (a, e) in source.aliases() {
        aliases.insert(a.clone(), old_to_new.apply(e));
    }
    let target = LieAlgebra::new(name, new_names, entries, source.parameters().to_vec())?
        .with_aliases(aliases)?;
    let map = BasisMap::new(source.clone(), target, old_to_new.images().to_vec())?;
    Ok((map.target().clone(), map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn change_basis_of_sl2_to_scaled_generators() {
        let one = GaussianRational::ONE;
        let gens = ["e", "h", "f"].iter().map(|s| s.to_string()).collect();
        let sl2 = LieAlgebra::new(
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
        .unwrap();
        // H = 2h gives [H, e] = 2e
        let new = vec![
            LieElement::generator(0),
            LieElement::generator(1).scale(&Scalar::int(2)),
            LieElement::generator(2),
        ];
        let (alg, map) = change_basis(
            &sl2,
            "sl2_std",
            vec!["E".into(), "H".into(), "F".into()],
            new,
        )
        .unwrap();
        let h = alg.element("H").unwrap();
        let e = alg.element("E").unwrap();
        assert_eq!(alg.bracket(&h, &e).unwrap(), e.scale(&Scalar::int(2)));
        assert!(map.homomorphism_defects().is_empty());
        assert_eq!(alg.element("h").unwrap(), h.scale(&Scalar::rational(1, 2)));
        let back = map.inverse().unwrap();
        for i in 0..3 {
            let g = LieElement::generator(i);
            assert_eq!(back.apply(&map.apply(&g)), g);
        }
    }
}
