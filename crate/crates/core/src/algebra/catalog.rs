//! Bundled algebras and the basis maps between them.
//!
//! Each catalog algebra is built once per process and shared, so tensors
//! built from separate lookups can be combined directly.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use super::basis::{change_basis, BasisMap};
use super::file::AlgebraFile;
use super::involution::InvolutionSpec;
use super::lie::{LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

pub const LORENTZ_CANONICAL: &str = "lorentz_canonical";
pub const LORENTZ_COMPLEX: &str = "lorentz_complex";
pub const POINCARE: &str = "poincare";
pub const POINCARE_PHYSICAL: &str = "poincare_physical";

pub const ALGEBRA_NAMES: [&str; 4] = [
    LORENTZ_CANONICAL,
    LORENTZ_COMPLEX,
    POINCARE,
    POINCARE_PHYSICAL,
];

pub const MAP_NAMES: [&str; 3] = [
    "canonical_to_complex",
    "cartan_automorphism",
    "physical_to_canonical",
];

/// Raw JSON of a bundled algebra file.
pub fn algebra_source(name: &str) -> Result<&'static str> {
    Ok(match name {
        LORENTZ_CANONICAL => include_str!("../../data/lorentz_canonical.json"),
        LORENTZ_COMPLEX => include_str!("../../data/lorentz_complex.json"),
        POINCARE => include_str!("../../data/poincare.json"),
        POINCARE_PHYSICAL => include_str!("../../data/poincare_physical.json"),
        _ => return Err(Error::UnknownName(name.to_owned())),
    })
}

type Entry = (Arc<LieAlgebra>, InvolutionSpec);

fn load(name: &str) -> Entry {
    let file = AlgebraFile::parse(algebra_source(name).unwrap()).expect("bundled algebra parses");
    let (alg, star) = file.build().expect("bundled algebra builds");
    (alg, star.expect("bundled algebras declare a star"))
}

fn entry(name: &str) -> Result<&'static Entry> {
    static CELLS: [OnceLock<Entry>; 4] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    let i = ALGEBRA_NAMES
        .iter()
        .position(|&n| n == name)
        .ok_or_else(|| Error::UnknownName(name.to_owned()))?;
    Ok(CELLS[i].get_or_init(|| load(name)))
}

/// One of the bundled algebras, shared process-wide.
pub fn algebra(name: &str) -> Result<Arc<LieAlgebra>> {
    Ok(entry(name)?.0.clone())
}

/// The `*`-involution declared with a bundled algebra (direct lifting).
pub fn star(name: &str) -> Result<InvolutionSpec> {
    Ok(entry(name)?.1.clone())
}

fn lin(alg: &LieAlgebra, terms: &[(&str, GaussianRational)]) -> LieElement {
    let mut e = LieElement::zero();
    for &(g, c) in terms {
        e = e.add(
            &alg.element(g)
                .expect("catalog generator")
                .scale(&Scalar::constant(c)),
        );
    }
    e
}

fn q(p: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(p, d)
}

fn iq(p: i64, d: i64) -> GaussianRational {
    GaussianRational::I * GaussianRational::ratio(p, d)
}

/// Canonical Poincaré generators in terms of the physical ones, in the
/// canonical PBW order.
///
/// `sign` multiplies `h'` and `e'±`. With `sign = 1` this is the textbook
/// assignment `h' = −ιM₃, e'± = ι(±N₂ − M₁)`; the catalog uses `sign = −1`,
/// which gives `[e'₊, P₂] = −P₊` as the momentum r-matrices require.
/// Flipping `h', e'±` together is an automorphism of the Lorentz relations.
fn canonical_in_physical(phys: &LieAlgebra, sign: i64) -> Vec<LieElement> {
    let s = sign;
    vec![
        lin(phys, &[("P0", q(1, 1)), ("P3", q(1, 1))]),
        lin(phys, &[("P0", q(1, 1)), ("P3", q(-1, 1))]),
        lin(phys, &[("P1", q(1, 1))]),
        lin(phys, &[("P2", q(1, 1))]),
        lin(phys, &[("N1", iq(1, 1)), ("M2", iq(1, 1))]),
        lin(phys, &[("N2", iq(s, 1)), ("M1", iq(-s, 1))]),
        lin(phys, &[("N3", iq(1, 1))]),
        lin(phys, &[("M3", iq(-s, 1))]),
        lin(phys, &[("N1", iq(1, 1)), ("M2", iq(-1, 1))]),
        lin(phys, &[("N2", iq(-s, 1)), ("M1", iq(-s, 1))]),
    ]
}

const POINCARE_GENERATORS: [&str; 10] =
    ["P+", "P-", "P1", "P2", "e+", "e'+", "h", "h'", "e-", "e'-"];

/// Builds the canonical Poincaré algebra from the physical one.
///
/// The bundled `poincare` file is checked against this derivation in the
/// test suite. The returned algebra is a fresh instance, not the shared one.
pub fn derive_poincare(sign: i64) -> Result<(Arc<LieAlgebra>, InvolutionSpec)> {
    let phys = algebra(POINCARE_PHYSICAL)?;
    let names = POINCARE_GENERATORS.iter().map(|s| s.to_string()).collect();
    let (alg, map) = change_basis(&phys, POINCARE, names, canonical_in_physical(&phys, sign))?;
    let star = star(POINCARE_PHYSICAL)?.transport(&map)?;
    // P0 and P3 are already present as aliases of the old generators.
    Ok((alg, star))
}

/// Complex generators in terms of the canonical Lorentz ones:
/// `H₁ = ½(h + ιh')`, `E₁± = ½(e± + ιe'±)`, and the conjugate copy.
fn complex_in_canonical(can: &LieAlgebra) -> Vec<LieElement> {
    let half = q(1, 2);
    let ihalf = iq(1, 2);
    vec![
        lin(can, &[("e+", half), ("e'+", ihalf)]),
        lin(can, &[("e+", half), ("e'+", -ihalf)]),
        lin(can, &[("h", half), ("h'", ihalf)]),
        lin(can, &[("h", half), ("h'", -ihalf)]),
        lin(can, &[("e-", half), ("e'-", ihalf)]),
        lin(can, &[("e-", half), ("e'-", -ihalf)]),
    ]
}

/// A named linear map between catalog algebras.
///
/// * `physical_to_canonical`: `poincare_physical → poincare`
/// * `canonical_to_complex`: `lorentz_canonical → lorentz_complex`, the
///   inverse of the complexification, obtained by a linear solve
/// * `cartan_automorphism`: `E₂± → E₂∓, H₂ → −H₂` on `lorentz_complex`
pub fn basis_map(name: &str) -> Result<BasisMap> {
    match name {
        "physical_to_canonical" => {
            let phys = algebra(POINCARE_PHYSICAL)?;
            let can = algebra(POINCARE)?;
            let images = phys
                .generators()
                .iter()
                .map(|g| can.element(g))
                .collect::<Result<Vec<_>>>()?;
            BasisMap::new(phys, can, images)
        }
        "canonical_to_complex" => {
            let can = algebra(LORENTZ_CANONICAL)?;
            let cx = algebra(LORENTZ_COMPLEX)?;
            BasisMap::new(cx, can.clone(), complex_in_canonical(&can))?.inverse()
        }
        "cartan_automorphism" => {
            let cx = algebra(LORENTZ_COMPLEX)?;
            let one = q(1, 1);
            let images = vec![
                lin(&cx, &[("E1+", one)]),
                lin(&cx, &[("E2-", one)]),
                lin(&cx, &[("H1", one)]),
                lin(&cx, &[("H2", -one)]),
                lin(&cx, &[("E1-", one)]),
                lin(&cx, &[("E2+", one)]),
            ];
            BasisMap::new(cx.clone(), cx, images)
        }
        _ => Err(Error::UnknownName(name.to_owned())),
    }
}

/// Brackets of the complexification images `(H_k, E_k±)` computed in the
/// canonical Lorentz algebra, keyed by complex generator names.
pub fn complexification_brackets() -> Result<BTreeMap<(String, String), LieElement>> {
    complexification_brackets_in(&algebra(LORENTZ_CANONICAL)?, &algebra(LORENTZ_COMPLEX)?)
}

/// [`complexification_brackets`] for given copies of the two algebras.
pub fn complexification_brackets_in(
    can: &Arc<LieAlgebra>,
    cx: &Arc<LieAlgebra>,
) -> Result<BTreeMap<(String, String), LieElement>> {
    let imgs = complex_in_canonical(can);
    let to_cx = BasisMap::new(cx.clone(), can.clone(), imgs.clone())?.inverse()?;
    let mut out = BTreeMap::new();
    for i in 0..imgs.len() {
        for j in (i + 1)..imgs.len() {
            let b = to_cx.apply(&can.bracket(&imgs[i], &imgs[j])?);
            out.insert(
                (
                    cx.generator_name(i).to_owned(),
                    cx.generator_name(j).to_owned(),
                ),
                b,
            );
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(alg: &LieAlgebra, name: &str) -> LieElement {
        alg.element(name).unwrap()
    }

    #[test]
    fn catalog_algebras_satisfy_jacobi() {
        for name in ALGEBRA_NAMES {
            let alg = algebra(name).unwrap();
            assert!(alg.jacobi_check().is_empty(), "{name}");
            assert!(
                star(name).unwrap().involutivity_defects(&alg).is_empty(),
                "{name}"
            );
        }
        assert_eq!(algebra(LORENTZ_CANONICAL).unwrap().dim(), 6);
        assert_eq!(algebra(POINCARE).unwrap().dim(), 10);
    }

    #[test]
    fn bundled_poincare_is_the_derived_one() {
        let (alg, star) = derive_poincare(-1).unwrap();
        let derived = AlgebraFile::from_algebra(&alg, Some(&star));
        let bundled = AlgebraFile::parse(algebra_source(POINCARE).unwrap()).unwrap();
        assert_eq!(derived, bundled);
    }

    #[test]
    fn textbook_sign_flips_the_momentum_bracket() {
        let (alg, _) = derive_poincare(1).unwrap();
        let b = alg.bracket(&el(&alg, "e'+"), &el(&alg, "P2")).unwrap();
        assert_eq!(b, el(&alg, "P+"));
        let cat = algebra(POINCARE).unwrap();
        let b = cat.bracket(&el(&cat, "e'+"), &el(&cat, "P2")).unwrap();
        assert_eq!(b, el(&cat, "P+").scale(&Scalar::int(-1)));
    }

    #[test]
    fn lorentz_part_of_poincare_matches_lorentz_canonical() {
        let lor = algebra(LORENTZ_CANONICAL).unwrap();
        let poi = algebra(POINCARE).unwrap();
        for a in lor.generators() {
            for b in lor.generators() {
                let x = lor.bracket(&el(&lor, a), &el(&lor, b)).unwrap();
                let y = poi.bracket(&el(&poi, a), &el(&poi, b)).unwrap();
                let x_in_poi = x.coeffs().fold(LieElement::zero(), |acc, (i, c)| {
                    acc.add(&el(&poi, lor.generator_name(i)).scale(c))
                });
                assert_eq!(x_in_poi, y, "[{a}, {b}]");
            }
        }
    }

    #[test]
    fn named_brackets() {
        let lor = algebra(LORENTZ_CANONICAL).unwrap();
        assert_eq!(
            lor.bracket(&el(&lor, "h"), &el(&lor, "e+")).unwrap(),
            el(&lor, "e+")
        );
        let poi = algebra(POINCARE).unwrap();
        let b = poi.bracket(&el(&poi, "N3"), &el(&poi, "P0")).unwrap();
        assert_eq!(b, el(&poi, "P3").scale_num(-GaussianRational::I));
        let cx = algebra(LORENTZ_COMPLEX).unwrap();
        assert!(cx
            .bracket(&el(&cx, "H1"), &el(&cx, "E2+"))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn basis_maps() {
        for name in MAP_NAMES {
            let m = basis_map(name).unwrap();
            assert!(m.homomorphism_defects().is_empty(), "{name}");
            let back = m.inverse().unwrap();
            for i in 0..m.source().dim() {
                let g = LieElement::generator(i);
                assert_eq!(back.apply(&m.apply(&g)), g, "{name}");
            }
        }
        let m = basis_map("physical_to_canonical").unwrap();
        let n3 = el(m.source(), "N3");
        assert_eq!(
            m.apply(&n3),
            el(m.target(), "h").scale_num(-GaussianRational::I)
        );
        let m = basis_map("canonical_to_complex").unwrap();
        let h = el(m.source(), "h");
        assert_eq!(m.apply(&h), el(m.target(), "H1").add(&el(m.target(), "H2")));
        assert!(basis_map("nope").is_err());
    }

    #[test]
    fn complexification_reproduces_two_commuting_sl2() {
        let cx = algebra(LORENTZ_COMPLEX).unwrap();
        for ((a, b), v) in complexification_brackets().unwrap() {
            let expected = cx.bracket(&el(&cx, &a), &el(&cx, &b)).unwrap();
            assert_eq!(v, expected, "[{a}, {b}]");
        }
    }
}
