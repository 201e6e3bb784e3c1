mod common;

use std::sync::Arc;

use proptest::prelude::*;
use twistcheck::algebra::{
    catalog as algebras, involution_apply, AlgebraFile, LieAlgebra, LieElement, Lifting,
};
use twistcheck::enveloping::Tensor;
use twistcheck::scalar::{GaussianRational as Q, ParamSymbol, Rational, Reality, Scalar};
use twistcheck::Error;

use common::q;

fn el(alg: &LieAlgebra, name: &str) -> LieElement {
    alg.element(name).unwrap()
}

fn combo(alg: &LieAlgebra, terms: &[(Q, &str)]) -> LieElement {
    terms.iter().fold(LieElement::zero(), |acc, (c, g)| {
        acc.add(&el(alg, g).scale_num(*c))
    })
}

fn coords(alg: &LieAlgebra, x: &LieElement) -> Vec<Q> {
    (0..alg.dim()).map(|i| x.coeff(i).constant_term()).collect()
}

#[test]
fn brackets_agree_with_matrix_commutators() {
    for name in algebras::ALGEBRA_NAMES {
        let alg = algebras::algebra(name).unwrap();
        let rep = common::rep_of(&alg);
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let b = alg
                    .bracket(&LieElement::generator(i), &LieElement::generator(j))
                    .unwrap();
                let m = common::commutator(&rep[i], &rep[j]);
                let expected = common::decompose(&rep, &m)
                    .unwrap_or_else(|| panic!("{name}: commutator leaves the span"));
                assert_eq!(
                    coords(&alg, &b),
                    expected,
                    "{name}: [{}, {}]",
                    alg.generator_name(i),
                    alg.generator_name(j)
                );
            }
        }
    }
}

type Combination = Vec<(Q, &'static str)>;

#[test]
fn lorentz_brackets_as_listed() {
    let alg = algebras::algebra("lorentz_canonical").unwrap();
    let one = Q::ONE;
    let listed: Vec<(&str, &str, Combination)> = vec![
        ("h", "e+", vec![(one, "e+")]),
        ("h", "e-", vec![(-one, "e-")]),
        ("e+", "e-", vec![(q(2, 1), "h")]),
        ("h", "e'+", vec![(one, "e'+")]),
        ("h", "e'-", vec![(-one, "e'-")]),
        ("h'", "e+", vec![(one, "e'+")]),
        ("h'", "e-", vec![(-one, "e'-")]),
        ("e+", "e'-", vec![(q(2, 1), "h'")]),
        ("e-", "e'+", vec![(q(-2, 1), "h'")]),
        ("h'", "e'+", vec![(-one, "e+")]),
        ("h'", "e'-", vec![(one, "e-")]),
        ("e'+", "e'-", vec![(q(-2, 1), "h")]),
    ];
    let mut seen = Vec::new();
    for (a, b, v) in &listed {
        let got = alg.bracket(&el(&alg, a), &el(&alg, b)).unwrap();
        assert_eq!(got, combo(&alg, v), "[{a}, {b}]");
        seen.push((a.to_string(), b.to_string()));
        seen.push((b.to_string(), a.to_string()));
    }
    // Everything not listed commutes, including [h, h'].
    for a in alg.generators() {
        for b in alg.generators() {
            if !seen.contains(&(a.clone(), b.clone())) {
                assert!(
                    alg.bracket(&el(&alg, a), &el(&alg, b)).unwrap().is_zero(),
                    "[{a}, {b}]"
                );
            }
        }
    }
}

#[test]
fn physical_poincare_brackets_from_epsilon_formulas() {
    let alg = algebras::algebra("poincare_physical").unwrap();
    let eps = |a: usize, b: usize, c: usize| -> i64 {
        match (a, b, c) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
            (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
            _ => 0,
        }
    };
    let g = |s: &str, k: usize| el(&alg, &format!("{s}{k}"));
    let i = Q::I;
    for j in 1..=3 {
        for k in 1..=3 {
            let mut mm = LieElement::zero();
            let mut mn = LieElement::zero();
            let mut nn = LieElement::zero();
            let mut mp = LieElement::zero();
            for l in 1..=3 {
                let e = q(eps(j, k, l), 1);
                mm = mm.add(&g("M", l).scale_num(i * e));
                mn = mn.add(&g("N", l).scale_num(i * e));
                nn = nn.add(&g("M", l).scale_num(-i * e));
                mp = mp.add(&g("P", l).scale_num(i * e));
            }
            assert_eq!(alg.bracket(&g("M", j), &g("M", k)).unwrap(), mm);
            assert_eq!(alg.bracket(&g("M", j), &g("N", k)).unwrap(), mn);
            assert_eq!(alg.bracket(&g("N", j), &g("N", k)).unwrap(), nn);
            assert_eq!(alg.bracket(&g("M", j), &g("P", k)).unwrap(), mp);
            let np = if j == k {
                g("P", 0).scale_num(-i)
            } else {
                LieElement::zero()
            };
            assert_eq!(alg.bracket(&g("N", j), &g("P", k)).unwrap(), np);
            assert!(alg.bracket(&g("P", j), &g("P", k)).unwrap().is_zero());
        }
        assert!(alg.bracket(&g("M", j), &g("P", 0)).unwrap().is_zero());
        assert_eq!(
            alg.bracket(&g("N", j), &g("P", 0)).unwrap(),
            g("P", j).scale_num(-i)
        );
    }
}

#[test]
fn named_examples() {
    let lor = algebras::algebra("lorentz_canonical").unwrap();
    assert_eq!(
        lor.bracket(&el(&lor, "h"), &el(&lor, "e+")).unwrap(),
        el(&lor, "e+")
    );
    assert_eq!(lor.generators().len(), 6);
    let poi = algebras::algebra("poincare").unwrap();
    assert_eq!(poi.dim(), 10);
    assert_eq!(
        poi.bracket(&el(&poi, "N3"), &el(&poi, "P0")).unwrap(),
        el(&poi, "P3").scale_num(-Q::I)
    );
    // P± are aliases, not generators.
    assert_eq!(el(&poi, "P0").add(&el(&poi, "P3")), el(&poi, "P+"));
    assert!(poi.generators().iter().all(|g| g != "P0" && g != "P3"));
    let cx = algebras::algebra("lorentz_complex").unwrap();
    assert!(cx
        .bracket(&el(&cx, "H1"), &el(&cx, "E2+"))
        .unwrap()
        .is_zero());
    assert!(matches!(
        algebras::algebra("sl3"),
        Err(Error::UnknownName(_))
    ));
    assert!(matches!(lor.element("P1"), Err(Error::UnknownGenerator(_))));
}

#[test]
fn corrupted_bracket_breaks_jacobi() {
    let alg = algebras::algebra("lorentz_canonical").unwrap();
    let (h, ep, em) = (
        alg.index_of("h").unwrap(),
        alg.index_of("e+").unwrap(),
        alg.index_of("e-").unwrap(),
    );
    let bad = alg.with_bracket(h, ep, vec![(em, Q::ONE)]).unwrap();
    assert!(!bad.jacobi_check().is_empty());
    let same = alg.with_bracket(h, ep, vec![(ep, Q::ONE)]).unwrap();
    assert!(same.jacobi_check().is_empty());
}

#[test]
fn complexification_closes_on_two_commuting_copies() {
    let cx = algebras::algebra("lorentz_complex").unwrap();
    let brackets = algebras::complexification_brackets().unwrap();
    assert_eq!(brackets.len(), 15);
    let get = |a: &str, b: &str| brackets[&(a.to_owned(), b.to_owned())].clone();
    for k in ["1", "2"] {
        let (h, ep, em) = (format!("H{k}"), format!("E{k}+"), format!("E{k}-"));
        assert_eq!(get(&ep, &h), el(&cx, &ep).scale_num(-Q::ONE));
        assert_eq!(get(&h, &em), el(&cx, &em).scale_num(-Q::ONE));
        assert_eq!(get(&ep, &em), el(&cx, &h).scale_num(q(2, 1)));
    }
    for a in ["E1+", "H1", "E1-"] {
        for b in ["E2+", "H2", "E2-"] {
            let v = brackets
                .get(&(a.to_owned(), b.to_owned()))
                .or_else(|| brackets.get(&(b.to_owned(), a.to_owned())))
                .unwrap();
            assert!(v.is_zero(), "[{a}, {b}]");
        }
    }
}

#[test]
fn basis_maps_follow_the_printed_formulas() {
    let m = algebras::basis_map("physical_to_canonical").unwrap();
    let (phys, can) = (m.source().clone(), m.target().clone());
    let img = |g: &str| m.apply(&el(&phys, g));
    let i = Q::I;
    assert_eq!(img("N3"), el(&can, "h").scale_num(-i));
    // h = ιN3 and e± = ι(N1 ± M2) read back through the map.
    let lhs = img("N1").add(&img("M2")).scale_num(i);
    assert_eq!(lhs, el(&can, "e+"));
    let lhs = img("N1").sub(&img("M2")).scale_num(i);
    assert_eq!(lhs, el(&can, "e-"));
    assert_eq!(img("P0").add(&img("P3")), el(&can, "P+"));

    let m = algebras::basis_map("canonical_to_complex").unwrap();
    let cx = m.target().clone();
    let h = m.apply(&el(m.source(), "h"));
    assert_eq!(h, el(&cx, "H1").add(&el(&cx, "H2")));
    // Oracle: substitute H_1 = ½(h + ιh'), H_2 = ½(h − ιh') back.
    let hp = m.apply(&el(m.source(), "h'"));
    let back = m.inverse().unwrap();
    let h1 = back.apply(&el(&cx, "H1"));
    let expected = el(back.target(), "h")
        .add(&el(back.target(), "h'").scale_num(i))
        .scale_num(q(1, 2));
    assert_eq!(h1, expected);
    assert_eq!(hp, el(&cx, "H1").sub(&el(&cx, "H2")).scale_num(-i));

    for name in algebras::MAP_NAMES {
        let m = algebras::basis_map(name).unwrap();
        let back = m.inverse().unwrap();
        for g in 0..m.source().dim() {
            let x = LieElement::generator(g);
            assert_eq!(back.apply(&m.apply(&x)), x, "{name}");
        }
    }
}

fn alpha(reality: Reality) -> Vec<ParamSymbol> {
    vec![ParamSymbol::new("alpha", reality)]
}

fn wedge_e_h(alg: &Arc<LieAlgebra>) -> Tensor {
    let (e, h) = (
        Tensor::named(alg, "e+").unwrap(),
        Tensor::named(alg, "h").unwrap(),
    );
    e.outer(&h, None)
        .sub(&h.outer(&e, None))
        .scale(&Scalar::param("alpha"), None)
}

#[test]
fn involution_examples() {
    let alg = algebras::algebra("lorentz_canonical").unwrap();
    let star = algebras::star("lorentz_canonical").unwrap();
    let (x, y) = (
        Tensor::named(&alg, "e+").unwrap(),
        Tensor::named(&alg, "h'").unwrap(),
    );
    let xy = x.outer(&y, None);
    let direct = star.clone().with_lifting(Lifting::Direct);
    assert_eq!(involution_apply(&direct, &xy, &[]).unwrap(), xy);

    // (x∧y)* = y*∧x* = y∧x under the flipped lifting; real α is fixed.
    let flipped = star.clone().with_lifting(Lifting::Flipped);
    let r = wedge_e_h(&alg);
    assert_eq!(
        involution_apply(&flipped, &r, &alpha(Reality::Real)).unwrap(),
        r.neg()
    );
    assert_eq!(
        involution_apply(&direct, &r, &alpha(Reality::Real)).unwrap(),
        r
    );
    assert_eq!(
        involution_apply(&direct, &r, &alpha(Reality::Imaginary)).unwrap(),
        r.neg()
    );

    let err = involution_apply(&direct, &r, &alpha(Reality::Free)).unwrap_err();
    assert!(matches!(err, Error::UndeclaredReality(_)), "{err:?}");
    let err = involution_apply(&direct, &r, &[]).unwrap_err();
    assert!(matches!(err, Error::UndeclaredReality(_)), "{err:?}");
}

#[test]
fn stars_are_involutive_on_generators() {
    for name in algebras::ALGEBRA_NAMES {
        let alg = algebras::algebra(name).unwrap();
        let star = algebras::star(name).unwrap();
        assert!(star.involutivity_defects(&alg).is_empty(), "{name}");
    }
}

/// Left word, right word, real and imaginary coefficient, parameter flag.
type TermSpec = (Vec<usize>, Vec<usize>, i64, i64, bool);

fn arb_tensor(dim: usize) -> impl Strategy<Value = Vec<TermSpec>> {
    let leg = prop::collection::vec(0..dim, 0..=2);
    prop::collection::vec(
        (leg.clone(), leg, -3i64..=3, -3i64..=3, any::<bool>()),
        1..4,
    )
}

fn build(alg: &Arc<LieAlgebra>, spec: &[TermSpec]) -> Tensor {
    let word = |w: &[usize]| {
        w.iter().fold(Tensor::one(alg, 1), |acc, &g| {
            acc.mul(&Tensor::generator(alg, g), None)
        })
    };
    let mut out = Tensor::zero(alg, 2);
    for (a, b, re, im, with_alpha) in spec {
        let mut c = Scalar::constant(Q::new(
            Rational::integer(*re as i128),
            Rational::integer(*im as i128),
        ));
        if *with_alpha {
            c = c.mul_trunc(&Scalar::param("alpha"), None);
        }
        out = out.add(&word(a).outer(&word(b), None).scale(&c, None));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn involution_twice_is_identity(
        which in 0usize..4,
        spec in arb_tensor(6),
        flipped in any::<bool>(),
        imaginary in any::<bool>(),
    ) {
        let name = algebras::ALGEBRA_NAMES[which];
        let alg = algebras::algebra(name).unwrap();
        let lifting = if flipped { Lifting::Flipped } else { Lifting::Direct };
        let star = algebras::star(name).unwrap().with_lifting(lifting);
        let params = alpha(if imaginary { Reality::Imaginary } else { Reality::Real });
        let t = build(&alg, &spec);
        let once = involution_apply(&star, &t, &params).unwrap();
        prop_assert_eq!(involution_apply(&star, &once, &params).unwrap(), t);
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(
        which in 0usize..4,
        a in prop::collection::vec(-2i64..=2, 10),
        b in prop::collection::vec(-2i64..=2, 10),
    ) {
        let alg = algebras::algebra(algebras::ALGEBRA_NAMES[which]).unwrap();
        let mk = |v: &[i64]| (0..alg.dim()).fold(LieElement::zero(), |acc, i| {
            acc.add(&LieElement::generator(i).scale_num(q(v[i], 1)))
        });
        let (x, y) = (mk(&a), mk(&b));
        let xy = alg.bracket(&x, &y).unwrap();
        prop_assert_eq!(alg.bracket(&y, &x).unwrap(), xy.scale_num(-Q::ONE));
        prop_assert!(alg.bracket(&x, &x).unwrap().is_zero());
        let rep = common::rep_of(&alg);
        let m = |v: &LieElement| (0..alg.dim()).fold(common::zero(rep[0].len()), |acc, i| {
            common::add(&acc, &common::scale(&rep[i], v.coeff(i).constant_term()))
        });
        prop_assert_eq!(m(&xy), common::commutator(&m(&x), &m(&y)));
    }
}

#[test]
fn user_algebra_file() {
    let text = r#"{
      "name": "sl2",
      "generators": ["e", "h", "f"],
      "parameters": [{"name": "xi", "reality": "real"}],
      "brackets": [
        {"lhs": "h", "rhs": "e", "result": [{"gen": "e", "re": "2"}]},
        {"lhs": "h", "rhs": "f", "result": [{"gen": "f", "re": "-2"}]},
        {"lhs": "e", "rhs": "f", "result": [{"gen": "h", "re": "1/1"}]}
      ]
    }"#;
    let file = AlgebraFile::parse(text).unwrap();
    let (alg, star) = file.build().unwrap();
    assert!(star.is_none());
    assert!(alg.jacobi_check().is_empty());
    assert_eq!(
        alg.bracket(&el(&alg, "f"), &el(&alg, "e")).unwrap(),
        el(&alg, "h").scale_num(-Q::ONE)
    );
    assert_eq!(AlgebraFile::parse(&file.to_json()).unwrap(), file);

    let bad = text.replace(r#""gen": "h", "re": "1/1""#, r#""gen": "k", "re": "1""#);
    let err = AlgebraFile::parse(&bad).unwrap().build().unwrap_err();
    assert!(err.to_string().contains('k'), "{err}");
    let bad = text.replace("1/1", "1/0");
    assert!(AlgebraFile::parse(&bad).and_then(|f| f.build()).is_err());
    let bad = text.replace(r#""re": "-2""#, r#""re": "2""#);
    let (alg, _) = AlgebraFile::parse(&bad).unwrap().build().unwrap();
    assert!(!alg.jacobi_check().is_empty());
}
