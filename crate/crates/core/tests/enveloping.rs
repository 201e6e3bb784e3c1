mod common;

use std::sync::Arc;

use proptest::prelude::*;
use twistcheck::algebra::{catalog as algebras, LieAlgebra, LieElement};
use twistcheck::enveloping::{
    analytic_apply, antipode, antipode_axiom_residual, coefficients, coproduct, counit, exp,
    from_records, leg_embed, series_inverse, to_records, wedge, AnalyticFn, LegPattern, Tensor,
};
use twistcheck::scalar::{Rational, Scalar};
use twistcheck::Error;

use common::q;

fn g(alg: &Arc<LieAlgebra>, name: &str) -> Tensor {
    Tensor::named(alg, name).unwrap()
}

fn lorentz() -> Arc<LieAlgebra> {
    algebras::algebra("lorentz_canonical").unwrap()
}

fn alpha() -> Scalar {
    Scalar::param("alpha")
}

fn alpha_pow(n: u32) -> Scalar {
    alpha().pow(n, None)
}

fn word(alg: &Arc<LieAlgebra>, w: &[usize]) -> Tensor {
    w.iter().fold(Tensor::one(alg, 1), |acc, &i| {
        acc.mul(&Tensor::generator(alg, i), None)
    })
}

#[test]
fn straightening_examples() {
    let alg = lorentz();
    let (ep, em, h) = (g(&alg, "e+"), g(&alg, "e-"), g(&alg, "h"));
    let expected = ep.mul(&em, None).sub(&h.scale_num(q(2, 1)));
    assert_eq!(em.mul(&ep, None), expected);
    // e+ precedes e- in PBW order, so the product e+e- is a single monomial.
    assert_eq!(ep.mul(&em, None).len(), 1);
    assert_eq!(Tensor::one(&alg, 1).mul(&em, None), em);

    let poi = algebras::algebra("poincare").unwrap();
    let (p1, p2) = (g(&poi, "P1"), g(&poi, "P2"));
    assert_eq!(p1.mul(&p2, None), p2.mul(&p1, None));
    assert_eq!(p1.mul(&p2, None).len(), 1);
}

#[test]
fn products_agree_with_matrix_representations() {
    // The oracle multiplies matrices; a faithful representation of g is
    // not faithful on U(g), so this checks consistency, not uniqueness.
    for name in ["lorentz_canonical", "lorentz_complex", "poincare"] {
        let alg = algebras::algebra(name).unwrap();
        let rep = common::rep_of(&alg);
        let d = alg.dim();
        let words: Vec<Vec<usize>> = vec![
            vec![d - 1, 0],
            vec![d - 1, d / 2, 0],
            vec![d - 2, d - 1, 1, 0],
            vec![0, d - 1, 0, d - 1],
        ];
        for w in &words {
            let t = word(&alg, w);
            let m = w.iter().fold(common::identity(rep[0].len()), |acc, &i| {
                common::mul(&acc, &rep[i])
            });
            assert_eq!(common::eval(&t, &rep), m, "{name}: {w:?}");
        }
    }
}

#[test]
fn commutators_are_brackets() {
    for name in algebras::ALGEBRA_NAMES {
        let alg = algebras::algebra(name).unwrap();
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let (x, y) = (Tensor::generator(&alg, i), Tensor::generator(&alg, j));
                let c = x.mul(&y, None).sub(&y.mul(&x, None));
                let b = alg
                    .bracket(&LieElement::generator(i), &LieElement::generator(j))
                    .unwrap();
                assert_eq!(c, Tensor::from_lie(&alg, &b), "{name}");
            }
        }
    }
}

#[test]
fn tensor_product_examples() {
    let alg = lorentz();
    let (ep, h) = (g(&alg, "e+"), g(&alg, "h"));
    let one = Tensor::one(&alg, 1);
    let t = ep.outer(&h, None);
    assert_eq!(Tensor::one(&alg, 2).mul(&t, None), t);
    // Oracle: multiply leg by leg in U(g).
    let prod = ep.outer(&h, None).mul(&h.outer(&ep, None), None);
    assert_eq!(prod, ep.mul(&h, None).outer(&h.mul(&ep, None), None));
    let (x1, y2) = (ep.outer(&one, None), one.outer(&h, None));
    assert_eq!(x1.mul(&y2, None), y2.mul(&x1, None));
    let err = t.try_mul(&ep, None).unwrap_err();
    assert!(matches!(err, Error::LegMismatch(_)), "{err:?}");
}

#[test]
fn leg_embedding_and_wedge() {
    let alg = lorentz();
    let (x, y, one) = (g(&alg, "e+"), g(&alg, "h'"), Tensor::one(&alg, 1));
    let xy = x.outer(&y, None);
    assert_eq!(
        leg_embed(&xy, LegPattern::P13).unwrap(),
        x.outer(&one, None).outer(&y, None)
    );
    assert_eq!(
        leg_embed(&xy, LegPattern::P12).unwrap(),
        xy.outer(&one, None)
    );
    assert_eq!(
        leg_embed(&xy, LegPattern::P23).unwrap(),
        one.outer(&xy, None)
    );
    let yx = y.outer(&x, None);
    let sum = leg_embed(&xy.add(&yx), LegPattern::P13).unwrap();
    let parts = leg_embed(&xy, LegPattern::P13)
        .unwrap()
        .add(&leg_embed(&yx, LegPattern::P13).unwrap());
    assert_eq!(sum, parts);
    assert!(leg_embed(&x, LegPattern::P12).is_err());

    assert!(wedge(&x, &x).unwrap().is_zero());
    let (h1, h) = (g(&alg, "h'"), g(&alg, "h"));
    assert_eq!(
        wedge(&h1, &h).unwrap(),
        h1.outer(&h, None).sub(&h.outer(&h1, None))
    );
    let w = wedge(&x, &h).unwrap();
    assert_eq!(w.flip(), w.neg());
}

#[test]
fn coproduct_counit_antipode_examples() {
    let alg = lorentz();
    let (h, ep, one) = (g(&alg, "h"), g(&alg, "e+"), Tensor::one(&alg, 1));
    assert_eq!(
        coproduct(&h).unwrap(),
        h.outer(&one, None).add(&one.outer(&h, None))
    );
    let ep2 = ep.mul(&ep, None);
    let dep = coproduct(&ep).unwrap();
    assert_eq!(coproduct(&ep2).unwrap(), dep.mul(&dep, None));
    let expected = ep2
        .outer(&one, None)
        .add(&ep.outer(&ep, None).scale_num(q(2, 1)))
        .add(&one.outer(&ep2, None));
    assert_eq!(coproduct(&ep2).unwrap(), expected);

    assert!(counit(&one).unwrap().is_one());
    assert!(counit(&ep).unwrap().is_zero());
    let x = Tensor::scalar(&alg, 1, Scalar::int(3)).add(&h.mul(&ep, None).scale(&alpha(), None));
    assert_eq!(counit(&x).unwrap(), Scalar::int(3));

    assert_eq!(antipode(&h).unwrap(), h.neg());
    assert_eq!(antipode(&one).unwrap(), one);
    let eh = ep.mul(&h, None);
    assert_eq!(antipode(&eh).unwrap(), h.mul(&ep, None));
    assert!(antipode_axiom_residual(&eh).unwrap().is_zero());
}

#[test]
fn coproduct_is_coassociative_and_a_morphism() {
    for name in algebras::ALGEBRA_NAMES {
        let alg = algebras::algebra(name).unwrap();
        for i in 0..alg.dim() {
            let x = Tensor::generator(&alg, i);
            let dx = coproduct(&x).unwrap();
            assert_eq!(
                dx.coproduct_leg(0, None),
                dx.coproduct_leg(1, None),
                "{name}"
            );
            assert!(antipode_axiom_residual(&x).unwrap().is_zero(), "{name}");
            for j in 0..alg.dim() {
                let y = Tensor::generator(&alg, j);
                let dy = coproduct(&y).unwrap();
                let b = x.mul(&y, None).sub(&y.mul(&x, None));
                let lhs = coproduct(&b).unwrap();
                let rhs = dx.mul(&dy, None).sub(&dy.mul(&dx, None));
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}

#[test]
fn analytic_examples() {
    let alg = lorentz();
    let ep = g(&alg, "e+");
    let x = ep.scale(&alpha(), None);
    let ep2 = ep.mul(&ep, None);
    let ep3 = ep2.mul(&ep, None);
    let log = analytic_apply(AnalyticFn::Log1p, &x, 3).unwrap();
    let expected = x
        .sub(&ep2.scale(&alpha_pow(2), None).scale_num(q(1, 2)))
        .add(&ep3.scale(&alpha_pow(3), None).scale_num(q(1, 3)));
    assert_eq!(log, expected);

    // σ = ½ log(1 + αe+) through order 2, against the independent series
    // Σ (−1)^{k+1} x^k / k.
    let sigma = analytic_apply(AnalyticFn::Log1p, &x, 2)
        .unwrap()
        .scale_num(q(1, 2));
    let mut oracle = Tensor::zero(&alg, 1);
    let mut power = Tensor::one(&alg, 1);
    for k in 1..=2i64 {
        power = power.mul(&x, Some(2));
        let sign = if k % 2 == 1 { 1 } else { -1 };
        oracle = oracle.add(&power.scale_num(q(sign, 2 * k)));
    }
    assert_eq!(sigma, oracle);
    assert_eq!(
        sigma,
        ep.scale(&alpha(), None)
            .scale_num(q(1, 2))
            .sub(&ep2.scale(&alpha_pow(2), None).scale_num(q(1, 4)))
    );

    assert_eq!(
        exp(&Tensor::zero(&alg, 1), 3).unwrap(),
        Tensor::one(&alg, 1)
    );
    let err = exp(&ep, 3).unwrap_err();
    assert!(matches!(err, Error::SeriesDivergence), "{err:?}");
}

#[test]
fn series_coefficients() {
    let r = |p: i128, d: i128| Rational::new(p, d);
    assert_eq!(
        coefficients(AnalyticFn::Exp, 4),
        vec![r(1, 1), r(1, 1), r(1, 2), r(1, 6), r(1, 24)]
    );
    assert_eq!(
        coefficients(AnalyticFn::Arctan, 5),
        vec![r(0, 1), r(1, 1), r(0, 1), r(-1, 3), r(0, 1), r(1, 5)]
    );
    // sinh x / x = 1 + x²/6 + x⁴/120, and x / sinh x is its reciprocal.
    let s = coefficients(AnalyticFn::SinhXOverX, 4);
    assert_eq!(s, vec![r(1, 1), r(0, 1), r(1, 6), r(0, 1), r(1, 120)]);
    let inv = coefficients(AnalyticFn::XOverSinhX, 4);
    for n in 0..=4usize {
        let conv = (0..=n).fold(Rational::ZERO, |acc, k| acc + s[k] * inv[n - k]);
        assert_eq!(
            conv,
            if n == 0 {
                Rational::ONE
            } else {
                Rational::ZERO
            }
        );
    }
}

#[test]
fn exp_log_round_trip() {
    let poi = algebras::algebra("poincare").unwrap();
    let x = g(&poi, "P+")
        .add(&g(&poi, "P1"))
        .scale(&Scalar::param("xi"), None);
    for n in 1..=4 {
        let log = analytic_apply(AnalyticFn::Log1p, &x, n).unwrap();
        let back = exp(&log, n).unwrap();
        assert_eq!(back, Tensor::one(&poi, 1).add(&x), "order {n}");
    }
    // Neumann inverse of a noncommuting unipotent element.
    let alg = lorentz();
    let y = Tensor::one(&alg, 1).add(&g(&alg, "h").mul(&g(&alg, "e+"), None).scale(&alpha(), None));
    let inv = series_inverse(&y, 3).unwrap();
    assert_eq!(y.mul(&inv, Some(3)), Tensor::one(&alg, 1));
    assert_eq!(inv.mul(&y, Some(3)), Tensor::one(&alg, 1));
}

#[test]
fn records_round_trip() {
    let alg = lorentz();
    let (ep, h) = (g(&alg, "e+"), g(&alg, "h"));
    let t = ep
        .mul(&ep, None)
        .outer(&h, None)
        .scale(&alpha_pow(2), None)
        .scale_num(q(-1, 3))
        .add(&Tensor::one(&alg, 2));
    let recs = to_records(&t);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0].legs, vec!["1", "1"]);
    assert_eq!(recs[1].legs, vec!["e+^2", "h"]);
    assert_eq!(
        (recs[1].param.as_str(), recs[1].re.as_str()),
        ("alpha^2", "-1/3")
    );
    assert_eq!(from_records(&alg, 2, &recs).unwrap(), t);
    let mut bad = recs.clone();
    bad[1].legs[0] = "q+".into();
    assert!(from_records(&alg, 2, &bad).is_err());
}

fn arb_word(dim: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..dim, 0..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_is_associative(
        which in 0usize..4,
        a in arb_word(6),
        b in arb_word(6),
        c in arb_word(6),
    ) {
        let alg = algebras::algebra(algebras::ALGEBRA_NAMES[which]).unwrap();
        let (x, y, z) = (word(&alg, &a), word(&alg, &b), word(&alg, &c));
        prop_assert_eq!(x.mul(&y, None).mul(&z, None), x.mul(&y.mul(&z, None), None));
    }

    #[test]
    fn words_match_the_representation(which in 0usize..3, w in prop::collection::vec(0usize..6, 0..=4)) {
        let name = ["lorentz_canonical", "lorentz_complex", "poincare"][which];
        let alg = algebras::algebra(name).unwrap();
        let rep = common::rep_of(&alg);
        let m = w.iter().fold(common::identity(rep[0].len()), |acc, &i| common::mul(&acc, &rep[i]));
        prop_assert_eq!(common::eval(&word(&alg, &w), &rep), m);
    }

    #[test]
    fn degree_two_coproducts(which in 0usize..4, a in arb_word(6), b in arb_word(6)) {
        let alg = algebras::algebra(algebras::ALGEBRA_NAMES[which]).unwrap();
        let x = word(&alg, &a[..a.len().min(2)]).add(&word(&alg, &b[..b.len().min(2)]));
        let dx = coproduct(&x).unwrap();
        prop_assert_eq!(dx.coproduct_leg(0, None), dx.coproduct_leg(1, None));
        prop_assert!(antipode_axiom_residual(&x).unwrap().is_zero());
        // S is an antiautomorphism.
        let (u, v) = (word(&alg, &a), word(&alg, &b));
        prop_assert_eq!(
            antipode(&u.mul(&v, None)).unwrap(),
            antipode(&v).unwrap().mul(&antipode(&u).unwrap(), None)
        );
    }
}
