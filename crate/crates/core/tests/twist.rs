use std::sync::Arc;

use twistcheck::algebra::{catalog as algebras, LieAlgebra};
use twistcheck::enveloping::{antipode, coproduct, wedge, Tensor};
use twistcheck::rmatrix::catalog as rcat;
use twistcheck::scalar::{GaussianRational, Scalar};
use twistcheck::twist::catalog::{self, Conventions};
use twistcheck::twist::{self, Twist};

fn q(p: i64, d: i64) -> GaussianRational {
    GaussianRational::ratio(p, d)
}

fn g(alg: &Arc<LieAlgebra>, name: &str) -> Tensor {
    Tensor::named(alg, name).unwrap()
}

fn lorentz() -> Arc<LieAlgebra> {
    algebras::algebra("lorentz_canonical").unwrap()
}

fn poincare() -> Arc<LieAlgebra> {
    algebras::algebra("poincare").unwrap()
}

const ABELIAN: [&str; 9] = [
    "lorentz.r3.complex.double_prime",
    "lorentz.r4.complex.double_prime",
    "poincare.r1.prime",
    "poincare.r1.double_prime",
    "poincare.r2.double_prime",
    "poincare.r2.triple_prime",
    "poincare.r3.double_prime",
    "poincare.r4.prime",
    "poincare.r4.double_prime",
];

fn corrected() -> Conventions {
    Conventions {
        jordanian_double_cartan: true,
        momentum_wedge: true,
        ..Conventions::default()
    }
}

#[test]
fn abelian_twist_of_zero_is_trivial() {
    let alg = lorentz();
    let f = twist::abelian_twist(&twistcheck::rmatrix::RMatrix::zero(&alg), 3).unwrap();
    assert_eq!(*f.body(), Tensor::one(&alg, 2));
}

#[test]
fn abelian_twist_first_order() {
    let alg = poincare();
    let f = twist::abelian_twist(&rcat::rmatrix("poincare.r1.double_prime").unwrap(), 1).unwrap();
    let (h, h1) = (g(&alg, "h"), g(&alg, "h'"));
    let expected = Tensor::one(&alg, 2).add(
        &h1.outer(&h, None)
            .sub(&h.outer(&h1, None))
            .scale(&Scalar::param("gamma"), None)
            .scale_num(q(1, 2)),
    );
    assert_eq!(*f.body(), expected);
}

#[test]
fn abelian_twist_second_order_is_half_the_square() {
    let alg = poincare();
    let r = rcat::rmatrix("poincare.r1.prime").unwrap();
    let f = twist::abelian_twist(&r, 2).unwrap();
    let x = r.body().scale_num(q(1, 2));
    let expected = Tensor::one(&alg, 2)
        .add(&x)
        .add(&x.mul(&x, None).scale_num(q(1, 2)));
    assert_eq!(*f.body(), expected.truncate(Some(2)));
    // momenta only
    let momenta: Vec<usize> = ["P+", "P-", "P1", "P2"]
        .iter()
        .map(|n| alg.index_of(n).unwrap())
        .collect();
    for (k, _) in f.body().terms() {
        for (i, &e) in k.iter().enumerate() {
            assert!(e == 0 || momenta.contains(&(i % alg.dim())));
        }
    }
}

#[test]
fn abelian_twist_rejects_non_abelian_support() {
    let err = twist::abelian_twist(&rcat::rmatrix("lorentz.r1").unwrap(), 2).unwrap_err();
    assert!(matches!(err, twistcheck::Error::Precondition(_)));
}

#[test]
fn jordanian_twist_matches_hand_expansions() {
    let alg = lorentz();
    let (_, shape) = rcat::jordanian_shape("lorentz.r1").unwrap();
    // exp(h⊗σ) at first order: σ = α e+/2
    let f = twist::jordanian_twist_with(&shape, &alg, 1, GaussianRational::ONE).unwrap();
    let expected = Tensor::one(&alg, 2).add(
        &g(&alg, "h")
            .outer(&g(&alg, "e+"), None)
            .scale(&Scalar::param("alpha"), None)
            .scale_num(q(1, 2)),
    );
    assert_eq!(*f.body(), expected);
    assert_eq!(
        twist::jordanian_twist(&shape, &alg, 0).unwrap().body(),
        &Tensor::one(&alg, 2)
    );

    let literal = catalog::catalog_twist("lorentz.F_r1", 3, Conventions::default()).unwrap();
    let one = twist::jordanian_twist_with(&shape, &alg, 3, GaussianRational::ONE).unwrap();
    assert_eq!(literal.body(), one.body());
    let doubled = catalog::catalog_twist("lorentz.F_r1", 3, corrected()).unwrap();
    assert_eq!(
        doubled.body(),
        twist::jordanian_twist(&shape, &alg, 3).unwrap().body()
    );
}

#[test]
fn poincare_jordanian_twist_matches_its_product_form() {
    let alg = poincare();
    let (_, shape) = rcat::jordanian_shape("poincare.r2.prime").unwrap();
    let n = 3;
    let f = twist::jordanian_twist(&shape, &alg, n).unwrap();
    let b1 = Scalar::param("beta_1");
    // σ+ = ½ ln(1 + β1 P+) = ½ Σ (−1)^{k+1} (β1 P+)^k / k
    let p = g(&alg, "P+").scale(&b1, None);
    let p2 = p.mul(&p, None);
    let p3 = p2.mul(&p, None);
    let sigma = p
        .sub(&p2.scale_num(q(1, 2)))
        .add(&p3.scale_num(q(1, 3)))
        .scale_num(q(1, 2));
    let exp = |x: &Tensor| {
        let x2 = x.mul(x, Some(n));
        let x3 = x2.mul(x, Some(n));
        Tensor::one(&alg, 2)
            .add(x)
            .add(&x2.scale_num(q(1, 2)))
            .add(&x3.scale_num(q(1, 6)))
            .truncate(Some(n))
    };
    let pairs = g(&alg, "e+")
        .outer(&g(&alg, "P1"), None)
        .sub(&g(&alg, "e'+").outer(&g(&alg, "P2"), None))
        .scale(&b1, None);
    let cartan = g(&alg, "h").outer(&sigma, None).scale_num(q(2, 1));
    let expected = exp(&pairs).mul(&exp(&cartan), Some(n));
    assert_eq!(*f.body(), expected);
}

#[test]
fn compose_is_unital_and_associative() {
    let alg = poincare();
    let n = 2;
    let a = twist::abelian_twist(&rcat::rmatrix("poincare.r1.prime").unwrap(), n).unwrap();
    let b = twist::abelian_twist(&rcat::rmatrix("poincare.r2.double_prime").unwrap(), n).unwrap();
    let c = twist::abelian_twist(&rcat::rmatrix("poincare.r4.prime").unwrap(), n).unwrap();
    let id = Twist::identity(&alg, n);
    assert_eq!(twist::compose(&id, &a).unwrap().body(), a.body());
    let left = twist::compose(&twist::compose(&a, &b).unwrap(), &c).unwrap();
    let right = twist::compose(&a, &twist::compose(&b, &c).unwrap()).unwrap();
    assert_eq!(left.body(), right.body());
    let other = Twist::identity(&alg, n + 1);
    assert!(twist::compose(&a, &other).is_err());
}

#[test]
fn cocycle_check_accepts_twists_and_detects_corruption() {
    let f = twist::abelian_twist(&rcat::rmatrix("poincare.r1.double_prime").unwrap(), 3).unwrap();
    assert!(twist::cocycle_check(&f).passed());

    let alg = lorentz();
    let (_, shape) = rcat::jordanian_shape("lorentz.r1").unwrap();
    let f = twist::jordanian_twist(&shape, &alg, 3).unwrap();
    assert!(twist::cocycle_check(&f).passed());
    // flip the sign of one second-order term
    let k = f
        .body()
        .degree_part(2)
        .terms()
        .next()
        .map(|(k, _)| k.clone())
        .unwrap();
    let mut bad = Tensor::zero(&alg, 2);
    for (kk, cc) in f.body().terms() {
        let cc = if *kk == k { -cc } else { cc.clone() };
        bad = bad.add(&Tensor::from_key(&alg, 2, kk.clone(), cc));
    }
    let res = twist::cocycle_check(&Twist::new(bad, 3).unwrap());
    assert!(!res.passed());
    assert_eq!(res.first_failing_order(), Some(2));
}

#[test]
fn counit_check_examples() {
    let alg = poincare();
    let w = wedge(&g(&alg, "P1"), &g(&alg, "P2"))
        .unwrap()
        .scale(&Scalar::param("alpha"), None);
    assert!(twist::counit_check(&twist::exp_twist(&w, 3).unwrap()));
    let bad = Tensor::one(&alg, 2).add(
        &g(&alg, "h")
            .outer(&Tensor::one(&alg, 1), None)
            .scale(&Scalar::param("alpha"), None),
    );
    assert!(!twist::counit_check(&Twist::new(bad, 3).unwrap()));
    for e in catalog::TWISTS {
        assert!(
            twist::counit_check(
                &catalog::catalog_twist(e.name, 3, Conventions::default()).unwrap()
            ),
            "{}",
            e.name
        );
    }
}

#[test]
fn local_r_symmetry_trichotomy() {
    for name in ABELIAN {
        let r = rcat::rmatrix(name).unwrap();
        let f = twist::abelian_twist(&r, 1).unwrap();
        assert_eq!(twist::local_r_symmetry(&f, &r), Some(q(1, 2)), "{name}");
    }
    let d = Conventions::default();
    let r1 = rcat::rmatrix("lorentz.r1").unwrap();
    let r2 = rcat::rmatrix("lorentz.r2").unwrap();
    let f = catalog::catalog_twist("lorentz.F_r1", 1, d).unwrap();
    assert_eq!(twist::local_r_symmetry(&f, &r1), None);
    let f = catalog::catalog_twist("lorentz.F_r2", 1, d).unwrap();
    assert_eq!(twist::local_r_symmetry(&f, &r2), None);
    let f = catalog::catalog_twist("lorentz.F_r1_ohn", 1, d).unwrap();
    assert_eq!(twist::local_r_symmetry(&f, &r1), Some(q(-1, 2)));
}

#[test]
fn twisted_coproduct_examples() {
    let alg = poincare();
    let p1 = g(&alg, "P1");
    let id = Twist::identity(&alg, 3);
    assert_eq!(
        twist::twisted_coproduct(&id, &p1).unwrap(),
        coproduct(&p1).unwrap()
    );
    let f = twist::abelian_twist(&rcat::rmatrix("poincare.r1.prime").unwrap(), 3).unwrap();
    assert_eq!(
        twist::twisted_coproduct(&f, &p1).unwrap(),
        coproduct(&p1).unwrap()
    );

    // F = 1 + αh⊗e+ + …: Δ^F(e+) = Δe+ + α[h⊗e+, e+⊗1] = Δe+ + α e+⊗e+
    let lor = lorentz();
    let (_, shape) = rcat::jordanian_shape("lorentz.r1").unwrap();
    let f = twist::jordanian_twist(&shape, &lor, 1).unwrap();
    let e = g(&lor, "e+");
    let expected = coproduct(&e)
        .unwrap()
        .add(&e.outer(&e, None).scale(&Scalar::param("alpha"), None));
    assert_eq!(twist::twisted_coproduct(&f, &e).unwrap(), expected);
}

#[test]
fn twisted_antipode_examples() {
    let alg = poincare();
    let id = Twist::identity(&alg, 3);
    let h = g(&alg, "h");
    assert_eq!(
        twist::twisted_antipode(&id, &h).unwrap(),
        antipode(&h).unwrap()
    );
    // u = 1 − (γ/2)h'h + (γ/2)hh' = 1 since h, h' commute
    let f = twist::abelian_twist(&rcat::rmatrix("poincare.r1.double_prime").unwrap(), 1).unwrap();
    assert_eq!(twist::drinfeld_element(&f), Tensor::one(&alg, 1));
}

#[test]
fn catalog_twists_under_literal_conventions() {
    let passing = [
        "lorentz.F_r2",
        "poincare.F_r1",
        "poincare.F_r2",
        "poincare.F_r3",
    ];
    let failing = ["lorentz.F_r1", "lorentz.F_r1_ohn", "poincare.F_r4"];
    for name in passing {
        let f = catalog::catalog_twist(name, 3, Conventions::default()).unwrap();
        assert!(twist::cocycle_check(&f).passed(), "{name}");
    }
    for name in failing {
        let f = catalog::catalog_twist(name, 3, Conventions::default()).unwrap();
        assert_eq!(
            twist::cocycle_check(&f).first_failing_order(),
            Some(2),
            "{name}"
        );
    }
}

#[test]
fn corrected_conventions_repair_two_twists() {
    for name in ["lorentz.F_r1", "poincare.F_r4"] {
        let f = catalog::catalog_twist(name, 3, corrected()).unwrap();
        assert!(twist::cocycle_check(&f).passed(), "{name}");
        let h = twist::twisted_hopf_residuals(&f);
        assert!(
            h.coassociativity.passed()
                && h.counit.passed()
                && h.morphism.passed()
                && h.antipode.passed(),
            "{name}"
        );
    }
    let f = catalog::catalog_twist("lorentz.F_r1_ohn", 3, corrected()).unwrap();
    assert!(!twist::cocycle_check(&f).passed());
}

#[test]
fn half_factor_does_not_affect_cocycles() {
    let half = Conventions {
        abelian_half_factor: true,
        ..corrected()
    };
    for name in [
        "poincare.F_r1",
        "poincare.F_r2",
        "poincare.F_r3",
        "poincare.F_r4",
    ] {
        for conv in [corrected(), half] {
            let f = catalog::catalog_twist(name, 3, conv).unwrap();
            assert!(twist::cocycle_check(&f).passed(), "{name} {conv:?}");
        }
    }
}

#[test]
fn composites_equal_generic_constructions() {
    for conv in [
        Conventions::default(),
        corrected(),
        Conventions {
            abelian_half_factor: true,
            ..corrected()
        },
    ] {
        for name in [
            "poincare.F_r1",
            "poincare.F_r2",
            "poincare.F_r3",
            "poincare.F_r4",
        ] {
            let lit = catalog::catalog_twist(name, 3, conv).unwrap();
            let gen = catalog::generic_twist(name, 3, conv).unwrap();
            assert_eq!(lit.body(), gen.body(), "{name} {conv:?}");
        }
    }
}

#[test]
fn lorentz_r2_twist_prefactor_is_polynomial() {
    let f = catalog::catalog_twist("lorentz.F_r2", 2, Conventions::default()).unwrap();
    // order one: h⊗σ − h'⊗φ with σ ≈ αe+, φ ≈ αe'+, plus (ιβ/α²)(αe+ ∧ αe'+)
    let alg = lorentz();
    let a = Scalar::param("alpha");
    let b = Scalar::param("beta");
    let expected = g(&alg, "h")
        .outer(&g(&alg, "e+"), None)
        .sub(&g(&alg, "h'").outer(&g(&alg, "e'+"), None))
        .scale(&a, None)
        .add(
            &wedge(&g(&alg, "e+"), &g(&alg, "e'+"))
                .unwrap()
                .scale(&b.mul_trunc(&Scalar::i(), None), None),
        );
    assert_eq!(f.body().degree_part(1), expected);
}

#[test]
fn convention_flags_parse() {
    let mut c = Conventions::default();
    c.set("abelian_half_factor", "on").unwrap();
    assert!(c.abelian_half_factor);
    assert!(c.set("abelian_half_factor", "yes").is_err());
    assert!(c.set("nope", "on").is_err());
    assert!(catalog::catalog_twist("lorentz.F_r9", 1, c).is_err());
}
