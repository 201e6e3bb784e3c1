//! Matrix representations used as oracles: exact brackets and products are
//! recomputed as matrix commutators and products, independently of the
//! bracket tables and the PBW straightening.

#![allow(dead_code, clippy::needless_range_loop)]

use twistcheck::algebra::LieAlgebra;
use twistcheck::enveloping::Tensor;
use twistcheck::scalar::GaussianRational as Q;

pub type Mat = Vec<Vec<Q>>;

pub fn q(p: i64, d: i64) -> Q {
    Q::ratio(p, d)
}

pub fn zero(n: usize) -> Mat {
    vec![vec![Q::ZERO; n]; n]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zero(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Q::ONE;
    }
    m
}

/// The matrix unit `E_ij`.
pub fn unit(n: usize, i: usize, j: usize) -> Mat {
    let mut m = zero(n);
    m[i][j] = Q::ONE;
    m
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| *x + *y).collect())
        .collect()
}

pub fn scale(a: &Mat, c: Q) -> Mat {
    a.iter()
        .map(|r| r.iter().map(|x| *x * c).collect())
        .collect()
}

pub fn sub(a: &Mat, b: &Mat) -> Mat {
    add(a, &scale(b, -Q::ONE))
}

pub fn mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = zero(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn commutator(a: &Mat, b: &Mat) -> Mat {
    sub(&mul(a, b), &mul(b, a))
}

fn lin(terms: &[(Q, &Mat)]) -> Mat {
    let n = terms[0].1.len();
    terms
        .iter()
        .fold(zero(n), |acc, (c, m)| add(&acc, &scale(m, *c)))
}

/// Coordinates of `m` in the span of `basis`, or `None` if it lies outside.
pub fn decompose(basis: &[Mat], m: &Mat) -> Option<Vec<Q>> {
    let k = basis.len();
    let flat = |a: &Mat| a.iter().flatten().copied().collect::<Vec<Q>>();
    let cols: Vec<Vec<Q>> = basis.iter().map(flat).collect();
    let rhs = flat(m);
    let mut rows: Vec<Vec<Q>> = (0..rhs.len())
        .map(|r| cols.iter().map(|c| c[r]).chain([rhs[r]]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        rows[r] = rows[r].iter().map(|x| *x * inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x = *x - f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    assert_eq!(pivots.len(), k, "representation is not faithful");
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut out = vec![Q::ZERO; k];
    for (i, c) in pivots.into_iter().enumerate() {
        out[c] = rows[i][k];
    }
    Some(out)
}

/// Physical Poincaré generators `M1..3, N1..3, P0..3` as 5×5 matrices on
/// affine Minkowski space: `M_j = ιJ_j`, `N_j = −ιK_j` with real rotations
/// `J` and boosts `K`, and translations in the last column.
pub fn physical_poincare() -> Vec<Mat> {
    let n = 5;
    let eps = |a: usize, b: usize, c: usize| -> i64 {
        match (a, b, c) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
            (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
            _ => 0,
        }
    };
    let mut out = Vec::new();
    for j in 1..=3 {
        let mut m = zero(n);
        for a in 1..=3 {
            for b in 1..=3 {
                m[a][b] = Q::I * q(-eps(j, a, b), 1);
            }
        }
        out.push(m);
    }
    for j in 1..=3 {
        out.push(scale(&add(&unit(n, 0, j), &unit(n, j, 0)), -Q::I));
    }
    for mu in 0..4 {
        out.push(unit(n, mu, 4));
    }
    out
}

fn sl2_pair() -> [Mat; 6] {
    let n = 4;
    let h1 = add(
        &scale(&unit(n, 0, 0), q(1, 2)),
        &scale(&unit(n, 1, 1), q(-1, 2)),
    );
    let h2 = add(
        &scale(&unit(n, 2, 2), q(1, 2)),
        &scale(&unit(n, 3, 3), q(-1, 2)),
    );
    [
        unit(n, 0, 1),
        unit(n, 2, 3),
        h1,
        h2,
        unit(n, 1, 0),
        unit(n, 3, 2),
    ]
}

/// `E1+, E2+, H1, H2, E1−, E2−` as two commuting 2×2 blocks.
pub fn lorentz_complex() -> Vec<Mat> {
    sl2_pair().to_vec()
}

/// `e+, e'+, h, h', e−, e'−` obtained by inverting `H_1 = ½(h + ιh')`,
/// `H_2 = ½(h − ιh')` and likewise for `E_k±`.
pub fn lorentz_canonical() -> Vec<Mat> {
    let [e1p, e2p, h1, h2, e1m, e2m] = sl2_pair();
    let plus = |a: &Mat, b: &Mat| add(a, b);
    let minus_i = |a: &Mat, b: &Mat| scale(&sub(a, b), -Q::I);
    vec![
        plus(&e1p, &e2p),
        minus_i(&e1p, &e2p),
        plus(&h1, &h2),
        minus_i(&h1, &h2),
        plus(&e1m, &e2m),
        minus_i(&e1m, &e2m),
    ]
}

/// The canonical Poincaré basis in the physical representation:
/// `P± = P0 ± P3`, `h = ιN3`, `e± = ι(N1 ± M2)`, `h' = ιM3`,
/// `e'± = ι(M1 ∓ N2)`.
pub fn poincare() -> Vec<Mat> {
    let p = physical_poincare();
    let (m1, m2, m3, n1, n2, n3) = (&p[0], &p[1], &p[2], &p[3], &p[4], &p[5]);
    let (p0, p1, p2, p3) = (&p[6], &p[7], &p[8], &p[9]);
    let (one, i) = (Q::ONE, Q::I);
    vec![
        lin(&[(one, p0), (one, p3)]),
        lin(&[(one, p0), (-one, p3)]),
        p1.clone(),
        p2.clone(),
        lin(&[(i, n1), (i, m2)]),
        lin(&[(i, m1), (-i, n2)]),
        scale(n3, i),
        scale(m3, i),
        lin(&[(i, n1), (-i, m2)]),
        lin(&[(i, m1), (i, n2)]),
    ]
}

pub fn rep_of(alg: &LieAlgebra) -> Vec<Mat> {
    match alg.name() {
        "lorentz_canonical" => lorentz_canonical(),
        "lorentz_complex" => lorentz_complex(),
        "poincare" => poincare(),
        "poincare_physical" => physical_poincare(),
        other => panic!("no representation for {other}"),
    }
}

/// Image of a parameter-free one-leg tensor; PBW monomials are products
/// of generator powers in generator order.
pub fn eval(t: &Tensor, rep: &[Mat]) -> Mat {
    assert_eq!(t.legs(), 1);
    let n = rep[0].len();
    let mut out = zero(n);
    for (k, c) in t.terms() {
        assert_eq!(c.max_degree(), Some(0), "parameter-dependent coefficient");
        let mut m = identity(n);
        for (i, &e) in t.leg_of(k, 0).iter().enumerate() {
            for _ in 0..e {
                m = mul(&m, &rep[i]);
            }
        }
        out = add(&out, &scale(&m, c.constant_term()));
    }
    out
}
