use super::algebra::{QAlgebra, QMonomial, QTensor};
use super::hopf::{QHopf, Variant};
use super::scalar::{QScalar, QVar, NVARS};
use crate::error::{Error, Result};
use crate::scalar::GaussianRational;

/// `1/[j]_p` for `p` a constant or a pure base power `q_b^m`.
fn inv_q_integer(p: &QScalar, j: u32) -> Result<QScalar> {
    let bad = || {
        Error::Precondition(format!(
            "q-exponential base must be a constant or a base power, got {p}"
        ))
    };
    let poly = p.as_polynomial().ok_or_else(bad)?;
    if let Some(c) = poly.as_constant() {
        let mut sum = GaussianRational::ZERO;
        let mut pw = GaussianRational::ONE;
        for _ in 0..j {
            sum += pw;
            pw = pw * c;
        }
        if sum.is_zero() {
            return Err(Error::Precondition(format!(
                "q-integer [{j}] vanishes at base {c}"
            )));
        }
        return Ok(QScalar::constant(sum.recip()));
    }
    let (e, c) = poly.as_monomial().ok_or_else(bad)?;
    let nz: Vec<usize> = (0..NVARS).filter(|&i| e[i] != 0).collect();
    if !c.is_one() || nz.len() != 1 || nz[0] == QVar::Lambda.index() {
        return Err(bad());
    }
    let v = QVar::ALL[nz[0]];
    let m = e[nz[0]];
    let n = m.unsigned_abs();
    // (q^{nj} − 1)/(q^n − 1) is the product of Φ_d over d | nj with d ∤ n
    let mut out = QScalar::one();
    for d in 1..=n * j {
        if (n * j).is_multiple_of(d) && n % d != 0 {
            out = out.mul(&QScalar::inv_cyclotomic(v, d));
        }
    }
    if m < 0 {
        // [j]_{q^{−n}} = q^{−n(j−1)} [j]_{q^n}
        out = out.mul(&QScalar::var_pow(v, (n * (j - 1)) as i32));
    }
    Ok(out)
}

/// `1/[k]_p!`.
pub fn inv_q_factorial(p: &QScalar, k: u32) -> Result<QScalar> {
    let mut out = QScalar::one();
    for j in 2..=k {
        out = out.mul(&inv_q_integer(p, j)?);
    }
    Ok(out)
}

/// `Σ_{k ≤ order} x^k / [k]_p!`, truncated by the number of factors.
pub fn q_exponential(alg: &QAlgebra, x: &QTensor, base: &QScalar, order: u32) -> Result<QTensor> {
    let mut out = QTensor::one(x.legs());
    let mut power = QTensor::one(x.legs());
    for k in 1..=order {
        power = alg.mul(&power, x)?;
        out = out.add(&power.scale(&inv_q_factorial(base, k)?));
    }
    Ok(out)
}

/// `exp_{q_ξ²}(λ E₁₊q_ξ^{H₁+H₂} ⊗ E₂₊q_ξ^{H₁+H₂})` through `λ^order`.
pub fn r4_prime_twist(order: u32) -> Result<QTensor> {
    let alg = Variant::R4Prime.algebra();
    let dressed = |copy: usize| {
        let mut m = QMonomial::e_plus(copy);
        m.0[0].cartan[QVar::Xi.index()] = 1;
        m.0[1].cartan[QVar::Xi.index()] = 1;
        m
    };
    let x = QTensor::term(
        vec![dressed(0), dressed(1)],
        QScalar::var_pow(QVar::Lambda, 1),
    );
    q_exponential(&alg, &x, &QScalar::var_pow(QVar::Xi, 2), order)
}

/// `F₁₂(Δ⊗id)F − F₂₃(id⊗Δ)F` truncated at `λ^order`.
pub fn cocycle_residual(h: &QHopf, f: &QTensor, order: u32) -> Result<QTensor> {
    if f.legs() != 2 {
        return Err(Error::LegMismatch(format!(
            "a twist has two legs, got {}",
            f.legs()
        )));
    }
    let alg = h.algebra();
    let one = QTensor::one(1);
    let left = alg.mul(&f.outer(&one), &h.coproduct(f, 0)?)?;
    let right = alg.mul(&one.outer(f), &h.coproduct(f, 1)?)?;
    Ok(left.sub(&right).truncate_lambda(order))
}
