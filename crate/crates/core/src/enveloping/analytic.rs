//! Truncated Maclaurin series of tensors.
//!
//! An argument qualifies when its parameter-free part vanishes: then its
//! `k`-th power starts at parameter degree `k`, and the series is finite
//! at any fixed order. Nilpotence in `U(g)` is never required.

use super::tensor::Tensor;
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnalyticFn {
    Exp,
    Log1p,
    Arctan,
    /// `x / sinh x`
    XOverSinhX,
    /// `sinh x / x`
    SinhXOverX,
    /// `1 / (1 + x)`
    Geometric,
}

fn factorial(n: u32) -> Rational {
    (1..=n as i128).fold(Rational::ONE, |acc, k| acc * Rational::integer(k))
}

/// Maclaurin coefficients `c_0 … c_n`.
pub fn coefficients(f: AnalyticFn, n: u32) -> Vec<Rational> {
    let n = n as usize;
    let mut c = vec![Rational::ZERO; n + 1];
    match f {
        AnalyticFn::Exp => {
            for (k, v) in c.iter_mut().enumerate() {
                *v = factorial(k as u32).recip();
            }
        }
        AnalyticFn::Log1p => {
            for (k, v) in c.iter_mut().enumerate().skip(1) {
                let s = if k % 2 == 1 { 1 } else { -1 };
                *v = Rational::new(s, k as i128);
            }
        }
        AnalyticFn::Arctan => {
            for (k, v) in c.iter_mut().enumerate() {
                if k % 2 == 1 {
                    let s = if (k / 2) % 2 == 0 { 1 } else { -1 };
                    *v = Rational::new(s, k as i128);
                }
            }
        }
        AnalyticFn::SinhXOverX => {
            for (k, v) in c.iter_mut().enumerate() {
                if k % 2 == 0 {
                    *v = factorial(k as u32 + 1).recip();
                }
            }
        }
        AnalyticFn::XOverSinhX => {
            // reciprocal of sinh(x)/x by long division
            let s = coefficients(AnalyticFn::SinhXOverX, n as u32);
            c[0] = Rational::ONE;
            for k in 1..=n {
                let mut acc = Rational::ZERO;
                for j in 1..=k {
                    acc = acc + s[j] * c[k - j];
                }
                c[k] = -acc;
            }
        }
        AnalyticFn::Geometric => {
            for (k, v) in c.iter_mut().enumerate() {
                *v = Rational::integer(if k % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    c
}

/// `f(arg)` truncated at total parameter degree `order`.
pub fn analytic_apply(f: AnalyticFn, arg: &Tensor, order: u32) -> Result<Tensor> {
    if !arg.degree_part(0).is_zero() {
        return Err(Error::SeriesDivergence);
    }
    let coeffs = coefficients(f, order);
    let ord = Some(order);
    let mut out = Tensor::scalar(
        arg.algebra(),
        arg.legs(),
        Scalar::constant(coeffs[0].into()),
    );
    let mut power = Tensor::one(arg.algebra(), arg.legs());
    for c in coeffs.iter().skip(1) {
        power = power.mul(arg, ord);
        if power.is_zero() {
            break;
        }
        if !c.is_zero() {
            out = out.add(&power.scale_num(GaussianRational::real(*c)));
        }
    }
    Ok(out)
}

/// `exp(arg)` truncated at `order`.
pub fn exp(arg: &Tensor, order: u32) -> Result<Tensor> {
    analytic_apply(AnalyticFn::Exp, arg, order)
}

/// Inverse of `1 + X` (with `X` of parameter degree `>= 1`) by the
/// Neumann series.
pub fn series_inverse(t: &Tensor, order: u32) -> Result<Tensor> {
    let one = Tensor::one(t.algebra(), t.legs());
    if t.degree_part(0) != one {
        return Err(Error::Precondition(
            "series inverse needs parameter-free part exactly 1".into(),
        ));
    }
    analytic_apply(AnalyticFn::Geometric, &t.sub(&one), order)
}
