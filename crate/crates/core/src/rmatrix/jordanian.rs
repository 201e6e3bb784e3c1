use std::sync::Arc;

use super::RMatrix;
use crate::algebra::{LieAlgebra, LieElement};
use crate::error::Result;
use crate::scalar::{GaussianRational, Scalar};

/// Data of a Jordanian-type r-matrix `ξ Σ_ν x_ν ∧ y_ν`.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanianShape {
    pub x0: LieElement,
    pub y0: LieElement,
    pub pairs: Vec<(LieElement, LieElement)>,
    /// Deformation parameter `ξ`.
    pub xi: String,
}

impl JordanianShape {
    pub fn new(x0: LieElement, y0: LieElement, xi: &str) -> JordanianShape {
        JordanianShape {
            x0,
            y0,
            pairs: Vec::new(),
            xi: xi.to_owned(),
        }
    }

    pub fn with_pair(mut self, x: LieElement, y: LieElement) -> JordanianShape {
        self.pairs.push((x, y));
        self
    }

    /// `ξ (x₀∧y₀ + Σ x_i∧y_i)`.
    pub fn r_matrix(&self, alg: &Arc<LieAlgebra>) -> Result<RMatrix> {
        let xi = Scalar::param(&self.xi);
        let mut terms = vec![(xi.clone(), self.x0.clone(), self.y0.clone())];
        for (x, y) in &self.pairs {
            terms.push((xi.clone(), x.clone(), y.clone()));
        }
        RMatrix::from_wedges(alg, &terms)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JordanianReport {
    /// `t_i` inferred from `[x₀, y_i] = t_i y_i` (`None` when not
    /// proportional).
    pub weights: Vec<Option<GaussianRational>>,
    pub violations: Vec<String>,
}

impl JordanianReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `c` with `a = c·b`, for parameter-free elements; `a = 0` gives `0`.
fn proportional(a: &LieElement, b: &LieElement) -> Option<GaussianRational> {
    if a.is_zero() {
        return Some(GaussianRational::ZERO);
    }
    let (i, bc) = b.coeffs().next()?;
    let c = a.coeff(i).constant_term() / bc.constant_term();
    (b.scale_num(c) == *a).then_some(c)
}

/// Checks the relations
///
/// ```text
/// [x₀, y₀] = y₀,  [x₀, x_i] = (1 − t_i) x_i,  [x₀, y_i] = t_i y_i,
/// [x_i, y_j] = δ_ij y₀,  [x_i, x_j] = [y_i, y_j] = 0,  [y₀, x_j] = [y₀, y_j] = 0
/// ```
///
/// inferring each `t_i` from the third family.
pub fn jordanian_relations_check(
    shape: &JordanianShape,
    alg: &LieAlgebra,
) -> Result<JordanianReport> {
    let mut violations = Vec::new();
    let br = |a: &LieElement, b: &LieElement| alg.bracket(a, b);
    let show = |x: &LieElement| alg.render(x);
    let JordanianShape { x0, y0, pairs, .. } = shape;

    if br(x0, y0)? != *y0 {
        violations.push(format!(
            "[x0, y0] = {} but y0 = {}",
            show(&br(x0, y0)?),
            show(y0)
        ));
    }
    let mut weights = Vec::new();
    for (i, (xi, yi)) in pairs.iter().enumerate() {
        let t = proportional(&br(x0, yi)?, yi);
        match t {
            None => violations.push(format!(
                "[x0, y{}] = {} is not a multiple of y{}",
                i + 1,
                show(&br(x0, yi)?),
                i + 1
            )),
            Some(t) => {
                let expected = xi.scale_num(GaussianRational::ONE - t);
                if br(x0, xi)? != expected {
                    violations.push(format!(
                        "[x0, x{}] = {} but (1 - t{})x{} = {} with t{} = {t}",
                        i + 1,
                        show(&br(x0, xi)?),
                        i + 1,
                        i + 1,
                        show(&expected),
                        i + 1
                    ));
                }
            }
        }
        weights.push(t);
        for (j, (xj, yj)) in pairs.iter().enumerate() {
            let expected = if i == j {
                y0.clone()
            } else {
                LieElement::zero()
            };
            if br(xi, yj)? != expected {
                violations.push(format!("[x{}, y{}] = {}", i + 1, j + 1, show(&br(xi, yj)?)));
            }
            if j > i {
                if !br(xi, xj)?.is_zero() {
                    violations.push(format!("[x{}, x{}] != 0", i + 1, j + 1));
                }
                if !br(yi, yj)?.is_zero() {
                    violations.push(format!("[y{}, y{}] != 0", i + 1, j + 1));
                }
            }
        }
        if !br(y0, xi)?.is_zero() {
            violations.push(format!("[y0, x{}] = {}", i + 1, show(&br(y0, xi)?)));
        }
        if !br(y0, yi)?.is_zero() {
            violations.push(format!("[y0, y{}] = {}", i + 1, show(&br(y0, yi)?)));
        }
    }
    Ok(JordanianReport {
        weights,
        violations,
    })
}
