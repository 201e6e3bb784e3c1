//! Twists `q^{Σ M_ij H_i ⊗ H_j}` built from the Cartan generators alone.
//! Their conjugation action on weight vectors is exact, so no series in
//! `ln q` is needed.

use super::algebra::{QAlgebra, QMonomial, QTensor};
use super::scalar::{QScalar, QVar};
use super::star::base_star;
use crate::algebra::Lifting;
use crate::error::{Error, Result};
use crate::scalar::Reality;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CartanTwist {
    pub base: QVar,
    pub matrix: [[i32; 2]; 2],
}

impl CartanTwist {
    /// `q_γ^{H₁∧H₂} = q_γ^{H₁⊗H₂ − H₂⊗H₁}`.
    pub fn gamma_wedge() -> CartanTwist {
        CartanTwist {
            base: QVar::Gamma,
            matrix: [[0, 1], [-1, 0]],
        }
    }

    pub fn inverse(&self) -> CartanTwist {
        CartanTwist {
            base: self.base,
            matrix: self.matrix.map(|r| r.map(|v| -v)),
        }
    }

    /// `F (a ⊗ b) F⁻¹` for weight vectors: with `A m = m (A + w)` the factor
    /// is `q^{Σ M_ij (w_i(a) 1⊗H_j + w_j(b) H_i⊗1 + w_i(a) w_j(b))}`.
    pub fn conjugate(&self, alg: &QAlgebra, t: &QTensor) -> Result<QTensor> {
        if t.legs() != 2 {
            return Err(Error::LegMismatch(format!(
                "Cartan twist acts on two legs, got {}",
                t.legs()
            )));
        }
        let bi = self.base.index();
        let mut out = QTensor::zero(2);
        for (k, c) in t.terms() {
            let wa = [k[0].0[0].weight(), k[0].0[1].weight()];
            let wb = [k[1].0[0].weight(), k[1].0[1].weight()];
            let mut left = QMonomial::one();
            let mut right = QMonomial::one();
            let mut power = 0;
            for i in 0..2 {
                for j in 0..2 {
                    let m = self.matrix[i][j];
                    right.0[j].cartan[bi] += m * wa[i];
                    left.0[i].cartan[bi] += m * wb[j];
                    power += m * wa[i] * wb[j];
                }
            }
            let term = QTensor::term(k.clone(), c.mul(&QScalar::var_pow(self.base, power)));
            let factor = QTensor::term(vec![left, right], QScalar::one());
            out = out.add(&alg.mul(&term, &factor)?);
        }
        Ok(out)
    }

    /// `F*` under a lifting: `H_k* = −H_{k'}` on each leg, legs swapped for
    /// the flipped lifting, and the base conjugated.
    pub fn star(&self, lifting: Lifting, reality: Reality) -> Result<CartanTwist> {
        let (base, s) = base_star(reality, self.base)?;
        let mut matrix = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                let (a, b) = match lifting {
                    Lifting::Direct => (1 - i, 1 - j),
                    Lifting::Flipped => (1 - j, 1 - i),
                };
                matrix[a][b] += s * self.matrix[i][j];
            }
        }
        Ok(CartanTwist { base, matrix })
    }

    /// `F* = F⁻¹`.
    pub fn is_unitary(&self, lifting: Lifting, reality: Reality) -> Result<bool> {
        Ok(self.star(lifting, reality)? == self.inverse())
    }
}
