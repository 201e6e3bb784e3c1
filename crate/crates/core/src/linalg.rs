//! Dense exact linear algebra over the Gaussian rationals.

use crate::scalar::GaussianRational;

pub type Matrix = Vec<Vec<GaussianRational>>;

/// Inverse of a square matrix, or `None` if singular.
pub fn invert(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    GaussianRational::ONE
                } else {
                    GaussianRational::ZERO
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for v in a[col].iter_mut() {
            *v = *v * inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let sub = f * a[col][c];
                    a[r][c] = a[r][c] - sub;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Incrementally maintained row-echelon basis of a subspace of `K^n`.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// Rows with a leading 1 at `pivots[i]`, fully reduced.
    rows: Vec<Vec<GaussianRational>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; returns the remainder.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vec<GaussianRational> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p];
                for (x, r) in v.iter_mut().zip(row) {
                    *x = *x - f * *r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[GaussianRational]) -> bool {
        self.reduce(v).iter().all(GaussianRational::is_zero)
    }

    /// Adds `v` if independent; returns whether the span grew.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip();
        for x in r.iter_mut() {
            *x = *x * inv;
        }
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if !row[p].is_zero() {
                let f = row[p];
                for (x, y) in row.iter_mut().zip(&r) {
                    *x = *x - f * *y;
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vec<GaussianRational>] {
        &self.rows
    }
}
