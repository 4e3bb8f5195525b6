use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use super::families::{h_a, q_a};
use crate::error::{Error, Result};

/// The integers `p_A(n,k,j)` and `q_A(n,k)` that carry the h- and
/// f-vectors of a complex to those of its antiprism triangulation.
#[derive(Clone, Debug)]
pub struct TransformTable {
    n_max: usize,
    p: Vec<Vec<Vec<BigInt>>>,
    q: Vec<Vec<BigUint>>,
}

impl TransformTable {
    /// Builds all entries with `n <= n_max`: the row `k = 0` holds the
    /// coefficients of `h_A(σ_n)`, and for `k >= 1`
    /// `p(n,k,j) = p(n,k-1,j) + p(n-1,k-1,j-1) - p(n-1,k-1,j)`.
    pub fn new(n_max: usize) -> Self {
        let mut p: Vec<Vec<Vec<BigInt>>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut rows = vec![h_a(n).padded(n)];
            for k in 1..=n {
                let row = (0..=n)
                    .map(|j| {
                        let prev = &p[n - 1][k - 1];
                        let lower = if j >= 1 {
                            prev.get(j - 1).cloned().unwrap_or_default()
                        } else {
                            BigInt::zero()
                        };
                        let same = prev.get(j).cloned().unwrap_or_default();
                        &rows[k - 1][j] + lower - same
                    })
                    .collect();
                rows.push(row);
            }
            p.push(rows);
        }
        let q = (0..=n_max)
            .into_par_iter()
            .map(|n| (0..=n).map(|k| q_a(n, k)).collect())
            .collect();
        TransformTable { n_max, p, q }
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Zero outside `0 <= k, j <= n <= n_max`.
    pub fn p(&self, n: usize, k: usize, j: usize) -> BigInt {
        self.p
            .get(n)
            .and_then(|r| r.get(k))
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_default()
    }

    pub fn q(&self, n: usize, k: usize) -> BigUint {
        self.q.get(n).and_then(|r| r.get(k)).cloned().unwrap_or_default()
    }

    fn check(&self, len: usize, n: usize) -> Result<()> {
        if n > self.n_max {
            return Err(Error::Capacity {
                what: "transform table size",
                requested: n,
                limit: self.n_max,
            });
        }
        if len != n + 1 {
            return Err(Error::LengthMismatch {
                expected: n + 1,
                got: len,
            });
        }
        Ok(())
    }

    /// `h_j(sd_A(Δ)) = sum_k p(n,k,j) h_k(Δ)` for `(n-1)`-dimensional `Δ`.
    pub fn h_transform(&self, h: &[BigInt], n: usize) -> Result<Vec<BigInt>> {
        self.check(h.len(), n)?;
        Ok((0..=n)
            .map(|j| (0..=n).map(|k| self.p(n, k, j) * &h[k]).sum())
            .collect())
    }

    /// `f_{j-1}(sd_A(Δ)) = sum_{k=j}^n q(k,j) f_{k-1}(Δ)`; `f` starts at
    /// `f_{-1}`.
    pub fn f_transform(&self, f: &[BigUint], n: usize) -> Result<Vec<BigUint>> {
        self.check(f.len(), n)?;
        Ok((0..=n).map(|j| (j..=n).map(|k| self.q(k, j) * &f[k]).sum()).collect())
    }
}

/// One-shot [`TransformTable::h_transform`].
pub fn h_transform(h: &[BigInt], n: usize) -> Result<Vec<BigInt>> {
    TransformTable::new(n).h_transform(h, n)
}

/// One-shot [`TransformTable::f_transform`].
pub fn f_transform(f: &[BigUint], n: usize) -> Result<Vec<BigUint>> {
    TransformTable::new(n).f_transform(f, n)
}
