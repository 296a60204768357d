//! Symmetric tridiagonal eigenproblems: Sturm-sequence bisection for
//! eigenvalues and inverse iteration for eigenvectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Symmetric tridiagonal matrix with `diag.len() == off.len() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymTridiagonal {
    diag: Vec<f64>,
    off: Vec<f64>,
}

impl SymTridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<SymTridiagonal> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Domain(
                "tridiagonal needs n diagonal and n-1 off-diagonal entries",
            ));
        }
        Ok(SymTridiagonal { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.len();
        (0..n).fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), i| {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.off[i].abs() } else { 0.0 };
            let r = left + right;
            (lo.min(self.diag[i] - r), hi.max(self.diag[i] + r))
        })
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of
    /// `T - x I = L D L^T`).
    pub fn count_below(&self, x: f64) -> usize {
        let (lo, hi) = self.gershgorin();
        let guard = f64::EPSILON * (hi.abs().max(lo.abs())).max(f64::MIN_POSITIVE);
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0.. {
            if q == 0.0 {
                q = -guard;
            }
            if q < 0.0 {
                count += 1;
            }
            if i + 1 == self.len() {
                break;
            }
            let e = self.off[i];
            q = (self.diag[i + 1] - x) - e * e / q;
        }
        count
    }

    /// The `k`th smallest eigenvalue (0-based) by bisection to machine precision.
    pub fn eigenvalue(&self, k: usize) -> Result<f64> {
        if k >= self.len() {
            return Err(Error::Domain("eigenvalue index out of range"));
        }
        let (mut lo, mut hi) = self.gershgorin();
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::ConvergenceFailure("Sturm bisection"))
    }

    /// `y = T x`
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.len();
        (0..n)
            .map(|i| {
                let mut y = self.diag[i] * x[i];
                if i > 0 {
                    y += self.off[i - 1] * x[i - 1];
                }
                if i + 1 < n {
                    y += self.off[i] * x[i + 1];
                }
                y
            })
            .collect()
    }

    /// Solve `(T - shift I) y = rhs` by elimination without pivoting; tiny
    /// pivots are replaced by `guard` so shifts at an eigenvalue stay finite.
    fn solve_shifted(&self, shift: f64, rhs: &[f64], guard: f64) -> Vec<f64> {
        let n = self.len();
        let mut pivots = vec![0.0; n];
        let mut y = rhs.to_vec();
        pivots[0] = self.diag[0] - shift;
        for i in 1..n {
            if pivots[i - 1].abs() < guard {
                pivots[i - 1] = guard;
            }
            let m = self.off[i - 1] / pivots[i - 1];
            pivots[i] = (self.diag[i] - shift) - m * self.off[i - 1];
            y[i] -= m * y[i - 1];
        }
        if pivots[n - 1].abs() < guard {
            pivots[n - 1] = guard;
        }
        y[n - 1] /= pivots[n - 1];
        for i in (0..n - 1).rev() {
            y[i] = (y[i] - self.off[i] * y[i + 1]) / pivots[i];
        }
        y
    }

    /// Unit eigenvector for the eigenvalue `lambda` by inverse iteration.
    /// The sign is fixed so the first entry of significant size is positive.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.len();
        let (lo, hi) = self.gershgorin();
        let norm = hi.abs().max(lo.abs());
        let guard = f64::EPSILON * norm;
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i % 7) as f64)).collect();
        normalize(&mut v);
        for iteration in 0..8 {
            let mut y = self.solve_shifted(lambda, &v, guard);
            if y.iter().any(|x| !x.is_finite()) {
                return Err(Error::ConvergenceFailure("inverse iteration"));
            }
            normalize(&mut y);
            v = y;
            if iteration >= 2 && residual_inf(self, &v, lambda) < 64.0 * f64::EPSILON * norm {
                orient(&mut v);
                return Ok(v);
            }
        }
        Err(Error::ConvergenceFailure("inverse iteration"))
    }
}

fn normalize(v: &mut [f64]) {
    let s = libm::sqrt(v.iter().map(|x| x * x).sum::<f64>());
    v.iter_mut().for_each(|x| *x /= s);
}

fn orient(v: &mut [f64]) {
    let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-3 * peak) {
        if *first < 0.0 {
            v.iter_mut().for_each(|x| *x = -*x);
        }
    }
}

/// `max_i |(T v - lambda v)_i|`
pub fn residual_inf(t: &SymTridiagonal, v: &[f64], lambda: f64) -> f64 {
    t.apply(v)
        .iter()
        .zip(v)
        .fold(0.0f64, |m, (tv, x)| m.max((tv - lambda * x).abs()))
}
