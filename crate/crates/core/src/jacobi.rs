//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_SWEEPS: usize = 100;
pub const MAX_DIM: usize = 2000;

/// Sorted eigenvalues of a symmetric matrix, iterating until the
/// off-diagonal Frobenius norm drops below `tol`.
pub fn numeric_eigenvalues(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    numeric_eigenvalues_with(m, tol, DEFAULT_MAX_SWEEPS)
}

pub fn numeric_eigenvalues_with(m: &IntMatrix, tol: f64, max_sweeps: usize) -> Result<Vec<f64>> {
    let n = m.dim();
    if n > MAX_DIM {
        return Err(Error::InvalidParameters(format!(
            "dimension {n} exceeds {MAX_DIM}"
        )));
    }
    if !m.is_symmetric() {
        return Err(Error::InvalidParameters("matrix is not symmetric".into()));
    }
    let mut a: Vec<f64> = (0..n * n).map(|k| m.get(k / n, k % n) as f64).collect();
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    while off(&a) >= tol {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off(&a),
            });
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
        sweeps += 1;
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}
