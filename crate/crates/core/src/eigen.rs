//! Eigenvalues of dense complex Hermitian matrices.
//!
//! The matrix is reduced to Hermitian tridiagonal form by Householder
//! reflections. A Hermitian tridiagonal matrix is unitarily similar (by a
//! diagonal phase matrix) to the real symmetric tridiagonal matrix with the
//! same diagonal and off-diagonal moduli, which is then diagonalized by the
//! implicit-shift QL iteration.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Iteration budget of the QL phase, in sweeps per unit of dimension.
pub const SWEEPS_PER_DIMENSION: usize = 30;

/// Eigenvalues (unsorted) of the Hermitian matrix stored row-major in `a`.
pub fn hermitian_eigenvalues(n: usize, a: &[Complex64]) -> Result<Vec<f64>> {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return Ok(Vec::new());
    }
    let (mut diag, mut off) = tridiagonalize(n, a.to_vec());
    tridiagonal_ql(&mut diag, &mut off)?;
    Ok(diag)
}

/// Householder reduction. Returns the real diagonal and the moduli of the
/// subdiagonal (`off[k]` couples `k` and `k+1`; the last slot is zero).
fn tridiagonalize(n: usize, mut a: Vec<Complex64>) -> (Vec<f64>, Vec<f64>) {
    let mut off = vec![0.0; n];
    let zero = Complex64::new(0.0, 0.0);
    for k in 0..n.saturating_sub(2) {
        // x = A[k+1.., k]
        let m = n - k - 1;
        let x: Vec<Complex64> = (0..m).map(|t| a[(k + 1 + t) * n + k]).collect();
        let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let phase = if x[0].norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x[0] / x[0].norm() };
        let alpha = -phase * norm;
        // v = x − αe₁, normalized; H = I − 2vv*
        let mut v = x;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            off[k] = norm;
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // trailing block S = A[k+1.., k+1..]; p = S v; K = v* p
        let mut p = vec![zero; m];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = (k + 1 + i) * n + k + 1;
            *pi = (0..m).map(|j| a[row + j] * v[j]).sum();
        }
        let kappa: f64 = v.iter().zip(&p).map(|(vi, pi)| (vi.conj() * pi).re).sum();
        // S ← S − 2 v w* − 2 w v*, w = p − K v
        let w: Vec<Complex64> = p.iter().zip(&v).map(|(pi, vi)| pi - vi * kappa).collect();
        for i in 0..m {
            let row = (k + 1 + i) * n + k + 1;
            for j in 0..m {
                a[row + j] -= 2.0 * (v[i] * w[j].conj() + w[i] * v[j].conj());
            }
        }
        for t in 0..m {
            let value = if t == 0 { alpha } else { zero };
            a[(k + 1 + t) * n + k] = value;
            a[k * n + k + 1 + t] = value.conj();
        }
        off[k] = norm;
    }
    if n >= 2 {
        off[n - 2] = a[(n - 1) * n + n - 2].norm();
    }
    let diag = (0..n).map(|i| a[i * n + i].re).collect();
    (diag, off)
}

/// Implicit-shift QL on a real symmetric tridiagonal matrix; eigenvalues
/// overwrite `d`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    let cap = SWEEPS_PER_DIMENSION * n.max(1);
    let mut sweeps = 0;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m] == 0.0 {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > cap {
                return Err(Error::ConvergenceFailure { sweeps: cap });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    #[test]
    fn empty_and_scalar() {
        assert!(hermitian_eigenvalues(0, &[]).unwrap().is_empty());
        assert_eq!(hermitian_eigenvalues(1, &[c(-3.5, 0.0)]).unwrap(), vec![-3.5]);
    }

    #[test]
    fn edge_block_has_eigenvalues_two_and_zero() {
        let a = [c(1.0, 0.0), c(-1.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)];
        let ev = sorted(hermitian_eigenvalues(2, &a).unwrap());
        assert!((ev[0] - 2.0).abs() < 1e-14 && ev[1].abs() < 1e-14);
    }

    #[test]
    fn directed_triangle() {
        let i = c(0.0, 1.0);
        let z = c(0.0, 0.0);
        let a = [z, i, -i, -i, z, i, i, -i, z];
        let ev = sorted(hermitian_eigenvalues(3, &a).unwrap());
        let r3 = 3f64.sqrt();
        assert!((ev[0] - r3).abs() < 1e-12);
        assert!(ev[1].abs() < 1e-12);
        assert!((ev[2] + r3).abs() < 1e-12);
    }

    #[test]
    fn diagonal_input_returns_diagonal() {
        let n = 4;
        let values = [3.0, -1.0, 7.5, 0.0];
        let mut a = vec![c(0.0, 0.0); n * n];
        for (k, v) in values.iter().enumerate() {
            a[k * n + k] = c(*v, 0.0);
        }
        assert_eq!(sorted(hermitian_eigenvalues(n, &a).unwrap()), vec![7.5, 3.0, 0.0, -1.0]);
    }

    #[test]
    fn path_laplacian() {
        // L(P4) has eigenvalues 2 − 2cos(kπ/4)
        let n = 4;
        let mut a = vec![c(0.0, 0.0); n * n];
        for k in 0..n {
            a[k * n + k] = c(if k == 0 || k == n - 1 { 1.0 } else { 2.0 }, 0.0);
            if k + 1 < n {
                a[k * n + k + 1] = c(-1.0, 0.0);
                a[(k + 1) * n + k] = c(-1.0, 0.0);
            }
        }
        let ev = sorted(hermitian_eigenvalues(n, &a).unwrap());
        let expected = sorted(
            (0..n)
                .map(|k| 2.0 - 2.0 * (k as f64 * std::f64::consts::PI / n as f64).cos())
                .collect(),
        );
        for (x, y) in ev.iter().zip(&expected) {
            assert!((x - y).abs() < 1e-12, "{ev:?} vs {expected:?}");
        }
    }
}
