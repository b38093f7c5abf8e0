//! Cholesky factorization and reduction of the definite pencil `λP − A` to a
//! standard Hermitian eigenproblem.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

/// Lower-triangular Cholesky factor `L` with `P = LL*`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct CholeskyFactor {
    n: usize,
    data: Vec<Complex64>,
}

impl CholeskyFactor {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// Solves `L x = b` in place.
    fn forward_solve(&self, b: &mut [Complex64]) {
        let n = self.n;
        for i in 0..n {
            let mut acc = b[i];
            for k in 0..i {
                acc -= self.data[i * n + k] * b[k];
            }
            b[i] = acc / self.data[i * n + i];
        }
    }

    /// `‖LL* − P‖_F`.
    pub fn residual(&self, p: &HermitianMatrix) -> f64 {
        let n = self.n;
        let mut sum = 0.0;
        for i in 0..n {
            for j in 0..n {
                let llh: Complex64 = (0..=i.min(j)).map(|k| self.get(i, k) * self.get(j, k).conj()).sum();
                sum += (llh - p.get_complex(i, j)).norm_sqr();
            }
        }
        sum.sqrt()
    }
}

/// Cholesky factorization of a positive definite matrix (exact matrices are
/// embedded first). A pivot at or below `n·ε·max|pᵢᵢ|` is rejected.
pub fn cholesky(p: &HermitianMatrix) -> Result<CholeskyFactor> {
    let n = p.n();
    let a = p.to_complex_dense();
    let scale = (0..n).map(|i| a[i * n + i].re.abs()).fold(0.0, f64::max);
    let floor = n as f64 * f64::EPSILON * scale;
    let mut l = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        let pivot = a[j * n + j].re - (0..j).map(|k| l[j * n + k].norm_sqr()).sum::<f64>();
        if !(pivot > floor) {
            return Err(Error::NotPositiveDefinite { pivot: j, value: pivot });
        }
        let ljj = pivot.sqrt();
        l[j * n + j] = Complex64::new(ljj, 0.0);
        for i in j + 1..n {
            let mut acc = a[i * n + j];
            for k in 0..j {
                acc -= l[i * n + k] * l[j * n + k].conj();
            }
            l[i * n + j] = acc / ljj;
        }
    }
    Ok(CholeskyFactor { n, data: l })
}

/// `B = L⁻¹ A L⁻*` where `P = LL*`. The eigenvalues of `B` are the roots of
/// `det(λP − A)`, and `B` is congruent to `A`.
pub fn pencil_reduce(p: &HermitianMatrix, a: &HermitianMatrix) -> Result<HermitianMatrix> {
    if p.n() != a.n() {
        return Err(Error::DimensionMismatch { expected: p.n(), found: a.n() });
    }
    let n = a.n();
    let l = cholesky(p)?;
    let dense = a.to_complex_dense();
    // Y = L⁻¹ A, column by column
    let mut y = vec![Complex64::new(0.0, 0.0); n * n];
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for j in 0..n {
        for i in 0..n {
            col[i] = dense[i * n + j];
        }
        l.forward_solve(&mut col);
        for i in 0..n {
            y[i * n + j] = col[i];
        }
    }
    // B = L⁻¹ Y* since A is Hermitian
    let mut bh = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for i in 0..n {
            col[i] = y[j * n + i].conj();
        }
        l.forward_solve(&mut col);
        for i in 0..n {
            bh[i * n + j] = col[i];
        }
    }
    Ok(HermitianMatrix::from_fn_complex(n, |i, j| {
        (bh[i * n + j] + bh[j * n + i].conj()) * 0.5
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Field, QuadField};

    #[test]
    fn identity_and_diagonal_factors() {
        let i3 = HermitianMatrix::identity(3, Field::Complex);
        let l = cholesky(&i3).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(l.get(i, j).re, if i == j { 1.0 } else { 0.0 });
            }
        }
        let four = HermitianMatrix::from_real_diagonal(&[4.0]);
        assert_eq!(cholesky(&four).unwrap().get(0, 0), Complex64::new(2.0, 0.0));
    }

    #[test]
    fn two_by_two_factor() {
        let p = HermitianMatrix::from_fn_complex(2, |i, j| Complex64::new(if i == j { 2.0 } else { 1.0 }, 0.0));
        let l = cholesky(&p).unwrap();
        assert!((l.get(0, 0).re - 2f64.sqrt()).abs() < 1e-15);
        assert!((l.get(1, 0).re - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!((l.get(1, 1).re - 1.5f64.sqrt()).abs() < 1e-15);
        assert!(l.residual(&p) < 1e-14);
    }

    #[test]
    fn indefinite_input_reports_pivot() {
        let p = HermitianMatrix::from_real_diagonal(&[1.0, -1.0, 2.0]);
        assert!(matches!(cholesky(&p), Err(Error::NotPositiveDefinite { pivot: 1, .. })));
        let singular = HermitianMatrix::from_fn_complex(2, |_, _| Complex64::new(1.0, 0.0));
        assert!(matches!(cholesky(&singular), Err(Error::NotPositiveDefinite { pivot: 1, .. })));
    }

    #[test]
    fn diagonal_pencil_reduction() {
        let p = HermitianMatrix::from_real_diagonal(&[1.0, 4.0]);
        let a = HermitianMatrix::from_real_diagonal(&[2.0, 4.0]);
        let b = pencil_reduce(&p, &a).unwrap();
        assert_eq!(b, HermitianMatrix::from_real_diagonal(&[2.0, 1.0]));
    }

    #[test]
    fn identity_pencil_is_a_copy() {
        let a = HermitianMatrix::from_fn_complex(3, |i, j| Complex64::new((i + 2 * j) as f64, i as f64 - j as f64));
        let b = pencil_reduce(&HermitianMatrix::identity(3, Field::Complex), &a).unwrap();
        assert_eq!(b, a);
        let exact = HermitianMatrix::identity(3, Field::Quad(QuadField::MinusThree));
        assert_eq!(pencil_reduce(&exact, &a).unwrap(), a);
    }
}
