//! Inertia `(n₊, n₋, n₀)` of Hermitian matrices.
//!
//! Two independent routes are provided: counting floating eigenvalues against
//! a zero band `[−τ, τ]`, and exact symmetric elimination over a quadratic
//! field. The exact route repeatedly splits off a pivot block by congruence,
//!
//! ```text
//! [ E  C ]     [ E  0            ]
//! [ C* F ]  ≅  [ 0  F − C*E⁻¹C   ]
//! ```
//!
//! and Sylvester's law of inertia makes the counts of the blocks add up.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;
use crate::scalar::{QuadExt, Real};

/// Default relative zero-band width; `τ = 1e−9 · max(1, ‖A‖_F)`.
pub const DEFAULT_RELATIVE_TOL: f64 = 1e-9;
/// Smallest zero-band width ever used.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;
/// Eigenvalues with `τ < |λ| < AMBIGUITY_FACTOR · τ` are too close to the
/// band to certify a sign.
pub const AMBIGUITY_FACTOR: f64 = 10.0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Inertia { n_plus, n_minus, n_zero }
    }

    pub fn n(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Width of the floating zero band.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    /// `τ = max(k · max(1, ‖A‖_F), ABSOLUTE_FLOOR)`.
    Relative(f64),
    /// A fixed `τ`.
    Absolute(f64),
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::Relative(DEFAULT_RELATIVE_TOL)
    }
}

impl Tolerance {
    pub fn resolve(self, frobenius_norm: f64) -> f64 {
        match self {
            Tolerance::Relative(k) => (k * frobenius_norm.max(1.0)).max(ABSOLUTE_FLOOR),
            Tolerance::Absolute(t) => t,
        }
    }

    pub fn for_matrix(self, a: &HermitianMatrix) -> f64 {
        self.resolve(a.frobenius_norm())
    }
}

impl fmt::Display for Tolerance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tolerance::Relative(k) => write!(f, "relative {k:e}"),
            Tolerance::Absolute(t) => write!(f, "absolute {t:e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Method {
    Float(Tolerance),
    Exact,
}

/// Floating inertia together with the band used and whether any eigenvalue
/// sat in the ambiguous zone just outside it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FloatInertia {
    pub inertia: Inertia,
    pub tau: f64,
    pub ambiguous: bool,
}

/// Sign counts of `values` against the band `[−τ, τ]`.
pub fn classify(values: &[f64], tau: f64) -> FloatInertia {
    let mut inertia = Inertia::default();
    let mut ambiguous = false;
    for &v in values {
        if v > tau {
            inertia.n_plus += 1;
        } else if v < -tau {
            inertia.n_minus += 1;
        } else {
            inertia.n_zero += 1;
        }
        if v.abs() > tau && v.abs() < AMBIGUITY_FACTOR * tau {
            ambiguous = true;
        }
    }
    FloatInertia { inertia, tau, ambiguous }
}

pub fn inertia_float_detail(a: &HermitianMatrix, tol: Tolerance) -> Result<FloatInertia> {
    let tau = tol.for_matrix(a);
    Ok(classify(a.eigenvalues()?.values(), tau))
}

/// Inertia by counting eigenvalues above `τ`, below `−τ` and in between.
pub fn inertia_float(a: &HermitianMatrix, tol: Tolerance) -> Result<Inertia> {
    inertia_float_detail(a, tol).map(|d| d.inertia)
}

/// Exact inertia by congruence elimination over the matrix's quadratic field.
///
/// The pivot is the real diagonal entry of largest magnitude (lowest index on
/// ties). When the diagonal vanishes but some `x = a_pq ≠ 0`, the block
/// `[[0, x], [x̄, 0]]` (eigenvalues `±|x|`) is eliminated instead. A zero
/// remainder contributes its size to `n₀`.
pub fn inertia_exact(a: &HermitianMatrix) -> Result<Inertia> {
    let Some((_, entries)) = a.exact_entries() else {
        return Err(Error::FieldMismatch(
            "exact inertia needs a q(-1) or q(-3) matrix".into(),
        ));
    };
    let mut size = a.n();
    let mut m = entries.to_vec();
    let mut inertia = Inertia::default();
    while size > 0 {
        let at = |m: &[QuadExt], i: usize, j: usize| m[i * size + j].clone();
        let pivot = (0..size)
            .filter(|&i| !m[i * size + i].is_zero())
            .max_by(|&i, &j| {
                let (x, y) = (m[i * size + i].re().abs(), m[j * size + j].re().abs());
                x.cmp(&y).then(j.cmp(&i))
            });
        if let Some(p) = pivot {
            let d = at(&m, p, p);
            if d.re().is_positive() {
                inertia.n_plus += 1;
            } else {
                inertia.n_minus += 1;
            }
            let d_inv = d.inv()?;
            let rest: Vec<usize> = (0..size).filter(|&k| k != p).collect();
            let mut next = Vec::with_capacity(rest.len() * rest.len());
            for &i in &rest {
                let coeff = &m[i * size + p] * &d_inv;
                for &j in &rest {
                    next.push(&m[i * size + j] - &(&coeff * &m[p * size + j]));
                }
            }
            m = next;
            size -= 1;
            continue;
        }
        let off = (0..size)
            .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i * size + j].is_zero());
        let Some((p, q)) = off else {
            inertia.n_zero += size;
            break;
        };
        inertia.n_plus += 1;
        inertia.n_minus += 1;
        // E = [[0, x], [x̄, 0]], E⁻¹ = [[0, 1/x̄], [1/x, 0]]
        let x = at(&m, p, q);
        let inv_x = x.inv()?;
        let inv_xbar = inv_x.conj();
        let rest: Vec<usize> = (0..size).filter(|&k| k != p && k != q).collect();
        let mut next = Vec::with_capacity(rest.len() * rest.len());
        for &i in &rest {
            let left_p = &m[i * size + p] * &inv_xbar;
            let left_q = &m[i * size + q] * &inv_x;
            for &j in &rest {
                let correction = &(&left_p * &m[q * size + j]) + &(&left_q * &m[p * size + j]);
                next.push(&m[i * size + j] - &correction);
            }
        }
        m = next;
        size -= 2;
    }
    Ok(inertia)
}

pub fn inertia(a: &HermitianMatrix, method: Method) -> Result<Inertia> {
    match method {
        Method::Float(tol) => inertia_float(a, tol),
        Method::Exact => inertia_exact(a),
    }
}

/// Inertia of `A − rI`.
pub fn shifted_inertia(a: &HermitianMatrix, r: &Real, method: Method) -> Result<Inertia> {
    let shifted = match method {
        Method::Float(_) => a.embed_float().shift(&Real::Float(r.to_f64()))?,
        Method::Exact => exact_shift(r).and_then(|r| a.shift(&r))?,
    };
    inertia(&shifted, method)
}

/// Inertia of `A − rP`; `P` need not be definite.
pub fn pencil_inertia(a: &HermitianMatrix, p: &HermitianMatrix, r: &Real, method: Method) -> Result<Inertia> {
    let shifted = match method {
        Method::Float(_) => a.embed_float().pencil_shift(&p.embed_float(), &Real::Float(r.to_f64()))?,
        Method::Exact => exact_shift(r).and_then(|r| a.pencil_shift(p, &r))?,
    };
    inertia(&shifted, method)
}

fn exact_shift(r: &Real) -> Result<Real> {
    match r {
        Real::Exact(_) => Ok(r.clone()),
        Real::Float(_) => Err(Error::FieldMismatch("exact inertia needs a rational shift".into())),
    }
}

/// True when `values` has no entry with `0 < |λ| ≤ AMBIGUITY_FACTOR·τ`,
/// i.e. every nonzero eigenvalue is comfortably resolved.
pub fn is_well_separated(values: &[f64], tau: f64) -> bool {
    values
        .iter()
        .all(|v| *v == 0.0 || v.abs() > AMBIGUITY_FACTOR * tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rational, Field, QuadField, Scalar};

    fn exact(n: usize, field: QuadField, upper: Vec<QuadExt>) -> HermitianMatrix {
        HermitianMatrix::from_upper(n, Field::Quad(field), upper.into_iter().map(Scalar::Quad).collect()).unwrap()
    }

    fn int(p: i64, field: QuadField) -> QuadExt {
        QuadExt::from_rational(rational(p, 1), field)
    }

    #[test]
    fn float_inertia_examples() {
        let d = HermitianMatrix::from_real_diagonal(&[3.0, -1.0, 0.0]);
        assert_eq!(inertia_float(&d, Tolerance::default()).unwrap(), Inertia::new(1, 1, 1));
        let f = QuadField::MinusOne;
        let delta = exact(2, f, vec![int(1, f), int(-1, f), int(1, f)]);
        assert_eq!(inertia_float(&delta.embed_float(), Tolerance::default()).unwrap(), Inertia::new(1, 0, 1));
        let zero = HermitianMatrix::zeros(4, Field::Complex);
        assert_eq!(inertia_float(&zero, Tolerance::default()).unwrap(), Inertia::new(0, 0, 4));
    }

    #[test]
    fn exact_inertia_examples() {
        let f = QuadField::MinusThree;
        let w = QuadExt::omega();
        let h = exact(2, f, vec![int(0, f), w.clone(), int(0, f)]);
        assert_eq!(inertia_exact(&h).unwrap(), Inertia::new(1, 1, 0));
        let l = exact(2, f, vec![int(1, f), -&w, int(1, f)]);
        assert_eq!(inertia_exact(&l).unwrap(), Inertia::new(1, 0, 1));
        let g = QuadField::MinusOne;
        let d = exact(2, g, vec![int(5, g), int(0, g), int(-5, g)]);
        assert_eq!(inertia_exact(&d).unwrap(), Inertia::new(1, 1, 0));
        assert!(matches!(inertia_exact(&d.embed_float()), Err(Error::FieldMismatch(_))));
    }

    #[test]
    fn exact_zero_diagonal_block_inside_larger_matrix() {
        // [[0, i, 1], [−i, 0, 0], [1, 0, 0]] has eigenvalues ±√2, 0
        let f = QuadField::MinusOne;
        let m = exact(3, f, vec![int(0, f), QuadExt::i(), int(1, f), int(0, f), int(0, f), int(0, f)]);
        assert_eq!(inertia_exact(&m).unwrap(), Inertia::new(1, 1, 1));
    }

    #[test]
    fn shifted_inertia_examples() {
        let a = HermitianMatrix::from_real_diagonal(&[2.0, 0.0]);
        let float = Method::Float(Tolerance::default());
        assert_eq!(shifted_inertia(&a, &Real::Float(-5.0), float).unwrap(), Inertia::new(2, 0, 0));
        assert_eq!(shifted_inertia(&a, &Real::Float(1.0), float).unwrap(), Inertia::new(1, 1, 0));
        let f = QuadField::MinusOne;
        let delta = exact(2, f, vec![int(1, f), int(-1, f), int(1, f)]);
        let two = Real::Exact(rational(2, 1));
        assert_eq!(shifted_inertia(&delta, &two, Method::Exact).unwrap(), Inertia::new(0, 1, 1));
        assert_eq!(shifted_inertia(&delta, &two, float).unwrap(), Inertia::new(0, 1, 1));
        assert!(shifted_inertia(&delta, &Real::Float(2.0), Method::Exact).is_err());
    }

    #[test]
    fn pencil_inertia_of_path_laplacian() {
        let f = QuadField::MinusOne;
        let l = exact(
            3,
            f,
            vec![int(1, f), int(-1, f), int(0, f), int(2, f), int(-1, f), int(1, f)],
        );
        let d = HermitianMatrix::from_rational_diagonal(&[rational(1, 1), rational(2, 1), rational(1, 1)], f);
        let one = Real::Exact(rational(1, 1));
        assert_eq!(pencil_inertia(&l, &d, &one, Method::Exact).unwrap(), Inertia::new(1, 1, 1));
        assert_eq!(
            pencil_inertia(&l, &d, &one, Method::Float(Tolerance::default())).unwrap(),
            Inertia::new(1, 1, 1)
        );
        let zero = Real::Exact(rational(0, 1));
        assert_eq!(pencil_inertia(&l, &d, &zero, Method::Exact).unwrap(), inertia_exact(&l).unwrap());
        let i3 = HermitianMatrix::identity(3, Field::Quad(f));
        let r = Real::Exact(rational(1, 3));
        assert_eq!(
            pencil_inertia(&l, &i3, &r, Method::Exact).unwrap(),
            shifted_inertia(&l, &r, Method::Exact).unwrap()
        );
    }

    #[test]
    fn tolerance_resolution() {
        assert_eq!(Tolerance::default().resolve(0.0), 1e-9);
        assert!((Tolerance::default().resolve(100.0) - 1e-7).abs() < 1e-22);
        assert_eq!(Tolerance::Relative(1e-20).resolve(1.0), ABSOLUTE_FLOOR);
        assert_eq!(Tolerance::Absolute(0.5).resolve(1e6), 0.5);
    }

    #[test]
    fn classification_flags_near_band_values() {
        let c = classify(&[1.0, 5e-9, -1e-10], 1e-9);
        assert_eq!(c.inertia, Inertia::new(2, 0, 1));
        assert!(c.ambiguous);
        assert!(!classify(&[1.0, 0.0, -1.0], 1e-9).ambiguous);
    }
}
