//! Dense Hermitian matrices over a [`Field`].
//!
//! Matrices are built from their upper triangle, so conjugate symmetry holds
//! by construction. Floating matrices store `Complex64`; exact matrices store
//! [`QuadExt`] entries from a single quadratic field.

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::eigen;
use crate::error::{Error, Result};
use crate::scalar::{Field, QuadExt, QuadField, Rational, Real, Scalar};

/// Largest conjugate-symmetry discrepancy accepted when loading a full
/// floating matrix.
pub const FLOAT_SYMMETRY_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
enum Entries {
    Float(Vec<Complex64>),
    Exact(QuadField, Vec<QuadExt>),
}

/// An `n × n` Hermitian matrix, stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Entries,
}

/// Eigenvalues sorted nonincreasingly: `values[0] = λ₁ ≥ λ₂ ≥ …`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
}

impl Spectrum {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `λ_i` with 1-based `i`.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

fn upper_len(n: usize) -> usize {
    n * (n + 1) / 2
}

impl HermitianMatrix {
    /// Builds a matrix from its upper triangle, given row by row
    /// (`(0,0), (0,1), …, (0,n−1), (1,1), …`).
    pub fn from_upper(n: usize, field: Field, upper: Vec<Scalar>) -> Result<Self> {
        if upper.len() != upper_len(n) {
            return Err(Error::DimensionMismatch {
                expected: upper_len(n),
                found: upper.len(),
            });
        }
        let mut cursor = upper.into_iter();
        match field {
            Field::Complex => {
                let mut data = vec![Complex64::new(0.0, 0.0); n * n];
                for i in 0..n {
                    for j in i..n {
                        let z = match cursor.next() {
                            Some(Scalar::Float(z)) => z,
                            Some(other) => return Err(Error::MixedField(field, other.field())),
                            None => unreachable!(),
                        };
                        if i == j && z.im != 0.0 {
                            return Err(Error::NonRealDiagonal { index: i });
                        }
                        data[i * n + j] = z;
                        data[j * n + i] = z.conj();
                    }
                }
                Ok(HermitianMatrix { n, entries: Entries::Float(data) })
            }
            Field::Quad(q) => {
                let mut data = vec![QuadExt::zero(q); n * n];
                for i in 0..n {
                    for j in i..n {
                        let x = match cursor.next() {
                            Some(Scalar::Quad(x)) if x.field() == q => x,
                            Some(other) => return Err(Error::MixedField(field, other.field())),
                            None => unreachable!(),
                        };
                        if i == j && !x.is_real() {
                            return Err(Error::NonRealDiagonal { index: i });
                        }
                        data[j * n + i] = x.conj();
                        data[i * n + j] = x;
                    }
                }
                Ok(HermitianMatrix { n, entries: Entries::Exact(q, data) })
            }
        }
    }

    /// Builds a matrix from full rows, verifying conjugate symmetry (exactly
    /// for quadratic fields, to [`FLOAT_SYMMETRY_TOL`] for complex entries).
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        for i in 0..n {
            for j in i..n {
                let (upper, lower) = (&rows[i][j], &rows[j][i]);
                if upper.field() != field {
                    return Err(Error::MixedField(field, upper.field()));
                }
                if lower.field() != field {
                    return Err(Error::MixedField(field, lower.field()));
                }
                let symmetric = match (upper, lower) {
                    (Scalar::Float(u), Scalar::Float(l)) => {
                        (u - l.conj()).norm() <= FLOAT_SYMMETRY_TOL * u.norm().max(1.0)
                    }
                    (Scalar::Quad(u), Scalar::Quad(l)) => *u == l.conj(),
                    _ => false,
                };
                if !symmetric {
                    return Err(Error::NotHermitian { row: j, col: i });
                }
                if i == j {
                    let real = match upper {
                        Scalar::Float(z) => z.im.abs() <= FLOAT_SYMMETRY_TOL * z.re.abs().max(1.0),
                        Scalar::Quad(x) => x.is_real(),
                    };
                    if !real {
                        return Err(Error::NonRealDiagonal { index: i });
                    }
                }
            }
        }
        let upper = rows
            .into_iter()
            .enumerate()
            .flat_map(|(i, row)| row.into_iter().skip(i).enumerate().map(move |(k, x)| (k == 0, x)))
            .map(|(diagonal, x)| match x {
                Scalar::Float(z) if diagonal => Scalar::real(z.re),
                other => other,
            })
            .collect();
        HermitianMatrix::from_upper(n, field, upper)
    }

    /// Floating matrix from a closure evaluated on the upper triangle. The
    /// imaginary part of the diagonal is discarded.
    pub fn from_fn_complex(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(f(i, i).re, 0.0);
            for j in i + 1..n {
                let z = f(i, j);
                data[i * n + j] = z;
                data[j * n + i] = z.conj();
            }
        }
        HermitianMatrix { n, entries: Entries::Float(data) }
    }

    /// Exact matrix from a closure evaluated on the upper triangle.
    pub fn from_fn_exact(
        n: usize,
        field: QuadField,
        mut f: impl FnMut(usize, usize) -> QuadExt,
    ) -> Result<Self> {
        let mut upper = Vec::with_capacity(upper_len(n));
        for i in 0..n {
            for j in i..n {
                upper.push(Scalar::Quad(f(i, j)));
            }
        }
        HermitianMatrix::from_upper(n, Field::Quad(field), upper)
    }

    pub fn from_real_diagonal(values: &[f64]) -> Self {
        let n = values.len();
        HermitianMatrix::from_fn_complex(n, |i, j| {
            Complex64::new(if i == j { values[i] } else { 0.0 }, 0.0)
        })
    }

    pub fn from_rational_diagonal(values: &[Rational], field: QuadField) -> Self {
        let n = values.len();
        let mut data = vec![QuadExt::zero(field); n * n];
        for (i, v) in values.iter().enumerate() {
            data[i * n + i] = QuadExt::from_rational(v.clone(), field);
        }
        HermitianMatrix { n, entries: Entries::Exact(field, data) }
    }

    pub fn zeros(n: usize, field: Field) -> Self {
        match field {
            Field::Complex => HermitianMatrix {
                n,
                entries: Entries::Float(vec![Complex64::new(0.0, 0.0); n * n]),
            },
            Field::Quad(q) => HermitianMatrix {
                n,
                entries: Entries::Exact(q, vec![QuadExt::zero(q); n * n]),
            },
        }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        match field {
            Field::Complex => HermitianMatrix::from_real_diagonal(&vec![1.0; n]),
            Field::Quad(q) => {
                HermitianMatrix::from_rational_diagonal(&vec![Rational::from_integer(1.into()); n], q)
            }
        }
    }

    /// `αα*` for a column vector `α` with entries from one field.
    pub fn outer(alpha: &[Scalar]) -> Result<Self> {
        let n = alpha.len();
        let field = alpha.first().map_or(Field::Complex, Scalar::field);
        let mut upper = Vec::with_capacity(upper_len(n));
        for i in 0..n {
            for j in i..n {
                upper.push(alpha[i].mul(&alpha[j].conjugate())?);
            }
        }
        HermitianMatrix::from_upper(n, field, upper)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        match &self.entries {
            Entries::Float(_) => Field::Complex,
            Entries::Exact(q, _) => Field::Quad(*q),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        match &self.entries {
            Entries::Float(d) => Scalar::Float(d[i * self.n + j]),
            Entries::Exact(_, d) => Scalar::Quad(d[i * self.n + j].clone()),
        }
    }

    pub fn get_complex(&self, i: usize, j: usize) -> Complex64 {
        match &self.entries {
            Entries::Float(d) => d[i * self.n + j],
            Entries::Exact(_, d) => d[i * self.n + j].to_complex(),
        }
    }

    /// Row-major entries, embedded into `Complex64` if exact.
    pub fn to_complex_dense(&self) -> Vec<Complex64> {
        match &self.entries {
            Entries::Float(d) => d.clone(),
            Entries::Exact(_, d) => d.iter().map(QuadExt::to_complex).collect(),
        }
    }

    /// Row-major exact entries, or `None` for a floating matrix.
    pub fn exact_entries(&self) -> Option<(QuadField, &[QuadExt])> {
        match &self.entries {
            Entries::Float(_) => None,
            Entries::Exact(q, d) => Some((*q, d)),
        }
    }

    /// The floating embedding (a copy if already floating).
    pub fn embed_float(&self) -> HermitianMatrix {
        HermitianMatrix {
            n: self.n,
            entries: Entries::Float(self.to_complex_dense()),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.to_complex_dense().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Real part of the diagonal as floats.
    pub fn diagonal_f64(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get_complex(i, i).re).collect()
    }

    pub fn trace_f64(&self) -> f64 {
        self.diagonal_f64().iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        match &self.entries {
            Entries::Float(d) => d.iter().all(|z| z.re == 0.0 && z.im == 0.0),
            Entries::Exact(_, d) => d.iter().all(QuadExt::is_zero),
        }
    }

    /// Restriction to the rows and columns in `keep`, in the given order.
    pub fn principal_submatrix(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::EmptySelection);
        }
        if let Some(&index) = keep.iter().find(|&&k| k >= self.n) {
            return Err(Error::BadIndex { index, n: self.n });
        }
        let m = keep.len();
        let entries = match &self.entries {
            Entries::Float(d) => Entries::Float(
                (0..m * m).map(|k| d[keep[k / m] * self.n + keep[k % m]]).collect(),
            ),
            Entries::Exact(q, d) => Entries::Exact(
                *q,
                (0..m * m).map(|k| d[keep[k / m] * self.n + keep[k % m]].clone()).collect(),
            ),
        };
        Ok(HermitianMatrix { n: m, entries })
    }

    /// Removes row and column `index`.
    pub fn delete_index(&self, index: usize) -> Result<Self> {
        if index >= self.n {
            return Err(Error::BadIndex { index, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&k| k != index).collect();
        self.principal_submatrix(&keep)
    }

    /// `A − rI`.
    pub fn shift(&self, r: &Real) -> Result<Self> {
        self.pencil_shift(&HermitianMatrix::identity(self.n, self.field()), r)
    }

    /// `A − rP`.
    pub fn pencil_shift(&self, p: &HermitianMatrix, r: &Real) -> Result<Self> {
        self.sub(&p.scale(r)?)
    }

    pub fn add(&self, other: &HermitianMatrix) -> Result<Self> {
        self.zip(other, |x, y| x + y, |x, y| x + y)
    }

    pub fn sub(&self, other: &HermitianMatrix) -> Result<Self> {
        self.zip(other, |x, y| x - y, |x, y| x - y)
    }

    fn zip(
        &self,
        other: &HermitianMatrix,
        float: impl Fn(Complex64, Complex64) -> Complex64,
        exact: impl Fn(&QuadExt, &QuadExt) -> QuadExt,
    ) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let entries = match (&self.entries, &other.entries) {
            (Entries::Float(a), Entries::Float(b)) => {
                Entries::Float(a.iter().zip(b).map(|(x, y)| float(*x, *y)).collect())
            }
            (Entries::Exact(p, a), Entries::Exact(q, b)) if p == q => {
                Entries::Exact(*p, a.iter().zip(b).map(|(x, y)| exact(x, y)).collect())
            }
            _ => {
                return Err(Error::FieldMismatch(format!(
                    "cannot combine {} and {} matrices",
                    self.field(),
                    other.field()
                )))
            }
        };
        Ok(HermitianMatrix { n: self.n, entries })
    }

    /// `c·A` for real `c`; exact matrices require an exact `c`.
    pub fn scale(&self, c: &Real) -> Result<Self> {
        let entries = match (&self.entries, c) {
            (Entries::Float(a), c) => {
                let c = c.to_f64();
                Entries::Float(a.iter().map(|z| z * c).collect())
            }
            (Entries::Exact(q, a), Real::Exact(c)) => {
                Entries::Exact(*q, a.iter().map(|x| x.scale(c)).collect())
            }
            (Entries::Exact(q, _), Real::Float(_)) => {
                return Err(Error::FieldMismatch(format!(
                    "a {} matrix needs a rational scalar",
                    Field::Quad(*q)
                )))
            }
        };
        Ok(HermitianMatrix { n: self.n, entries })
    }

    pub fn neg(&self) -> Self {
        let entries = match &self.entries {
            Entries::Float(a) => Entries::Float(a.iter().map(|z| -z).collect()),
            Entries::Exact(q, a) => Entries::Exact(*q, a.iter().map(|x| -x).collect()),
        };
        HermitianMatrix { n: self.n, entries }
    }

    /// `S A S*` for a square (not necessarily Hermitian) `S`, row-major.
    pub fn congruence(&self, s: &[Scalar]) -> Result<Self> {
        let n = self.n;
        if s.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, found: s.len() });
        }
        let field = self.field();
        if let Some(x) = s.iter().find(|x| x.field() != field) {
            return Err(Error::MixedField(field, x.field()));
        }
        // T = S A
        let mut t = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Scalar::zero(field);
                for k in 0..n {
                    acc = acc.add(&s[i * n + k].mul(&self.get(k, j))?)?;
                }
                t.push(acc);
            }
        }
        let mut upper = Vec::with_capacity(upper_len(n));
        for i in 0..n {
            for j in i..n {
                let mut acc = Scalar::zero(field);
                for k in 0..n {
                    acc = acc.add(&t[i * n + k].mul(&s[j * n + k].conjugate())?)?;
                }
                if i == j {
                    acc = match acc {
                        Scalar::Float(z) => Scalar::real(z.re),
                        exact => exact,
                    };
                }
                upper.push(acc);
            }
        }
        HermitianMatrix::from_upper(n, field, upper)
    }

    /// Eigenvalues of the floating embedding, nonincreasing.
    pub fn eigenvalues(&self) -> Result<Spectrum> {
        eigen::hermitian_eigenvalues(self.n, &self.to_complex_dense()).map(Spectrum::new)
    }

    pub fn rows_as_strings(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }
}

impl Serialize for HermitianMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("HermitianMatrix", 3)?;
        st.serialize_field("field", &self.field())?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("rows", &self.rows_as_strings())?;
        st.end()
    }
}
