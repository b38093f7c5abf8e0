//! Scalar fields: IEEE complex numbers and exact elements of the quadratic
//! fields ℚ(√−1) and ℚ(√−3).
//!
//! Exact elements are written `a + b·s` with `s² = d`. The text syntax is
//! `p/q`, `p/q*s`, `p/q+p/q*s` (the meaning of `s` comes from the field);
//! floating entries are written `R`, `Ri`, `R+Ri` or `R-Ri`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Builds `p/q` from machine integers. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p`, `p/q` or a finite decimal such as `-1.25` or `3e-2` into an
/// exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_int(p)?;
        let q = parse_int(q)?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (negative, body) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut value = Rational::from_integer(digits.parse::<BigInt>().ok()?);
    let scale = exponent - frac_part.len() as i32;
    let ten = Rational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Some(if negative { -value } else { value })
}

fn parse_int(s: &str) -> Option<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

pub(crate) fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // numerator or denominator overflowed f64 on its own
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// The two imaginary quadratic fields used by digraph matrices: `d = −1`
/// (Gaussian rationals, entries `±i`) and `d = −3` (Eisenstein rationals,
/// entries `ω = (1 + √−3)/2`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadField {
    MinusOne,
    MinusThree,
}

impl QuadField {
    pub fn d(self) -> i64 {
        match self {
            QuadField::MinusOne => -1,
            QuadField::MinusThree => -3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Complex,
    Quad(QuadField),
}

impl Field {
    pub fn is_exact(self) -> bool {
        matches!(self, Field::Quad(_))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Complex => f.write_str("complex"),
            Field::Quad(QuadField::MinusOne) => f.write_str("q(-1)"),
            Field::Quad(QuadField::MinusThree) => f.write_str("q(-3)"),
        }
    }
}

impl FromStr for Field {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "complex" => Ok(Field::Complex),
            "q(-1)" => Ok(Field::Quad(QuadField::MinusOne)),
            "q(-3)" => Ok(Field::Quad(QuadField::MinusThree)),
            other => Err(format!("unknown field `{other}` (expected complex, q(-1) or q(-3))")),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Exact element `a + b·√d` of ℚ(√d).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    field: QuadField,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, field: QuadField) -> Self {
        QuadExt { a, b, field }
    }

    pub fn from_rational(a: Rational, field: QuadField) -> Self {
        QuadExt::new(a, Rational::zero(), field)
    }

    pub fn zero(field: QuadField) -> Self {
        QuadExt::from_rational(Rational::zero(), field)
    }

    pub fn one(field: QuadField) -> Self {
        QuadExt::from_rational(Rational::one(), field)
    }

    /// The imaginary unit `i = √−1`.
    pub fn i() -> Self {
        QuadExt::new(Rational::zero(), Rational::one(), QuadField::MinusOne)
    }

    /// The primitive sixth root of unity `ω = (1 + √−3)/2`.
    pub fn omega() -> Self {
        QuadExt::new(rational(1, 2), rational(1, 2), QuadField::MinusThree)
    }

    pub fn re(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `√d` (not the imaginary part when `d = −3`).
    pub fn surd_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> QuadField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b, self.field)
    }

    /// `x·x̄ = a² − d·b²`, a nonnegative rational.
    pub fn norm(&self) -> Rational {
        let d = Rational::from_integer(BigInt::from(self.field.d()));
        &self.a * &self.a - d * &self.b * &self.b
    }

    pub fn to_complex(&self) -> Complex64 {
        let root = (-self.field.d() as f64).sqrt();
        Complex64::new(rational_to_f64(&self.a), rational_to_f64(&self.b) * root)
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedField(Field::Quad(self.field), Field::Quad(other.field)))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(self * &other.inv()?)
    }

    pub fn inv(&self) -> Result<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(QuadExt::new(&self.a / &norm, -&self.b / &norm, self.field))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QuadExt::new(&self.a * c, &self.b * c, self.field)
    }

    /// Parses the exact entry syntax for the given field.
    pub fn parse(s: &str, field: QuadField) -> Option<Self> {
        let s = s.trim();
        if s.is_empty() {
            return None;
        }
        // split at a sign that is not the leading one
        let split = s
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last();
        let (first, second) = match split {
            Some(i) => (&s[..i], Some(&s[i..])),
            None => (s, None),
        };
        let mut re = Rational::zero();
        let mut surd = Rational::zero();
        let mut seen_re = false;
        let mut seen_surd = false;
        for term in std::iter::once(first).chain(second) {
            match parse_surd_term(term) {
                Some(Some(b)) if !seen_surd => {
                    surd = b;
                    seen_surd = true;
                }
                Some(None) if !seen_re && !seen_surd => {
                    re = parse_rational(term)?;
                    seen_re = true;
                }
                _ => return None,
            }
        }
        Some(QuadExt::new(re, surd, field))
    }
}

/// `Some(Some(b))` for a `b*s` term, `Some(None)` for a plain rational term.
fn parse_surd_term(term: &str) -> Option<Option<Rational>> {
    let t = term.trim();
    let Some(coeff) = t.strip_suffix('s') else {
        return Some(None);
    };
    let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
    let value = match coeff {
        "" | "+" => Rational::one(),
        "-" => -Rational::one(),
        c => parse_rational(c)?,
    };
    Some(Some(value))
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;

    /// Panics on mixed fields; use [`QuadExt::checked_add`] for untrusted input.
    fn add(self, rhs: &QuadExt) -> QuadExt {
        assert_eq!(self.field, rhs.field, "mixed quadratic fields");
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b, self.field)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;

    fn sub(self, rhs: &QuadExt) -> QuadExt {
        assert_eq!(self.field, rhs.field, "mixed quadratic fields");
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b, self.field)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;

    fn mul(self, rhs: &QuadExt) -> QuadExt {
        assert_eq!(self.field, rhs.field, "mixed quadratic fields");
        let d = Rational::from_integer(BigInt::from(self.field.d()));
        let a = &self.a * &rhs.a + d * &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::new(a, b, self.field)
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;

    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b, self.field)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*s", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{}-{}*s", self.a, -&self.b),
            (false, false) => write!(f, "{}+{}*s", self.a, self.b),
        }
    }
}

/// A real number that is either a float or an exact rational.
#[derive(Clone, Debug, PartialEq)]
pub enum Real {
    Float(f64),
    Exact(Rational),
}

impl Real {
    pub fn to_f64(&self) -> f64 {
        match self {
            Real::Float(x) => *x,
            Real::Exact(q) => rational_to_f64(q),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Real::Float(x) => *x == 0.0,
            Real::Exact(q) => q.is_zero(),
        }
    }
}

impl From<f64> for Real {
    fn from(x: f64) -> Self {
        Real::Float(x)
    }
}

impl From<Rational> for Real {
    fn from(q: Rational) -> Self {
        Real::Exact(q)
    }
}

impl FromStr for Real {
    type Err = String;

    /// Rationals and finite decimals parse exactly; anything else `f64` accepts
    /// parses as a float.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if let Some(q) = parse_rational(s) {
            return Ok(Real::Exact(q));
        }
        s.trim()
            .parse::<f64>()
            .map(Real::Float)
            .map_err(|_| format!("`{s}` is not a real number"))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Real::Float(x) => write!(f, "{x}"),
            Real::Exact(q) => write!(f, "{q}"),
        }
    }
}

/// A matrix entry.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Float(Complex64),
    Quad(QuadExt),
}

impl Scalar {
    pub fn real(x: f64) -> Self {
        Scalar::Float(Complex64::new(x, 0.0))
    }

    pub fn complex(re: f64, im: f64) -> Self {
        Scalar::Float(Complex64::new(re, im))
    }

    pub fn zero(field: Field) -> Self {
        match field {
            Field::Complex => Scalar::real(0.0),
            Field::Quad(q) => Scalar::Quad(QuadExt::zero(q)),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Float(_) => Field::Complex,
            Scalar::Quad(x) => Field::Quad(x.field),
        }
    }

    pub fn conjugate(&self) -> Self {
        match self {
            Scalar::Float(z) => Scalar::Float(z.conj()),
            Scalar::Quad(x) => Scalar::Quad(x.conj()),
        }
    }

    /// `|x|²`, exact for quadratic-field elements.
    pub fn abs_squared(&self) -> Real {
        match self {
            Scalar::Float(z) => Real::Float(z.norm_sqr()),
            Scalar::Quad(x) => Real::Exact(x.norm()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Float(z) => z.re == 0.0 && z.im == 0.0,
            Scalar::Quad(x) => x.is_zero(),
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Scalar::Float(z) => z.im == 0.0,
            Scalar::Quad(x) => x.is_real(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Float(z) => *z,
            Scalar::Quad(x) => x.to_complex(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x + y)),
            (Scalar::Quad(x), Scalar::Quad(y)) => x.checked_add(y).map(Scalar::Quad),
            _ => Err(Error::MixedField(self.field(), other.field())),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x - y)),
            (Scalar::Quad(x), Scalar::Quad(y)) => x.checked_sub(y).map(Scalar::Quad),
            _ => Err(Error::MixedField(self.field(), other.field())),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x * y)),
            (Scalar::Quad(x), Scalar::Quad(y)) => x.checked_mul(y).map(Scalar::Quad),
            _ => Err(Error::MixedField(self.field(), other.field())),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Float(_), Scalar::Float(y)) if y.re == 0.0 && y.im == 0.0 => {
                Err(Error::DivisionByZero)
            }
            (Scalar::Float(x), Scalar::Float(y)) => Ok(Scalar::Float(x / y)),
            (Scalar::Quad(x), Scalar::Quad(y)) => x.checked_div(y).map(Scalar::Quad),
            _ => Err(Error::MixedField(self.field(), other.field())),
        }
    }

    /// Parses an entry written in the text syntax of `field`.
    pub fn parse(s: &str, field: Field) -> Option<Scalar> {
        match field {
            Field::Complex => parse_complex(s).map(Scalar::Float),
            Field::Quad(q) => QuadExt::parse(s, q).map(Scalar::Quad),
        }
    }
}

fn parse_complex(s: &str) -> Option<Complex64> {
    let s = s.trim();
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    // last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().ok()?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().ok()?,
    };
    Some(Complex64::new(re, im))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Quad(x) => write!(f, "{x}"),
            Scalar::Float(z) if z.im == 0.0 => write!(f, "{}", z.re),
            Scalar::Float(z) if z.re == 0.0 => write!(f, "{}i", z.im),
            Scalar::Float(z) if z.im < 0.0 => write!(f, "{}-{}i", z.re, -z.im),
            Scalar::Float(z) => write!(f, "{}+{}i", z.re, z.im),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
