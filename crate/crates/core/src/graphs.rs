//! Graphs given as typed edge records, and the operator matrices built from
//! them: adjacency, Laplacian and normalized Laplacian of simple, signed and
//! weighted graphs, and the Hermitian (`i`) and sixth-root-of-unity (`ω`)
//! versions for digraphs.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::inertia::Tolerance;
use crate::matrix::HermitianMatrix;
use crate::scalar::{rational_to_f64, QuadExt, QuadField, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecordKind {
    /// Undirected edge, possibly signed; a loop when `u == v`.
    Edge,
    /// Single arc `u → v`.
    Arc,
    /// Pair of opposite arcs between `u` and `v`.
    Digon,
}

impl fmt::Display for RecordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecordKind::Edge => "edge",
            RecordKind::Arc => "arc",
            RecordKind::Digon => "digon",
        })
    }
}

fn as_text<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRecord {
    pub kind: RecordKind,
    pub u: usize,
    pub v: usize,
    #[serde(serialize_with = "as_text")]
    pub weight: Rational,
    /// `+1` or `−1`; only edges may carry `−1`.
    pub sign: i8,
}

impl EdgeRecord {
    fn new(kind: RecordKind, u: usize, v: usize) -> Self {
        EdgeRecord { kind, u, v, weight: Rational::one(), sign: 1 }
    }

    pub fn edge(u: usize, v: usize) -> Self {
        EdgeRecord::new(RecordKind::Edge, u, v)
    }

    pub fn arc(u: usize, v: usize) -> Self {
        EdgeRecord::new(RecordKind::Arc, u, v)
    }

    pub fn digon(u: usize, v: usize) -> Self {
        EdgeRecord::new(RecordKind::Digon, u, v)
    }

    pub fn with_weight(mut self, weight: Rational) -> Self {
        self.weight = weight;
        self
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = sign;
        self
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    fn pair(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Vertex count plus records, at most one per unordered vertex pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSpec {
    n: usize,
    records: Vec<EdgeRecord>,
}

impl GraphSpec {
    pub fn new(n: usize, records: Vec<EdgeRecord>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (k, r) in records.iter().enumerate() {
            let bad = |msg: String| Err(Error::InvalidGraph(format!("record {k}: {msg}")));
            if r.u >= n || r.v >= n {
                return bad(format!("vertex out of range for n={n}"));
            }
            if !r.weight.is_positive() {
                return bad(format!("weight {} is not positive", r.weight));
            }
            if r.sign != 1 && r.sign != -1 {
                return bad(format!("sign {} is not +1 or -1", r.sign));
            }
            if r.sign == -1 && r.kind != RecordKind::Edge {
                return bad(format!("a {} cannot be signed", r.kind));
            }
            if r.is_loop() && r.kind != RecordKind::Edge {
                return bad(format!("a {} cannot be a loop", r.kind));
            }
            if !seen.insert(r.pair()) {
                return bad(format!("duplicate vertex pair {}-{}", r.u, r.v));
            }
        }
        Ok(GraphSpec { n, records })
    }

    pub fn empty(n: usize) -> Self {
        GraphSpec { n, records: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn records(&self) -> &[EdgeRecord] {
        &self.records
    }

    /// The graph without record `which`; the vertex set is kept.
    pub fn delete_record(&self, which: usize) -> Result<GraphSpec> {
        self.check_index(which)?;
        let mut records = self.records.clone();
        records.remove(which);
        Ok(GraphSpec { n: self.n, records })
    }

    /// Lowers the weight of record `which` by `by` (`0 < by ≤ weight`); the
    /// record is deleted when its weight reaches zero.
    pub fn reduce_weight(&self, which: usize, by: &Rational) -> Result<GraphSpec> {
        self.check_index(which)?;
        let current = &self.records[which].weight;
        if !by.is_positive() || by > current {
            return Err(Error::InvalidGraph(format!(
                "cannot reduce weight {current} of record {which} by {by}"
            )));
        }
        if by == current {
            return self.delete_record(which);
        }
        let mut records = self.records.clone();
        records[which].weight = current - by;
        Ok(GraphSpec { n: self.n, records })
    }

    fn check_index(&self, which: usize) -> Result<()> {
        if which >= self.records.len() {
            return Err(Error::BadIndex { index: which, n: self.records.len() });
        }
        Ok(())
    }
}

/// Which unit an operator places on single arcs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Undirected,
    ImaginaryUnit,
    SixthRoot,
}

impl Family {
    pub fn field(self) -> QuadField {
        match self {
            Family::Undirected | Family::ImaginaryUnit => QuadField::MinusOne,
            Family::SixthRoot => QuadField::MinusThree,
        }
    }

    fn arc_unit(self) -> Option<QuadExt> {
        match self {
            Family::Undirected => None,
            Family::ImaginaryUnit => Some(QuadExt::i()),
            Family::SixthRoot => Some(QuadExt::omega()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Adjacency,
    Laplacian,
    Normalized,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Adjacency,
    Laplacian,
    NormalizedLaplacian,
    HermAdjacencyI,
    HermLaplacianI,
    HermNormalizedI,
    HermAdjacencyOmega,
    HermLaplacianOmega,
    HermNormalizedOmega,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 9] = [
        OperatorKind::Adjacency,
        OperatorKind::Laplacian,
        OperatorKind::NormalizedLaplacian,
        OperatorKind::HermAdjacencyI,
        OperatorKind::HermLaplacianI,
        OperatorKind::HermNormalizedI,
        OperatorKind::HermAdjacencyOmega,
        OperatorKind::HermLaplacianOmega,
        OperatorKind::HermNormalizedOmega,
    ];

    pub fn family(self) -> Family {
        use OperatorKind::*;
        match self {
            Adjacency | Laplacian | NormalizedLaplacian => Family::Undirected,
            HermAdjacencyI | HermLaplacianI | HermNormalizedI => Family::ImaginaryUnit,
            HermAdjacencyOmega | HermLaplacianOmega | HermNormalizedOmega => Family::SixthRoot,
        }
    }

    pub fn level(self) -> Level {
        use OperatorKind::*;
        match self {
            Adjacency | HermAdjacencyI | HermAdjacencyOmega => Level::Adjacency,
            Laplacian | HermLaplacianI | HermLaplacianOmega => Level::Laplacian,
            NormalizedLaplacian | HermNormalizedI | HermNormalizedOmega => Level::Normalized,
        }
    }

    pub fn from_parts(family: Family, level: Level) -> OperatorKind {
        *OperatorKind::ALL
            .iter()
            .find(|k| k.family() == family && k.level() == level)
            .expect("every family has every level")
    }

    pub fn name(self) -> &'static str {
        use OperatorKind::*;
        match self {
            Adjacency => "adjacency",
            Laplacian => "laplacian",
            NormalizedLaplacian => "normalized_laplacian",
            HermAdjacencyI => "herm_adjacency_i",
            HermLaplacianI => "herm_laplacian_i",
            HermNormalizedI => "herm_normalized_i",
            HermAdjacencyOmega => "herm_adjacency_omega",
            HermLaplacianOmega => "herm_laplacian_omega",
            HermNormalizedOmega => "herm_normalized_omega",
        }
    }

    /// Rejects graphs whose record kinds the operator does not accept.
    pub fn check_graph(self, g: &GraphSpec) -> Result<()> {
        let directed = self.family() != Family::Undirected;
        for (k, r) in g.records.iter().enumerate() {
            let ok = match r.kind {
                RecordKind::Edge => !directed,
                RecordKind::Arc | RecordKind::Digon => directed,
            };
            if !ok {
                return Err(Error::IncompatibleOperator {
                    operator: self.name().into(),
                    reason: format!("record {k} is a {}", r.kind),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        OperatorKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown operator `{s}`"))
    }
}

/// `dᵢ`: total weight of the records at vertex `i` (direction and sign
/// ignored; a loop counts once).
pub fn degrees(g: &GraphSpec) -> Vec<Rational> {
    let mut d = vec![Rational::zero(); g.n];
    for r in &g.records {
        d[r.u] += &r.weight;
        if !r.is_loop() {
            d[r.v] += &r.weight;
        }
    }
    d
}

/// The degree matrix over `field`.
pub fn degree_matrix(g: &GraphSpec, field: QuadField) -> HermitianMatrix {
    HermitianMatrix::from_rational_diagonal(&degrees(g), field)
}

/// Dense row-major adjacency entries of the given family.
fn adjacency_entries(g: &GraphSpec, family: Family) -> Vec<QuadExt> {
    let field = family.field();
    let n = g.n;
    let mut a = vec![QuadExt::zero(field); n * n];
    for r in &g.records {
        let w = QuadExt::from_rational(r.weight.clone(), field);
        let x = match r.kind {
            RecordKind::Edge => w.scale(&Rational::from_integer(BigInt::from(r.sign))),
            RecordKind::Digon => w,
            RecordKind::Arc => &w * &family.arc_unit().expect("arcs only reach directed families"),
        };
        a[r.v * n + r.u] = x.conj();
        a[r.u * n + r.v] = x;
    }
    a
}

/// Builds the operator matrix. Adjacency and Laplacian kinds are exact over
/// ℚ(√−1) (undirected, `i`) or ℚ(√−3) (`ω`); normalized kinds are floating.
pub fn build_operator(g: &GraphSpec, kind: OperatorKind) -> Result<HermitianMatrix> {
    kind.check_graph(g)?;
    let family = kind.family();
    let field = family.field();
    let n = g.n;
    let a = adjacency_entries(g, family);
    let adjacency = || HermitianMatrix::from_fn_exact(n, field, |i, j| a[i * n + j].clone());
    match kind.level() {
        Level::Adjacency => adjacency(),
        Level::Laplacian => degree_matrix(g, field).sub(&adjacency()?),
        Level::Normalized => {
            let l = degree_matrix(g, field).sub(&adjacency()?)?;
            Ok(scale_by_degrees(&l, &degrees(g)))
        }
    }
}

/// `D^{−1/2} L D^{−1/2}` with `(D^{−1/2})ᵢᵢ = 0` when `dᵢ = 0`.
fn scale_by_degrees(l: &HermitianMatrix, d: &[Rational]) -> HermitianMatrix {
    let inv_sqrt: Vec<f64> = d
        .iter()
        .map(|x| if x.is_zero() { 0.0 } else { 1.0 / rational_to_f64(x).sqrt() })
        .collect();
    let exact = l.exact_entries();
    HermitianMatrix::from_fn_complex(l.n(), |i, j| {
        if inv_sqrt[i] == 0.0 || inv_sqrt[j] == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if i == j {
            let diag = match exact {
                Some((_, e)) => rational_to_f64(&(e[i * l.n() + i].re() / &d[i])),
                None => l.get_complex(i, i).re / rational_to_f64(&d[i]),
            };
            return Complex64::new(diag, 0.0);
        }
        l.get_complex(i, j) * inv_sqrt[i] * inv_sqrt[j]
    })
}

/// `⌊√(p/q)·2^bits⌋` and the matching ceiling, for `p/q ≥ 0`.
fn sqrt_bounds(x: &Rational, bits: u32) -> (Rational, Rational) {
    let scale = BigInt::one() << bits;
    // √(p/q) = √(p·q)/q
    let pq = x.numer() * x.denom() * &scale * &scale;
    let lo = pq.sqrt();
    let hi = if &lo * &lo == pq { lo.clone() } else { &lo + 1 };
    let denom = x.denom() * &scale;
    (Rational::new(lo, denom.clone()), Rational::new(hi, denom))
}

fn exact_sqrt(x: &Rational) -> Option<Rational> {
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Decides `diag ≥ Σ √normsₖ` exactly.
fn dominates_exactly(diag: &Rational, norms: &[Rational]) -> bool {
    let mut rational_part = Rational::zero();
    let mut surds = Vec::new();
    for x in norms {
        match exact_sqrt(x) {
            Some(s) => rational_part += s,
            None => surds.push(x),
        }
    }
    if surds.is_empty() {
        return *diag >= rational_part;
    }
    // a positive sum of square roots of non-squares is irrational, so the
    // bounds separate from `diag` after finitely many refinements
    let mut bits = 16;
    loop {
        let (mut lo, mut hi) = (rational_part.clone(), rational_part.clone());
        for x in &surds {
            let (l, h) = sqrt_bounds(x, bits);
            lo += l;
            hi += h;
        }
        if *diag >= hi {
            return true;
        }
        if *diag < lo {
            return false;
        }
        bits *= 2;
    }
}

/// First row violating `ℓᵢᵢ ≥ Σ_{j≠i} |ℓᵢⱼ|`, or `None` for a generalized
/// Laplacian. Exact matrices are decided exactly; floating ones with slack
/// `τ` from the default tolerance.
pub fn generalized_laplacian_violation(l: &HermitianMatrix) -> Option<usize> {
    let n = l.n();
    match l.exact_entries() {
        Some((_, e)) => (0..n).find(|&i| {
            let norms: Vec<Rational> = (0..n).filter(|&j| j != i).map(|j| e[i * n + j].norm()).collect();
            !dominates_exactly(e[i * n + i].re(), &norms)
        }),
        None => {
            let tau = Tolerance::default().for_matrix(l);
            (0..n).find(|&i| {
                let off: f64 = (0..n).filter(|&j| j != i).map(|j| l.get_complex(i, j).norm()).sum();
                l.get_complex(i, i).re < off - tau
            })
        }
    }
}

pub fn is_generalized_laplacian(l: &HermitianMatrix) -> bool {
    generalized_laplacian_violation(l).is_none()
}

/// `D^{−1/2} L D^{−1/2}` with `D` the diagonal of `L`; rows with zero
/// diagonal become zero rows. The result is floating.
pub fn normalizer(l: &HermitianMatrix) -> Result<HermitianMatrix> {
    if let Some(row) = generalized_laplacian_violation(l) {
        return Err(Error::NotGeneralizedLaplacian { row });
    }
    match l.exact_entries() {
        Some((_, e)) => {
            let d: Vec<Rational> = (0..l.n()).map(|i| e[i * l.n() + i].re().clone()).collect();
            Ok(scale_by_degrees(l, &d))
        }
        None => {
            let d = l.diagonal_f64();
            Ok(HermitianMatrix::from_fn_complex(l.n(), |i, j| {
                if d[i] <= 0.0 || d[j] <= 0.0 {
                    Complex64::new(0.0, 0.0)
                } else if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    l.get_complex(i, j) / (d[i].sqrt() * d[j].sqrt())
                }
            }))
        }
    }
}

/// `L(G) − L(G')` in the form `w·[[1, c], [c̄, 1]]` on rows `(u, v)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RankTwoDifference {
    pub u: usize,
    pub v: usize,
    #[serde(serialize_with = "as_text")]
    pub w: Rational,
    pub c: Scalar,
}

impl RankTwoDifference {
    pub fn unit(&self) -> &QuadExt {
        match &self.c {
            Scalar::Quad(c) => c,
            Scalar::Float(_) => unreachable!("differences are exact"),
        }
    }

    /// The 2×2 block `[[1, c], [c̄, 1]]`.
    pub fn block(&self) -> HermitianMatrix {
        let c = self.unit();
        let one = QuadExt::one(c.field());
        HermitianMatrix::from_fn_exact(2, c.field(), |i, j| if i == j { one.clone() } else { c.clone() })
            .expect("unit diagonal is real")
    }
}

/// Extracts `L(G) − L(G − record)` for a Laplacian-level operator.
pub fn laplacian_difference(g: &GraphSpec, which: usize, kind: OperatorKind) -> Result<RankTwoDifference> {
    let after = g.delete_record(which)?;
    rank_two_difference(g, &after, which, kind)
}

/// As [`laplacian_difference`], with the weight of the record lowered by
/// `by` instead of removing it.
pub fn weight_reduction_difference(
    g: &GraphSpec,
    which: usize,
    by: &Rational,
    kind: OperatorKind,
) -> Result<RankTwoDifference> {
    let after = g.reduce_weight(which, by)?;
    rank_two_difference(g, &after, which, kind)
}

fn rank_two_difference(
    before: &GraphSpec,
    after: &GraphSpec,
    which: usize,
    kind: OperatorKind,
) -> Result<RankTwoDifference> {
    if kind.level() != Level::Laplacian {
        return Err(Error::IncompatibleOperator {
            operator: kind.name().into(),
            reason: "differences are taken of Laplacian operators".into(),
        });
    }
    let record = &before.records[which];
    let shape = |msg: String| Err(Error::UnexpectedDifferenceShape(msg));
    if record.is_loop() {
        return shape(format!("record {which} is a loop"));
    }
    let diff = build_operator(before, kind)?.sub(&build_operator(after, kind)?)?;
    let (_, e) = diff.exact_entries().expect("Laplacians are exact");
    let n = diff.n();
    let (u, v) = (record.u, record.v);
    for i in 0..n {
        for j in 0..n {
            let inside = (i == u || i == v) && (j == u || j == v);
            if !inside && !e[i * n + j].is_zero() {
                return shape(format!("nonzero entry at ({i}, {j})"));
            }
        }
    }
    let w_entry = &e[u * n + u];
    if w_entry != &e[v * n + v] || !w_entry.is_real() || !w_entry.re().is_positive() {
        return shape(format!("diagonal entries {} and {} differ or are not positive", w_entry, e[v * n + v]));
    }
    let w = w_entry.re().clone();
    let c = e[u * n + v].scale(&w.recip());
    if c.norm() != Rational::one() {
        return shape(format!("off-diagonal unit {c} does not have modulus one"));
    }
    Ok(RankTwoDifference { u, v, w, c: Scalar::Quad(c) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn path3() -> GraphSpec {
        GraphSpec::new(3, vec![EdgeRecord::edge(0, 1), EdgeRecord::edge(1, 2)]).unwrap()
    }

    fn q(p: i64) -> QuadExt {
        QuadExt::from_rational(rational(p, 1), QuadField::MinusOne)
    }

    #[test]
    fn validation() {
        assert!(GraphSpec::new(2, vec![EdgeRecord::edge(0, 2)]).is_err());
        assert!(GraphSpec::new(2, vec![EdgeRecord::edge(0, 1), EdgeRecord::arc(1, 0)]).is_err());
        assert!(GraphSpec::new(2, vec![EdgeRecord::arc(1, 1)]).is_err());
        assert!(GraphSpec::new(2, vec![EdgeRecord::arc(0, 1).with_sign(-1)]).is_err());
        assert!(GraphSpec::new(2, vec![EdgeRecord::edge(0, 1).with_weight(rational(0, 1))]).is_err());
        assert!(GraphSpec::new(2, vec![EdgeRecord::edge(1, 1)]).is_ok());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(degrees(&path3()), vec![rational(1, 1), rational(2, 1), rational(1, 1)]);
        let arc = GraphSpec::new(2, vec![EdgeRecord::arc(0, 1)]).unwrap();
        assert_eq!(degrees(&arc), vec![rational(1, 1), rational(1, 1)]);
        assert!(degree_matrix(&GraphSpec::empty(3), QuadField::MinusOne).is_zero());
    }

    #[test]
    fn k2_laplacian() {
        let k2 = GraphSpec::new(2, vec![EdgeRecord::edge(0, 1)]).unwrap();
        let l = build_operator(&k2, OperatorKind::Laplacian).unwrap();
        let expected = HermitianMatrix::from_fn_exact(2, QuadField::MinusOne, |i, j| q(if i == j { 1 } else { -1 })).unwrap();
        assert_eq!(l, expected);
    }

    #[test]
    fn omega_adjacency_of_single_arc() {
        let g = GraphSpec::new(2, vec![EdgeRecord::arc(0, 1)]).unwrap();
        let h = build_operator(&g, OperatorKind::HermAdjacencyOmega).unwrap();
        assert_eq!(h.get(0, 1), Scalar::Quad(QuadExt::omega()));
        assert_eq!(h.get(1, 0), Scalar::Quad(QuadExt::omega().conj()));
        assert_eq!(h.get(0, 0), Scalar::Quad(QuadExt::zero(QuadField::MinusThree)));
    }

    #[test]
    fn p3_normalized() {
        let l = build_operator(&path3(), OperatorKind::NormalizedLaplacian).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let expected = [[1.0, -s, 0.0], [-s, 1.0, -s], [0.0, -s, 1.0]];
        for i in 0..3 {
            for j in 0..3 {
                assert!((l.get_complex(i, j) - Complex64::new(expected[i][j], 0.0)).norm() < 1e-15);
            }
        }
        let via_normalizer = normalizer(&build_operator(&path3(), OperatorKind::Laplacian).unwrap()).unwrap();
        assert_eq!(via_normalizer, l);
    }

    #[test]
    fn normalizer_keeps_zero_rows() {
        let l = HermitianMatrix::from_fn_exact(3, QuadField::MinusOne, |i, j| match (i, j) {
            (0, _) => q(0),
            (a, b) if a == b => q(1),
            _ => q(-1),
        })
        .unwrap();
        let m = normalizer(&l).unwrap();
        assert_eq!(m, l.embed_float());
    }

    #[test]
    fn generalized_laplacian_checks() {
        let ok = HermitianMatrix::from_fn_exact(2, QuadField::MinusOne, |i, j| {
            if i == j { q(2) } else { QuadExt::new(rational(1, 1), rational(1, 1), QuadField::MinusOne) }
        })
        .unwrap();
        assert!(is_generalized_laplacian(&ok));
        let tight = HermitianMatrix::from_fn_exact(2, QuadField::MinusOne, |i, j| {
            if i == j { QuadExt::from_rational(rational(141, 100), QuadField::MinusOne) } else { QuadExt::new(rational(1, 1), rational(1, 1), QuadField::MinusOne) }
        })
        .unwrap();
        assert_eq!(generalized_laplacian_violation(&tight), Some(0));
        let bad = HermitianMatrix::from_fn_exact(2, QuadField::MinusOne, |i, j| q(if i == j { 1 } else { -2 })).unwrap();
        assert_eq!(generalized_laplacian_violation(&bad), Some(0));
        assert!(matches!(normalizer(&bad), Err(Error::NotGeneralizedLaplacian { row: 0 })));
        assert!(!is_generalized_laplacian(&bad.embed_float()));
    }

    #[test]
    fn deletion() {
        let k2 = GraphSpec::new(2, vec![EdgeRecord::edge(0, 1)]).unwrap();
        assert_eq!(k2.delete_record(0).unwrap(), GraphSpec::empty(2));
        assert!(matches!(k2.delete_record(1), Err(Error::BadIndex { index: 1, n: 1 })));
        let triangle = GraphSpec::new(3, vec![EdgeRecord::edge(0, 1), EdgeRecord::edge(1, 2), EdgeRecord::edge(0, 2)]).unwrap();
        assert_eq!(triangle.delete_record(2).unwrap(), path3());
        let x = GraphSpec::new(3, vec![EdgeRecord::arc(0, 1), EdgeRecord::digon(1, 2)]).unwrap();
        assert_eq!(x.delete_record(1).unwrap().records(), &[EdgeRecord::arc(0, 1)]);
    }

    #[test]
    fn difference_units() {
        let k2 = GraphSpec::new(2, vec![EdgeRecord::edge(0, 1)]).unwrap();
        let d = laplacian_difference(&k2, 0, OperatorKind::Laplacian).unwrap();
        assert_eq!((d.w.clone(), d.unit().clone()), (rational(1, 1), q(-1)));

        let signed = GraphSpec::new(2, vec![EdgeRecord::edge(0, 1).with_sign(-1)]).unwrap();
        let d = laplacian_difference(&signed, 0, OperatorKind::Laplacian).unwrap();
        assert_eq!(d.unit(), &q(1));

        let arc = GraphSpec::new(2, vec![EdgeRecord::arc(0, 1)]).unwrap();
        let d = laplacian_difference(&arc, 0, OperatorKind::HermLaplacianOmega).unwrap();
        assert_eq!(d.unit(), &-&QuadExt::omega());
        let d = laplacian_difference(&arc, 0, OperatorKind::HermLaplacianI).unwrap();
        assert_eq!(d.unit(), &-&QuadExt::i());

        let heavy = GraphSpec::new(2, vec![EdgeRecord::digon(0, 1).with_weight(rational(3, 2))]).unwrap();
        let d = laplacian_difference(&heavy, 0, OperatorKind::HermLaplacianI).unwrap();
        assert_eq!(d.w, rational(3, 2));
        assert_eq!(d.unit(), &q(-1));
        let d = weight_reduction_difference(&heavy, 0, &rational(1, 2), OperatorKind::HermLaplacianI).unwrap();
        assert_eq!(d.w, rational(1, 2));
    }

    #[test]
    fn incompatible_operators() {
        let arc = GraphSpec::new(2, vec![EdgeRecord::arc(0, 1)]).unwrap();
        assert!(matches!(build_operator(&arc, OperatorKind::Laplacian), Err(Error::IncompatibleOperator { .. })));
        assert!(matches!(build_operator(&path3(), OperatorKind::HermLaplacianI), Err(Error::IncompatibleOperator { .. })));
        assert!(laplacian_difference(&path3(), 0, OperatorKind::Adjacency).is_err());
    }

    #[test]
    fn operator_names_round_trip() {
        for k in OperatorKind::ALL {
            assert_eq!(k.name().parse::<OperatorKind>().unwrap(), k);
            assert_eq!(OperatorKind::from_parts(k.family(), k.level()), k);
        }
    }
}
