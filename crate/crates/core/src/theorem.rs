//! Executable verifiers for the eigenvalue inequalities the library is built
//! around, seeded input generators for each, and a deterministic fuzz
//! harness.
//!
//! A verifier takes the hypotheses of its result as preconditions
//! (violations are [`Error::ShapeMismatch`]) and checks only the conclusion.
//! Each result also has a fixed false variant ([`Claim::Mutated`]) so the
//! harness can show that it detects counterexamples.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::{
    build_operator, generalized_laplacian_violation, laplacian_difference, normalizer, weight_reduction_difference,
    Family, GraphSpec, Level, OperatorKind,
};
use crate::inertia::{self, classify, Inertia, Method, Tolerance};
use crate::interlace::{
    matrix_relation, sample_points, shift_dominates_nu, shift_dominates_nu_at, shift_dominates_spectral,
    MatrixMethod, RealRootedPoly, Relation, RelationReport, Witness,
};
use crate::matrix::HermitianMatrix;
use crate::pencil::{cholesky, pencil_reduce};
use crate::random::{
    derive_seed, random_generalized_laplacian, random_graph_with, random_hermitian_with, random_vector,
    rng_from_seed, GraphFlavor,
};
use crate::scalar::{rational, Field, QuadField, Rational, Real, Scalar};

/// Minimum eigenvalue separation requested from floating random matrices.
pub const SPEC_GAP: f64 = 1e-6;

/// Allowed overshoot of normalized spectra past `[0, 2]`.
pub const BOUND_SLACK: f64 = 1e-9;

/// Nonnegative shifts at which the normalized and pencil counts are compared.
pub fn lemma_shifts() -> Vec<Rational> {
    vec![rational(0, 1), rational(3, 10), rational(1, 1), rational(17, 10), rational(2, 1)]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    InclusionPrinciple,
    Cauchy,
    InertiaSubadditive,
    ShiftBounds,
    Monotonicity,
    WeylPairwise,
    WeylIndexed,
    RankOneInterlace,
    IndefiniteCompatible,
    Pencil,
    LemmaBounds,
    LemmaPencilIdentity,
    LaplacianDeletion,
    MoharDeletion,
    NuCriterion,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        TheoremId::InclusionPrinciple,
        TheoremId::Cauchy,
        TheoremId::InertiaSubadditive,
        TheoremId::ShiftBounds,
        TheoremId::Monotonicity,
        TheoremId::WeylPairwise,
        TheoremId::WeylIndexed,
        TheoremId::RankOneInterlace,
        TheoremId::IndefiniteCompatible,
        TheoremId::Pencil,
        TheoremId::LemmaBounds,
        TheoremId::LemmaPencilIdentity,
        TheoremId::LaplacianDeletion,
        TheoremId::MoharDeletion,
        TheoremId::NuCriterion,
    ];

    pub fn name(self) -> &'static str {
        use TheoremId::*;
        match self {
            InclusionPrinciple => "inclusion_principle",
            Cauchy => "cauchy",
            InertiaSubadditive => "inertia_subadditive",
            ShiftBounds => "shift_bounds",
            Monotonicity => "monotonicity",
            WeylPairwise => "weyl_pairwise",
            WeylIndexed => "weyl_indexed",
            RankOneInterlace => "rank_one_interlace",
            IndefiniteCompatible => "indefinite_compatible",
            Pencil => "pencil",
            LemmaBounds => "lemma_bounds",
            LemmaPencilIdentity => "lemma_pencil_identity",
            LaplacianDeletion => "laplacian_deletion",
            MoharDeletion => "mohar_deletion",
            NuCriterion => "nu_criterion",
        }
    }

    /// The conclusion checked by [`Claim::Stated`].
    pub fn statement(self) -> &'static str {
        use TheoremId::*;
        match self {
            InclusionPrinciple => "B principal k x k submatrix of A: l_(n-k+i)(A) <= l_i(B) <= l_i(A)",
            Cauchy => "A with one row and column deleted interlaces A",
            InertiaSubadditive => "n+(A+B) <= n+(A) + n+(B)",
            ShiftBounds => "n+(B) <= m implies l_(i+m)(A+B) <= l_i(A)",
            Monotonicity => "B positive semidefinite implies l_i(A) <= l_i(A+B)",
            WeylPairwise => "n+(B) <= p, n-(B) <= q imply l_(i+q)(A) <= l_i(A+B) <= l_(i-p)(A)",
            WeylIndexed => "l_(i+j-1)(A+B) <= l_i(A) + l_j(B)",
            RankOneInterlace => "A interlaces A + aa*",
            IndefiniteCompatible => "n+(B) = n-(B) = 1 implies A compatible with A+B",
            Pencil => "det(xP-A) has the inertia of A and the pencil minus its last row and column interlaces it",
            LemmaBounds => "normalized generalized Laplacian has spectrum in [0, 2]",
            LemmaPencilIdentity => "n+(N - rI) = n+(L - rD) for r >= 0",
            LaplacianDeletion => "L(G-e) interlaces L(G) and N(G-e) is compatible with N(G)",
            MoharDeletion => "omega Laplacians: L(X-e) interlaces L(X), N(X-e) compatible with N(X)",
            NuCriterion => "index comparison and root counting decide shift dominance identically",
        }
    }

    /// The false variant checked by [`Claim::Mutated`].
    pub fn mutation(self) -> &'static str {
        use TheoremId::*;
        match self {
            InclusionPrinciple => "lower bound index n-k+i replaced by n-k+i-1",
            Cauchy => "l_i(A) <= l_i(B) for the deleted matrix B",
            InertiaSubadditive => "n+(A+B) <= max(n+(A), n+(B))",
            ShiftBounds => "shift m replaced by m-1",
            Monotonicity => "l_i(A+B) <= l_i(A)",
            WeylPairwise => "lower index i+q replaced by i+q-1",
            WeylIndexed => "index i+j-1 replaced by i+j-2",
            RankOneInterlace => "A + aa* interlaces A",
            IndefiniteCompatible => "A interlaces A+B",
            Pencil => "the reduced pencil of the deleted matrices interlaces A itself",
            LemmaBounds => "the unnormalized matrix has spectrum in [0, 2]",
            LemmaPencilIdentity => "D replaced by the identity",
            LaplacianDeletion => "N(G-e) interlaces N(G)",
            MoharDeletion => "N(X-e) interlaces N(X)",
            NuCriterion => "root counting without the point below the smallest root",
        }
    }

    fn uses_graphs(self) -> bool {
        matches!(self, TheoremId::LaplacianDeletion | TheoremId::MoharDeletion)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let normalized = s.replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == normalized)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    #[default]
    Stated,
    Mutated,
}

fn rationals_as_text<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|q| q.to_string()))
}

fn optional_rational<S: Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(q) => s.collect_str(q),
        None => s.serialize_none(),
    }
}

/// Inputs of one verifier call.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "shape", rename_all = "snake_case")]
pub enum TheoremInput {
    /// `A` and the retained indices of a principal submatrix.
    Submatrix { a: HermitianMatrix, keep: Vec<usize> },
    /// `A` and the index deleted from it.
    Bordered { a: HermitianMatrix, remove: usize },
    MatrixPair { a: HermitianMatrix, b: HermitianMatrix },
    ShiftBounds { a: HermitianMatrix, b: HermitianMatrix, m: i64 },
    Weyl { a: HermitianMatrix, b: HermitianMatrix, p: i64, q: i64 },
    RankOne { a: HermitianMatrix, alpha: Vec<Scalar> },
    Pencil { p: HermitianMatrix, a: HermitianMatrix },
    Laplacian { l: HermitianMatrix },
    LaplacianShifts {
        l: HermitianMatrix,
        #[serde(serialize_with = "rationals_as_text")]
        shifts: Vec<Rational>,
    },
    /// Deletion of a record, or lowering its weight by `reduce_by`.
    Deletion {
        graph: GraphSpec,
        record: usize,
        operator: OperatorKind,
        #[serde(serialize_with = "optional_rational", skip_serializing_if = "Option::is_none")]
        reduce_by: Option<Rational>,
    },
    Roots { f: RealRootedPoly, g: RealRootedPoly, m: i64 },
}

impl TheoremInput {
    fn shape(&self) -> &'static str {
        match self {
            TheoremInput::Submatrix { .. } => "submatrix",
            TheoremInput::Bordered { .. } => "bordered",
            TheoremInput::MatrixPair { .. } => "matrix_pair",
            TheoremInput::ShiftBounds { .. } => "shift_bounds",
            TheoremInput::Weyl { .. } => "weyl",
            TheoremInput::RankOne { .. } => "rank_one",
            TheoremInput::Pencil { .. } => "pencil",
            TheoremInput::Laplacian { .. } => "laplacian",
            TheoremInput::LaplacianShifts { .. } => "laplacian_shifts",
            TheoremInput::Deletion { .. } => "deletion",
            TheoremInput::Roots { .. } => "roots",
        }
    }
}

/// Verifier settings: tolerance for floating decisions and how matrix
/// relations are decided.
#[derive(Clone, Debug)]
pub struct Verifier {
    pub tolerance: Tolerance,
    pub method: MatrixMethod,
}

impl Default for Verifier {
    fn default() -> Self {
        Verifier { tolerance: Tolerance::default(), method: MatrixMethod::Both }
    }
}

fn wrong_shape(theorem: TheoremId, input: &TheoremInput) -> Error {
    Error::ShapeMismatch(format!("{theorem} does not take {} inputs", input.shape()))
}

fn hypothesis(message: impl Into<String>) -> Error {
    Error::ShapeMismatch(message.into())
}

fn count_witness(claim: &str, lhs: usize, rhs: usize) -> Witness {
    Witness::Count { claim: claim.into(), lhs: lhs as i64, rhs: rhs as i64 }
}

impl Verifier {
    fn relation(&self, a: &HermitianMatrix, b: &HermitianMatrix, relation: Relation) -> Result<RelationReport> {
        matrix_relation(a, b, relation, &self.method, self.tolerance)
    }

    fn dominates(&self, a: &HermitianMatrix, b: &HermitianMatrix, m: i64) -> Result<RelationReport> {
        self.relation(a, b, Relation::ShiftDominates(m))
    }

    /// Inertia, exact for exact matrices; the flag marks an eigenvalue in the
    /// ambiguous band.
    fn inertia(&self, a: &HermitianMatrix) -> Result<(Inertia, bool)> {
        if a.field().is_exact() {
            return Ok((inertia::inertia_exact(a)?, false));
        }
        let detail = inertia::inertia_float_detail(a, self.tolerance)?;
        Ok((detail.inertia, detail.ambiguous))
    }

    /// Checks `claim` of `theorem` on `input`.
    pub fn verify(&self, theorem: TheoremId, claim: Claim, input: &TheoremInput) -> Result<RelationReport> {
        use TheoremId as T;
        use TheoremInput as I;
        let mutated = claim == Claim::Mutated;
        match (theorem, input) {
            (T::InclusionPrinciple, I::Submatrix { a, keep }) => {
                let b = a.principal_submatrix(keep)?;
                let gap = (a.n() - b.n()) as i64;
                let lower = if mutated { gap - 1 } else { gap };
                Ok(self.dominates(a, &b, 0)?.and(self.dominates(&b, a, lower)?))
            }
            (T::Cauchy, I::Bordered { a, remove }) => {
                let b = a.delete_index(*remove)?;
                if mutated {
                    self.dominates(&b, a, 0)
                } else {
                    self.relation(&b, a, Relation::Interlaces)
                }
            }
            (T::InertiaSubadditive, I::MatrixPair { a, b }) => {
                let (sum, sum_flag) = self.inertia(&a.add(b)?)?;
                let (ia, fa) = self.inertia(a)?;
                let (ib, fb) = self.inertia(b)?;
                let bound = if mutated { ia.n_plus.max(ib.n_plus) } else { ia.n_plus + ib.n_plus };
                let claim = if mutated { "n+(A+B) <= max(n+(A), n+(B))" } else { "n+(A+B) <= n+(A) + n+(B)" };
                Ok(RelationReport::from_check(sum.n_plus <= bound, || count_witness(claim, sum.n_plus, bound))
                    .with_indeterminate(sum_flag || fa || fb))
            }
            (T::ShiftBounds, I::ShiftBounds { a, b, m }) => {
                let (ib, _) = self.inertia(b)?;
                if ib.n_plus as i64 > *m {
                    return Err(hypothesis(format!("n+(B) = {} exceeds m = {m}", ib.n_plus)));
                }
                let shift = if mutated { m - 1 } else { *m };
                self.dominates(a, &a.add(b)?, shift)
            }
            (T::Monotonicity, I::MatrixPair { a, b }) => {
                let (ib, _) = self.inertia(b)?;
                if ib.n_minus > 0 {
                    return Err(hypothesis(format!("B has {} negative eigenvalues", ib.n_minus)));
                }
                let sum = a.add(b)?;
                if mutated {
                    self.dominates(a, &sum, 0)
                } else {
                    self.dominates(&sum, a, 0)
                }
            }
            (T::WeylPairwise, I::Weyl { a, b, p, q }) => {
                let (ib, _) = self.inertia(b)?;
                if ib.n_plus as i64 > *p || ib.n_minus as i64 > *q {
                    return Err(hypothesis(format!("inertia {ib} of B exceeds (p, q) = ({p}, {q})")));
                }
                let sum = a.add(b)?;
                let lower = if mutated { q - 1 } else { *q };
                Ok(self.dominates(&sum, a, lower)?.and(self.dominates(a, &sum, *p)?))
            }
            (T::WeylIndexed, I::MatrixPair { a, b }) => {
                let sum = a.embed_float().add(&b.embed_float())?;
                let spectrum = b.eigenvalues()?;
                let mut report = RelationReport::holds();
                for j in 1..=b.n() {
                    let m = j as i64 - if mutated { 2 } else { 1 };
                    if m < 0 {
                        continue;
                    }
                    let shifted = sum.shift(&Real::Float(spectrum.lambda(j)))?;
                    report = report.and(self.dominates(a, &shifted, m)?);
                    if !report.holds {
                        break;
                    }
                }
                Ok(report)
            }
            (T::RankOneInterlace, I::RankOne { a, alpha }) => {
                if alpha.len() != a.n() {
                    return Err(Error::DimensionMismatch { expected: a.n(), found: alpha.len() });
                }
                let b = a.add(&HermitianMatrix::outer(alpha)?)?;
                if mutated {
                    self.relation(&b, a, Relation::Interlaces)
                } else {
                    self.relation(a, &b, Relation::Interlaces)
                }
            }
            (T::IndefiniteCompatible, I::MatrixPair { a, b }) => {
                let (ib, _) = self.inertia(b)?;
                if ib.n_plus != 1 || ib.n_minus != 1 {
                    return Err(hypothesis(format!("B has inertia {ib}, not (1, 1, n-2)")));
                }
                let relation = if mutated { Relation::Interlaces } else { Relation::Compatible };
                self.relation(a, &a.add(b)?, relation)
            }
            (T::Pencil, I::Pencil { p, a }) => self.verify_pencil(p, a, mutated),
            (T::LemmaBounds, I::Laplacian { l }) => {
                let target = if mutated { l.embed_float() } else { normalizer(l)? };
                let spectrum = target.eigenvalues()?;
                let (lower, upper) = (-BOUND_SLACK, 2.0 + BOUND_SLACK);
                let outside = spectrum.values().iter().copied().find(|x| *x < lower || *x > upper);
                Ok(RelationReport::from_check(outside.is_none(), || Witness::Range {
                    claim: "eigenvalue in [0, 2]".into(),
                    value: outside.unwrap_or(f64::NAN),
                    lower,
                    upper,
                }))
            }
            (T::LemmaPencilIdentity, I::LaplacianShifts { l, shifts }) => self.verify_lemma_identity(l, shifts, mutated),
            (T::LaplacianDeletion | T::MoharDeletion, I::Deletion { graph, record, operator, reduce_by }) => {
                let allowed = match theorem {
                    T::MoharDeletion => operator.family() == Family::SixthRoot,
                    _ => operator.family() != Family::SixthRoot,
                };
                if !allowed || operator.level() != Level::Laplacian {
                    return Err(hypothesis(format!("{theorem} does not apply to operator {operator}")));
                }
                self.verify_deletion(graph, *record, *operator, reduce_by.as_ref(), mutated)
            }
            (T::NuCriterion, I::Roots { f, g, m }) => {
                let by_index = shift_dominates_spectral(f, g, *m);
                let by_count = if mutated {
                    let mut samples = sample_points(f, g);
                    samples.pop();
                    shift_dominates_nu_at(f, g, *m, &samples)
                } else {
                    shift_dominates_nu(f, g, *m)
                };
                Ok(RelationReport::from_check(by_index.holds == by_count.holds, || Witness::Disagreement {
                    claim: format!("r_(i{m:+})(g) <= r_i(f) for all i iff nu(g,r) - nu(f,r) <= {m} for all r"),
                    first: by_index.holds,
                    second: by_count.holds,
                }))
            }
            _ => Err(wrong_shape(theorem, input)),
        }
    }

    fn verify_pencil(&self, p: &HermitianMatrix, a: &HermitianMatrix, mutated: bool) -> Result<RelationReport> {
        if p.n() != a.n() {
            return Err(Error::DimensionMismatch { expected: p.n(), found: a.n() });
        }
        if let Err(e) = cholesky(p) {
            return Err(hypothesis(format!("P is not positive definite: {e}")));
        }
        let b = pencil_reduce(p, a)?;
        let n = a.n();
        let c = if n <= 1 {
            HermitianMatrix::zeros(0, Field::Complex)
        } else {
            pencil_reduce(&p.delete_index(n - 1)?, &a.delete_index(n - 1)?)?
        };
        if mutated {
            return self.relation(&c, a, Relation::Interlaces);
        }
        let (ib, fb) = self.inertia(&b)?;
        let (ia, fa) = self.inertia(a)?;
        let same = RelationReport::from_check(ib == ia, || Witness::InertiaMismatch {
            claim: "inertia of the reduced pencil equals inertia of A".into(),
            left: ib,
            right: ia,
        })
        .with_indeterminate(fa || fb);
        Ok(same.and(self.relation(&c, &b, Relation::Interlaces)?))
    }

    fn verify_lemma_identity(&self, l: &HermitianMatrix, shifts: &[Rational], mutated: bool) -> Result<RelationReport> {
        if let Some(row) = generalized_laplacian_violation(l) {
            return Err(hypothesis(format!("not a generalized Laplacian at row {row}")));
        }
        if let Some(r) = shifts.iter().find(|r| **r < rational(0, 1)) {
            return Err(hypothesis(format!("shift {r} is negative")));
        }
        let normalized = normalizer(l)?;
        let tau = self.tolerance.for_matrix(&normalized);
        let n = l.n();
        let (pencil, method) = match l.exact_entries() {
            Some((field, e)) => {
                let diagonal: Vec<Rational> = (0..n).map(|i| e[i * n + i].re().clone()).collect();
                (HermitianMatrix::from_rational_diagonal(&diagonal, field), Method::Exact)
            }
            None => (HermitianMatrix::from_real_diagonal(&l.diagonal_f64()), Method::Float(self.tolerance)),
        };
        let pencil = if mutated { HermitianMatrix::identity(n, l.field()) } else { pencil };
        let mut ambiguous = false;
        for r in shifts {
            let left = classify(normalized.shift(&Real::Float(Real::Exact(r.clone()).to_f64()))?.eigenvalues()?.values(), tau);
            ambiguous |= left.ambiguous;
            let shift = match method {
                Method::Exact => Real::Exact(r.clone()),
                Method::Float(_) => Real::Float(Real::Exact(r.clone()).to_f64()),
            };
            let right = inertia::pencil_inertia(l, &pencil, &shift, method)?;
            if left.inertia.n_plus != right.n_plus {
                let claim = format!("n+(N - {r} I) = n+(L - {r} {})", if mutated { "I" } else { "D" });
                return Ok(RelationReport::fails(count_witness(&claim, left.inertia.n_plus, right.n_plus))
                    .with_indeterminate(ambiguous));
            }
        }
        Ok(RelationReport::holds().with_indeterminate(ambiguous))
    }

    fn verify_deletion(
        &self,
        graph: &GraphSpec,
        record: usize,
        operator: OperatorKind,
        reduce_by: Option<&Rational>,
        mutated: bool,
    ) -> Result<RelationReport> {
        let (after, difference) = match reduce_by {
            Some(by) => (graph.reduce_weight(record, by)?, weight_reduction_difference(graph, record, by, operator)?),
            None => (graph.delete_record(record)?, laplacian_difference(graph, record, operator)?),
        };
        let expected = reduce_by.cloned().unwrap_or_else(|| graph.records()[record].weight.clone());
        if difference.w != expected {
            return Ok(RelationReport::fails(Witness::Structure {
                claim: format!("difference weight {} equals removed weight {expected}", difference.w),
            }));
        }
        let normalized = OperatorKind::from_parts(operator.family(), Level::Normalized);
        let (l1, l2) = (build_operator(graph, operator)?, build_operator(&after, operator)?);
        let (n1, n2) = (build_operator(graph, normalized)?, build_operator(&after, normalized)?);
        let laplacians = self.relation(&l2, &l1, Relation::Interlaces)?;
        let relation = if mutated { Relation::Interlaces } else { Relation::Compatible };
        Ok(laplacians.and(self.relation(&n2, &n1, relation)?))
    }
}

/// [`Verifier::verify`] with default settings.
pub fn verify(theorem: TheoremId, claim: Claim, input: &TheoremInput) -> Result<RelationReport> {
    Verifier::default().verify(theorem, claim, input)
}

fn random_field(rng: &mut impl Rng) -> (Field, Option<f64>) {
    match rng.random_range(0..5) {
        0 => (Field::Quad(QuadField::MinusOne), None),
        1 => (Field::Quad(QuadField::MinusThree), None),
        _ => (Field::Complex, Some(SPEC_GAP)),
    }
}

fn exact_field(rng: &mut impl Rng) -> Field {
    if rng.random_bool(0.5) {
        Field::Quad(QuadField::MinusOne)
    } else {
        Field::Quad(QuadField::MinusThree)
    }
}

fn positive_semidefinite(n: usize, rank: usize, field: Field, rng: &mut impl Rng) -> Result<HermitianMatrix> {
    let mut b = HermitianMatrix::zeros(n, field);
    for _ in 0..rank {
        b = b.add(&HermitianMatrix::outer(&random_vector(n, field, rng))?)?;
    }
    Ok(b)
}

fn inertia_of(a: &HermitianMatrix) -> Result<Inertia> {
    Verifier::default().inertia(a).map(|(i, _)| i)
}

/// Random inputs satisfying the hypotheses of `theorem`. Matrix sizes are
/// drawn from `1..=size_bound` (at least 2 where needed), graph orders from
/// `2..=size_bound`.
pub fn generate(theorem: TheoremId, seed: u64, size_bound: usize) -> Result<TheoremInput> {
    use TheoremId as T;
    let mut rng = rng_from_seed(seed);
    let rng = &mut rng;
    let size = size_bound.max(1);
    let at_least_two = size.max(2);
    let matrix = |n: usize, rng: &mut rand_chacha::ChaCha8Rng| {
        let (field, gap) = random_field(rng);
        random_hermitian_with(n, field, rng, gap)
    };
    Ok(match theorem {
        T::InclusionPrinciple => {
            let n = rng.random_range(1..=size);
            let k = rng.random_range(1..=n);
            let mut keep = sample(rng, n, k).into_vec();
            keep.sort_unstable();
            TheoremInput::Submatrix { a: matrix(n, rng)?, keep }
        }
        T::Cauchy => {
            let n = rng.random_range(2..=at_least_two);
            let remove = rng.random_range(0..n);
            TheoremInput::Bordered { a: matrix(n, rng)?, remove }
        }
        T::InertiaSubadditive => {
            let n = rng.random_range(1..=size);
            let field = exact_field(rng);
            let a = random_hermitian_with(n, field, rng, None)?;
            let b = random_hermitian_with(n, field, rng, None)?;
            TheoremInput::MatrixPair { a, b }
        }
        T::ShiftBounds => {
            let n = rng.random_range(1..=size);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            let b = random_hermitian_with(n, field, rng, gap)?;
            let m = inertia_of(&b)?.n_plus as i64;
            TheoremInput::ShiftBounds { a, b, m }
        }
        T::Monotonicity => {
            let n = rng.random_range(1..=size);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            let rank = rng.random_range(1..=n);
            let b = positive_semidefinite(n, rank, field, rng)?;
            TheoremInput::MatrixPair { a, b }
        }
        T::WeylPairwise => {
            let n = rng.random_range(1..=size);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            let b = random_hermitian_with(n, field, rng, gap)?;
            let ib = inertia_of(&b)?;
            TheoremInput::Weyl { a, b, p: ib.n_plus as i64, q: ib.n_minus as i64 }
        }
        T::WeylIndexed => {
            let n = rng.random_range(2..=at_least_two);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            let b = random_hermitian_with(n, field, rng, gap)?;
            TheoremInput::MatrixPair { a, b }
        }
        T::RankOneInterlace => {
            let n = rng.random_range(1..=size);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            TheoremInput::RankOne { a, alpha: random_vector(n, field, rng) }
        }
        T::IndefiniteCompatible => {
            let n = rng.random_range(2..=at_least_two);
            let (field, gap) = random_field(rng);
            let a = random_hermitian_with(n, field, rng, gap)?;
            let mut attempts = 0;
            let b = loop {
                let plus = HermitianMatrix::outer(&random_vector(n, field, rng))?;
                let minus = HermitianMatrix::outer(&random_vector(n, field, rng))?;
                let b = plus.sub(&minus)?;
                let ib = inertia_of(&b)?;
                if ib.n_plus == 1 && ib.n_minus == 1 {
                    break b;
                }
                attempts += 1;
                if attempts == crate::random::GAP_ATTEMPTS {
                    return Err(hypothesis("could not draw B with inertia (1, 1, n-2)"));
                }
            };
            TheoremInput::MatrixPair { a, b }
        }
        T::Pencil => {
            let n = rng.random_range(1..=size);
            let ridge = rng.random_range(0.5..=2.0);
            let p = positive_semidefinite(n, n, Field::Complex, rng)?
                .add(&HermitianMatrix::identity(n, Field::Complex).scale(&Real::Float(ridge))?)?;
            let a = random_hermitian_with(n, Field::Complex, rng, Some(SPEC_GAP))?;
            TheoremInput::Pencil { p, a }
        }
        T::LemmaBounds => {
            let n = rng.random_range(1..=size);
            TheoremInput::Laplacian { l: random_generalized_laplacian(n, rng.random()) }
        }
        T::LemmaPencilIdentity => {
            let n = rng.random_range(1..=size);
            TheoremInput::LaplacianShifts { l: random_generalized_laplacian(n, rng.random()), shifts: lemma_shifts() }
        }
        T::LaplacianDeletion | T::MoharDeletion => {
            let n = rng.random_range(2..=at_least_two);
            let flavor = if theorem == T::MoharDeletion {
                GraphFlavor::Digraph
            } else {
                GraphFlavor::ALL[rng.random_range(0..4)]
            };
            let graph = loop {
                let density = rng.random_range(0.15..=0.9);
                let g = random_graph_with(n, flavor, density, rng);
                if !g.records().is_empty() {
                    break g;
                }
            };
            let record = rng.random_range(0..graph.records().len());
            let operator = match (theorem, flavor) {
                (T::MoharDeletion, _) => OperatorKind::HermLaplacianOmega,
                (_, GraphFlavor::Digraph) => OperatorKind::HermLaplacianI,
                _ => OperatorKind::Laplacian,
            };
            let reduce_by = (flavor == GraphFlavor::Weighted && rng.random_bool(0.3))
                .then(|| &graph.records()[record].weight * rational(rng.random_range(1..=3), 4));
            TheoremInput::Deletion { graph, record, operator, reduce_by }
        }
        T::NuCriterion => {
            let roots = |rng: &mut rand_chacha::ChaCha8Rng| {
                let degree = rng.random_range(0..=size);
                RealRootedPoly::from_roots((0..degree).map(|_| rng.random_range(-6..=6) as f64 / 2.0).collect())
            };
            let f = roots(rng);
            let g = roots(rng);
            TheoremInput::Roots { f, g, m: rng.random_range(-2..=2) }
        }
    })
}

fn tolerance_text<S: Serializer>(t: &Tolerance, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(t)
}

/// One failing trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialFailure {
    pub trial: u64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<TheoremInput>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<RelationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FuzzReport {
    pub theorem: TheoremId,
    pub claim: Claim,
    pub statement: &'static str,
    pub trials: u64,
    pub rng_seed: u64,
    pub size_bound: usize,
    #[serde(serialize_with = "tolerance_text")]
    pub tolerance: Tolerance,
    pub passed: u64,
    /// Trials whose verdict rests on a comparison inside the tolerance band.
    pub indeterminate: u64,
    pub failures: Vec<TrialFailure>,
}

impl FuzzReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Fuzz settings.
#[derive(Clone, Debug)]
pub struct FuzzConfig {
    pub trials: u64,
    pub master_seed: u64,
    pub size_bound: usize,
    pub claim: Claim,
    pub verifier: Verifier,
}

impl FuzzConfig {
    pub fn new(trials: u64, master_seed: u64, size_bound: usize) -> Self {
        FuzzConfig { trials, master_seed, size_bound, claim: Claim::Stated, verifier: Verifier::default() }
    }
}

enum Outcome {
    Passed,
    Indeterminate,
    Failed(Box<TrialFailure>),
}

fn run_trial(theorem: TheoremId, config: &FuzzConfig, trial: u64) -> Outcome {
    let seed = derive_seed(config.master_seed, trial);
    let failure = |inputs, report, error| Outcome::Failed(Box::new(TrialFailure { trial, seed, inputs, report, error }));
    let input = match generate(theorem, seed, config.size_bound) {
        Ok(input) => input,
        Err(e) => return failure(None, None, Some(e.to_string())),
    };
    match config.verifier.verify(theorem, config.claim, &input) {
        Ok(report) if report.holds && !report.indeterminate => Outcome::Passed,
        Ok(report) if report.indeterminate => Outcome::Indeterminate,
        Ok(report) => failure(Some(input), Some(report), None),
        Err(e) => failure(Some(input), None, Some(e.to_string())),
    }
}

/// Runs `config.trials` independent trials; trial `i` draws its inputs from
/// `derive_seed(master_seed, i)`, so the report does not depend on the
/// order in which trials execute.
pub fn fuzz_with(theorem: TheoremId, config: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<Outcome> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(theorem, config, trial))
        .collect();
    let mut report = FuzzReport {
        theorem,
        claim: config.claim,
        statement: match config.claim {
            Claim::Stated => theorem.statement(),
            Claim::Mutated => theorem.mutation(),
        },
        trials: config.trials,
        rng_seed: config.master_seed,
        size_bound: config.size_bound,
        tolerance: config.verifier.tolerance,
        passed: 0,
        indeterminate: 0,
        failures: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            Outcome::Passed => report.passed += 1,
            Outcome::Indeterminate => report.indeterminate += 1,
            Outcome::Failed(f) => report.failures.push(*f),
        }
    }
    report
}

pub fn fuzz(theorem: TheoremId, trials: u64, master_seed: u64, size_bound: usize) -> FuzzReport {
    fuzz_with(theorem, &FuzzConfig::new(trials, master_seed, size_bound))
}

/// Default size bound: 8 for matrix results, 12 for graph results.
pub fn default_size_bound(theorem: TheoremId) -> usize {
    if theorem.uses_graphs() {
        12
    } else {
        8
    }
}
