//! Relations between real-rooted polynomials given by their roots: shift
//! dominance `r_{i+m}(g) ≤ r_i(f)`, interlacing `f ⪯ g` and compatibility
//! `f ⋈ g`.
//!
//! Every relation is decided twice: by comparing sorted roots index by index,
//! and by bounding the root-count difference `ν(g, r) − ν(f, r)`, where
//! `ν(f, r)` is the number of roots strictly above `r`. For matrices the
//! count `ν` becomes the positive inertia index `n₊(B − rI)`.
//!
//! The count difference is a right-continuous step function of `r` that only
//! jumps at roots, so it is enough to look at each distinct root and at one
//! point below all of them.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::inertia::{self, classify, Inertia, Tolerance, AMBIGUITY_FACTOR};
use crate::matrix::{HermitianMatrix, Spectrum};
use crate::scalar::{Rational, Real};

/// Roots of a real-rooted polynomial, nonincreasing, with multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct RealRootedPoly {
    roots: Vec<f64>,
}

impl RealRootedPoly {
    /// Sorts `roots` into nonincreasing order.
    pub fn from_roots(mut roots: Vec<f64>) -> Self {
        roots.sort_by(|a, b| b.total_cmp(a));
        RealRootedPoly { roots }
    }

    /// Accepts `roots` only if already nonincreasing and finite.
    pub fn from_descending(roots: Vec<f64>) -> Result<Self> {
        if let Some(k) = roots.iter().position(|r| !r.is_finite()) {
            return Err(Error::ShapeMismatch(format!("root {} is not finite", k + 1)));
        }
        if let Some(k) = roots.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::ShapeMismatch(format!(
                "roots not descending at position {}: {} < {}",
                k + 2,
                roots[k],
                roots[k + 1]
            )));
        }
        Ok(RealRootedPoly { roots })
    }

    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// `r_i(f)` with 1-based `i`, extended by `+∞` for `i < 1` and `−∞` for
    /// `i > deg f`.
    pub fn extended_root(&self, i: i64) -> f64 {
        if i < 1 {
            f64::INFINITY
        } else if i as usize > self.roots.len() {
            f64::NEG_INFINITY
        } else {
            self.roots[i as usize - 1]
        }
    }

    /// Number of roots strictly greater than `r`.
    pub fn nu(&self, r: f64) -> usize {
        self.roots.partition_point(|&x| x > r)
    }
}

impl From<Spectrum> for RealRootedPoly {
    fn from(s: Spectrum) -> Self {
        RealRootedPoly { roots: s.into_values() }
    }
}

fn extended<S: Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(*x)
    } else if *x > 0.0 {
        s.serialize_str("+inf")
    } else {
        s.serialize_str("-inf")
    }
}

/// Why a relation failed.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The comparison `lhs ≤ rhs` stated by `claim` fails at index `i`.
    Index {
        claim: String,
        i: i64,
        #[serde(serialize_with = "extended")]
        lhs: f64,
        #[serde(serialize_with = "extended")]
        rhs: f64,
    },
    /// The count difference `count_g − count_f` leaves its bounds at shift `r`.
    Shift {
        r: f64,
        count_g: usize,
        count_f: usize,
        difference: i64,
    },
    /// Degrees outside the allowed window.
    Degree { deg_f: usize, deg_g: usize },
    /// Integer counts (inertia indices) violating `claim`.
    Count { claim: String, lhs: i64, rhs: i64 },
    /// Two inertia triples that should be equal.
    InertiaMismatch { claim: String, left: Inertia, right: Inertia },
    /// A real value outside an interval.
    Range {
        claim: String,
        value: f64,
        lower: f64,
        upper: f64,
    },
    /// Two decision routes that must agree returned different verdicts.
    Disagreement { claim: String, first: bool, second: bool },
    /// A structural property of the inputs failed.
    Structure { claim: String },
}

/// Verdict of a relation check.
///
/// `indeterminate` marks a verdict that rests on a comparison inside the
/// floating tolerance zone; such a verdict is reported but not certified.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RelationReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub indeterminate: bool,
}

impl RelationReport {
    pub fn holds() -> Self {
        RelationReport { holds: true, witness: None, indeterminate: false }
    }

    pub fn fails(witness: Witness) -> Self {
        RelationReport { holds: false, witness: Some(witness), indeterminate: false }
    }

    pub fn from_check(ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            RelationReport::holds()
        } else {
            RelationReport::fails(witness())
        }
    }

    pub fn with_indeterminate(mut self, flag: bool) -> Self {
        self.indeterminate |= flag;
        self
    }

    /// Conjunction; the witness of the first failing report is kept.
    pub fn and(self, other: RelationReport) -> RelationReport {
        let indeterminate = self.indeterminate || other.indeterminate;
        let mut out = if self.holds { other } else { self };
        out.indeterminate = indeterminate;
        out
    }

    /// A failure that is not flagged as a tolerance event.
    pub fn is_decisive_failure(&self) -> bool {
        !self.holds && !self.indeterminate
    }
}

/// A relation between `f` (or `A`) and `g` (or `B`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `r_{i+m}(g) ≤ r_i(f)` for all `i`.
    ShiftDominates(i64),
    /// `f ⪯ g`.
    Interlaces,
    /// `f ⋈ g`.
    Compatible,
}

impl Relation {
    /// Bounds on `ν(g, r) − ν(f, r)` equivalent to the relation.
    pub fn count_bounds(self) -> (Option<i64>, i64) {
        match self {
            Relation::ShiftDominates(m) => (None, m),
            Relation::Interlaces => (Some(0), 1),
            Relation::Compatible => (Some(-1), 1),
        }
    }

    /// The relation as a conjunction of shift dominances: each entry
    /// `(swap, m)` means `r_{i+m}(g) ≤ r_i(f)` (or with `f`, `g` exchanged).
    fn dominances(self) -> Vec<(bool, i64)> {
        match self {
            Relation::ShiftDominates(m) => vec![(false, m)],
            // r_i(f) ≤ r_i(g) and r_{i+1}(g) ≤ r_i(f)
            Relation::Interlaces => vec![(true, 0), (false, 1)],
            // r_i(f) ≤ r_{i-1}(g) and r_{i+1}(g) ≤ r_i(f)
            Relation::Compatible => vec![(true, 1), (false, 1)],
        }
    }
}

/// Index range `1..=max(deg f, deg g − m)` outside which the comparison
/// `r_{i+m}(g) ≤ r_i(f)` is automatic.
fn dominance_range(f: &RealRootedPoly, g: &RealRootedPoly, m: i64) -> std::ops::RangeInclusive<i64> {
    1..=(f.degree() as i64).max(g.degree() as i64 - m)
}

/// `r_{i+m}(g) ≤ r_i(f)` for all `i`, by direct comparison of roots.
pub fn shift_dominates_spectral(f: &RealRootedPoly, g: &RealRootedPoly, m: i64) -> RelationReport {
    for i in dominance_range(f, g, m) {
        let lhs = g.extended_root(i + m);
        let rhs = f.extended_root(i);
        if !(lhs <= rhs) {
            return RelationReport::fails(Witness::Index {
                claim: format!("r_(i{m:+})(g) <= r_i(f)"),
                i,
                lhs,
                rhs,
            });
        }
    }
    RelationReport::holds()
}

/// Sample shifts: every distinct root (descending) and one point below the
/// smallest root (`0` if there are no roots).
pub fn sample_points(f: &RealRootedPoly, g: &RealRootedPoly) -> Vec<f64> {
    let mut points: Vec<f64> = f.roots.iter().chain(&g.roots).copied().collect();
    points.sort_by(|a, b| b.total_cmp(a));
    points.dedup();
    let below = points.last().map_or(0.0, |&lowest| lowest - 1.0);
    points.push(below);
    points
}

fn check_counts(
    samples: &[f64],
    bounds: (Option<i64>, i64),
    mut counts: impl FnMut(f64) -> Result<(usize, usize)>,
) -> Result<RelationReport> {
    let (lower, upper) = bounds;
    for &r in samples {
        let (count_g, count_f) = counts(r)?;
        let difference = count_g as i64 - count_f as i64;
        if difference > upper || lower.is_some_and(|lo| difference < lo) {
            return Ok(RelationReport::fails(Witness::Shift { r, count_g, count_f, difference }));
        }
    }
    Ok(RelationReport::holds())
}

fn counting_report(f: &RealRootedPoly, g: &RealRootedPoly, bounds: (Option<i64>, i64)) -> RelationReport {
    check_counts(&sample_points(f, g), bounds, |r| Ok((g.nu(r), f.nu(r))))
        .expect("root counting is infallible")
}

/// `ν(g, r) − ν(f, r) ≤ m` for all `r`, checked on [`sample_points`].
pub fn shift_dominates_nu(f: &RealRootedPoly, g: &RealRootedPoly, m: i64) -> RelationReport {
    counting_report(f, g, (None, m))
}

/// `ν(g, r) − ν(f, r) ≤ m` checked only at the given shifts.
pub fn shift_dominates_nu_at(f: &RealRootedPoly, g: &RealRootedPoly, m: i64, samples: &[f64]) -> RelationReport {
    check_counts(samples, (None, m), |r| Ok((g.nu(r), f.nu(r)))).expect("root counting is infallible")
}

/// `f ⪯ g`: `deg f ≤ deg g ≤ deg f + 1` and `r_i(g) ≥ r_i(f) ≥ r_{i+1}(g)`.
pub fn interlaces(f: &RealRootedPoly, g: &RealRootedPoly) -> RelationReport {
    let (n, m) = (f.degree(), g.degree());
    if !(n <= m && m <= n + 1) {
        return RelationReport::fails(Witness::Degree { deg_f: n, deg_g: m });
    }
    for i in 1..=m.max(n) as i64 {
        let (ri_f, ri_g, next_g) = (f.extended_root(i), g.extended_root(i), g.extended_root(i + 1));
        if !(ri_f <= ri_g) {
            return RelationReport::fails(Witness::Index {
                claim: "r_i(f) <= r_i(g)".into(),
                i,
                lhs: ri_f,
                rhs: ri_g,
            });
        }
        if !(next_g <= ri_f) {
            return RelationReport::fails(Witness::Index {
                claim: "r_(i+1)(g) <= r_i(f)".into(),
                i,
                lhs: next_g,
                rhs: ri_f,
            });
        }
    }
    RelationReport::holds()
}

/// `f ⪯ g` via `0 ≤ ν(g, r) − ν(f, r) ≤ 1`.
pub fn interlaces_by_counting(f: &RealRootedPoly, g: &RealRootedPoly) -> RelationReport {
    counting_report(f, g, Relation::Interlaces.count_bounds())
}

/// `f ⋈ g`: `|deg f − deg g| ≤ 1` and `r_{i−1}(g) ≥ r_i(f) ≥ r_{i+1}(g)`.
pub fn compatible(f: &RealRootedPoly, g: &RealRootedPoly) -> RelationReport {
    let (n, m) = (f.degree(), g.degree());
    if n.abs_diff(m) > 1 {
        return RelationReport::fails(Witness::Degree { deg_f: n, deg_g: m });
    }
    for i in 1..=m.max(n) as i64 + 1 {
        let (ri_f, prev_g, next_g) = (f.extended_root(i), g.extended_root(i - 1), g.extended_root(i + 1));
        if !(ri_f <= prev_g) {
            return RelationReport::fails(Witness::Index {
                claim: "r_i(f) <= r_(i-1)(g)".into(),
                i,
                lhs: ri_f,
                rhs: prev_g,
            });
        }
        if !(next_g <= ri_f) {
            return RelationReport::fails(Witness::Index {
                claim: "r_(i+1)(g) <= r_i(f)".into(),
                i,
                lhs: next_g,
                rhs: ri_f,
            });
        }
    }
    RelationReport::holds()
}

/// `f ⋈ g` via `|ν(g, r) − ν(f, r)| ≤ 1`.
pub fn compatible_by_counting(f: &RealRootedPoly, g: &RealRootedPoly) -> RelationReport {
    counting_report(f, g, Relation::Compatible.count_bounds())
}

pub fn relation_spectral(f: &RealRootedPoly, g: &RealRootedPoly, relation: Relation) -> RelationReport {
    match relation {
        Relation::ShiftDominates(m) => shift_dominates_spectral(f, g, m),
        Relation::Interlaces => interlaces(f, g),
        Relation::Compatible => compatible(f, g),
    }
}

pub fn relation_counting(f: &RealRootedPoly, g: &RealRootedPoly, relation: Relation) -> RelationReport {
    counting_report(f, g, relation.count_bounds())
}

/// Replaces every cluster of roots (of `f` and `g` together) whose
/// consecutive gaps are at most `tol` by the cluster's largest value.
pub fn merge_close(f: &RealRootedPoly, g: &RealRootedPoly, tol: f64) -> (RealRootedPoly, RealRootedPoly) {
    let mut all: Vec<f64> = f.roots.iter().chain(&g.roots).copied().collect();
    all.sort_by(|a, b| b.total_cmp(a));
    let mut representative = Vec::with_capacity(all.len());
    let mut current = f64::NAN;
    let mut previous = f64::NAN;
    for &x in &all {
        if !(previous - x <= tol) {
            current = x;
        }
        representative.push((x, current));
        previous = x;
    }
    let snap = |x: f64| {
        let k = representative.partition_point(|&(v, _)| v > x);
        representative[k].1
    };
    let map = |p: &RealRootedPoly| RealRootedPoly { roots: p.roots.iter().map(|&x| snap(x)).collect() };
    (map(f), map(g))
}

/// True if some pair compared by the relation differs by a nonzero amount
/// smaller than `AMBIGUITY_FACTOR · tol`.
fn has_near_tie(f: &RealRootedPoly, g: &RealRootedPoly, relation: Relation, tol: f64) -> bool {
    relation.dominances().into_iter().any(|(swap, m)| {
        let (f, g) = if swap { (g, f) } else { (f, g) };
        dominance_range(f, g, m).any(|i| {
            let (x, y) = (g.extended_root(i + m), f.extended_root(i));
            let gap = (x - y).abs();
            x.is_finite() && y.is_finite() && gap > 0.0 && gap < AMBIGUITY_FACTOR * tol
        })
    })
}

/// How a matrix relation is decided.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixMethod {
    /// Compare computed spectra.
    Spectral,
    /// Bound `n₊(B − rI) − n₊(A − rI)` at shifts taken from the spectra.
    Inertia,
    /// Run both and require agreement.
    Both,
    /// Bound the inertia difference exactly at the given rational shifts
    /// (both matrices must be exact). Only shifts in the list are examined.
    ExactInertia(Vec<Rational>),
}

/// Decides `relation` between `A` (playing `f`) and `B` (playing `g`):
/// `ShiftDominates(m)` is `λ_{i+m}(B) ≤ λ_i(A)`, `Interlaces` is `A ⪯ B`.
pub fn matrix_relation(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    relation: Relation,
    method: &MatrixMethod,
    tol: Tolerance,
) -> Result<RelationReport> {
    if let MatrixMethod::ExactInertia(shifts) = method {
        let samples: Vec<Real> = shifts.iter().cloned().map(Real::Exact).collect();
        let mut witness = None;
        for r in &samples {
            let nb = inertia::shifted_inertia(b, r, inertia::Method::Exact)?.n_plus;
            let na = inertia::shifted_inertia(a, r, inertia::Method::Exact)?.n_plus;
            let report = check_counts(&[r.to_f64()], relation.count_bounds(), |_| Ok((nb, na)))?;
            if !report.holds {
                witness = report.witness;
                break;
            }
        }
        return Ok(match witness {
            Some(w) => RelationReport::fails(w),
            None => RelationReport::holds(),
        });
    }

    let tau = tol.for_matrix(a).max(tol.for_matrix(b));
    let (f, g) = merge_close(&a.eigenvalues()?.into(), &b.eigenvalues()?.into(), tau);

    let spectral = || relation_spectral(&f, &g, relation).with_indeterminate(has_near_tie(&f, &g, relation, tau));
    let by_inertia = || -> Result<RelationReport> {
        let (fa, fb) = (a.embed_float(), b.embed_float());
        let mut ambiguous = false;
        let report = check_counts(&sample_points(&f, &g), relation.count_bounds(), |r| {
            let shift = Real::Float(r);
            let cb = classify(fb.shift(&shift)?.eigenvalues()?.values(), tau);
            let ca = classify(fa.shift(&shift)?.eigenvalues()?.values(), tau);
            ambiguous |= ca.ambiguous || cb.ambiguous;
            Ok((cb.inertia.n_plus, ca.inertia.n_plus))
        })?;
        Ok(report.with_indeterminate(ambiguous))
    };

    match method {
        MatrixMethod::Spectral => Ok(spectral()),
        MatrixMethod::Inertia => by_inertia(),
        MatrixMethod::Both => {
            let s = spectral();
            let i = by_inertia()?;
            if s.holds == i.holds {
                Ok(s.with_indeterminate(i.indeterminate))
            } else if s.indeterminate || i.indeterminate {
                Ok(s.with_indeterminate(true))
            } else {
                Err(Error::MethodDisagreement { spectral: Box::new(s), inertia: Box::new(i) })
            }
        }
        MatrixMethod::ExactInertia(_) => unreachable!(),
    }
}

/// `λ_{i+m}(B) ≤ λ_i(A)` for all `i`.
pub fn matrix_shift_dominates(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    m: i64,
    method: &MatrixMethod,
    tol: Tolerance,
) -> Result<RelationReport> {
    matrix_relation(a, b, Relation::ShiftDominates(m), method, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;
    use num_complex::Complex64;

    fn p(roots: &[f64]) -> RealRootedPoly {
        RealRootedPoly::from_descending(roots.to_vec()).unwrap()
    }

    #[test]
    fn extended_roots() {
        let f = p(&[3.0, 1.0]);
        assert_eq!(f.extended_root(0), f64::INFINITY);
        assert_eq!(f.extended_root(-4), f64::INFINITY);
        assert_eq!(f.extended_root(2), 1.0);
        assert_eq!(f.extended_root(5), f64::NEG_INFINITY);
    }

    #[test]
    fn nu_counts_strictly() {
        let f = p(&[2.0, 1.0, 1.0, -1.0]);
        assert_eq!(f.nu(0.0), 3);
        assert_eq!(f.nu(1.0), 1);
        assert_eq!(p(&[]).nu(7.0), 0);
    }

    #[test]
    fn descending_is_validated() {
        assert!(RealRootedPoly::from_descending(vec![1.0, 2.0]).is_err());
        assert!(RealRootedPoly::from_descending(vec![f64::NAN]).is_err());
        assert_eq!(RealRootedPoly::from_roots(vec![1.0, 3.0, 2.0]).roots(), &[3.0, 2.0, 1.0]);
    }

    #[test]
    fn shift_dominance_by_index() {
        let (f, g) = (p(&[2.0, 0.0]), p(&[3.0, 1.0]));
        assert!(shift_dominates_spectral(&f, &g, 1).holds);
        let fail = shift_dominates_spectral(&f, &g, 0);
        assert!(!fail.holds);
        assert!(matches!(fail.witness, Some(Witness::Index { i: 1, lhs, rhs, .. }) if lhs == 3.0 && rhs == 2.0));
        assert!(shift_dominates_spectral(&f, &f, 0).holds);
    }

    #[test]
    fn shift_dominance_by_counting() {
        let (f, g) = (p(&[2.0, 0.0]), p(&[3.0, 1.0]));
        assert_eq!(sample_points(&f, &g), vec![3.0, 2.0, 1.0, 0.0, -1.0]);
        assert!(shift_dominates_nu(&f, &g, 1).holds);
        let fail = shift_dominates_nu(&f, &g, 0);
        assert_eq!(
            fail.witness,
            Some(Witness::Shift { r: 2.0, count_g: 1, count_f: 0, difference: 1 })
        );
        assert!(shift_dominates_nu(&f, &f, 0).holds);
    }

    #[test]
    fn negative_shift_on_empty_polynomials() {
        let e = p(&[]);
        assert!(!shift_dominates_spectral(&e, &e, -1).holds);
        assert!(!shift_dominates_nu(&e, &e, -1).holds);
        assert!(shift_dominates_spectral(&e, &e, 0).holds);
    }

    #[test]
    fn interlacing_examples() {
        assert!(interlaces(&p(&[0.0]), &p(&[2.0, 0.0])).holds);
        assert!(interlaces(&p(&[2.0, 0.0]), &p(&[2.0, 0.0])).holds);
        let fail = interlaces(&p(&[3.0, 0.0]), &p(&[2.0, 0.0]));
        assert!(matches!(fail.witness, Some(Witness::Index { i: 1, .. })));
        assert!(matches!(
            interlaces(&p(&[1.0, 0.0]), &p(&[1.0])).witness,
            Some(Witness::Degree { deg_f: 2, deg_g: 1 })
        ));
        for (f, g) in [(p(&[0.0]), p(&[2.0, 0.0])), (p(&[3.0, 0.0]), p(&[2.0, 0.0]))] {
            assert_eq!(interlaces(&f, &g).holds, interlaces_by_counting(&f, &g).holds);
        }
    }

    #[test]
    fn compatibility_examples() {
        assert!(compatible(&p(&[0.0, 0.0]), &p(&[2.0, 0.0])).holds);
        assert!(compatible(&p(&[2.0, 0.0]), &p(&[0.0, 0.0])).holds);
        let f = p(&[4.0, 1.0, -2.0]);
        assert!(compatible(&f, &f).holds);
        let fail = compatible(&p(&[5.0, 4.0]), &p(&[1.0, 0.0]));
        assert!(matches!(fail.witness, Some(Witness::Index { i: 2, lhs, rhs, .. }) if lhs == 4.0 && rhs == 1.0));
        assert!(!compatible_by_counting(&p(&[5.0, 4.0]), &p(&[1.0, 0.0])).holds);
        assert!(!compatible(&p(&[1.0, 1.0, 1.0]), &p(&[1.0])).holds);
    }

    #[test]
    fn merging_snaps_clusters() {
        let (f, g) = merge_close(&p(&[1.0 + 1e-13, 0.0]), &p(&[1.0, -1e-14]), 1e-9);
        assert_eq!(f.roots(), &[1.0 + 1e-13, 0.0]);
        assert_eq!(g.roots(), &[1.0 + 1e-13, 0.0]);
        let (f, _) = merge_close(&p(&[2.0, 1.0]), &p(&[]), 1e-9);
        assert_eq!(f.roots(), &[2.0, 1.0]);
    }

    #[test]
    fn matrix_dominance_by_both_methods() {
        let a = HermitianMatrix::from_real_diagonal(&[2.0, 0.0]);
        let b = HermitianMatrix::from_real_diagonal(&[3.0, 1.0]);
        let tol = Tolerance::default();
        for method in [MatrixMethod::Spectral, MatrixMethod::Inertia, MatrixMethod::Both] {
            assert!(matrix_shift_dominates(&a, &b, 1, &method, tol).unwrap().holds);
            assert!(!matrix_shift_dominates(&a, &b, 0, &method, tol).unwrap().holds);
            assert!(matrix_shift_dominates(&a, &a, 0, &method, tol).unwrap().holds);
        }
    }

    #[test]
    fn rank_one_update_interlaces() {
        let a = HermitianMatrix::from_fn_complex(3, |i, j| Complex64::new((i + j) as f64 - 1.0, (i as f64) - (j as f64)));
        let alpha = vec![
            crate::scalar::Scalar::complex(1.0, 0.5),
            crate::scalar::Scalar::real(-1.0),
            crate::scalar::Scalar::complex(0.0, 2.0),
        ];
        let b = a.add(&HermitianMatrix::outer(&alpha).unwrap()).unwrap();
        let tol = Tolerance::default();
        let report = matrix_relation(&a, &b, Relation::Interlaces, &MatrixMethod::Both, tol).unwrap();
        assert!(report.holds);
        // B ⪯ A fails
        assert!(!matrix_relation(&b, &a, Relation::Interlaces, &MatrixMethod::Both, tol).unwrap().holds);
        // λ_{i+1}(A) ≤ λ_i(B) i.e. B dominates A with shift one
        assert!(matrix_shift_dominates(&b, &a, 1, &MatrixMethod::Both, tol).unwrap().holds);
    }

    #[test]
    fn exact_shift_list() {
        use crate::scalar::{rational, QuadField};
        let f = QuadField::MinusOne;
        let a = HermitianMatrix::from_rational_diagonal(&[rational(2, 1), rational(0, 1)], f);
        let b = HermitianMatrix::from_rational_diagonal(&[rational(3, 1), rational(1, 1)], f);
        let shifts = vec![rational(3, 1), rational(2, 1), rational(1, 1), rational(0, 1), rational(-1, 1)];
        let method = MatrixMethod::ExactInertia(shifts);
        assert!(matrix_shift_dominates(&a, &b, 1, &method, Tolerance::default()).unwrap().holds);
        let fail = matrix_shift_dominates(&a, &b, 0, &method, Tolerance::default()).unwrap();
        assert!(matches!(fail.witness, Some(Witness::Shift { r, .. }) if r == 2.0));
        let float = HermitianMatrix::identity(2, Field::Complex);
        assert!(matrix_shift_dominates(&float, &b, 0, &method, Tolerance::default()).is_err());
    }
}
