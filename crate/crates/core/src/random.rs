//! Seeded generators of Hermitian matrices, graphs and generalized
//! Laplacians. Every generator is a pure function of its seed.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{EdgeRecord, GraphSpec};
use crate::matrix::HermitianMatrix;
use crate::scalar::{rational, Field, QuadExt, QuadField, Rational, Scalar};

/// Resamples allowed when a spectral gap is requested.
pub const GAP_ATTEMPTS: usize = 100;

/// Upper bound on `|entry|` of floating random matrices.
pub const ENTRY_BOUND: f64 = 10.0;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Seed of trial `index` under `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(splitmix64(master) ^ index)
}

/// A multiple of `1/2` in `[−bound, bound]`.
fn half_step(rng: &mut impl Rng, bound: i64) -> Rational {
    rational(rng.random_range(-2 * bound..=2 * bound), 2)
}

fn float_entry(rng: &mut impl Rng) -> Complex64 {
    // |re|, |im| ≤ 7 keeps |z| < 10
    Complex64::new(rng.random_range(-7.0..=7.0), rng.random_range(-7.0..=7.0))
}

fn quad_entry(rng: &mut impl Rng, field: QuadField) -> QuadExt {
    if rng.random_bool(0.3) {
        return QuadExt::zero(field);
    }
    QuadExt::new(half_step(rng, 3), half_step(rng, 3), field)
}

fn sample_hermitian(n: usize, field: Field, rng: &mut impl Rng) -> HermitianMatrix {
    match field {
        Field::Complex => {
            let entries: Vec<Complex64> = (0..n * n).map(|_| float_entry(rng)).collect();
            let diag: Vec<f64> = (0..n).map(|_| rng.random_range(-ENTRY_BOUND..=ENTRY_BOUND)).collect();
            HermitianMatrix::from_fn_complex(n, |i, j| if i == j { Complex64::new(diag[i], 0.0) } else { entries[i * n + j] })
        }
        Field::Quad(q) => HermitianMatrix::from_fn_exact(n, q, |i, j| {
            if i == j {
                QuadExt::from_rational(half_step(rng, 4), q)
            } else {
                quad_entry(rng, q)
            }
        })
        .expect("diagonal is rational"),
    }
}

fn min_gap(values: &[f64]) -> f64 {
    values.windows(2).map(|w| w[0] - w[1]).fold(f64::INFINITY, f64::min)
}

/// Random Hermitian matrix. With `spec_gap`, resamples until consecutive
/// eigenvalues differ by at least the gap.
pub fn random_hermitian(n: usize, field: Field, seed: u64, spec_gap: Option<f64>) -> Result<HermitianMatrix> {
    let mut rng = rng_from_seed(seed);
    random_hermitian_with(n, field, &mut rng, spec_gap)
}

pub fn random_hermitian_with(
    n: usize,
    field: Field,
    rng: &mut impl Rng,
    spec_gap: Option<f64>,
) -> Result<HermitianMatrix> {
    let Some(gap) = spec_gap else {
        return Ok(sample_hermitian(n, field, rng));
    };
    for _ in 0..GAP_ATTEMPTS {
        let a = sample_hermitian(n, field, rng);
        if min_gap(a.eigenvalues()?.values()) >= gap {
            return Ok(a);
        }
    }
    Err(Error::GapUnreachable { gap, attempts: GAP_ATTEMPTS })
}

/// Random column vector with entries of the same size as matrix entries.
pub fn random_vector(n: usize, field: Field, rng: &mut impl Rng) -> Vec<Scalar> {
    (0..n)
        .map(|_| match field {
            Field::Complex => Scalar::Float(float_entry(rng) / 3.0),
            Field::Quad(q) => Scalar::Quad(quad_entry(rng, q)),
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphFlavor {
    Simple,
    Signed,
    Weighted,
    Digraph,
}

impl GraphFlavor {
    pub const ALL: [GraphFlavor; 4] = [GraphFlavor::Simple, GraphFlavor::Signed, GraphFlavor::Weighted, GraphFlavor::Digraph];
}

impl fmt::Display for GraphFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFlavor::Simple => "simple",
            GraphFlavor::Signed => "signed",
            GraphFlavor::Weighted => "weighted",
            GraphFlavor::Digraph => "digraph",
        })
    }
}

impl FromStr for GraphFlavor {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        GraphFlavor::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| format!("unknown graph flavor `{s}`"))
    }
}

fn random_weight(rng: &mut impl Rng) -> Rational {
    rational(rng.random_range(1..=4), 2)
}

/// Random graph on `n` vertices; each unordered pair is present with
/// probability `density`. Weighted graphs draw weights from
/// `{1/2, 1, 3/2, 2}`; digraph pairs are an arc either way or a digon.
pub fn random_graph(n: usize, flavor: GraphFlavor, density: f64, seed: u64) -> GraphSpec {
    random_graph_with(n, flavor, density, &mut rng_from_seed(seed))
}

pub fn random_graph_with(n: usize, flavor: GraphFlavor, density: f64, rng: &mut impl Rng) -> GraphSpec {
    let density = density.clamp(0.0, 1.0);
    let mut records = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !rng.random_bool(density) {
                continue;
            }
            let record = match flavor {
                GraphFlavor::Simple => EdgeRecord::edge(u, v),
                GraphFlavor::Signed => EdgeRecord::edge(u, v).with_sign(if rng.random_bool(0.5) { 1 } else { -1 }),
                GraphFlavor::Weighted => EdgeRecord::edge(u, v).with_weight(random_weight(rng)),
                GraphFlavor::Digraph => match rng.random_range(0..3) {
                    0 => EdgeRecord::arc(u, v),
                    1 => EdgeRecord::arc(v, u),
                    _ => EdgeRecord::digon(u, v),
                },
            };
            records.push(record);
        }
    }
    GraphSpec::new(n, records).expect("generated records are valid")
}

/// Unit-modulus entries of ℚ(√−1) used off the diagonal.
fn random_unit(rng: &mut impl Rng) -> QuadExt {
    let (a, b, scale): (i64, i64, i64) = *[(1, 0, 1), (-1, 0, 1), (0, 1, 1), (0, -1, 1), (3, 4, 5), (-4, 3, 5), (3, -4, 5)]
        .choose(rng)
        .expect("nonempty");
    QuadExt::new(rational(a, scale), rational(b, scale), QuadField::MinusOne)
}

/// Random exact generalized Laplacian over ℚ(√−1): off-diagonal entries are
/// units times weights from `{1/2, 1, 3/2, 2}`, some vertices are isolated
/// (zero rows), and each diagonal entry exceeds its row's absolute sum by a
/// slack from `{0, 0, 1/2, 1}`.
pub fn random_generalized_laplacian(n: usize, seed: u64) -> HermitianMatrix {
    let mut rng = rng_from_seed(seed);
    let isolated: Vec<bool> = (0..n).map(|_| rng.random_bool(0.2)).collect();
    let density = rng.random_range(0.2..=0.9);
    let field = QuadField::MinusOne;
    let mut off = vec![QuadExt::zero(field); n * n];
    let mut row_sum = vec![Rational::from_integer(BigInt::from(0)); n];
    for i in 0..n {
        for j in i + 1..n {
            if isolated[i] || isolated[j] || !rng.random_bool(density) {
                continue;
            }
            let w = random_weight(&mut rng);
            off[i * n + j] = random_unit(&mut rng).scale(&w);
            off[j * n + i] = off[i * n + j].conj();
            row_sum[i] += &w;
            row_sum[j] += &w;
        }
    }
    let slack: Vec<Rational> = (0..n)
        .map(|i| {
            if isolated[i] {
                rational(0, 1)
            } else {
                rational(*[0, 0, 1, 2].choose(&mut rng).expect("nonempty"), 2)
            }
        })
        .collect();
    HermitianMatrix::from_fn_exact(n, field, |i, j| {
        if i == j {
            QuadExt::from_rational(&row_sum[i] + &slack[i], field)
        } else {
            off[i * n + j].clone()
        }
    })
    .expect("diagonal is rational")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::is_generalized_laplacian;

    #[test]
    fn deterministic_in_seed() {
        for field in [Field::Complex, Field::Quad(QuadField::MinusOne), Field::Quad(QuadField::MinusThree)] {
            let a = random_hermitian(4, field, 11, None).unwrap();
            assert_eq!(a, random_hermitian(4, field, 11, None).unwrap());
            assert_eq!(a.field(), field);
        }
        assert_eq!(
            random_graph(6, GraphFlavor::Digraph, 0.5, 3),
            random_graph(6, GraphFlavor::Digraph, 0.5, 3)
        );
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_ne!(derive_seed(1, 0), derive_seed(2, 0));
    }

    #[test]
    fn entries_are_bounded() {
        for seed in 0..20 {
            let a = random_hermitian(5, Field::Complex, seed, None).unwrap();
            let b = random_hermitian(5, Field::Quad(QuadField::MinusThree), seed, None).unwrap();
            for i in 0..5 {
                for j in 0..5 {
                    assert!(a.get_complex(i, j).norm() <= ENTRY_BOUND);
                    assert!(b.get_complex(i, j).norm() <= ENTRY_BOUND);
                }
            }
        }
    }

    #[test]
    fn gap_is_enforced() {
        let a = random_hermitian(6, Field::Complex, 5, Some(1e-3)).unwrap();
        assert!(min_gap(a.eigenvalues().unwrap().values()) >= 1e-3);
        assert!(matches!(
            random_hermitian(3, Field::Complex, 5, Some(1e6)),
            Err(Error::GapUnreachable { attempts: GAP_ATTEMPTS, .. })
        ));
        assert!(random_hermitian(1, Field::Complex, 5, Some(1e6)).is_ok());
    }

    #[test]
    fn graph_densities() {
        assert!(random_graph(5, GraphFlavor::Weighted, 0.0, 1).records().is_empty());
        assert_eq!(random_graph(3, GraphFlavor::Simple, 1.0, 1).records().len(), 3);
    }

    #[test]
    fn generated_laplacians_are_valid() {
        for seed in 0..50 {
            assert!(is_generalized_laplacian(&random_generalized_laplacian(7, seed)));
        }
    }

    #[test]
    fn units_have_modulus_one() {
        let mut rng = rng_from_seed(0);
        for _ in 0..100 {
            assert_eq!(random_unit(&mut rng).norm(), rational(1, 1));
        }
    }
}
