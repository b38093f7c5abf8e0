//! Eigenvalue inequalities for Hermitian matrices decided through the
//! positive inertia index, with graph Laplacian operators.

pub mod eigen;
pub mod format;
pub mod error;
pub mod graphs;
pub mod inertia;
pub mod interlace;
pub mod matrix;
pub mod pencil;
pub mod random;
pub mod scalar;
pub mod theorem;

pub use error::{Error, Result};
pub use inertia::{Inertia, Method, Tolerance};
pub use interlace::{RealRootedPoly, Relation, RelationReport, Witness};
pub use matrix::{HermitianMatrix, Spectrum};
pub use scalar::{Field, QuadExt, QuadField, Rational, Real, Scalar};
