//! Exact arithmetic over the Gaussian rationals ℚ(i) and the sparse linear
//! algebra every other module rests on.
//!
//! Scalars carry arbitrary-precision rational real and imaginary parts and
//! are always stored in lowest terms with positive denominators. Matrices
//! and subspaces never store zero entries, and every elimination uses the
//! same deterministic pivot rule (first nonzero in column order), so equal
//! inputs produce bitwise-equal outputs everywhere.

mod scalar;
mod sparse;
mod subspace;

pub use scalar::{format_rational, parse_rational, GaussianRational};
pub use sparse::{SparseMatrix, SparseVector};
pub use subspace::{subquotient_dim, Subquotient, Subspace};

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    /// The claimed boundary space is not contained in the cycle space; the
    /// witness is a basis vector of the former outside the latter.
    #[error("subspace precondition violated: witness vector {witness} lies outside the ambient space")]
    NotASubspace { witness: String },
    #[error("cannot parse rational from {input:?}")]
    ParseRational { input: String },
    #[error("vector lies outside the subquotient's cycle space")]
    OutsideSubquotient,
}
