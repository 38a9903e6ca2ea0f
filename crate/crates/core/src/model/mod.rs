//! The algebra data model and the exterior-algebra substrate.
//!
//! The geometric input is a pair of dimensions `(n, m)` and an array of
//! structure constants over ℚ(i); everything else (bases, wedge products,
//! contractions, type decompositions) is derived combinatorially from a
//! single ordering convention documented in [`exterior`].

mod algebra;
mod examples;
mod exterior;
mod frame;

pub use algebra::{AlgebraSpec, CenterWarning, ValidationReport};
pub use examples::{builtin_example, builtin_frame, example_catalog, ExampleChoice, ExampleInfo};
pub use exterior::{basis, contract, Element, GradedBasis, Monomial, TypeIndex};
pub use frame::{complexify, RealFrameSpec};

use thiserror::Error;

/// Errors from the data-model layer.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("structure constant index out of range: E^{l}_{{{k},{j}}} with n = {n}, m = {m}")]
    ConstantOutOfRange {
        l: usize,
        k: usize,
        j: usize,
        n: usize,
        m: usize,
    },
    #[error("malformed real frame: {0}")]
    BadFrame(String),
    #[error("bracket of {a} and {b} lands outside the declared center span")]
    BracketOutsideCenter { a: String, b: String },
    #[error("invalid example parameters: {0}")]
    BadExampleParams(String),
    #[error("element is not of the expected grade: {0}")]
    BadGrade(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
}
