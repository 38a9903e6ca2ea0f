//! Exact computation of holomorphic Poisson cohomology on 2-step nilmanifolds
//! with abelian complex structures.
//!
//! Everything is computed on the finite-dimensional invariant model: the Lie
//! algebra data is a pair of dimensions `(n, m)` together with structure
//! constants over the Gaussian rationals, and the bi-complex `B^{p,q}` is the
//! exterior algebra generated by the invariant `(1,0)`-vectors and
//! `(0,1)`-forms. All linear algebra is exact; there is no floating point in
//! this crate.
//!
//! The crate is organised in four layers:
//!
//! * [`exact`] — scalars in ℚ(i) and sparse linear algebra (rank, kernel,
//!   solve, canonical subquotients),
//! * [`model`] — the algebra data model, real-frame complexification and the
//!   exterior-algebra substrate (bases, wedge, contraction, types),
//! * [`calculus`] — the graded operators: the Dolbeault operator, adjoint
//!   actions of vectors and bivectors, and the total deformed differential,
//! * [`spectral`] — cohomology dimensions, spectral-sequence pages,
//!   degeneracy diagnosis and the exactness-equation solver.

pub mod calculus;
pub mod exact;
pub mod model;
pub mod spectral;

pub use calculus::{
    ad_bivector, ad_vector, d_form, dbar, is_holomorphic_poisson, is_schouten_central,
    total_differential, Bivector, BivectorCoeffs, CalculusError, FormGenerator, GradedOperator,
    PoissonCheck, TotalDifferential,
};
pub use exact::{
    subquotient_dim, ExactError, GaussianRational, SparseMatrix, SparseVector, Subquotient,
    Subspace,
};
pub use model::{
    basis, builtin_example, builtin_frame, complexify, example_catalog, AlgebraSpec, Element,
    ExampleChoice, ExampleInfo, GradedBasis, ModelError, Monomial, RealFrameSpec, TypeIndex,
    ValidationReport,
};
pub use spectral::{
    d2_zigzag, degeneracy_page, dolbeault_dims, drho_rank, exactness_solver, page,
    poisson_cohomology_dims, CohomologyTable, D2Class, DegeneracyChecks, DegeneracyReport,
    ExactnessSolution, Page, SpectralError, SpectralReport,
};
