//! Exact-arithmetic engine for parabolic geometry.
//!
//! Everything here is computed over the rationals: graded matrix realizations
//! of the classical simple Lie algebras, Lie algebra homology of the nilpotent
//! radical with adjoint coefficients, the resulting adjoint BGG diagrams, and
//! a polynomial big-cell model on which the BGG operators are realized and the
//! deformation identities can be checked coefficient by coefficient.
//!
//! Module map:
//!
//! - [`linalg`]  — rational matrices, kernels, ranks, solves, quotients
//! - [`roots`]   — root systems, Weyl groups, minimal coset representatives
//! - [`algebra`] — graded matrix realizations and the structure catalog
//! - [`homology`] — chain spaces, the codifferential, harmonic decomposition
//! - [`bgg`]     — diagram assembly, grid labels, deformation rows, DOT/JSON
//! - [`flat`]    — polynomial Cartan models, splitting and BGG operators,
//!   curvature, deformation identities, principal symbols
//! - [`verify`]  — seeded property suites shared by the CLI and the test gate

pub mod algebra;
pub mod bgg;
pub mod flat;
pub mod homology;
pub mod linalg;
pub mod roots;
pub mod verify;



pub use linalg::{QMatrix, Rational};
pub use roots::{RootSystem, Series, Weight, WeylElement};
