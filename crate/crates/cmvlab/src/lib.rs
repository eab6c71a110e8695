//! CMV biorthogonal Laurent polynomial systems.
//!
//! Builds biorthogonal Laurent polynomial families from quasidefinite
//! sesquilinear forms through the pivot-free Gauss-Borel (LDU) factorization
//! of CMV-ordered Gram matrices, and implements Christoffel and Geronimus
//! spectral transformations two independent ways: direct Gram perturbation
//! plus refactorization, and quasideterminant closed formulas. The two routes
//! cross-validate each other; the `transforms` module carries the harness.

pub mod cmv;
pub mod error;
pub mod laurent;
pub mod mat;
pub mod scalar;

pub use error::{Error, Result};
