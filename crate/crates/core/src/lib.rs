//! Bound-state spectrum and wavefunctions of the five-parameter potential box
//!
//! ```text
//! V(x) = 1/(1-(x/L)^2) * { V0 + VL/(x/L)^2 + VR/(1-(x/L)^2) + V1 [(x/L)^2 - 1/2] },   0 <= x <= L
//! ```
//!
//! solved in a Jacobi-polynomial basis in which the wave operator `H - E` is
//! tridiagonal and symmetric. The energy spectrum comes from the generalized
//! eigenproblem `H f = E Ω f`; wavefunctions come either from the eigenvectors
//! or from the three-term recursion obeyed by the expansion coefficients.
//!
//! Module map:
//!
//! - [`special`]: log-gamma, Jacobi polynomials, Gauss-Jacobi quadrature.
//! - [`model`]: physical parameters, unit conventions, the potential, the coordinate map.
//! - [`operator`]: closed-form tridiagonal matrices `H`, `Ω` and `J(ε)`.
//! - [`eigen`]: tridiagonal/dense symmetric eigensolvers and the generalized solve.
//! - [`wavefunction`]: recursion polynomials, basis functions, reconstruction, stability.
//! - [`oracle`]: independent finite-difference reference solver.
//! - [`cli`]: configuration, commands and CSV output behind the `solver` binary.

pub mod cli;
pub mod eigen;
mod error;
pub mod model;
pub mod operator;
pub mod oracle;
pub mod special;
pub mod wavefunction;

pub use error::{Error, Result};
pub use model::{BasisSpec, PotentialParams, UnitMode};
pub use operator::TridiagonalSymmetric;
