//! Special functions backing the Jacobi basis: log-gamma, Jacobi polynomials
//! and their normalization, and Gauss-Jacobi quadrature.

mod gamma;
mod jacobi;
mod quadrature;

pub use gamma::{log_beta, log_gamma};
pub use jacobi::{jacobi_at_one, jacobi_eval, jacobi_eval_all, norm_const, JacobiParams};
pub use quadrature::{gauss_jacobi, weight_mass, QuadratureRule};
