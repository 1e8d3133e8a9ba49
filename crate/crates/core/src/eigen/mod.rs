//! Eigensolvers: symmetric tridiagonal (implicit QL and Sturm bisection),
//! dense symmetric (Householder + QL), and the symmetric-definite
//! generalized problem `h f = ε Ω f` with tridiagonal `h` and `Ω`.

mod convergence;
mod dense;
mod generalized;
mod tridiagonal;

pub use convergence::{agreeing_decimals, convergence_study, thread_cap, ConvergenceTable};
pub use dense::solve_dense_symmetric;
pub use generalized::{cholesky_tridiagonal, solve_generalized, solve_spectrum, GeneralizedEigen, SpectrumResult};
pub use tridiagonal::{
    eigenvalues_symmetric_tridiagonal, lowest_eigenvalues, solve_symmetric_tridiagonal, sturm_count, SymmetricEigen,
};
