use crate::eigen::solve_symmetric_tridiagonal;
use crate::operator::TridiagonalSymmetric;
use crate::special::gamma::ln_gamma_positive;
use crate::special::JacobiParams;
use crate::{Error, Result};

/// Gauss rule for the weight `(1-y)^mu (1+y)^nu` on [-1, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    /// `∫ (1-y)^mu (1+y)^nu f(y) dy`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&y, &w)| w * f(y)).sum()
    }
}

/// `∫ (1-y)^mu (1+y)^nu dy = 2^(mu+nu+1) B(mu+1, nu+1)`.
pub fn weight_mass(p: JacobiParams) -> f64 {
    let (a, b) = (p.mu(), p.nu());
    ((a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma_positive(a + 1.0) + ln_gamma_positive(b + 1.0)
        - ln_gamma_positive(a + b + 2.0))
    .exp()
}

/// k-point Gauss-Jacobi rule by Golub-Welsch.
pub fn gauss_jacobi(k: usize, p: JacobiParams) -> Result<QuadratureRule> {
    if k == 0 {
        return Err(Error::Domain("quadrature order must be at least 1".into()));
    }
    let (a, b) = (p.mu(), p.nu());
    let ab = a + b;

    // Jacobi matrix of the orthonormal polynomials: alpha_j on the diagonal,
    // sqrt(beta_j) between rows j-1 and j.
    let alpha = |j: usize| -> f64 {
        if j == 0 {
            (b - a) / (ab + 2.0)
        } else {
            let s = 2.0 * j as f64 + ab;
            (b * b - a * a) / (s * (s + 2.0))
        }
    };
    let sqrt_beta = |j: usize| -> f64 {
        let jf = j as f64;
        let s = 2.0 * jf + ab;
        if j == 1 {
            // (ab + 1) cancels; keep it out of the formula
            (4.0 * (1.0 + a) * (1.0 + b) / ((ab + 2.0).powi(2) * (ab + 3.0))).sqrt()
        } else {
            (4.0 * jf * (jf + a) * (jf + b) * (jf + ab) / (s * s * (s + 1.0) * (s - 1.0))).sqrt()
        }
    };

    let diag: Vec<f64> = (0..k).map(alpha).collect();
    let offdiag: Vec<f64> = (1..k).map(sqrt_beta).collect();
    let jm = TridiagonalSymmetric::new(diag, offdiag)?;
    let eig = solve_symmetric_tridiagonal(&jm)?;

    let mass = weight_mass(p);
    let weights = (0..k)
        .map(|j| {
            let v0 = eig.vectors[j][0];
            mass * v0 * v0
        })
        .collect();
    Ok(QuadratureRule {
        nodes: eig.values,
        weights,
        order: k,
    })
}
