//! Finite-difference reference solver for `-ψ''/2 + V ψ = E ψ` on `(0, L)`.
//!
//! A 3-point stencil on `x_j = j L/(M+1)`, `j = 1..M`, with Dirichlet ends.
//! Shares nothing with the basis machinery beyond the potential itself.

use serde::{Deserialize, Serialize};

use crate::eigen::lowest_eigenvalues;
use crate::model::{potential_x, PotentialParams};
use crate::operator::TridiagonalSymmetric;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct FdConfig {
    /// Interior grid points.
    pub m: usize,
    pub levels: usize,
    /// Combine `M` and `2M` as `(4 e_2M - e_M)/3`.
    pub richardson: bool,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self { m: 16000, levels: 10, richardson: true }
    }
}

impl FdConfig {
    pub fn validate(&self) -> Result<()> {
        if self.m < 100 {
            return Err(Error::Config(format!("FD grid needs M >= 100, got {}", self.m)));
        }
        if self.levels == 0 || self.levels > 10 {
            return Err(Error::Config(format!("FD levels must be in 1..=10, got {}", self.levels)));
        }
        Ok(())
    }
}

/// FD matrix in absolute units for `m` interior points.
pub fn fd_matrix(p: &PotentialParams, m: usize) -> Result<TridiagonalSymmetric> {
    p.validate()?;
    let h = p.width / (m as f64 + 1.0);
    let kinetic = 1.0 / (h * h);
    let diag = (1..=m)
        .map(|j| potential_x(p, j as f64 * h).map(|v| kinetic + v))
        .collect::<Result<Vec<_>>>()?;
    TridiagonalSymmetric::new(diag, vec![-0.5 * kinetic; m - 1])
}

fn fd_levels(p: &PotentialParams, m: usize, levels: usize) -> Result<Vec<f64>> {
    let t = fd_matrix(p, m)?;
    let unit = 4.0 / (p.width * p.width);
    Ok(lowest_eigenvalues(&t, levels)?.into_iter().map(|e| e / unit).collect())
}

/// Lowest `cfg.levels` eigenvalues in units of `4/L^2`.
pub fn fd_spectrum(p: &PotentialParams, cfg: &FdConfig) -> Result<Vec<f64>> {
    cfg.validate()?;
    if !cfg.richardson {
        return fd_levels(p, cfg.m, cfg.levels);
    }
    let (coarse, fine) = std::thread::scope(|s| {
        let c = s.spawn(|| fd_levels(p, cfg.m, cfg.levels));
        let f = fd_levels(p, 2 * cfg.m, cfg.levels);
        (c.join().expect("FD worker panicked"), f)
    });
    let (coarse, fine) = (coarse?, fine?);
    Ok(coarse.iter().zip(&fine).map(|(c, f)| (4.0 * f - c) / 3.0).collect())
}
