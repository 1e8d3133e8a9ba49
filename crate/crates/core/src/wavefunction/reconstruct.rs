use serde::Serialize;

use super::basis::basis_table;
use super::recursion::recursion_coeffs;
use crate::eigen::solve_spectrum;
use crate::model::BasisSpec;
use crate::{Error, Result};

/// Source of the expansion coefficients of a reconstruction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// `P_n(ε_m)` from the three-term recursion.
    Recursion,
    /// Components of the Ω-normalized generalized eigenvector.
    Eigenvector,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::Recursion => "recursion",
            Method::Eigenvector => "eigenvector",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recursion" => Ok(Method::Recursion),
            "eigenvector" => Ok(Method::Eigenvector),
            other => Err(Error::Config(format!("unknown method `{other}` (recursion|eigenvector)"))),
        }
    }
}

/// `ψ(x)` sampled on a grid, with where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionSamples {
    pub xs: Vec<f64>,
    pub psi: Vec<f64>,
    /// Level index, when known.
    pub level: Option<usize>,
    pub eps: f64,
    pub n_used: usize,
    pub method: Method,
}

impl WavefunctionSamples {
    /// Copy scaled to unit `(1/L) ∫ ψ² dx` by the trapezoid rule on the grid.
    pub fn normalized(&self, width: f64) -> Self {
        let mut acc = 0.0;
        for i in 1..self.xs.len() {
            let h = self.xs[i] - self.xs[i - 1];
            acc += 0.5 * h * (self.psi[i] * self.psi[i] + self.psi[i - 1] * self.psi[i - 1]);
        }
        let norm = (acc / width).sqrt();
        let mut out = self.clone();
        if norm > 0.0 && norm.is_finite() {
            out.psi.iter_mut().for_each(|v| *v /= norm);
        }
        out
    }
}

/// `Σ_{n<N} f_n φ_n(x)` on `xs`, un-normalized.
///
/// With [`Method::Eigenvector`] the size-`N` problem is solved and the level
/// whose eigenvalue lies closest to `eps_m` supplies the coefficients.
pub fn reconstruct(spec: &BasisSpec, eps_m: f64, n: usize, xs: &[f64], method: Method) -> Result<WavefunctionSamples> {
    if n == 0 {
        return Err(Error::Domain("reconstruction needs N >= 1".into()));
    }
    let (coeffs, level, eps) = match method {
        Method::Recursion => (recursion_coeffs(spec, eps_m, n)?.values, None, eps_m),
        Method::Eigenvector => {
            let sol = solve_spectrum(spec, n)?;
            let level = nearest(&sol.eps, eps_m);
            (sol.vectors[level].clone(), Some(level), sol.eps[level])
        }
    };
    let psi = expand(spec, &coeffs, xs)?;
    Ok(WavefunctionSamples { xs: xs.to_vec(), psi, level, eps, n_used: n, method })
}

/// Level `m` of the size-`N` problem, reconstructed by either method at the
/// eigenvalue of that same solve.
pub fn reconstruct_level(spec: &BasisSpec, m: usize, n: usize, xs: &[f64], method: Method) -> Result<WavefunctionSamples> {
    let sol = solve_spectrum(spec, n)?;
    let eps = *sol
        .eps
        .get(m)
        .ok_or_else(|| Error::Domain(format!("level {m} not available with N = {n}")))?;
    let coeffs = match method {
        Method::Recursion => recursion_coeffs(spec, eps, n)?.values,
        Method::Eigenvector => sol.vectors[m].clone(),
    };
    let psi = expand(spec, &coeffs, xs)?;
    Ok(WavefunctionSamples { xs: xs.to_vec(), psi, level: Some(m), eps, n_used: n, method })
}

pub(crate) fn expand(spec: &BasisSpec, coeffs: &[f64], xs: &[f64]) -> Result<Vec<f64>> {
    let table = basis_table(spec, coeffs.len(), xs)?;
    Ok(table.iter().map(|row| row.iter().zip(coeffs).map(|(p, c)| p * c).sum()).collect())
}

fn nearest(values: &[f64], target: f64) -> usize {
    let mut best = 0;
    for (i, v) in values.iter().enumerate() {
        if (v - target).abs() < (values[best] - target).abs() {
            best = i;
        }
    }
    best
}

/// Least-squares `c` minimizing `‖c a - b‖₂`, and the relative residual
/// `‖c a - b‖₂ / ‖b‖₂`.
pub fn scale_match(a: &[f64], b: &[f64]) -> (f64, f64) {
    let ab: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let aa: f64 = a.iter().map(|x| x * x).sum();
    let bb: f64 = b.iter().map(|x| x * x).sum();
    let c = if aa > 0.0 { ab / aa } else { 0.0 };
    let res: f64 = a.iter().zip(b).map(|(x, y)| (c * x - y).powi(2)).sum();
    let rel = if bb > 0.0 { (res / bb).sqrt() } else { f64::INFINITY };
    (c, rel)
}
