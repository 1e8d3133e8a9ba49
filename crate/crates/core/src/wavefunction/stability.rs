use serde::{Deserialize, Serialize};

use super::basis::basis_table;
use super::recursion::recursion_coeffs;
use crate::model::BasisSpec;
use crate::{Error, Result};

/// Thresholds for the truncation-stability scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct StabilityConfig {
    pub stable_tol: f64,
    pub unstable_tol: f64,
    pub n_max: usize,
}

impl Default for StabilityConfig {
    fn default() -> Self {
        Self { stable_tol: 1e-3, unstable_tol: 1e-2, n_max: 40 }
    }
}

impl StabilityConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 4 {
            return Err(Error::Config(format!("stability n_max must be >= 4, got {}", self.n_max)));
        }
        if !(self.stable_tol > 0.0 && self.stable_tol < self.unstable_tol && self.unstable_tol.is_finite()) {
            return Err(Error::Config("need 0 < stable_tol < unstable_tol".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum StabilityOutcome {
    /// First truncation after the stable window whose metric exceeds the
    /// unstable threshold.
    Critical(usize),
    /// A stable window exists but nothing broke by `n_max`.
    NotReached(usize),
    /// The metric never stayed below the stable threshold.
    NoStableWindow,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub eps: f64,
    /// `(N, metric(N))` for `N = 1..=n_max`.
    pub history: Vec<(usize, f64)>,
    /// Inclusive `N` range of the longest run below `stable_tol`.
    pub stable_window: Option<(usize, usize)>,
    pub outcome: StabilityOutcome,
}

impl StabilityReport {
    /// `N_c`, or `n_max` when instability was not reached.
    pub fn critical(&self) -> Option<usize> {
        match self.outcome {
            StabilityOutcome::Critical(n) | StabilityOutcome::NotReached(n) => Some(n),
            StabilityOutcome::NoStableWindow => None,
        }
    }

    pub fn unstable(&self) -> bool {
        !matches!(self.outcome, StabilityOutcome::NotReached(_))
    }
}

/// Scan `metric(N) = ‖c ψ_N - ψ_{N+1}‖₂ / ‖ψ_{N+1}‖₂` for the recursion
/// reconstruction at `eps_m`, with `c` the least-squares scale.
pub fn detect_stability(spec: &BasisSpec, eps_m: f64, cfg: &StabilityConfig, xs: &[f64]) -> Result<StabilityReport> {
    cfg.validate()?;
    let n_max = cfg.n_max;
    let coeffs = recursion_coeffs(spec, eps_m, n_max + 1)?.values;
    let table = basis_table(spec, n_max + 1, xs)?;

    let mut psi: Vec<f64> = table.iter().map(|row| coeffs[0] * row[0]).collect();
    let mut history = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let next: Vec<f64> = psi.iter().zip(&table).map(|(p, row)| p + coeffs[n] * row[n]).collect();
        let (_, rel) = super::reconstruct::scale_match(&psi, &next);
        history.push((n, if rel.is_finite() { rel } else { f64::INFINITY }));
        psi = next;
    }

    let stable_window = longest_run(&history, cfg.stable_tol);
    let outcome = match stable_window {
        None => StabilityOutcome::NoStableWindow,
        Some((_, end)) => history
            .iter()
            .find(|&&(n, m)| n > end && !(m <= cfg.unstable_tol))
            .map(|&(n, _)| StabilityOutcome::Critical(n))
            .unwrap_or(StabilityOutcome::NotReached(n_max)),
    };
    Ok(StabilityReport { eps: eps_m, history, stable_window, outcome })
}

fn longest_run(history: &[(usize, f64)], tol: f64) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    let mut start = None;
    for &(n, m) in history {
        if m < tol {
            let s = *start.get_or_insert(n);
            let longer = best.map_or(true, |(a, b)| n - s > b - a);
            if longer {
                best = Some((s, n));
            }
        } else {
            start = None;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::solve_spectrum;
    use crate::model::{to_basis_spec, uniform_grid, PotentialParams};

    fn table1() -> BasisSpec {
        to_basis_spec(&PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0).unwrap()).unwrap()
    }

    #[test]
    fn ground_state_window_then_breakdown() {
        let s = table1();
        let xs = uniform_grid(s.width, 1001).unwrap();
        let eps = solve_spectrum(&s, 100).unwrap().eps[0];
        let r = detect_stability(&s, eps, &StabilityConfig::default(), &xs).unwrap();
        assert!(r.stable_window.is_some());
        let nc = r.critical().unwrap();
        assert!((12..=16).contains(&nc), "N_c = {nc}, history {:?}", r.history);
    }

    #[test]
    fn midpoint_energy_never_settles() {
        let s = table1();
        let xs = uniform_grid(s.width, 1001).unwrap();
        let e = solve_spectrum(&s, 100).unwrap().eps;
        let r = detect_stability(&s, 0.5 * (e[0] + e[1]), &StabilityConfig::default(), &xs).unwrap();
        assert_eq!(r.outcome, StabilityOutcome::NoStableWindow);
    }

    #[test]
    fn runs() {
        let h = [(1, 0.5), (2, 1e-4), (3, 1e-4), (4, 0.5), (5, 1e-4), (6, 1e-5), (7, 1e-5)];
        assert_eq!(longest_run(&h, 1e-3), Some((5, 7)));
        assert_eq!(longest_run(&h[..1], 1e-3), None);
    }

    #[test]
    fn config_checks() {
        let s = table1();
        let bad = StabilityConfig { n_max: 3, ..Default::default() };
        assert!(detect_stability(&s, 1.0, &bad, &[0.5]).unwrap_err().is_config());
        let inverted = StabilityConfig { stable_tol: 0.1, unstable_tol: 0.01, n_max: 10 };
        assert!(inverted.validate().is_err());
    }
}
