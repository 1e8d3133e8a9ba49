//! How far the recursion-sum reconstruction can be pushed before it turns
//! into growing oscillations, level by level, and what happens away from an
//! eigenvalue.

use tra_box::eigen::solve_spectrum;
use tra_box::model::{to_basis_spec, uniform_grid, PotentialParams};
use tra_box::wavefunction::{detect_stability, StabilityConfig, StabilityOutcome};

fn main() -> tra_box::Result<()> {
    let spec = to_basis_spec(&PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?)?;
    let grid = uniform_grid(spec.width, 1001)?;
    let eps = solve_spectrum(&spec, 100)?.eps;
    let cfg = StabilityConfig { n_max: 40, ..Default::default() };

    for m in 0..6 {
        let r = detect_stability(&spec, eps[m], &cfg, &grid)?;
        println!("level {m}: window {:?}, outcome {:?}", r.stable_window, r.outcome);
    }

    let mid = 0.5 * (eps[0] + eps[1]);
    let r = detect_stability(&spec, mid, &cfg, &grid)?;
    let smallest = r.history.iter().map(|h| h.1).fold(f64::INFINITY, f64::min);
    println!(
        "eps = {mid:.4} (between levels 0 and 1): {:?}, smallest metric {smallest:.2e}",
        r.outcome
    );
    assert_eq!(r.outcome, StabilityOutcome::NoStableWindow);

    println!("\nground-state history:");
    for (n, metric) in detect_stability(&spec, eps[0], &cfg, &grid)?.history.iter().take(24) {
        println!("  N = {n:>2}  {metric:.3e}");
    }
    Ok(())
}
