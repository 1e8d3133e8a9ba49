//! Independent finite-difference spectrum, with and without two-grid
//! extrapolation, against the basis solution.

use tra_box::eigen::solve_spectrum;
use tra_box::model::{to_basis_spec, PotentialParams};
use tra_box::oracle::{fd_spectrum, FdConfig};

fn main() -> tra_box::Result<()> {
    let params = PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?;
    let tra = solve_spectrum(&to_basis_spec(&params)?, 100)?;
    for m in [1000, 4000, 16000] {
        for richardson in [false, true] {
            let fd = fd_spectrum(&params, &FdConfig { m, levels: 3, richardson })?;
            let devs: Vec<String> = fd
                .iter()
                .zip(&tra.eps)
                .map(|(a, b)| format!("{:.1e}", (a - b).abs() / b.abs()))
                .collect();
            println!("M = {m:>5}, richardson = {richardson:<5}: {fd:.10?}  rel dev {devs:?}");
        }
    }
    Ok(())
}
