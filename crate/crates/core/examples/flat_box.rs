//! With every strength zero the box is the textbook infinite well:
//! `ε_n = (n+1)^2 π^2 / 8` in units of `4/L^2`.

use std::f64::consts::PI;

use tra_box::eigen::solve_spectrum;
use tra_box::model::{to_basis_spec, PotentialParams};

fn main() -> tra_box::Result<()> {
    let spec = to_basis_spec(&PotentialParams::paper_units(0.0, 0.0, 0.0, 0.0, 2.0)?)?;
    for n in [10, 20, 60] {
        let sol = solve_spectrum(&spec, n)?;
        println!("N = {n}");
        for (k, e) in sol.eps.iter().take(6).enumerate() {
            let exact = ((k + 1) as f64 * PI).powi(2) / 8.0;
            println!("  {k}  {e:>20.12}  {exact:>20.12}  rel {:.1e}", (e - exact).abs() / exact);
        }
    }
    Ok(())
}
