//! The expansion coefficients `P_n(ε)` from the three-term recursion,
//! compared with the generalized eigenvector at an eigenvalue. Plain `f64`
//! evaluation loses the decaying tail; double-double keeps it.

use tra_box::eigen::solve_spectrum;
use tra_box::model::{to_basis_spec, PotentialParams};
use tra_box::wavefunction::{recursion_coeffs, recursion_coeffs_extended};

fn main() -> tra_box::Result<()> {
    let spec = to_basis_spec(&PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?)?;
    let n = 30;
    let sol = solve_spectrum(&spec, n)?;
    let m = 2;
    let plain = recursion_coeffs(&spec, sol.eps[m], n)?;
    let extended = recursion_coeffs_extended(&spec, sol.extended_eigenvalue(m)?, n)?;
    let f = &sol.vectors[m];

    println!("level {m}, eps = {:.12}", sol.eps[m]);
    println!("{:>3} {:>16} {:>16} {:>16}", "n", "f_n/f_0", "P_n (f64)", "P_n (dd)");
    for k in 0..n {
        println!("{k:>3} {:>16.8e} {:>16.8e} {:>16.8e}", f[k] / f[0], plain.values[k], extended.values[k]);
    }
    Ok(())
}
