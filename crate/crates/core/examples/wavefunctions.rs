//! Reconstructs the lowest bound states on a grid, counts their nodes and
//! writes `wavefunctions.csv` (x followed by one column per level) to the
//! current directory.

use std::fmt::Write as _;

use tra_box::model::{to_basis_spec, uniform_grid, PotentialParams};
use tra_box::wavefunction::{count_nodes, reconstruct_level, Method};

fn main() -> tra_box::Result<()> {
    let spec = to_basis_spec(&PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?)?;
    let xs = uniform_grid(spec.width, 401)?;
    let levels: Vec<_> = (0..6)
        .map(|m| reconstruct_level(&spec, m, 30, &xs, Method::Eigenvector))
        .collect::<tra_box::Result<_>>()?;

    for w in &levels {
        println!("level {}: eps = {:>14.10}, nodes = {}", w.level.unwrap(), w.eps, count_nodes(w)?);
    }

    // the recursion-sum route agrees while N is small
    let a = reconstruct_level(&spec, 0, 10, &xs, Method::Recursion)?;
    let b = reconstruct_level(&spec, 0, 10, &xs, Method::Eigenvector)?;
    let (_, rel) = tra_box::wavefunction::scale_match(&a.psi, &b.psi);
    println!("ground state, N = 10: recursion vs eigenvector relative L2 difference {rel:.1e}");

    let mut csv = String::from("x");
    for m in 0..levels.len() {
        write!(csv, ",psi{m}").unwrap();
    }
    csv.push('\n');
    for (i, x) in xs.iter().enumerate() {
        write!(csv, "{x:.6}").unwrap();
        for w in &levels {
            write!(csv, ",{:.9e}", w.psi[i]).unwrap();
        }
        csv.push('\n');
    }
    std::fs::write("wavefunctions.csv", csv)?;
    println!("wrote wavefunctions.csv");
    Ok(())
}
