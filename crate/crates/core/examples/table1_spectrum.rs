//! Lowest ten levels of the (V0, V1, VL, VR) = (-7, -5, 1/4, 1/2) box for
//! several basis sizes.

use tra_box::eigen::convergence_study;
use tra_box::model::{to_basis_spec, PotentialParams};

fn main() -> tra_box::Result<()> {
    let params = PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?;
    let spec = to_basis_spec(&params)?;
    println!("mu = {:.6}, nu = {:.6}", spec.mu, spec.nu);

    let sizes = [15, 20, 30, 100];
    let table = convergence_study(&spec, &sizes, 10)?;
    print!("{:>3}", "m");
    for n in sizes {
        print!("{:>18}", format!("N = {n}"));
    }
    println!();
    for (m, row) in table.eps.iter().enumerate() {
        print!("{m:>3}");
        for e in row {
            print!("{e:>18.10}");
        }
        println!("   stable digits {:?}", table.stable_digits[m]);
    }
    Ok(())
}
