//! `V(x)` across the box for the base parameters (-4, 5, 2, 3) and a few
//! variations, in units of `4/L^2`.

use tra_box::model::{potential_x, uniform_grid, PotentialParams};

fn main() -> tra_box::Result<()> {
    let sets = [(-4.0, 5.0, 2.0, 3.0), (-4.0, 5.0, 0.0, 3.0), (-4.0, -5.0, 2.0, 3.0), (4.0, 5.0, 2.0, 0.0)];
    let xs = uniform_grid(2.0, 21)?;
    print!("{:>6}", "x");
    for s in &sets {
        print!("{:>22}", format!("{s:?}"));
    }
    println!();
    for &x in &xs {
        print!("{x:>6.2}");
        for &(v0, v1, vl, vr) in &sets {
            let p = PotentialParams::paper_units(v0, v1, vl, vr, 2.0)?;
            let v = potential_x(&p, x)? / p.energy_unit();
            print!("{v:>22.6}");
        }
        println!();
    }
    Ok(())
}
