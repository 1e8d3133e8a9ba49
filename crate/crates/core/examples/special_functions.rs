//! The numerical building blocks: log-gamma, Jacobi polynomials, their
//! normalization and Gauss-Jacobi quadrature.

use tra_box::special::{gauss_jacobi, jacobi_eval, log_gamma, norm_const, JacobiParams};

fn main() -> tra_box::Result<()> {
    for z in [0.5, 1.0, 4.5, 30.0, 171.5] {
        println!("ln Γ({z}) = {:.15}", log_gamma(z)?);
    }

    let p = JacobiParams::new(5f64.sqrt(), 1.5)?;
    for n in [0, 1, 5, 20] {
        println!("P_{n}(0.3) = {:>22.15e}, A_{n} = {:.12}", jacobi_eval(n, p, 0.3), norm_const(n, p));
    }

    let rule = gauss_jacobi(8, p)?;
    println!("8-point rule for (1-y)^sqrt5 (1+y)^1.5:");
    for (y, w) in rule.nodes.iter().zip(&rule.weights) {
        println!("  {y:>20.15}  {w:>20.15e}");
    }
    let second_moment = rule.integrate(|y| y * y);
    println!("∫ y^2 w(y) dy = {second_moment:.15}");
    Ok(())
}
