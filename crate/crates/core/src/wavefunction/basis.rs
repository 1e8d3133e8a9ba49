use crate::model::BasisSpec;
use crate::special::{jacobi_eval_all, norm_const};
use crate::{Error, Result};

/// `(1 - y, 1 + y)` for `y = 2 (x/L)^2 - 1`, each formed without cancellation.
fn wall_factors(x: f64, width: f64) -> (f64, f64) {
    let t = x / width;
    (2.0 * (1.0 - t) * (1.0 + t), 2.0 * t * t)
}

fn check_x(x: f64, width: f64) -> Result<()> {
    if !(0.0..=width).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, {width}]")));
    }
    Ok(())
}

/// `φ_n(x) = A_n (1-y)^alpha (1+y)^beta P_n^{(mu,nu)}(y)`, `y = 2 (x/L)^2 - 1`.
pub fn basis_eval(spec: &BasisSpec, n: usize, x: f64) -> Result<f64> {
    Ok(basis_values(spec, n + 1, x)?[n])
}

/// `φ_0(x) .. φ_{count-1}(x)`.
pub fn basis_values(spec: &BasisSpec, count: usize, x: f64) -> Result<Vec<f64>> {
    let norms: Vec<f64> = (0..count).map(|n| norm_const(n, spec.jacobi())).collect();
    basis_values_with(spec, &norms, x)
}

fn basis_values_with(spec: &BasisSpec, norms: &[f64], x: f64) -> Result<Vec<f64>> {
    check_x(x, spec.width)?;
    let count = norms.len();
    if count == 0 {
        return Ok(Vec::new());
    }
    let (one_minus, one_plus) = wall_factors(x, spec.width);
    let envelope = one_minus.powf(spec.alpha) * one_plus.powf(spec.beta);
    if envelope == 0.0 {
        return Ok(vec![0.0; count]);
    }
    let y = 0.5 * (one_plus - one_minus);
    let poly = jacobi_eval_all(count - 1, spec.jacobi(), y.clamp(-1.0, 1.0));
    Ok(poly.iter().zip(norms).map(|(p, a)| a * envelope * p).collect())
}

/// `table[i][n] = φ_n(xs[i])`.
pub fn basis_table(spec: &BasisSpec, count: usize, xs: &[f64]) -> Result<Vec<Vec<f64>>> {
    let norms: Vec<f64> = (0..count).map(|n| norm_const(n, spec.jacobi())).collect();
    xs.iter().map(|&x| basis_values_with(spec, &norms, x)).collect()
}
