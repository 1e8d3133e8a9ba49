//! Rebuilds `(L^2/4) J(ε)` by Gauss-Jacobi quadrature of the full bracket
//! (singular `1/(1±y)` terms included) and compares it to the closed-form
//! tridiagonal matrix. Same for the overlap.

use tra_box::model::{to_basis_spec, PotentialParams};
use tra_box::operator::{build_overlap, build_wave_operator};
use tra_box::special::{gauss_jacobi, jacobi_eval_all, norm_const};

fn main() -> tra_box::Result<()> {
    let spec = to_basis_spec(&PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0)?)?;
    let size = 11;
    let p = spec.jacobi();
    let rule = gauss_jacobi(size + 25, p)?;
    let a: Vec<f64> = (0..size).map(|n| norm_const(n, p)).collect();
    let polys: Vec<Vec<f64>> = rule.nodes.iter().map(|&y| jacobi_eval_all(size - 1, p, y)).collect();
    let c = 1.0 / (2.0 * 2f64.sqrt());

    for eps in [0.0, 1.0, -3.0] {
        let closed = build_wave_operator(&spec, size, eps)?;
        let (mut band, mut off) = (0.0f64, 0.0f64);
        for n in 0..size {
            for m in 0..size {
                let k = m as f64 + 0.5 * (spec.mu + spec.nu + 1.0);
                let integral: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .zip(&polys)
                    .map(|((&y, w), pl)| {
                        let f = 0.5 * (spec.mu * spec.mu - 1.0 - 8.0 * spec.ur) / (1.0 - y)
                            + 0.5 * (spec.nu * spec.nu - 0.25 - 8.0 * spec.ul) / (1.0 + y)
                            + eps * (1.0 - y)
                            - spec.u1 * y
                            - k * k
                            + 1.0 / 16.0
                            - 2.0 * spec.u0;
                        w * f * pl[n] * pl[m]
                    })
                    .sum();
                let j = -a[n] * a[m] * c * integral;
                if n.abs_diff(m) >= 2 {
                    off = off.max(j.abs());
                } else {
                    band = band.max((j - closed.get(n, m)).abs());
                }
            }
        }
        println!("eps = {eps:>4}: band max |quad - closed| = {band:.2e}, off-band max |J| = {off:.2e}");
    }

    let omega = build_overlap(&spec, size)?;
    let mut worst = 0.0f64;
    for n in 0..size {
        for m in 0..size {
            let integral: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .zip(&polys)
                .map(|((&y, w), pl)| w * (1.0 - y) * pl[n] * pl[m])
                .sum();
            worst = worst.max((a[n] * a[m] * c * integral - omega.get(n, m)).abs());
        }
    }
    println!("overlap: max |quad - closed| = {worst:.2e}");
    Ok(())
}
