#![allow(dead_code)]

use tra_box::model::{to_basis_spec, BasisSpec, PotentialParams};
use tra_box::special::{gauss_jacobi, jacobi_eval_all, norm_const};

pub fn table1_params() -> PotentialParams {
    PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0).unwrap()
}

pub fn table1() -> BasisSpec {
    to_basis_spec(&table1_params()).unwrap()
}

/// Published Table 1 columns for N = 15, 20, 30, 100 (rows are levels 0..9).
pub const TABLE1_SIZES: [usize; 4] = [15, 20, 30, 100];
pub const TABLE1: [[f64; 4]; 10] = [
    [-12.5236133022, -12.5236133022, -12.5236133022, -12.5236133022],
    [-2.2785915471, -2.2785915471, -2.2785915471, -2.2785915471],
    [5.0166151049, 5.0166151049, 5.0166151049, 5.0166151049],
    [14.7610027005, 14.7610027005, 14.7610027005, 14.7610027005],
    [27.1189258293, 27.1189258293, 27.1189258293, 27.1189258293],
    [42.0517498468, 42.0517498468, 42.0517498468, 42.0517498468],
    [59.5316472005, 59.5316471278, 59.5316471278, 59.5316471278],
    [79.5404579103, 79.5403247627, 79.5403247627, 79.5403247627],
    [102.0959989310, 102.0652500248, 102.0652500235, 102.0652500235],
    [128.2758241174, 127.0974514206, 127.0974494272, 127.0974494272],
];

/// `(L^2/4) J_{n,m}(ε)` by Gauss-Jacobi quadrature of
/// `-(A_n A_m / 2√2) ∫ (1-y)^mu (1+y)^nu F_m(y) P_n P_m dy`, with `F_m` the
/// full bracket, singular terms included.
pub fn wave_operator_by_quadrature(spec: &BasisSpec, eps: f64, size: usize) -> Vec<Vec<f64>> {
    let p = spec.jacobi();
    let rule = gauss_jacobi(size + 25, p).unwrap();
    let (mu, nu) = (spec.mu, spec.nu);
    let a: Vec<f64> = (0..size).map(|n| norm_const(n, p)).collect();
    let polys: Vec<Vec<f64>> = rule.nodes.iter().map(|&y| jacobi_eval_all(size - 1, p, y)).collect();
    let mut j = vec![vec![0.0; size]; size];
    for n in 0..size {
        for m in 0..size {
            let k = m as f64 + 0.5 * (mu + nu + 1.0);
            let mut acc = 0.0;
            for (i, &y) in rule.nodes.iter().enumerate() {
                let f = 0.5 * (mu * mu - 1.0 - 8.0 * spec.ur) / (1.0 - y)
                    + 0.5 * (nu * nu - 0.25 - 8.0 * spec.ul) / (1.0 + y)
                    + eps * (1.0 - y)
                    - spec.u1 * y
                    - k * k
                    + 1.0 / 16.0
                    - 2.0 * spec.u0;
                acc += rule.weights[i] * f * polys[i][n] * polys[i][m];
            }
            j[n][m] = -a[n] * a[m] / (2.0 * 2f64.sqrt()) * acc;
        }
    }
    j
}

/// `⟨φ_n|φ_m⟩ = (A_n A_m / 2√2) ∫ (1-y)^{mu+1} (1+y)^nu P_n P_m dy`.
pub fn overlap_by_quadrature(spec: &BasisSpec, size: usize) -> Vec<Vec<f64>> {
    let p = spec.jacobi();
    let rule = gauss_jacobi(size + 25, p).unwrap();
    let a: Vec<f64> = (0..size).map(|n| norm_const(n, p)).collect();
    let polys: Vec<Vec<f64>> = rule.nodes.iter().map(|&y| jacobi_eval_all(size - 1, p, y)).collect();
    let mut o = vec![vec![0.0; size]; size];
    for n in 0..size {
        for m in 0..size {
            let acc: f64 = rule
                .nodes
                .iter()
                .enumerate()
                .map(|(i, &y)| rule.weights[i] * (1.0 - y) * polys[i][n] * polys[i][m])
                .sum();
            o[n][m] = a[n] * a[m] / (2.0 * 2f64.sqrt()) * acc;
        }
    }
    o
}

pub fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Log-log slope of `|f|` over `t ∈ [lo, hi]` (log-spaced, 41 points).
pub fn power_law_slope(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let pts: Vec<(f64, f64)> = (0..=40)
        .map(|i| {
            let t = lo * (hi / lo).powf(i as f64 / 40.0);
            (t.ln(), f(t).abs().ln())
        })
        .collect();
    least_squares_slope(&pts)
}
