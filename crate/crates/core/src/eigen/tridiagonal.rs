use crate::operator::TridiagonalSymmetric;
use crate::{Error, Result};

/// Eigenvalues ascending; `vectors[j]` is the unit eigenvector of `values[j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Full spectral decomposition of a symmetric tridiagonal matrix.
pub fn solve_symmetric_tridiagonal(t: &TridiagonalSymmetric) -> Result<SymmetricEigen> {
    let n = t.dim();
    let mut d = t.diag().to_vec();
    let mut e = t.offdiag().to_vec();
    e.push(0.0);
    let mut z = identity(n);
    ql_implicit(&mut d, &mut e, Some(&mut z))?;
    Ok(sorted(d, z))
}

/// Eigenvalues only.
pub fn eigenvalues_symmetric_tridiagonal(t: &TridiagonalSymmetric) -> Result<Vec<f64>> {
    let mut d = t.diag().to_vec();
    let mut e = t.offdiag().to_vec();
    e.push(0.0);
    ql_implicit(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

pub(crate) fn identity(n: usize) -> Vec<Vec<f64>> {
    (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[i] = 1.0;
            row
        })
        .collect()
}

/// Orders eigenpairs ascending; `z` holds eigenvectors as columns.
pub(crate) fn sorted(d: Vec<f64>, z: Vec<Vec<f64>>) -> SymmetricEigen {
    let n = d.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values = order.iter().map(|&j| d[j]).collect();
    let vectors = order.iter().map(|&j| (0..n).map(|i| z[i][j]).collect()).collect();
    SymmetricEigen { values, vectors }
}

/// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal matrix.
///
/// `d` is the diagonal, `e[i]` couples rows `i` and `i+1` (`e[n-1]` is
/// workspace). On return `d` holds the eigenvalues (unordered). When `z` is
/// given its columns are rotated along, so starting from the identity yields
/// the eigenvectors and starting from a Householder basis yields those of the
/// original dense matrix.
pub(crate) fn ql_implicit(d: &mut [f64], e: &mut [f64], mut z: Option<&mut Vec<Vec<f64>>>) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let cap = 50 * n;
    let mut sweeps = 0;
    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > cap {
                return Err(Error::NoConvergence { index: l });
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for row in z.iter_mut() {
                        let f = row[i + 1];
                        row[i + 1] = s * row[i] + c * f;
                        row[i] = c * row[i] - s * f;
                    }
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Number of eigenvalues of `t` strictly below `x` (Sturm sequence).
pub fn sturm_count(t: &TridiagonalSymmetric, x: f64) -> usize {
    let d = t.diag();
    let e = t.offdiag();
    let mut count = 0;
    let mut q = d[0] - x;
    for i in 0..d.len() {
        if i > 0 {
            q = d[i] - x - e[i - 1] * e[i - 1] / q;
        }
        if q == 0.0 {
            q = f64::MIN_POSITIVE;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues by bisection on the Sturm count; O(n) memory,
/// suited to very large grids.
pub fn lowest_eigenvalues(t: &TridiagonalSymmetric, k: usize) -> Result<Vec<f64>> {
    let n = t.dim();
    if k > n {
        return Err(Error::Domain(format!("requested {k} eigenvalues of a {n}x{n} matrix")));
    }
    // Gershgorin interval
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let mut r = 0.0;
        if i > 0 {
            r += t.offdiag()[i - 1].abs();
        }
        if i + 1 < n {
            r += t.offdiag()[i].abs();
        }
        lo = lo.min(t.diag()[i] - r);
        hi = hi.max(t.diag()[i] + r);
    }
    let pad = 1e-12 * (hi - lo).abs().max(1.0);
    lo -= pad;
    hi += pad;

    let mut out = Vec::with_capacity(k);
    for j in 0..k {
        let (mut a, mut b) = (out.last().copied().unwrap_or(lo), hi);
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(t, mid) > j {
                b = mid;
            } else {
                a = mid;
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn tri(d: Vec<f64>, e: Vec<f64>) -> TridiagonalSymmetric {
        TridiagonalSymmetric::new(d, e).unwrap()
    }

    fn check_residuals(t: &TridiagonalSymmetric, eig: &SymmetricEigen) {
        let norm = t.norm_inf();
        for (lam, v) in eig.values.iter().zip(&eig.vectors) {
            let tv = t.matvec(v);
            let res: f64 = tv.iter().zip(v).map(|(a, b)| (a - lam * b).powi(2)).sum::<f64>().sqrt();
            assert!(res <= 1e-11 * norm.max(1.0), "residual {res}");
            let nrm: f64 = v.iter().map(|x| x * x).sum();
            assert!((nrm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn two_by_two() {
        let t = tri(vec![2.0, 2.0], vec![-1.0]);
        let eig = solve_symmetric_tridiagonal(&t).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] - 3.0).abs() < 1e-14);
        check_residuals(&t, &eig);
    }

    #[test]
    fn scalar() {
        let eig = solve_symmetric_tridiagonal(&tri(vec![7.0], vec![])).unwrap();
        assert_eq!(eig.values, vec![7.0]);
        assert_eq!(eig.vectors, vec![vec![1.0]]);
    }

    #[test]
    fn path_graph() {
        let t = tri(vec![0.0; 5], vec![1.0; 4]);
        let eig = solve_symmetric_tridiagonal(&t).unwrap();
        let mut want: Vec<f64> = (1..=5).map(|k| 2.0 * (k as f64 * PI / 6.0).cos()).collect();
        want.sort_by(f64::total_cmp);
        for (a, b) in eig.values.iter().zip(&want) {
            assert!((a - b).abs() < 1e-14);
        }
        check_residuals(&t, &eig);
    }

    #[test]
    fn graded_matrix_and_orthogonality() {
        let n = 60;
        let t = tri(
            (0..n).map(|i| (i * i) as f64 - 3.0).collect(),
            (0..n - 1).map(|i| 0.5 + (i as f64).sin()).collect(),
        );
        let eig = solve_symmetric_tridiagonal(&t).unwrap();
        check_residuals(&t, &eig);
        for i in 0..n {
            for j in 0..i {
                let dot: f64 = eig.vectors[i].iter().zip(&eig.vectors[j]).map(|(a, b)| a * b).sum();
                assert!(dot.abs() < 1e-12);
            }
        }
        let values = eigenvalues_symmetric_tridiagonal(&t).unwrap();
        for (a, b) in values.iter().zip(&eig.values) {
            assert!((a - b).abs() < 1e-11 * t.norm_inf());
        }
    }

    #[test]
    fn bisection_matches_ql() {
        let n = 40;
        let t = tri(
            (0..n).map(|i| ((i as f64) * 1.3).cos() * 4.0).collect(),
            (0..n - 1).map(|i| 1.0 + 0.1 * i as f64).collect(),
        );
        let all = eigenvalues_symmetric_tridiagonal(&t).unwrap();
        let low = lowest_eigenvalues(&t, 6).unwrap();
        for j in 0..6 {
            assert!((all[j] - low[j]).abs() < 1e-12 * t.norm_inf());
        }
        assert_eq!(sturm_count(&t, f64::NEG_INFINITY.max(-1e300)), 0);
        assert_eq!(sturm_count(&t, 1e300), n);
        assert!(lowest_eigenvalues(&t, n + 1).is_err());
    }
}
