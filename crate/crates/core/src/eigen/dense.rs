use super::tridiagonal::{ql_implicit, sorted, SymmetricEigen};
use crate::{Error, Result};

/// Householder reduction of a dense symmetric matrix to tridiagonal form.
///
/// `v` holds the matrix on entry (row-major, only symmetric input makes
/// sense) and the accumulated orthogonal transform on exit. Returns the
/// diagonal and the sub-diagonal, with `e[i]` coupling rows `i-1` and `i`
/// and `e[0] = 0`.
fn householder_tridiagonalize(v: &mut [Vec<f64>]) -> (Vec<f64>, Vec<f64>) {
    let n = v.len();
    let mut d: Vec<f64> = v[n - 1].clone();
    let mut e = vec![0.0; n];

    for i in (1..n).rev() {
        let scale: f64 = d[..i].iter().map(|x| x.abs()).sum();
        let mut h = 0.0;
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for x in e[..i].iter_mut() {
                *x = 0.0;
            }

            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }

    // accumulate transformations
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let g: f64 = (0..=i).map(|k| v[k][i + 1] * v[k][j]).sum();
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
    (d, e)
}

/// Eigen-decomposition of a dense symmetric matrix (row-major).
pub fn solve_dense_symmetric(a: &[Vec<f64>]) -> Result<SymmetricEigen> {
    let n = a.len();
    if n == 0 || a.iter().any(|row| row.len() != n) {
        return Err(Error::Domain("dense eigensolver needs a non-empty square matrix".into()));
    }
    if n == 1 {
        return Ok(SymmetricEigen {
            values: vec![a[0][0]],
            vectors: vec![vec![1.0]],
        });
    }
    let mut v = a.to_vec();
    let (mut d, sub) = householder_tridiagonalize(&mut v);
    // shift to the "e[i] couples i and i+1" layout
    let mut e: Vec<f64> = sub[1..].to_vec();
    e.push(0.0);
    ql_implicit(&mut d, &mut e, Some(&mut v))?;
    Ok(sorted(d, v))
}
