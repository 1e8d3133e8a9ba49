use twofloat::TwoFloat;

use super::dense::solve_dense_symmetric;
use crate::model::BasisSpec;
use crate::operator::{build_hamiltonian, build_overlap, Pencil, TridiagonalSymmetric};
use crate::{Error, Result};

/// Eigenpairs of `h f = ε Ω f`: ascending `eps`, Ω-normalized `vectors` with
/// `f_0 > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedEigen {
    pub eps: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Spectrum of the potential box in a basis of size `n`.
#[derive(Debug, Clone)]
pub struct SpectrumResult {
    pub eps: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
    pub n: usize,
    pub spec: BasisSpec,
    pencil: Pencil,
}

impl SpectrumResult {
    /// Eigenvalue `m` resolved to double-double precision on the exact
    /// tridiagonal pencil.
    ///
    /// Forward evaluation of the coefficient recursion amplifies any error in
    /// the energy argument; comparing recursion and eigenvector beyond a few
    /// digits needs the eigenvalue to more than `f64` accuracy.
    pub fn extended_eigenvalue(&self, m: usize) -> Result<TwoFloat> {
        let guess = *self
            .eps
            .get(m)
            .ok_or_else(|| Error::Domain(format!("level {m} not in a spectrum of size {}", self.n)))?;
        bisect_level(&self.pencil, m, TwoFloat::from(guess), 1e-30)
    }
}

/// Solves the pencil for the box described by `spec` with `n` basis functions.
pub fn solve_spectrum(spec: &BasisSpec, n: usize) -> Result<SpectrumResult> {
    let h = build_hamiltonian(spec, n)?;
    let omega = build_overlap(spec, n)?;
    let GeneralizedEigen { eps, vectors } = solve_generalized(&h, &omega)?;
    Ok(SpectrumResult {
        eps,
        vectors,
        n,
        spec: *spec,
        pencil: Pencil::new(spec, n)?,
    })
}

/// Lower bidiagonal Cholesky factor `Ω = G Gᵀ`: `(diag, sub)`.
pub fn cholesky_tridiagonal(omega: &TridiagonalSymmetric) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = omega.dim();
    let mut g = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n.saturating_sub(1));
    for i in 0..n {
        let mut pivot = omega.diag()[i];
        if i > 0 {
            let sub = omega.offdiag()[i - 1] / g[i - 1];
            pivot -= sub * sub;
            s.push(sub);
        }
        if !(pivot > 0.0) {
            return Err(Error::NotPositiveDefinite { index: i, pivot });
        }
        g.push(pivot.sqrt());
    }
    Ok((g, s))
}

/// Solves `h f = ε Ω f` for symmetric tridiagonal `h` and positive definite
/// tridiagonal `Ω`.
///
/// Reduction: `A = G⁻¹ h G⁻ᵀ` (dense), eigen-decomposed by Householder + QL,
/// vectors back-transformed by `G⁻ᵀ`. Each eigenvalue is then polished by
/// bisection on the inertia of `h - εΩ` and each vector by one step of
/// inverse iteration on that tridiagonal matrix, which keeps small
/// components accurate relative to their own size.
pub fn solve_generalized(h: &TridiagonalSymmetric, omega: &TridiagonalSymmetric) -> Result<GeneralizedEigen> {
    let n = h.dim();
    if omega.dim() != n {
        return Err(Error::Domain(format!("h is {n}x{n} but omega is {0}x{0}", omega.dim())));
    }
    let (g, s) = cholesky_tridiagonal(omega)?;

    // A = G⁻¹ h G⁻ᵀ, built column by column: X = G⁻¹ h, then A = G⁻¹ Xᵀ.
    let forward = |col: &mut [f64]| {
        col[0] /= g[0];
        for i in 1..n {
            col[i] = (col[i] - s[i - 1] * col[i - 1]) / g[i];
        }
    };
    let dense_h = h.to_dense();
    let mut x = vec![vec![0.0; n]; n]; // x[j] = column j of G⁻¹ h
    for j in 0..n {
        let mut col: Vec<f64> = (0..n).map(|i| dense_h[i][j]).collect();
        forward(&mut col);
        x[j] = col;
    }
    let mut a = vec![vec![0.0; n]; n];
    for i in 0..n {
        // row i of X is column i of Xᵀ
        let mut col: Vec<f64> = (0..n).map(|j| x[j][i]).collect();
        forward(&mut col);
        for (j, v) in col.into_iter().enumerate() {
            a[j][i] = v;
        }
    }
    for i in 0..n {
        for j in 0..i {
            let m = 0.5 * (a[i][j] + a[j][i]);
            a[i][j] = m;
            a[j][i] = m;
        }
    }

    let reduced = solve_dense_symmetric(&a)?;
    let pencil = TridiagonalPencil { h, omega };

    let mut eps = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for (k, (lam, z)) in reduced.values.iter().zip(&reduced.vectors).enumerate() {
        // f = G⁻ᵀ z
        let mut f = z.clone();
        f[n - 1] /= g[n - 1];
        for i in (0..n - 1).rev() {
            f[i] = (f[i] - s[i] * f[i + 1]) / g[i];
        }
        let refined = bisect_level(&pencil, k, *lam, 0.0).unwrap_or(*lam);
        let f = inverse_iteration(h, omega, refined, f);
        eps.push(refined);
        vectors.push(f);
    }
    Ok(GeneralizedEigen { eps, vectors })
}

/// Pencil given by explicit `f64` matrices.
struct TridiagonalPencil<'a> {
    h: &'a TridiagonalSymmetric,
    omega: &'a TridiagonalSymmetric,
}

/// What [`bisect_level`] needs: the count of eigenvalues below a shift.
trait Inertia<T> {
    fn count_below(&self, x: T) -> usize;
}

impl Inertia<f64> for TridiagonalPencil<'_> {
    fn count_below(&self, x: f64) -> usize {
        let (h, o) = (self.h, self.omega);
        let mut count = 0;
        let mut pivot = h.diag()[0] - x * o.diag()[0];
        for i in 0..h.dim() {
            if i > 0 {
                let b = h.offdiag()[i - 1] - x * o.offdiag()[i - 1];
                pivot = h.diag()[i] - x * o.diag()[i] - b * b / pivot;
            }
            if pivot == 0.0 {
                pivot = f64::MIN_POSITIVE;
            }
            if pivot < 0.0 {
                count += 1;
            }
        }
        count
    }
}

impl<T: crate::operator::Scalar> Inertia<T> for Pencil {
    fn count_below(&self, x: T) -> usize {
        Pencil::count_below(self, x)
    }
}

/// Narrows eigenvalue number `k` around `guess` by bisection; stops when the
/// bracket is below `rel_tol` relative width or stops shrinking.
fn bisect_level<T, P>(pencil: &P, k: usize, guess: T, rel_tol: f64) -> Result<T>
where
    T: crate::operator::Scalar,
    P: Inertia<T>,
{
    let g = guess.to_f64();
    let mut delta = 1e-10 * (1.0 + g.abs());
    let (mut lo, mut hi);
    let mut tries = 0;
    loop {
        lo = guess - T::from(delta);
        hi = guess + T::from(delta);
        if pencil.count_below(lo) <= k && pencil.count_below(hi) > k {
            break;
        }
        delta *= 8.0;
        tries += 1;
        if tries > 40 {
            return Err(Error::NoConvergence { index: k });
        }
    }
    let two = T::from(2.0);
    for _ in 0..400 {
        let mid = (lo + hi).quot(two);
        if !(mid > lo && mid < hi) {
            break;
        }
        let width = (hi - lo).to_f64();
        if width <= rel_tol * mid.to_f64().abs() {
            break;
        }
        if pencil.count_below(mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok((lo + hi).quot(two))
}

/// One step of generalized inverse iteration, `(h - εΩ) f' = Ω f`, then
/// Ω-normalization and the `f_0 > 0` sign convention.
fn inverse_iteration(h: &TridiagonalSymmetric, omega: &TridiagonalSymmetric, eps: f64, start: Vec<f64>) -> Vec<f64> {
    let n = h.dim();
    let mut f = start;
    if n > 1 {
        let diag: Vec<f64> = (0..n).map(|i| h.diag()[i] - eps * omega.diag()[i]).collect();
        let off: Vec<f64> = (0..n - 1).map(|i| h.offdiag()[i] - eps * omega.offdiag()[i]).collect();
        let tiny = f64::EPSILON * h.norm_inf().max(eps.abs() * omega.norm_inf()).max(1.0);
        let rhs = omega.matvec(&f);
        if let Some(next) = solve_tridiagonal_pivoted(&off, &diag, &off, rhs, tiny) {
            if next.iter().all(|v| v.is_finite()) {
                f = next;
            }
        }
    }
    let norm = omega_norm(omega, &f);
    let first = f.iter().copied().find(|v| *v != 0.0).unwrap_or(1.0);
    let scale = first.signum() / norm;
    f.iter_mut().for_each(|v| *v *= scale);
    f
}

pub(crate) fn omega_inner(omega: &TridiagonalSymmetric, a: &[f64], b: &[f64]) -> f64 {
    omega.matvec(b).iter().zip(a).map(|(x, y)| x * y).sum()
}

fn omega_norm(omega: &TridiagonalSymmetric, f: &[f64]) -> f64 {
    omega_inner(omega, f, f).sqrt()
}

/// Gaussian elimination with partial pivoting for a general tridiagonal
/// system; zero pivots are replaced by `tiny`.
fn solve_tridiagonal_pivoted(sub: &[f64], diag: &[f64], sup: &[f64], mut b: Vec<f64>, tiny: f64) -> Option<Vec<f64>> {
    let n = diag.len();
    let mut d = diag.to_vec();
    let mut dl = sub.to_vec();
    let mut du = sup.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n.saturating_sub(1)];

    for i in 0..n - 1 {
        if d[i].abs() >= dl[i].abs() {
            if d[i] == 0.0 {
                d[i] = tiny;
            }
            let fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            let fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            let temp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = temp - fact * d[i + 1];
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    if d[n - 1] == 0.0 {
        d[n - 1] = tiny;
    }

    for i in 0..n - 1 {
        if swapped[i] {
            b.swap(i, i + 1);
        }
        b[i + 1] -= dl[i] * b[i];
    }
    b[n - 1] /= d[n - 1];
    if n > 1 {
        b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    }
    for i in (0..n.saturating_sub(2)).rev() {
        b[i] = (b[i] - du[i] * b[i + 1] - du2[i] * b[i + 2]) / d[i];
    }
    Some(b)
}
