//! Closed-form tridiagonal matrices of the wave operator `J = H - E`, the
//! Hamiltonian `H = J(E = 0)` and the overlap `Ω` in the Jacobi basis.
//!
//! Everything here is dimensionless: matrices are scaled by `L^2/4`, energies
//! are `ε = (L^2/4) E`.

use std::ops::{Add, Div, Mul, Sub};

use twofloat::TwoFloat;

use crate::model::BasisSpec;
use crate::{Error, Result};

/// Symmetric tridiagonal matrix stored as its diagonal and one off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalSymmetric {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalSymmetric {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(Error::Domain("tridiagonal matrix needs dimension >= 1".into()));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(Error::Domain(format!(
                "off-diagonal length {} does not match dimension {}",
                offdiag.len(),
                diag.len()
            )));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    /// Entry `(i, j)`; zero outside the band.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        match i.abs_diff(j) {
            0 => self.diag[i],
            1 => self.offdiag[i.min(j)],
            _ => 0.0,
        }
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim();
        assert_eq!(v.len(), n);
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.offdiag[i - 1] * v[i - 1];
                }
                if i + 1 < n {
                    s += self.offdiag[i] * v[i + 1];
                }
                s
            })
            .collect()
    }

    /// Infinity norm (max absolute row sum).
    pub fn norm_inf(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i].abs();
                if i > 0 {
                    s += self.offdiag[i - 1].abs();
                }
                if i + 1 < n {
                    s += self.offdiag[i].abs();
                }
                s
            })
            .fold(0.0, f64::max)
    }

    /// Leading principal sub-matrix of size `n`.
    pub fn truncate(&self, n: usize) -> Result<Self> {
        if n == 0 || n > self.dim() {
            return Err(Error::Domain(format!("cannot truncate dimension {} to {n}", self.dim())));
        }
        Self::new(self.diag[..n].to_vec(), self.offdiag[..n - 1].to_vec())
    }
}

fn coeff_c_raw(n: usize, mu: f64, nu: f64) -> Result<f64> {
    if mu == nu {
        return Ok(0.0);
    }
    let s = 2.0 * n as f64 + mu + nu;
    let den = s * (s + 2.0);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::Degenerate(format!("C_{n} has a vanishing denominator (mu+nu = {})", mu + nu)));
    }
    Ok((nu * nu - mu * mu) / den)
}

fn coeff_d_raw(n: usize, mu: f64, nu: f64) -> Result<f64> {
    let nf = n as f64;
    let s = 2.0 * nf + mu + nu;
    let radicand = (nf + 1.0) * (nf + mu + 1.0) * (nf + nu + 1.0) * (nf + mu + nu + 1.0)
        / ((s + 1.0) * (s + 3.0));
    let d = 2.0 / (s + 2.0) * radicand.sqrt();
    if !(radicand >= 0.0) || !d.is_finite() {
        return Err(Error::Degenerate(format!("D_{n} is not real for mu={mu}, nu={nu}")));
    }
    Ok(d)
}

/// `C_n = (nu^2 - mu^2) / ((2n+mu+nu)(2n+mu+nu+2))`.
pub fn coeff_c(n: usize, spec: &BasisSpec) -> Result<f64> {
    coeff_c_raw(n, spec.mu, spec.nu)
}

/// `D_n = 2/(2n+mu+nu+2) sqrt((n+1)(n+mu+1)(n+nu+1)(n+mu+nu+1) / ((2n+mu+nu+1)(2n+mu+nu+3)))`.
pub fn coeff_d(n: usize, spec: &BasisSpec) -> Result<f64> {
    coeff_d_raw(n, spec.mu, spec.nu)
}

/// `C_0..C_{n-1}` and `D_0..D_{n-2}`.
pub(crate) fn coefficients(spec: &BasisSpec, n: usize) -> Result<(Vec<f64>, Vec<f64>)> {
    let c = (0..n).map(|k| coeff_c(k, spec)).collect::<Result<Vec<_>>>()?;
    let d = (0..n.saturating_sub(1)).map(|k| coeff_d(k, spec)).collect::<Result<Vec<_>>>()?;
    Ok((c, d))
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("basis size must be at least 1".into()));
    }
    Ok(())
}

/// Dimensionless Hamiltonian `h = (L^2/4) H`.
pub fn build_hamiltonian(spec: &BasisSpec, n: usize) -> Result<TridiagonalSymmetric> {
    check_size(n)?;
    let (c, d) = coefficients(spec, n)?;
    let shift = 0.5 * (spec.mu + spec.nu + 1.0);
    let diag = (0..n)
        .map(|k| {
            let q = k as f64 + shift;
            q * q + 2.0 * spec.u0 - 1.0 / 16.0 + spec.u1 * c[k]
        })
        .collect();
    let off = d.iter().map(|&dk| spec.u1 * dk).collect();
    TridiagonalSymmetric::new(diag, off)
}

/// Overlap `Ω_{n,m} = <φ_n|φ_m>`: `1 - C_n` on the diagonal, `-D_n` beside it.
pub fn build_overlap(spec: &BasisSpec, n: usize) -> Result<TridiagonalSymmetric> {
    check_size(n)?;
    let (c, d) = coefficients(spec, n)?;
    TridiagonalSymmetric::new(c.iter().map(|ck| 1.0 - ck).collect(), d.iter().map(|dk| -dk).collect())
}

/// Dimensionless wave operator `(L^2/4) J(ε)`.
pub fn build_wave_operator(spec: &BasisSpec, n: usize, eps: f64) -> Result<TridiagonalSymmetric> {
    check_size(n)?;
    let pencil = Pencil::new(spec, n)?;
    let diag = (0..n).map(|k| pencil.diag(k, eps)).collect();
    let off = (0..n - 1).map(|k| pencil.offdiag(k, eps)).collect();
    TridiagonalSymmetric::new(diag, off)
}

/// Arithmetic shared by `f64` and double-double evaluation of the pencil and
/// of the coefficient recursion.
pub trait Scalar:
    Copy
    + From<f64>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + PartialOrd
{
    fn to_f64(self) -> f64;

    /// `self / rhs`, correctly rounded to the type's working precision.
    fn quot(self, rhs: Self) -> Self {
        self / rhs
    }
}

impl Scalar for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

impl Scalar for TwoFloat {
    fn to_f64(self) -> f64 {
        self.hi() + self.lo()
    }

    // the crate's own division is good to about 1e-17 only; one correction
    // step on the remainder restores full double-double accuracy
    fn quot(self, rhs: Self) -> Self {
        let q = self / rhs;
        let r = self - q * rhs;
        q + TwoFloat::from(r.hi() / rhs.hi())
    }
}

/// Entries of `J(ε)` evaluated on demand, in any [`Scalar`].
///
/// `J_nn = (n + (mu+nu+1)/2)^2 + 2u0 - 1/16 - ε + (ε + u1) C_n`,
/// `J_{n,n+1} = (ε + u1) D_n`.
#[derive(Debug, Clone)]
pub struct Pencil {
    pub(crate) shift: f64,
    pub(crate) u0: f64,
    pub(crate) u1: f64,
    pub(crate) c: Vec<f64>,
    pub(crate) d: Vec<f64>,
}

impl Pencil {
    pub fn new(spec: &BasisSpec, n: usize) -> Result<Self> {
        let (c, d) = coefficients(spec, n)?;
        Ok(Self {
            shift: 0.5 * (spec.mu + spec.nu + 1.0),
            u0: spec.u0,
            u1: spec.u1,
            c,
            d,
        })
    }

    pub fn dim(&self) -> usize {
        self.c.len()
    }

    /// `(n + (mu+nu+1)/2)^2`.
    pub fn level<T: Scalar>(&self, n: usize) -> T {
        let q = T::from(n as f64) + T::from(self.shift);
        q * q
    }

    pub fn diag<T: Scalar>(&self, n: usize, eps: T) -> T {
        self.level::<T>(n) + T::from(2.0 * self.u0) - T::from(1.0 / 16.0) - eps
            + (eps + T::from(self.u1)) * T::from(self.c[n])
    }

    pub fn offdiag<T: Scalar>(&self, n: usize, eps: T) -> T {
        (eps + T::from(self.u1)) * T::from(self.d[n])
    }

    /// Number of eigenvalues of the pencil `(h, Ω)` strictly below `eps`:
    /// the count of negative pivots in the LDLᵀ factorization of `J(eps)`.
    pub fn count_below<T: Scalar>(&self, eps: T) -> usize {
        let zero = T::from(0.0);
        let tiny = T::from(f64::MIN_POSITIVE);
        let mut count = 0;
        let mut pivot = self.diag(0, eps);
        for n in 0..self.dim() {
            if n > 0 {
                let b = self.offdiag(n - 1, eps);
                pivot = self.diag(n, eps) - (b * b).quot(pivot);
            }
            if pivot == zero {
                pivot = tiny;
            }
            if pivot < zero {
                count += 1;
            }
        }
        count
    }
}
