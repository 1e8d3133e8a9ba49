use twofloat::TwoFloat;

use crate::model::BasisSpec;
use crate::operator::{Pencil, Scalar};
use crate::{Error, Result};

/// `P_0(ε) .. P_{N-1}(ε)`, the expansion coefficients `f_n = f_0 P_n(ε)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecursionCoeffs {
    pub eps: f64,
    pub values: Vec<f64>,
}

/// Forward three-term recursion in `f64`:
///
/// ```text
/// D_n P_{n+1} = [ z - (n + (mu+nu+1)/2)^2 / (ε+u1) - C_n ] P_n - D_{n-1} P_{n-1},
/// z = (ε - 2u0 + 1/16) / (ε + u1),   P_0 = 1,   P_{-1} = 0.
/// ```
///
/// The minimal solution that makes a bound state is not what forward
/// evaluation follows for long: rounding in `ε` and in the arithmetic feeds
/// the growing solution, which is the truncation instability seen when
/// reconstructing wavefunctions from these coefficients.
pub fn recursion_coeffs(spec: &BasisSpec, eps: f64, n: usize) -> Result<RecursionCoeffs> {
    let values = forward(spec, eps, n)?;
    Ok(RecursionCoeffs { eps, values })
}

/// The same recursion carried out in double-double arithmetic, for an energy
/// known beyond `f64` precision (see `SpectrumResult::extended_eigenvalue`).
pub fn recursion_coeffs_extended(spec: &BasisSpec, eps: TwoFloat, n: usize) -> Result<RecursionCoeffs> {
    let values = forward(spec, eps, n)?.into_iter().map(Scalar::to_f64).collect();
    Ok(RecursionCoeffs { eps: eps.hi(), values })
}

fn forward<T: Scalar>(spec: &BasisSpec, eps: T, n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::Domain("recursion needs at least one coefficient".into()));
    }
    let denom = eps + T::from(spec.u1);
    let gap = denom.to_f64();
    if gap.abs() < 1e-12 {
        return Err(Error::SingularEnergy(gap));
    }
    let pencil = Pencil::new(spec, n)?;
    let one = T::from(1.0);
    let inv = one.quot(denom);
    let z = (eps - T::from(2.0 * spec.u0) + T::from(1.0 / 16.0)) * inv;

    let mut p = Vec::with_capacity(n);
    p.push(one);
    if n == 1 {
        return Ok(p);
    }
    // n = 0 row with P_{-1} = 0:
    // P_1 = -D_0^{-1} { C_0 + (ε+u1)^{-1} [ (mu+nu+1)^2/4 - ε + 2u0 - 1/16 ] }
    let k0: T = pencil.level(0);
    let bracket = k0 - eps + T::from(2.0 * spec.u0) - T::from(1.0 / 16.0);
    let p1 = T::from(0.0) - (T::from(pencil.c[0]) + inv * bracket).quot(T::from(pencil.d[0]));
    p.push(p1);
    for k in 1..n - 1 {
        let lead = z - pencil.level::<T>(k) * inv - T::from(pencil.c[k]);
        let next = (lead * p[k] - T::from(pencil.d[k - 1]) * p[k - 1]).quot(T::from(pencil.d[k]));
        p.push(next);
    }
    Ok(p)
}
