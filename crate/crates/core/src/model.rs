//! Physical parameters of the potential box, unit conventions, the
//! coordinate map `y = 2 (x/L)^2 - 1` and the derived basis exponents.

use serde::{Deserialize, Serialize};

use crate::special::JacobiParams;
use crate::{Error, Result};

/// How the four strengths of [`PotentialParams`] are expressed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnitMode {
    /// Atomic units, ħ = m = 1.
    Absolute,
    /// Multiples of `4/L^2`; the numbers are the dimensionless `u_i` directly.
    #[default]
    PaperUnits,
}

impl UnitMode {
    pub fn label(&self) -> &'static str {
        match self {
            UnitMode::Absolute => "absolute",
            UnitMode::PaperUnits => "paper_units",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    pub v0: f64,
    pub v1: f64,
    pub vl: f64,
    pub vr: f64,
    /// Box width `L`.
    #[serde(default = "default_width")]
    pub width: f64,
    #[serde(default)]
    pub units: UnitMode,
}

fn default_width() -> f64 {
    2.0
}

impl PotentialParams {
    pub fn new(v0: f64, v1: f64, vl: f64, vr: f64, width: f64, units: UnitMode) -> Result<Self> {
        let p = Self { v0, v1, vl, vr, width, units };
        p.validate()?;
        Ok(p)
    }

    /// Strengths in units of `4/L^2`, box width `L`.
    pub fn paper_units(v0: f64, v1: f64, vl: f64, vr: f64, width: f64) -> Result<Self> {
        Self::new(v0, v1, vl, vr, width, UnitMode::PaperUnits)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.v0, self.v1, self.vl, self.vr, self.width];
        if all.iter().any(|v| !v.is_finite()) {
            return Err(Error::Constraint("potential parameters must be finite".into()));
        }
        if !(self.width > 0.0) {
            return Err(Error::Constraint(format!("box width must be positive, got {}", self.width)));
        }
        if !cfg!(feature = "negative-wall-strengths") && (self.vl < 0.0 || self.vr < 0.0) {
            return Err(Error::Constraint(format!(
                "wall strengths must be non-negative, got VL={} VR={}",
                self.vl, self.vr
            )));
        }
        Ok(())
    }

    /// `4/L^2`, the energy unit of the paper-units convention.
    pub fn energy_unit(&self) -> f64 {
        4.0 / (self.width * self.width)
    }

    /// Multiplier taking an input strength to absolute energy.
    fn to_absolute(&self) -> f64 {
        match self.units {
            UnitMode::Absolute => 1.0,
            UnitMode::PaperUnits => self.energy_unit(),
        }
    }

    /// Dimensionless energy `ε = (L^2/4) E` from an absolute energy.
    pub fn eps_from_energy(&self, energy: f64) -> f64 {
        energy / self.energy_unit()
    }

    /// Absolute energy from `ε`.
    pub fn energy_from_eps(&self, eps: f64) -> f64 {
        eps * self.energy_unit()
    }
}

/// Dimensionless strengths and the exponents of the Jacobi basis
/// `φ_n = A_n (1-y)^alpha (1+y)^beta P_n^{(mu,nu)}(y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisSpec {
    pub u0: f64,
    pub u1: f64,
    pub ul: f64,
    pub ur: f64,
    pub mu: f64,
    pub nu: f64,
    pub alpha: f64,
    pub beta: f64,
    /// `L^2/4`.
    pub eps_scale: f64,
    /// Box width `L`.
    pub width: f64,
}

impl BasisSpec {
    /// Builds the basis from dimensionless strengths `u_i = (L^2/4) V_i`.
    ///
    /// `mu^2 = 1 + 8 u_R` and `nu^2 = 1/4 + 8 u_L` remove the `1/(1 ± y)`
    /// terms from the wave operator; the positive roots are taken.
    pub fn from_dimensionless(u0: f64, u1: f64, ul: f64, ur: f64, width: f64) -> Result<Self> {
        let mu_sq = 1.0 + 8.0 * ur;
        let nu_sq = 0.25 + 8.0 * ul;
        if !(mu_sq >= 0.0) || !(nu_sq >= 0.0) {
            return Err(Error::Constraint(format!(
                "1 + 8 u_R = {mu_sq} and 1/4 + 8 u_L = {nu_sq} must be non-negative"
            )));
        }
        if !(width > 0.0) {
            return Err(Error::Constraint(format!("box width must be positive, got {width}")));
        }
        let mu = mu_sq.sqrt();
        let nu = nu_sq.sqrt();
        Ok(Self {
            u0,
            u1,
            ul,
            ur,
            mu,
            nu,
            alpha: 0.5 * (mu + 1.0),
            beta: 0.5 * (nu + 0.5),
            eps_scale: 0.25 * width * width,
            width,
        })
    }

    pub fn jacobi(&self) -> JacobiParams {
        // mu >= 0 and nu >= 0 by construction
        JacobiParams::new(self.mu, self.nu).expect("basis exponents are non-negative")
    }
}

pub fn to_basis_spec(p: &PotentialParams) -> Result<BasisSpec> {
    p.validate()?;
    let scale = match p.units {
        UnitMode::PaperUnits => 1.0,
        UnitMode::Absolute => 0.25 * p.width * p.width,
    };
    BasisSpec::from_dimensionless(p.v0 * scale, p.v1 * scale, p.vl * scale, p.vr * scale, p.width)
}

/// `y = 2 (x/L)^2 - 1`.
pub fn map_y(x: f64, width: f64) -> Result<f64> {
    if !(0.0..=width).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, {width}]")));
    }
    let t = x / width;
    Ok(2.0 * t * t - 1.0)
}

/// Inverse of [`map_y`]: `x = L sqrt((1+y)/2)`.
pub fn map_x(y: f64, width: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&y) {
        return Err(Error::Domain(format!("y = {y} outside [-1, 1]")));
    }
    Ok(width * (0.5 * (1.0 + y)).sqrt())
}

/// `points` equally spaced positions covering `[0, L]`, endpoints included.
pub fn uniform_grid(width: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::Config(format!("grid needs at least 2 points, got {points}")));
    }
    if !(width > 0.0 && width.is_finite()) {
        return Err(Error::Domain(format!("box width must be positive, got {width}")));
    }
    let last = (points - 1) as f64;
    let mut xs: Vec<f64> = (0..points).map(|i| width * i as f64 / last).collect();
    xs[points - 1] = width;
    Ok(xs)
}

/// The potential `V(x)` in absolute energy units.
///
/// The singular walls return `f64::INFINITY`: `x = L` always, `x = 0` when
/// `VL > 0`.
pub fn potential_x(p: &PotentialParams, x: f64) -> Result<f64> {
    let l = p.width;
    if !(0.0..=l).contains(&x) {
        return Err(Error::Domain(format!("x = {x} outside [0, {l}]")));
    }
    let k = p.to_absolute();
    let (v0, v1, vl, vr) = (p.v0 * k, p.v1 * k, p.vl * k, p.vr * k);
    let t = (x / l) * (x / l);
    if x == l {
        return Ok(f64::INFINITY);
    }
    if x == 0.0 {
        if vl > 0.0 {
            return Ok(f64::INFINITY);
        }
        return Ok(v0 + vr - 0.5 * v1);
    }
    let left = if vl == 0.0 { 0.0 } else { vl / t };
    Ok((v0 + left + vr / (1.0 - t) + v1 * (t - 0.5)) / (1.0 - t))
}

/// `(L^2/4) V` in the y coordinate:
/// `2/(1-y) [u0 + 2 uL/(1+y) + 2 uR/(1-y) + (u1/2) y]`.
pub fn potential_y(spec: &BasisSpec, y: f64) -> Result<f64> {
    if !(y > -1.0 && y < 1.0) {
        return Err(Error::Domain(format!("y = {y} must lie strictly inside (-1, 1)")));
    }
    Ok(2.0 / (1.0 - y)
        * (spec.u0 + 2.0 * spec.ul / (1.0 + y) + 2.0 * spec.ur / (1.0 - y) + 0.5 * spec.u1 * y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table1() -> PotentialParams {
        PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0).unwrap()
    }

    #[test]
    fn table1_basis() {
        let s = to_basis_spec(&table1()).unwrap();
        assert_eq!((s.u0, s.u1, s.ul, s.ur), (-7.0, -5.0, 0.25, 0.5));
        assert!((s.mu - 5f64.sqrt()).abs() < 1e-15);
        assert!((s.nu - 1.5).abs() < 1e-15);
        assert!((2.0 * s.alpha - (s.mu + 1.0)).abs() < 1e-15);
        assert!((2.0 * s.beta - (s.nu + 0.5)).abs() < 1e-15);
        assert_eq!(s.eps_scale, 1.0);
    }

    #[test]
    fn zero_and_tuned_strengths() {
        let s = to_basis_spec(&PotentialParams::paper_units(0.0, 0.0, 0.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!((s.mu, s.nu), (1.0, 0.5));
        let s = to_basis_spec(&PotentialParams::paper_units(0.0, 0.0, 3.0 / 32.0, 0.0, 1.0).unwrap()).unwrap();
        assert!((s.nu - 1.0).abs() < 1e-15);
    }

    #[test]
    fn absolute_mode_scales_with_width() {
        let a = PotentialParams::new(-3.0, 2.0, 1.0, 0.7, 1.5, UnitMode::Absolute).unwrap();
        let b = PotentialParams { width: 3.0, ..a };
        let sa = to_basis_spec(&a).unwrap();
        let sb = to_basis_spec(&b).unwrap();
        for (x, y) in [(sa.u0, sb.u0), (sa.u1, sb.u1), (sa.ul, sb.ul), (sa.ur, sb.ur)] {
            assert!((x - 0.25 * y).abs() < 1e-15 * y.abs().max(1.0));
        }
    }

    #[test]
    fn coordinate_map() {
        assert_eq!(map_y(0.0, 3.0).unwrap(), -1.0);
        assert_eq!(map_y(3.0, 3.0).unwrap(), 1.0);
        assert_eq!(map_y(1.5, 3.0).unwrap(), -0.5);
        assert!(map_y(-0.1, 3.0).is_err());
        assert!(map_y(3.1, 3.0).is_err());
        let l = 2.7;
        for i in 0..=1000 {
            let x = l * i as f64 / 1000.0;
            let back = map_x(map_y(x, l).unwrap(), l).unwrap();
            assert!((back - x).abs() <= 1e-13 * l);
        }
    }

    #[test]
    fn potential_midpoint_by_hand() {
        // (x/L)^2 = 1/4: (4/3)[-7 + 4(0.25) + (4/3)(0.5) + (-5)(-1/4)] = -49/9
        let v = potential_x(&table1(), 1.0).unwrap();
        assert!((v + 49.0 / 9.0).abs() < 1e-13);
        let s = to_basis_spec(&table1()).unwrap();
        assert!((potential_y(&s, 0.0).unwrap() + 11.0).abs() < 1e-14);
    }

    #[test]
    fn singular_walls() {
        let p = table1();
        assert_eq!(potential_x(&p, 0.0).unwrap(), f64::INFINITY);
        assert_eq!(potential_x(&p, 2.0).unwrap(), f64::INFINITY);
        assert!(potential_x(&p, 1e-6).unwrap() > 1e10);
        assert!(potential_x(&p, 2.0 - 1e-6).unwrap() > 1e10);
        let no_left = PotentialParams { vl: 0.0, ..p };
        assert!(potential_x(&no_left, 0.0).unwrap().is_finite());
        assert!(potential_x(&p, 2.5).is_err());
        assert!(potential_y(&to_basis_spec(&p).unwrap(), 1.0).is_err());
    }

    #[test]
    fn x_and_y_forms_agree() {
        let p = PotentialParams::paper_units(-7.0, -5.0, 0.25, 0.5, 2.0).unwrap();
        let s = to_basis_spec(&p).unwrap();
        for i in 1..100 {
            let x = p.width * i as f64 / 100.0;
            let vx = s.eps_scale * potential_x(&p, x).unwrap();
            let vy = potential_y(&s, map_y(x, p.width).unwrap()).unwrap();
            assert!((vx - vy).abs() <= 1e-12 * vx.abs().max(1e-300), "x={x}");
        }
        let zero = to_basis_spec(&PotentialParams::paper_units(0.0, 0.0, 0.0, 0.0, 1.0).unwrap()).unwrap();
        assert_eq!(potential_y(&zero, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn rejects_invalid_params() {
        assert!(PotentialParams::paper_units(0.0, 0.0, 0.0, 0.0, 0.0).is_err());
        assert!(PotentialParams::paper_units(0.0, 0.0, 0.0, f64::NAN, 1.0).is_err());
        #[cfg(not(feature = "negative-wall-strengths"))]
        assert!(PotentialParams::paper_units(0.0, 0.0, -0.01, 0.0, 1.0).is_err());
        assert!(BasisSpec::from_dimensionless(0.0, 0.0, -1.0, 0.0, 1.0).is_err());
    }
}
