use std::f64::consts::PI;

use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `zeta(k) - 1` for k = 2..=30.
const ZETA_MINUS_ONE: [f64; 29] = [
    6.44934066848226406e-01,
    2.02056903159594292e-01,
    8.23232337111381857e-02,
    3.69277551433699266e-02,
    1.73430619844491402e-02,
    8.34927738192282713e-03,
    4.07735619794433960e-03,
    2.00839282608221426e-03,
    9.94575127818085256e-04,
    4.94188604119464529e-04,
    2.46086553308048320e-04,
    1.22713347578489145e-04,
    6.12481350587048277e-05,
    3.05882363070204933e-05,
    1.52822594086518710e-05,
    7.63719763789976257e-06,
    3.81729326499984022e-06,
    1.90821271655393897e-06,
    9.53962033872796212e-07,
    4.76932986787806447e-07,
    2.38450502727733004e-07,
    1.19219925965311064e-07,
    5.96081890512594801e-08,
    2.98035035146522793e-08,
    1.49015548283650427e-08,
    7.45071178983543006e-09,
    3.72533402478845728e-09,
    1.86265972351304914e-09,
    9.31327432419668166e-10,
];

/// `B_2k / (2k (2k-1))` for k = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Natural logarithm of the gamma function for `z > 0`.
///
/// Three regimes: an expansion about the zeros at `z = 1` and `z = 2` (so the
/// result keeps full relative accuracy where `ln Γ` vanishes), the Stirling
/// series for `z >= 10`, and exact recurrence shifts in between.
pub fn log_gamma(z: f64) -> Result<f64> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::Domain(format!("log_gamma needs a finite z > 0, got {z}")));
    }
    Ok(ln_gamma_positive(z))
}

pub(crate) fn ln_gamma_positive(z: f64) -> f64 {
    if z >= 10.0 {
        stirling(z)
    } else if z < 0.5 {
        // Γ(z) = Γ(z + 1) / z
        ln_gamma_near_roots(z + 1.0) - z.ln()
    } else if z <= 2.5 {
        ln_gamma_near_roots(z)
    } else {
        // walk down into [1.5, 2.5)
        let mut x = z;
        let mut prod = 1.0;
        while x >= 2.5 {
            x -= 1.0;
            prod *= x;
        }
        ln_gamma_near_roots(x) + prod.ln()
    }
}

/// Valid on [0.5, 2.5].
fn ln_gamma_near_roots(z: f64) -> f64 {
    if z <= 1.5 {
        ln_gamma_one_plus(z - 1.0)
    } else {
        let x = z - 2.0;
        ln_gamma_one_plus(x) + x.ln_1p()
    }
}

/// `ln Γ(1 + x)` for |x| <= 1/2.
fn ln_gamma_one_plus(x: f64) -> f64 {
    let mut sum = 0.0;
    // (-x)^k
    let mut pow = -x;
    for (i, c) in ZETA_MINUS_ONE.iter().enumerate() {
        let k = (i + 2) as f64;
        pow *= -x;
        sum += c * pow / k;
    }
    // the k = 1 term of the zeta series, split as -ln(1 + x) + x (1 - γ)
    sum + x * (1.0 - EULER_GAMMA) - x.ln_1p()
}

fn stirling(z: f64) -> f64 {
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in STIRLING {
        series += c * pow;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series
}

/// `ln B(a, b)` for positive arguments.
pub fn log_beta(a: f64, b: f64) -> Result<f64> {
    Ok(log_gamma(a)? + log_gamma(b)? - log_gamma(a + b)?)
}
