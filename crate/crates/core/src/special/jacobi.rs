use crate::special::gamma::ln_gamma_positive;
use crate::{Error, Result};

/// Exponents of the Jacobi weight `(1-y)^mu (1+y)^nu` on [-1, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    mu: f64,
    nu: f64,
}

impl JacobiParams {
    pub fn new(mu: f64, nu: f64) -> Result<Self> {
        if !(mu > -1.0 && nu > -1.0) || !mu.is_finite() || !nu.is_finite() {
            return Err(Error::Domain(format!(
                "Jacobi exponents must exceed -1, got mu={mu}, nu={nu}"
            )));
        }
        Ok(Self { mu, nu })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }
}

/// `P_n^{(mu,nu)}(y)` by upward three-term recurrence from `P_0 = 1`.
pub fn jacobi_eval(n: usize, p: JacobiParams, y: f64) -> f64 {
    debug_assert!((-1.0..=1.0).contains(&y), "y={y} outside [-1, 1]");
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let next = jacobi_step(k, p, y, cur, prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_0..=P_nmax` at one point.
pub fn jacobi_eval_all(nmax: usize, p: JacobiParams, y: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(nmax + 1);
    out.push(1.0);
    let (mut prev, mut cur) = (0.0, 1.0);
    for k in 0..nmax {
        let next = jacobi_step(k, p, y, cur, prev);
        prev = cur;
        cur = next;
        out.push(cur);
    }
    out
}

/// Returns `P_{k+1}` from `P_k` and `P_{k-1}`.
#[inline]
fn jacobi_step(k: usize, p: JacobiParams, y: f64, cur: f64, prev: f64) -> f64 {
    let (a, b) = (p.mu, p.nu);
    if k == 0 {
        return 0.5 * ((a + b + 2.0) * y + (a - b));
    }
    let n = k as f64;
    let s = 2.0 * n + a + b;
    let c1 = 2.0 * (n + 1.0) * (n + a + b + 1.0) * s;
    let c2 = (s + 1.0) * (s * (s + 2.0) * y + a * a - b * b);
    let c3 = 2.0 * (n + a) * (n + b) * (s + 2.0);
    (c2 * cur - c3 * prev) / c1
}

/// Normalization `A_n` making `A_n^2 / (2√2) ∫ (1-y)^mu (1+y)^nu P_n^2 dy = 1`.
///
/// ```text
/// A_n = sqrt( (2n+mu+nu+1) / 2^(mu+nu-1/2) * Γ(n+1) Γ(n+mu+nu+1) / (Γ(n+nu+1) Γ(n+mu+1)) )
/// ```
pub fn norm_const(n: usize, p: JacobiParams) -> f64 {
    let (a, b) = (p.mu, p.nu);
    let nf = n as f64;
    // (2n+a+b+1) Γ(n+a+b+1): at n = 0 fold it into Γ(a+b+2) so that
    // a+b+1 <= 0 stays well defined.
    let ln_lead = if n == 0 {
        ln_gamma_positive(a + b + 2.0)
    } else {
        (2.0 * nf + a + b + 1.0).ln() + ln_gamma_positive(nf + a + b + 1.0)
    };
    let ln_sq = ln_lead + ln_gamma_positive(nf + 1.0)
        - ln_gamma_positive(nf + b + 1.0)
        - ln_gamma_positive(nf + a + 1.0)
        - (a + b - 0.5) * std::f64::consts::LN_2;
    (0.5 * ln_sq).exp()
}

/// `P_n^{(mu,nu)}(1) = Γ(n+mu+1) / (Γ(mu+1) n!)`.
pub fn jacobi_at_one(n: usize, p: JacobiParams) -> f64 {
    let nf = n as f64;
    (ln_gamma_positive(nf + p.mu + 1.0) - ln_gamma_positive(p.mu + 1.0) - ln_gamma_positive(nf + 1.0))
        .exp()
}
