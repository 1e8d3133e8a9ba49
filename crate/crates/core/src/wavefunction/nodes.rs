use super::reconstruct::WavefunctionSamples;
use crate::{Error, Result};

fn significant(psi: &[f64]) -> impl Iterator<Item = (usize, f64)> + '_ {
    let peak = psi.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let floor = 1e-12 * peak;
    let last = psi.len().saturating_sub(1);
    psi.iter()
        .copied()
        .enumerate()
        .filter(move |&(i, v)| i != 0 && i != last && v.abs() >= floor && v != 0.0)
}

/// Interior sign changes of `psi`, ignoring samples below `1e-12 max|psi|`
/// and the two endpoint samples.
pub fn count_nodes(samples: &WavefunctionSamples) -> Result<usize> {
    Ok(node_positions(samples)?.len())
}

/// Sign-change positions, linearly interpolated between bracketing samples.
pub fn node_positions(samples: &WavefunctionSamples) -> Result<Vec<f64>> {
    let (xs, psi) = (&samples.xs, &samples.psi);
    if psi.len() < 3 || xs.len() != psi.len() {
        return Err(Error::Domain("node counting needs at least 3 aligned samples".into()));
    }
    let mut out = Vec::new();
    let mut prev: Option<(usize, f64)> = None;
    for (i, v) in significant(psi) {
        if let Some((j, u)) = prev {
            if (u > 0.0) != (v > 0.0) {
                let t = u / (u - v);
                out.push(xs[j] + t * (xs[i] - xs[j]));
            }
        }
        prev = Some((i, v));
    }
    Ok(out)
}
