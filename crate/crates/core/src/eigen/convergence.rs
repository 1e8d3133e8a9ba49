use std::thread;

use super::generalized::solve_spectrum;
use crate::model::BasisSpec;
use crate::{Error, Result};

/// Lowest `levels` eigenvalues for each basis size; `eps[level][column]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    pub sizes: Vec<usize>,
    pub eps: Vec<Vec<f64>>,
    /// Matching decimal places between consecutive sizes,
    /// `stable_digits[level][column - 1]`.
    pub stable_digits: Vec<Vec<u32>>,
}

/// Decimal places on which two values agree (capped at 16).
pub fn agreeing_decimals(a: f64, b: f64) -> u32 {
    let diff = (a - b).abs();
    if diff == 0.0 {
        return 16;
    }
    (-diff.log10()).floor().clamp(0.0, 16.0) as u32
}

/// Worker threads for independent solves: `TRA_BOX_THREADS` if set, else the
/// available parallelism.
pub fn thread_cap() -> usize {
    std::env::var("TRA_BOX_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or_else(|| thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

pub fn convergence_study(spec: &BasisSpec, sizes: &[usize], levels: usize) -> Result<ConvergenceTable> {
    if sizes.is_empty() {
        return Err(Error::Config("at least one basis size is required".into()));
    }
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Config(format!("basis sizes must be ascending, got {sizes:?}")));
    }
    let smallest = sizes[0];
    if levels == 0 || levels > smallest {
        return Err(Error::Config(format!(
            "levels must lie in 1..={smallest} (the smallest basis), got {levels}"
        )));
    }

    let columns = solve_columns(spec, sizes, levels)?;
    let eps: Vec<Vec<f64>> = (0..levels).map(|m| columns.iter().map(|c| c[m]).collect()).collect();
    let stable_digits = eps
        .iter()
        .map(|row| row.windows(2).map(|w| agreeing_decimals(w[0], w[1])).collect())
        .collect();
    Ok(ConvergenceTable {
        sizes: sizes.to_vec(),
        eps,
        stable_digits,
    })
}

fn solve_columns(spec: &BasisSpec, sizes: &[usize], levels: usize) -> Result<Vec<Vec<f64>>> {
    let workers = thread_cap().min(sizes.len()).max(1);
    let mut out: Vec<Option<Result<Vec<f64>>>> = vec![None; sizes.len()];
    for (chunk_idx, chunk) in sizes.chunks(workers).enumerate() {
        let results: Vec<Result<Vec<f64>>> = thread::scope(|scope| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&n| scope.spawn(move || solve_spectrum(spec, n).map(|r| r.eps[..levels].to_vec())))
                .collect();
            handles.into_iter().map(|h| h.join().expect("solver thread panicked")).collect()
        });
        for (i, r) in results.into_iter().enumerate() {
            out[chunk_idx * workers + i] = Some(r);
        }
    }
    out.into_iter().map(|r| r.expect("every size solved")).collect()
}
