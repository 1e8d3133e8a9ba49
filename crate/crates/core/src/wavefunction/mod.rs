//! Recursion coefficients, basis functions, reconstruction of `ψ(x)`,
//! truncation-stability scans and node counting.

mod basis;
mod nodes;
pub(crate) mod reconstruct;
mod recursion;
mod stability;

pub use basis::{basis_eval, basis_table, basis_values};
pub use nodes::{count_nodes, node_positions};
pub use reconstruct::{reconstruct, reconstruct_level, scale_match, Method, WavefunctionSamples};
pub use recursion::{recursion_coeffs, recursion_coeffs_extended, RecursionCoeffs};
pub use stability::{detect_stability, StabilityConfig, StabilityOutcome, StabilityReport};
