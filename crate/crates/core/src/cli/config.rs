use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::model::{to_basis_spec, BasisSpec, PotentialParams};
use crate::oracle::FdConfig;
use crate::wavefunction::StabilityConfig;
use crate::{Error, Result};

/// One JSON document describing a run. Everything except `potential` has a
/// default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub potential: PotentialParams,
    #[serde(default = "defaults::basis_size")]
    pub basis_size: usize,
    #[serde(default = "defaults::levels")]
    pub levels: usize,
    #[serde(default = "defaults::sizes")]
    pub sizes: Vec<usize>,
    #[serde(default = "defaults::grid_points")]
    pub grid_points: usize,
    #[serde(default = "defaults::output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub stability: StabilityConfig,
    #[serde(default)]
    pub oracle: FdConfig,
    /// Clip for the singular walls in `potential.csv`, in the input units.
    #[serde(default = "defaults::v_max")]
    pub v_max: f64,
    /// L²-normalize reconstructed wavefunctions on the output grid.
    #[serde(default)]
    pub normalize: bool,
}

mod defaults {
    use std::path::PathBuf;

    pub fn basis_size() -> usize {
        100
    }
    pub fn levels() -> usize {
        10
    }
    pub fn sizes() -> Vec<usize> {
        vec![15, 20, 30, 100]
    }
    pub fn grid_points() -> usize {
        1001
    }
    pub fn output_dir() -> PathBuf {
        PathBuf::from("out")
    }
    pub fn v_max() -> f64 {
        100.0
    }
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn validate(&self) -> Result<()> {
        self.potential.validate()?;
        if self.basis_size == 0 {
            return Err(Error::Config("basis_size must be >= 1".into()));
        }
        if self.levels == 0 || self.levels > self.basis_size {
            return Err(Error::Config(format!(
                "levels must lie in 1..={} (basis_size), got {}",
                self.basis_size, self.levels
            )));
        }
        if self.grid_points < 2 {
            return Err(Error::Config(format!("grid_points must be >= 2, got {}", self.grid_points)));
        }
        if !(self.v_max.is_finite()) {
            return Err(Error::Config("v_max must be finite".into()));
        }
        self.stability.validate()?;
        self.oracle.validate()?;
        Ok(())
    }

    pub fn basis_spec(&self) -> Result<BasisSpec> {
        to_basis_spec(&self.potential)
    }

    /// SHA-256 of the canonical JSON form of the validated config.
    pub fn hash(&self) -> String {
        let canonical = serde_json::to_vec(self).expect("config serializes");
        Sha256::digest(&canonical).iter().map(|b| format!("{b:02x}")).collect()
    }
}
