use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use super::config::RunConfig;
use crate::Result;

/// CSV text with the `#` metadata header every output file carries.
pub struct CsvDoc {
    text: String,
}

impl CsvDoc {
    pub fn new(cfg: &RunConfig, kind: &str) -> Self {
        let p = &cfg.potential;
        let mut text = String::new();
        writeln!(text, "# tra-box {kind}").unwrap();
        writeln!(text, "# config_sha256={}", cfg.hash()).unwrap();
        writeln!(
            text,
            "# units={} width={} energy_unit=4/L^2 v0={} v1={} vl={} vr={}",
            p.units.label(),
            p.width,
            p.v0,
            p.v1,
            p.vl,
            p.vr
        )
        .unwrap();
        Self { text }
    }

    pub fn comment(&mut self, line: &str) {
        writeln!(self.text, "# {line}").unwrap();
    }

    pub fn row<S: AsRef<str>>(&mut self, cells: &[S]) {
        let joined: Vec<&str> = cells.iter().map(AsRef::as_ref).collect();
        writeln!(self.text, "{}", joined.join(",")).unwrap();
    }

    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn write(&self, dir: &Path, name: &str) -> Result<PathBuf> {
        write_atomic(dir, name, self.text.as_bytes())
    }
}

/// Write to a sibling temp file, then rename over the target.
pub fn write_atomic(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let target = dir.join(name);
    let tmp = dir.join(format!(".{name}.tmp{}", std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &target)?;
    Ok(target)
}

/// Eigenvalues: ten decimals, the precision of the published table.
pub fn fmt_eps(v: f64) -> String {
    format!("{v:.10}")
}

/// Everything else: twelve significant digits.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.11e}")
    }
}
