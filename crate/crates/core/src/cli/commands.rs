use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::config::RunConfig;
use super::output::{fmt_eps, fmt_sig, write_atomic, CsvDoc};
use crate::eigen::{convergence_study, solve_spectrum};
use crate::model::{potential_x, uniform_grid, UnitMode};
use crate::oracle::fd_spectrum;
use crate::wavefunction::{
    count_nodes, detect_stability, recursion_coeffs, StabilityOutcome, StabilityReport, Method, WavefunctionSamples,
};
use crate::{Error, Result};

/// What a command produced: files written and a human-readable summary.
#[derive(Debug, Clone, Default)]
pub struct CommandOutput {
    pub files: Vec<PathBuf>,
    pub summary: String,
}

fn check_levels(cfg: &RunConfig, available: usize) -> Result<()> {
    if cfg.levels > available {
        return Err(Error::Config(format!("levels = {} exceeds the {available} available", cfg.levels)));
    }
    Ok(())
}

pub fn cmd_spectrum(cfg: &RunConfig, out: &Path) -> Result<CommandOutput> {
    check_levels(cfg, cfg.basis_size)?;
    let spec = cfg.basis_spec()?;
    let sol = solve_spectrum(&spec, cfg.basis_size)?;
    let absolute = cfg.potential.units == UnitMode::Absolute;

    let mut doc = CsvDoc::new(cfg, "spectrum");
    doc.comment(&format!("basis_size={}", cfg.basis_size));
    let mut header = vec!["level", "eps"];
    if absolute {
        header.push("E_absolute");
    }
    doc.row(&header);
    let mut summary = format!("{:>5}  {:>20}\n", "level", "eps");
    for (m, &e) in sol.eps.iter().take(cfg.levels).enumerate() {
        let mut row = vec![m.to_string(), fmt_eps(e)];
        if absolute {
            row.push(fmt_sig(cfg.potential.energy_from_eps(e)));
        }
        doc.row(&row);
        writeln!(summary, "{m:>5}  {:>20.10}", e).unwrap();
    }
    Ok(CommandOutput { files: vec![doc.write(out, "spectrum.csv")?], summary })
}

pub fn cmd_converge(cfg: &RunConfig, sizes: &[usize], out: &Path) -> Result<CommandOutput> {
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Config(format!("sizes must be strictly ascending, got {sizes:?}")));
    }
    let spec = cfg.basis_spec()?;
    let table = convergence_study(&spec, sizes, cfg.levels)?;

    let mut doc = CsvDoc::new(cfg, "converge");
    let mut header = vec!["level".to_string()];
    header.extend(sizes.iter().map(|n| format!("N={n}")));
    doc.row(&header);
    let mut summary = format!("{:>5}", "level");
    for n in sizes {
        write!(summary, "  {:>18}", format!("{n}x{n}")).unwrap();
    }
    summary.push('\n');
    for (m, row) in table.eps.iter().enumerate() {
        let mut cells = vec![m.to_string()];
        cells.extend(row.iter().map(|&e| fmt_eps(e)));
        doc.row(&cells);
        write!(summary, "{m:>5}").unwrap();
        for e in row {
            write!(summary, "  {e:>18.10}").unwrap();
        }
        summary.push('\n');
    }
    Ok(CommandOutput { files: vec![doc.write(out, "converge.csv")?], summary })
}

pub fn cmd_potential(cfg: &RunConfig, out: &Path) -> Result<CommandOutput> {
    let p = &cfg.potential;
    let xs = uniform_grid(p.width, cfg.grid_points)?;
    let unit = match p.units {
        UnitMode::Absolute => 1.0,
        UnitMode::PaperUnits => p.energy_unit(),
    };
    let mut doc = CsvDoc::new(cfg, "potential");
    let label = match p.units {
        UnitMode::Absolute => "absolute units",
        UnitMode::PaperUnits => "units of 4/L^2",
    };
    doc.comment(&format!("V in {label}, clipped at v_max={}", cfg.v_max));
    doc.row(&["x", "V"]);
    let mut clipped = 0;
    for &x in &xs {
        let v = potential_x(p, x)? / unit;
        let shown = if v > cfg.v_max {
            clipped += 1;
            cfg.v_max
        } else {
            v
        };
        doc.row(&[fmt_sig(x), fmt_sig(shown)]);
    }
    let summary = format!("{} points, {clipped} clipped at {}\n", xs.len(), cfg.v_max);
    Ok(CommandOutput { files: vec![doc.write(out, "potential.csv")?], summary })
}

#[derive(Debug, Clone, Serialize)]
struct WavefunctionReport<'a> {
    level: usize,
    eps: f64,
    method: Method,
    n_used: usize,
    nodes: usize,
    n_critical: Option<usize>,
    instability: bool,
    stability: &'a StabilityReport,
}

pub fn cmd_wavefunction(cfg: &RunConfig, level: usize, method: Method, out: &Path) -> Result<CommandOutput> {
    if level >= cfg.basis_size {
        return Err(Error::Config(format!("level {level} needs basis_size > {level}")));
    }
    let spec = cfg.basis_spec()?;
    let n = cfg.basis_size;
    let xs = uniform_grid(spec.width, cfg.grid_points)?;
    let sol = solve_spectrum(&spec, n)?;
    let eps = sol.eps[level];
    let coeffs = match method {
        Method::Recursion => recursion_coeffs(&spec, eps, n)?.values,
        Method::Eigenvector => sol.vectors[level].clone(),
    };
    let psi = crate::wavefunction::reconstruct::expand(&spec, &coeffs, &xs)?;
    let mut samples = WavefunctionSamples { xs: xs.clone(), psi, level: Some(level), eps, n_used: n, method };
    if cfg.normalize {
        samples = samples.normalized(spec.width);
    }
    let nodes = if xs.len() >= 3 { count_nodes(&samples)? } else { 0 };

    let stability = detect_stability(&spec, eps, &cfg.stability, &uniform_grid(spec.width, 1001)?)?;
    let n_critical = match stability.outcome {
        StabilityOutcome::Critical(c) => Some(c),
        _ => None,
    };
    let instability = method == Method::Recursion
        && match stability.outcome {
            StabilityOutcome::Critical(c) => n > c,
            StabilityOutcome::NoStableWindow => true,
            StabilityOutcome::NotReached(_) => false,
        };

    let mut doc = CsvDoc::new(cfg, "wavefunction");
    doc.comment(&format!(
        "level={level} eps={} method={} N={n} normalized={} nodes={nodes} instability={instability}",
        fmt_eps(eps),
        method.label(),
        cfg.normalize
    ));
    doc.row(&["x", "psi"]);
    for (x, v) in samples.xs.iter().zip(&samples.psi) {
        doc.row(&[fmt_sig(*x), fmt_sig(*v)]);
    }
    let csv = doc.write(out, &format!("wavefunction_level{level}_{}.csv", method.label()))?;

    let report = WavefunctionReport { level, eps, method, n_used: n, nodes, n_critical, instability, stability: &stability };
    let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Io(e.to_string()))?;
    let rep = write_atomic(out, &format!("stability_level{level}.json"), json.as_bytes())?;

    let outcome = match stability.outcome {
        StabilityOutcome::Critical(c) => format!("N_c = {c}"),
        StabilityOutcome::NotReached(c) => format!("no instability up to N = {c}"),
        StabilityOutcome::NoStableWindow => "no stable window".to_string(),
    };
    let summary = format!(
        "level {level}: eps = {eps:.10}, {nodes} nodes, {outcome}{}\n",
        if instability { ", recursion reconstruction unstable at this N" } else { "" }
    );
    Ok(CommandOutput { files: vec![csv, rep], summary })
}

pub fn cmd_oracle_compare(cfg: &RunConfig, out: &Path) -> Result<CommandOutput> {
    if cfg.levels > cfg.oracle.levels {
        return Err(Error::Config(format!(
            "levels = {} exceeds oracle.levels = {}",
            cfg.levels, cfg.oracle.levels
        )));
    }
    let spec = cfg.basis_spec()?;
    let (tra, fd) = std::thread::scope(|s| {
        let t = s.spawn(|| solve_spectrum(&spec, cfg.basis_size));
        let f = fd_spectrum(&cfg.potential, &cfg.oracle);
        (t.join().expect("TRA worker panicked"), f)
    });
    let (tra, fd) = (tra?, fd?);

    let mut doc = CsvDoc::new(cfg, "oracle-compare");
    doc.comment(&format!(
        "basis_size={} fd_m={} richardson={}",
        cfg.basis_size, cfg.oracle.m, cfg.oracle.richardson
    ));
    doc.row(&["level", "eps_tra", "eps_fd", "rel_dev"]);
    let mut summary = format!("{:>5}  {:>18}  {:>18}  {:>10}\n", "level", "TRA", "FD", "rel dev");
    for m in 0..cfg.levels {
        let (a, b) = (tra.eps[m], fd[m]);
        let dev = (a - b).abs() / a.abs().max(f64::MIN_POSITIVE);
        doc.row(&[m.to_string(), fmt_eps(a), fmt_sig(b), fmt_sig(dev)]);
        writeln!(summary, "{m:>5}  {a:>18.10}  {b:>18.10}  {dev:>10.2e}").unwrap();
    }
    Ok(CommandOutput { files: vec![doc.write(out, "oracle_compare.csv")?], summary })
}
