//! The `solver` command line: argument parsing, run configuration and the
//! five commands, each writing one CSV (plus a JSON stability report for
//! `wavefunction`).

mod commands;
mod config;
mod output;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{cmd_converge, cmd_oracle_compare, cmd_potential, cmd_spectrum, cmd_wavefunction, CommandOutput};
pub use config::RunConfig;
pub use output::{fmt_eps, fmt_sig, write_atomic, CsvDoc};

use crate::wavefunction::Method;
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "solver", version, about = "Spectrum and wavefunctions of the inverse-square singular potential box")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output directory (overrides `output_dir`).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lowest levels for one basis size.
    Spectrum,
    /// Lowest levels across several basis sizes.
    Converge {
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
    },
    /// V(x) on a grid, walls clipped.
    Potential,
    /// psi(x) for one level plus a truncation-stability report.
    Wavefunction {
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Eigenvector)]
        method: MethodArg,
    },
    /// Basis eigenvalues against the finite-difference reference.
    OracleCompare,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recursion,
    Eigenvector,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recursion => Method::Recursion,
            MethodArg::Eigenvector => Method::Eigenvector,
        }
    }
}

pub fn exit_code(err: &Error) -> i32 {
    if err.is_config() {
        EXIT_CONFIG
    } else {
        EXIT_NUMERIC
    }
}

/// Execute parsed arguments.
pub fn execute(cli: &Cli) -> crate::Result<CommandOutput> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| Error::Config("--config <path> is required".into()))?;
    let cfg = RunConfig::load(path)?;
    let out = cli.out.clone().unwrap_or_else(|| cfg.output_dir.clone());
    match &cli.command {
        Command::Spectrum => cmd_spectrum(&cfg, &out),
        Command::Converge { sizes } => cmd_converge(&cfg, sizes.as_deref().unwrap_or(&cfg.sizes), &out),
        Command::Potential => cmd_potential(&cfg, &out),
        Command::Wavefunction { level, method } => cmd_wavefunction(&cfg, *level, (*method).into(), &out),
        Command::OracleCompare => cmd_oracle_compare(&cfg, &out),
    }
}

/// Parse `args`, run, print, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    match execute(&cli) {
        Ok(res) => {
            print!("{}", res.summary);
            for f in &res.files {
                eprintln!("wrote {}", f.display());
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
