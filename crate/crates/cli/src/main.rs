//! Command-line driver: parameter scans, distribution tables, fit reports,
//! and figure-data emission for the momentum-distribution library.
//!
//! Configuration is resolved in order: `--config PATH`, then the
//! `FERMI_COMPLEXITY_CONFIG` environment variable, then built-in defaults;
//! `--out`, `--model`, and `--tol` override the loaded values. Exit status is
//! 0 only if every requested row succeeded.

mod csvout;
mod dist;
mod figures;
mod fit;
mod scan;

use std::env;
use std::error::Error;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fermi_complexity_core::config::{self, ModelKind, RunConfig};

#[derive(Parser)]
#[command(
    name = "fermi-complexity",
    version,
    about = "Momentum distributions and statistical complexity of dilute Fermi gases"
)]
struct Cli {
    /// Config file; falls back to $FERMI_COMPLEXITY_CONFIG, then defaults
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output directory (overrides the config)
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Occupation model (overrides the config)
    #[arg(long, global = true, value_enum)]
    model: Option<ModelArg>,

    /// Quadrature tolerance (overrides the config)
    #[arg(long, global = true, value_name = "REAL", value_parser = parse_tol)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    /// Dilute hard-sphere gas, second order in the coupling y = k_F·c
    Hs,
    /// Low-order cluster approximation with Gaussian correlations
    Loa,
}

impl From<ModelArg> for ModelKind {
    fn from(m: ModelArg) -> ModelKind {
        match m {
            ModelArg::Hs => ModelKind::HardSphere,
            ModelArg::Loa => ModelKind::Loa,
        }
    }
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a number"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("tolerance must be positive and finite".to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the momentum distribution n(x), x = k/k_F
    Dist(dist::DistArgs),
    /// Scan the coupling grid and write one measures row per point
    Scan,
    /// Fit the scaling relations of a scan CSV and compare to references
    Fit {
        /// Scan CSV to fit (default: <out dir>/scan_<model>.csv)
        input: Option<PathBuf>,
    },
    /// Write the five figure data bundles
    Figures,
}

fn load_config(cli: &Cli) -> Result<RunConfig, Box<dyn Error>> {
    let path = cli
        .config
        .clone()
        .or_else(|| env::var_os("FERMI_COMPLEXITY_CONFIG").map(PathBuf::from));
    let mut cfg = match path {
        Some(p) => {
            let text = fs::read_to_string(&p)
                .map_err(|e| format!("config {}: {e}", p.display()))?;
            config::parse(&text).map_err(|e| format!("config {}: {e}", p.display()))?
        }
        None => RunConfig::default(),
    };
    if let Some(m) = cli.model {
        cfg.model = m.into();
    }
    if let Some(t) = cli.tol {
        cfg.tol = t;
    }
    if let Some(out) = &cli.out {
        cfg.out_dir = out.display().to_string();
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> Result<(), Box<dyn Error>> {
    let cfg = load_config(cli)?;
    match &cli.command {
        Command::Dist(args) => dist::run(&cfg, args),
        Command::Scan => scan::run(&cfg),
        Command::Fit { input } => fit::run(&cfg, input.as_deref()),
        Command::Figures => figures::run(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fermi-complexity: {e}");
            ExitCode::FAILURE
        }
    }
}
