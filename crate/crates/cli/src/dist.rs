//! `dist`: tabulate the momentum distribution n̄(x) on a uniform grid. A grid
//! row that lands on a jump point is omitted and replaced by the two
//! one-sided rows x = s−ε, s+ε, so the table never pretends the function has
//! a value at the discontinuity. Each table gets a log-scale companion
//! (x, ln n̄) for the tail x > 1.

use std::error::Error;
use std::fs;
use std::path::Path;

use clap::Args;
use fermi_complexity_core::config::{ModelKind, RunConfig};
use fermi_complexity_core::distribution::MomentumDistribution;
use fermi_complexity_core::hardsphere::{self, HardSphereParams};
use fermi_complexity_core::loa::{self, LoaParams};

use crate::csvout::{num, Table};
use crate::scan::warn_validity;

#[derive(Args)]
pub struct DistArgs {
    /// Hard-sphere couplings y to tabulate (model hs; default: 0.2 0.3 0.4 0.5)
    #[arg(long = "y", value_name = "Y", num_args = 1..)]
    y: Vec<f64>,

    /// Healing parameters beta to tabulate (model loa; default: 1.01 1.5 2.482)
    #[arg(long = "beta", value_name = "BETA", num_args = 1..)]
    beta: Vec<f64>,
}

/// Default coupling set; spans the dilute window at plotting density.
pub const DEFAULT_Y: [f64; 4] = [0.2, 0.3, 0.4, 0.5];
/// Default healing parameters: window edges plus a midpoint.
pub const DEFAULT_BETA: [f64; 3] = [1.01, 1.5, 2.482];

/// Uniform x grid with jump rows replaced by one-sided rows; returns
/// (x, n̄(x)) pairs in ascending x.
pub fn sample_rows<D: MomentumDistribution + ?Sized>(
    d: &D,
    cfg: &RunConfig,
) -> Vec<(f64, f64)> {
    let n = cfg.dist_points;
    let eps = cfg.dist_epsilon;
    let step = cfg.dist_x_max / (n - 1) as f64;
    let mut rows = Vec::with_capacity(n + 2);
    for i in 0..n {
        let x = i as f64 * step;
        match d.singular_points().iter().find(|&&s| (x - s).abs() < 1e-9) {
            Some(&s) => {
                if s - eps >= 0.0 {
                    rows.push((s - eps, d.nbar(s - eps)));
                }
                rows.push((s + eps, d.nbar(s + eps)));
            }
            None => rows.push((x, d.nbar(x))),
        }
    }
    rows
}

fn write_pair<D: MomentumDistribution + ?Sized>(
    d: &D,
    cfg: &RunConfig,
    stem: &str,
    meta: &[(&str, String)],
) -> Result<(), Box<dyn Error>> {
    let rows = sample_rows(d, cfg);

    let path = Path::new(&cfg.out_dir).join(format!("{stem}.csv"));
    let mut table = Table::create(&path, meta, "x,nbar")?;
    for &(x, n) in &rows {
        table.row(&[num(x), num(n)])?;
    }
    table.finish()?;
    println!("wrote {} ({} rows)", path.display(), rows.len());

    // Tail on a log scale; rows where n̄ has decayed to zero carry no
    // information for a log plot and are dropped.
    let log_path = Path::new(&cfg.out_dir).join(format!("{stem}_log.csv"));
    let mut log_table = Table::create(&log_path, meta, "x,ln_nbar")?;
    let mut kept = 0usize;
    for &(x, n) in &rows {
        if x > 1.0 && n > 0.0 {
            log_table.row(&[num(x), num(n.ln())])?;
            kept += 1;
        }
    }
    log_table.finish()?;
    println!("wrote {} ({} rows)", log_path.display(), kept);
    Ok(())
}

fn dist_meta(cfg: &RunConfig, extra: &[(&'static str, String)]) -> Vec<(&'static str, String)> {
    let mut meta = vec![("model", cfg.model.as_str().to_string())];
    meta.extend_from_slice(extra);
    meta.push(("x_max", format!("{:?}", cfg.dist_x_max)));
    meta.push(("points", cfg.dist_points.to_string()));
    meta.push(("epsilon", format!("{:?}", cfg.dist_epsilon)));
    meta
}

pub fn run(cfg: &RunConfig, args: &DistArgs) -> Result<(), Box<dyn Error>> {
    fs::create_dir_all(&cfg.out_dir)?;
    match cfg.model {
        ModelKind::HardSphere => {
            if !args.beta.is_empty() {
                return Err("--beta applies to --model loa".into());
            }
            let ys = if args.y.is_empty() {
                DEFAULT_Y.to_vec()
            } else {
                args.y.clone()
            };
            for &y in &ys {
                let p = HardSphereParams::with_limit(cfg.nu, y, cfg.y_max)
                    .map_err(|e| format!("y = {y}: {e}"))?;
                let d = hardsphere::as_distribution(p);
                let meta = dist_meta(cfg, &[("nu", cfg.nu.to_string()), ("y", format!("{y:?}"))]);
                write_pair(&d, cfg, &format!("dist_hs_y{y}"), &meta)?;
            }
        }
        ModelKind::Loa => {
            if !args.y.is_empty() {
                return Err("--y applies to --model hs".into());
            }
            let betas = if args.beta.is_empty() {
                DEFAULT_BETA.to_vec()
            } else {
                args.beta.clone()
            };
            warn_validity(ModelKind::Loa, &betas);
            for &beta in &betas {
                let p = LoaParams::new(cfg.k_f, beta)
                    .map_err(|e| format!("beta = {beta}: {e}"))?;
                let d = loa::as_distribution(p);
                let meta = dist_meta(
                    cfg,
                    &[("k_f", format!("{:?}", cfg.k_f)), ("beta", format!("{beta:?}"))],
                );
                write_pair(&d, cfg, &format!("dist_loa_beta{beta}"), &meta)?;
            }
        }
    }
    Ok(())
}
