//! `figures`: emit five plot-ready data bundles.
//!
//! 1. `fig1_dist.csv` / `fig1_dist_log.csv` — n̄(x) at four couplings,
//!    linear and log scale.
//! 2. `fig2_entropy.csv` — S_cor along the coupling grid.
//! 3. `fig3_disequilibrium.csv` — D_cor along the coupling grid.
//! 4. `fig4_complexity.csv` — C (and the energy ratio when available).
//! 5. `fig5_overlay_hs.csv` / `fig5_overlay_loa.csv` — both models' measures
//!    against the depleted weight 1−Z on aligned abscissas, for overlay
//!    plots.

use std::error::Error;
use std::fs;
use std::path::Path;

use fermi_complexity_core::config::{ModelKind, RunConfig};
use fermi_complexity_core::hardsphere::{self, HardSphereParams};
use fermi_complexity_core::measures::MeasureSet;
use rayon::prelude::*;

use crate::csvout::{num, Table};
use crate::dist::{sample_rows, DEFAULT_Y};
use crate::scan::{compute_rows, measure_row_hs, scan_meta, warn_validity};

fn fig1(cfg: &RunConfig) -> Result<usize, Box<dyn Error>> {
    let ys: Vec<f64> = DEFAULT_Y
        .iter()
        .copied()
        .filter(|&y| y < cfg.y_max)
        .collect();
    let curves: Vec<Vec<(f64, f64)>> = ys
        .par_iter()
        .map(|&y| {
            let p = HardSphereParams::with_limit(cfg.nu, y, cfg.y_max)
                .expect("couplings filtered to the valid range");
            let d = hardsphere::as_distribution(p);
            sample_rows(&d, cfg)
        })
        .collect();

    let mut meta: Vec<(&str, String)> = vec![("model", "hs".to_string())];
    meta.push(("nu", cfg.nu.to_string()));
    meta.push((
        "couplings",
        ys.iter()
            .map(|y| y.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    ));
    let header_cols: Vec<String> = ys.iter().map(|y| format!("nbar_y{y}")).collect();

    let path = Path::new(&cfg.out_dir).join("fig1_dist.csv");
    let mut table = Table::create(&path, &meta, &format!("x,{}", header_cols.join(",")))?;
    let n_rows = curves[0].len();
    for i in 0..n_rows {
        let mut cells = vec![num(curves[0][i].0)];
        cells.extend(curves.iter().map(|c| num(c[i].1)));
        table.row(&cells)?;
    }
    table.finish()?;

    let log_cols: Vec<String> = ys.iter().map(|y| format!("ln_nbar_y{y}")).collect();
    let log_path = Path::new(&cfg.out_dir).join("fig1_dist_log.csv");
    let mut log_table =
        Table::create(&log_path, &meta, &format!("x,{}", log_cols.join(",")))?;
    for i in 0..n_rows {
        let x = curves[0][i].0;
        if x > 1.0 && curves.iter().all(|c| c[i].1 > 0.0) {
            let mut cells = vec![num(x)];
            cells.extend(curves.iter().map(|c| num(c[i].1.ln())));
            log_table.row(&cells)?;
        }
    }
    log_table.finish()?;
    Ok(2)
}

fn write_measure_table(
    cfg: &RunConfig,
    name: &str,
    header: &str,
    rows: &[MeasureSet],
    cells: impl Fn(&MeasureSet) -> Vec<String>,
) -> Result<(), Box<dyn Error>> {
    let path = Path::new(&cfg.out_dir).join(name);
    let mut table = Table::create(&path, &scan_meta(cfg), header)?;
    for row in rows {
        table.row(&cells(row))?;
    }
    table.finish()?;
    Ok(())
}

/// Coupling that reproduces a given depleted weight: inverting
/// 1−Z = (4/π²)·ln2·(ν−1)·y².
fn coupling_for_depletion(one_minus_z: f64, nu: u32) -> f64 {
    let pref = 4.0 / (std::f64::consts::PI * std::f64::consts::PI)
        * std::f64::consts::LN_2
        * (nu - 1) as f64;
    (one_minus_z / pref).sqrt()
}

pub fn run(cfg: &RunConfig) -> Result<(), Box<dyn Error>> {
    fs::create_dir_all(&cfg.out_dir)?;
    let mut files = 0usize;
    let mut errors: Vec<String> = Vec::new();

    files += fig1(cfg)?;

    // Figures 2–4 share one hard-sphere scan.
    let hs_cfg = RunConfig {
        model: ModelKind::HardSphere,
        ..cfg.clone()
    };
    let y_grid = cfg.y_grid.points();
    let (hs_rows, hs_errors) = compute_rows(ModelKind::HardSphere, &y_grid, &hs_cfg);
    errors.extend(hs_errors);

    write_measure_table(&hs_cfg, "fig2_entropy.csv", "y,one_minus_Z,S_cor", &hs_rows, |r| {
        vec![num(r.parameter), num(1.0 - r.z), num(r.s_cor)]
    })?;
    write_measure_table(
        &hs_cfg,
        "fig3_disequilibrium.csv",
        "y,one_minus_Z,D_cor",
        &hs_rows,
        |r| vec![num(r.parameter), num(1.0 - r.z), num(r.d_cor)],
    )?;
    write_measure_table(
        &hs_cfg,
        "fig4_complexity.csv",
        "y,one_minus_Z,C,e",
        &hs_rows,
        |r| {
            vec![
                num(r.parameter),
                num(1.0 - r.z),
                num(r.complexity),
                r.energy_ratio.map(num).unwrap_or_default(),
            ]
        },
    )?;
    files += 3;

    // Figure 5: both models against the depleted weight, on the same 1−Z
    // abscissas so the curves overlay directly.
    let loa_cfg = RunConfig {
        model: ModelKind::Loa,
        ..cfg.clone()
    };
    let beta_grid = cfg.beta_grid.points();
    warn_validity(ModelKind::Loa, &beta_grid);
    let (loa_rows, loa_errors) = compute_rows(ModelKind::Loa, &beta_grid, &loa_cfg);
    errors.extend(loa_errors);

    write_measure_table(
        &loa_cfg,
        "fig5_overlay_loa.csv",
        "one_minus_Z,S_cor,D_cor,C,beta",
        &loa_rows,
        |r| {
            vec![
                num(1.0 - r.z),
                num(r.s_cor),
                num(r.d_cor),
                num(r.complexity),
                num(r.parameter),
            ]
        },
    )?;

    let mut aligned: Vec<MeasureSet> = Vec::new();
    if cfg.nu >= 2 {
        let targets: Vec<f64> = loa_rows.iter().map(|r| 1.0 - r.z).collect();
        let results: Vec<Result<MeasureSet, String>> = targets
            .par_iter()
            .map(|&oz| {
                let y = coupling_for_depletion(oz, cfg.nu);
                if y >= cfg.y_max {
                    Err(format!(
                        "1-Z = {oz}: needs y = {y:.4} beyond the model limit {}; row skipped",
                        cfg.y_max
                    ))
                } else {
                    measure_row_hs(y, &hs_cfg)
                }
            })
            .collect();
        for r in results {
            match r {
                Ok(row) => aligned.push(row),
                Err(e) => eprintln!("figures: {e}"),
            }
        }
    } else {
        eprintln!("figures: nu = 1 has no depletion; the aligned hard-sphere table is empty");
    }
    write_measure_table(
        &hs_cfg,
        "fig5_overlay_hs.csv",
        "one_minus_Z,S_cor,D_cor,C,y",
        &aligned,
        |r| {
            vec![
                num(1.0 - r.z),
                num(r.s_cor),
                num(r.d_cor),
                num(r.complexity),
                num(r.parameter),
            ]
        },
    )?;
    files += 2;

    println!("wrote {files} figure files to {}", cfg.out_dir);
    if errors.is_empty() {
        Ok(())
    } else {
        for e in &errors {
            eprintln!("figures: {e}");
        }
        Err(format!("{} figure rows failed", errors.len()).into())
    }
}
