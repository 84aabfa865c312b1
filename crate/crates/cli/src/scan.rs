//! `scan`: one measures row per grid point. Rows are independent and run in
//! parallel; output is assembled in grid order, so the CSV is deterministic
//! regardless of scheduling. A row that fails to integrate is reported on
//! stderr and skipped; the command then exits nonzero.

use std::error::Error;
use std::fs;
use std::path::Path;

use fermi_complexity_core::config::{ModelKind, RunConfig};
use fermi_complexity_core::hardsphere::{self, HardSphereParams};
use fermi_complexity_core::loa::{self, LoaParams, BETA_VALIDITY};
use fermi_complexity_core::measures::{self, MeasureSet};
use rayon::prelude::*;

use crate::csvout::{num, Table};

/// Measures at one hard-sphere coupling.
pub fn measure_row_hs(y: f64, cfg: &RunConfig) -> Result<MeasureSet, String> {
    let context = |e: &dyn std::fmt::Display| format!("y = {y}: {e}");
    let p =
        HardSphereParams::with_limit(cfg.nu, y, cfg.y_max).map_err(|e| context(&e))?;
    let d = hardsphere::as_distribution(p);
    let m = measures::complexity(&d, cfg.tol).map_err(|e| context(&e))?;
    Ok(MeasureSet {
        parameter: y,
        z: hardsphere::discontinuity(d.params()),
        s_cor: m.s_cor,
        d_cor: m.d_cor,
        complexity: m.complexity,
        energy_ratio: cfg.energy.as_ref().map(|c| hardsphere::energy_ratio(y, c)),
    })
}

/// Measures at one healing parameter of the smoothed model.
pub fn measure_row_loa(beta: f64, cfg: &RunConfig) -> Result<MeasureSet, String> {
    let context = |e: &dyn std::fmt::Display| format!("beta = {beta}: {e}");
    let p = LoaParams::new(cfg.k_f, beta).map_err(|e| context(&e))?;
    let d = loa::as_distribution(p);
    let m = measures::complexity(&d, cfg.tol).map_err(|e| context(&e))?;
    Ok(MeasureSet {
        parameter: beta,
        z: loa::z_loa(d.params()).map_err(|e| context(&e))?,
        s_cor: m.s_cor,
        d_cor: m.d_cor,
        complexity: m.complexity,
        energy_ratio: None,
    })
}

/// Evaluate every grid point in parallel; the returned rows and errors are
/// both in grid order.
pub fn compute_rows(
    model: ModelKind,
    grid: &[f64],
    cfg: &RunConfig,
) -> (Vec<MeasureSet>, Vec<String>) {
    let results: Vec<Result<MeasureSet, String>> = grid
        .par_iter()
        .map(|&v| match model {
            ModelKind::HardSphere => measure_row_hs(v, cfg),
            ModelKind::Loa => measure_row_loa(v, cfg),
        })
        .collect();
    let mut rows = Vec::new();
    let mut errors = Vec::new();
    for r in results {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => errors.push(e),
        }
    }
    (rows, errors)
}

/// Warn (deterministically, in grid order) about healing parameters outside
/// the window the model was calibrated on; they still evaluate fine.
pub fn warn_validity(model: ModelKind, grid: &[f64]) {
    if model != ModelKind::Loa {
        return;
    }
    let (lo, hi) = BETA_VALIDITY;
    for &beta in grid {
        if !(lo..=hi).contains(&beta) {
            eprintln!(
                "warning: beta = {beta} is outside the calibrated window [{lo}, {hi}]; \
                 values are extrapolated"
            );
        }
    }
}

fn grid_label(g: &fermi_complexity_core::config::GridSpec) -> String {
    format!("{:?}:{:?}:{:?}", g.start, g.step, g.stop)
}

/// Metadata lines common to scan-like outputs.
pub fn scan_meta(cfg: &RunConfig) -> Vec<(&'static str, String)> {
    let mut meta = vec![
        ("model", cfg.model.as_str().to_string()),
        ("nu", cfg.nu.to_string()),
        ("k_f", format!("{:?}", cfg.k_f)),
        ("tol", format!("{:?}", cfg.tol)),
    ];
    match cfg.model {
        ModelKind::HardSphere => meta.push(("y_grid", grid_label(&cfg.y_grid))),
        ModelKind::Loa => meta.push(("beta_grid", grid_label(&cfg.beta_grid))),
    }
    meta.push((
        "energy_coefficients",
        if cfg.energy.is_some() { "present" } else { "absent" }.to_string(),
    ));
    meta
}

/// Format one measures row; the energy cell is blank when no coefficients
/// were supplied.
pub fn row_cells(row: &MeasureSet) -> Vec<String> {
    vec![
        num(row.parameter),
        num(row.z),
        num(1.0 - row.z),
        num(row.s_cor),
        num(row.d_cor),
        num(row.complexity),
        row.energy_ratio.map(num).unwrap_or_default(),
    ]
}

pub fn run(cfg: &RunConfig) -> Result<(), Box<dyn Error>> {
    fs::create_dir_all(&cfg.out_dir)?;
    let (file_name, header, grid) = match cfg.model {
        ModelKind::HardSphere => (
            "scan_hs.csv",
            "y,Z,one_minus_Z,S_cor,D_cor,C,e",
            cfg.y_grid.points(),
        ),
        ModelKind::Loa => (
            "scan_loa.csv",
            "beta,Z,one_minus_Z,S_cor,D_cor,C,e",
            cfg.beta_grid.points(),
        ),
    };
    if cfg.model == ModelKind::HardSphere && cfg.y_grid.stop >= cfg.y_max {
        return Err(format!(
            "y grid reaches {} but the model is limited to y < {}; lower y_stop or raise y_max",
            cfg.y_grid.stop, cfg.y_max
        )
        .into());
    }
    warn_validity(cfg.model, &grid);

    let (rows, errors) = compute_rows(cfg.model, &grid, cfg);

    let path = Path::new(&cfg.out_dir).join(file_name);
    let mut table = Table::create(&path, &scan_meta(cfg), header)?;
    for row in &rows {
        table.row(&row_cells(row))?;
    }
    table.finish()?;
    println!("wrote {} ({} rows)", path.display(), rows.len());

    if errors.is_empty() {
        Ok(())
    } else {
        for e in &errors {
            eprintln!("scan: {e}");
        }
        Err(format!("{} of {} scan rows failed", errors.len(), grid.len()).into())
    }
}
