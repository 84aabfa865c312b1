//! `fit`: read a scan CSV, fit the scaling relations it supports, and report
//! fitted parameters next to the reference constants so drift is visible at
//! a glance. The report goes to stdout as a text table and to
//! `fit_report.csv` for machine use.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};

use fermi_complexity_core::config::{ModelKind, RunConfig};
use fermi_complexity_core::fitting::{fit_linear, fit_power_law, FitKind, FitResult};
use fermi_complexity_core::reference;

use crate::csvout::{num, Table};

struct ScanRow {
    param: f64,
    one_minus_z: f64,
    s_cor: f64,
    d_cor: f64,
    complexity: f64,
    energy: Option<f64>,
}

struct ScanTable {
    /// `"y"` for the hard-sphere scan, `"beta"` for the smoothed model.
    param_name: String,
    rows: Vec<ScanRow>,
}

fn read_scan(path: &Path) -> Result<ScanTable, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines.next().ok_or_else(|| format!("{}: empty file", path.display()))?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    let param_name = match cols.first() {
        Some(&"y") | Some(&"beta") => cols[0].to_string(),
        other => {
            return Err(format!(
                "{}: first column must be `y` or `beta`, got {:?}",
                path.display(),
                other.unwrap_or(&"")
            ))
        }
    };
    let col = |name: &str| {
        cols.iter()
            .position(|&c| c == name)
            .ok_or_else(|| format!("{}: missing column `{name}`", path.display()))
    };
    let (i_oz, i_s, i_d, i_c, i_e) = (
        col("one_minus_Z")?,
        col("S_cor")?,
        col("D_cor")?,
        col("C")?,
        col("e")?,
    );

    let mut rows = Vec::new();
    for (line_no, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').map(str::trim).collect();
        let cell = |i: usize| -> Result<f64, String> {
            cells
                .get(i)
                .and_then(|c| c.parse::<f64>().ok())
                .ok_or_else(|| {
                    format!("{}: data row {}: bad field {i}", path.display(), line_no + 1)
                })
        };
        let energy = match cells.get(i_e).copied().unwrap_or("") {
            "" => None,
            raw => Some(raw.parse::<f64>().map_err(|_| {
                format!("{}: data row {}: bad energy field", path.display(), line_no + 1)
            })?),
        };
        rows.push(ScanRow {
            param: cell(0)?,
            one_minus_z: cell(i_oz)?,
            s_cor: cell(i_s)?,
            d_cor: cell(i_d)?,
            complexity: cell(i_c)?,
            energy,
        });
    }
    if rows.is_empty() {
        return Err(format!("{}: no data rows", path.display()));
    }
    Ok(ScanTable { param_name, rows })
}

/// One fitted relation plus the constants it is compared against.
pub struct Relation {
    pub label: String,
    pub fit: FitResult,
    pub reference: Option<(f64, f64)>,
}

fn power_relation(
    label: &str,
    points: &[(f64, f64)],
    offset: f64,
    reference: Option<(f64, f64)>,
) -> Result<Relation, String> {
    // Rows with u = 0 or v exactly at the offset carry no information about
    // a power law (and break the log-log seed); drop them.
    let usable: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|&(u, v)| u > 0.0 && v != offset)
        .collect();
    let fit = fit_power_law(&usable, offset).map_err(|e| format!("{label}: {e}"))?;
    Ok(Relation {
        label: label.to_string(),
        fit,
        reference,
    })
}

fn linear_relation(
    label: &str,
    points: &[(f64, f64)],
    reference: Option<(f64, f64)>,
) -> Result<Relation, String> {
    let fit = fit_linear(points).map_err(|e| format!("{label}: {e}"))?;
    Ok(Relation {
        label: label.to_string(),
        fit,
        reference,
    })
}

/// Fit everything the table supports, in report order.
fn build_relations(table: &ScanTable) -> Result<(Vec<Relation>, Vec<String>), String> {
    let mut relations = Vec::new();
    let mut notes = Vec::new();
    let rows = &table.rows;
    let pick = |f: fn(&ScanRow) -> f64, g: fn(&ScanRow) -> f64| -> Vec<(f64, f64)> {
        rows.iter().map(|r| (f(r), g(r))).collect()
    };
    let against_y = table.param_name == "y";

    if against_y {
        let r = &reference::S_COR_VS_Y;
        relations.push(power_relation(
            r.label,
            &pick(|r| r.param, |r| r.s_cor),
            r.offset,
            Some((r.alpha, r.beta)),
        )?);
        let r = &reference::D_COR_VS_Y;
        relations.push(power_relation(
            r.label,
            &pick(|r| r.param, |r| r.d_cor),
            r.offset,
            Some((r.alpha, r.beta)),
        )?);
        let r = &reference::C_VS_Y;
        relations.push(power_relation(
            r.label,
            &pick(|r| r.param, |r| r.complexity),
            r.offset,
            Some((r.alpha, r.beta)),
        )?);
    }

    // Measures against the depleted weight apply to both models; the
    // reference constants describe the hard-sphere scan.
    let refs_oz: [Option<(f64, f64)>; 3] = if against_y {
        [
            Some((
                reference::S_COR_VS_ONE_MINUS_Z.alpha,
                reference::S_COR_VS_ONE_MINUS_Z.beta,
            )),
            Some((
                reference::D_COR_VS_ONE_MINUS_Z.alpha,
                reference::D_COR_VS_ONE_MINUS_Z.beta,
            )),
            Some((
                reference::C_VS_ONE_MINUS_Z.alpha,
                reference::C_VS_ONE_MINUS_Z.beta,
            )),
        ]
    } else {
        [None, None, None]
    };
    relations.push(power_relation(
        "S_cor vs 1-Z",
        &pick(|r| r.one_minus_z, |r| r.s_cor),
        0.0,
        refs_oz[0],
    )?);
    relations.push(power_relation(
        "D_cor vs 1-Z",
        &pick(|r| r.one_minus_z, |r| r.d_cor),
        1.0,
        refs_oz[1],
    )?);
    relations.push(power_relation(
        "C vs 1-Z",
        &pick(|r| r.one_minus_z, |r| r.complexity),
        1.0,
        refs_oz[2],
    )?);

    let energy_points: Vec<&ScanRow> = rows.iter().filter(|r| r.energy.is_some()).collect();
    if energy_points.len() >= 2 {
        let epick = |g: fn(&ScanRow) -> f64| -> Vec<(f64, f64)> {
            energy_points
                .iter()
                .map(|r| (g(r), r.energy.unwrap()))
                .collect()
        };
        let r = &reference::E_VS_S_COR;
        relations.push(linear_relation(
            r.label,
            &epick(|r| r.s_cor),
            Some((r.intercept, r.slope)),
        )?);
        let r = &reference::E_VS_D_COR;
        relations.push(linear_relation(
            r.label,
            &epick(|r| r.d_cor),
            Some((r.intercept, r.slope)),
        )?);
        let r = &reference::E_VS_C;
        relations.push(linear_relation(
            r.label,
            &epick(|r| r.complexity),
            Some((r.intercept, r.slope)),
        )?);
    } else {
        notes.push(
            "energy fits: skipped (no energy values in the scan; supply the [energy] \
             coefficients in the config to enable them)"
                .to_string(),
        );
    }

    Ok((relations, notes))
}

fn print_report(table: &ScanTable, relations: &[Relation], notes: &[String]) {
    println!(
        "fit report: {} rows against `{}`",
        table.rows.len(),
        table.param_name
    );
    println!(
        "{:<14} {:<7} {:>7} {:>12} {:>12} {:>10} {:>10} {:>4} {:>10} {:>10}",
        "relation", "kind", "offset", "param1", "param2", "rms", "R^2", "n", "ref1", "ref2"
    );
    for rel in relations {
        let kind = match rel.fit.kind {
            FitKind::PowerLaw => "power",
            FitKind::Linear => "linear",
        };
        let (r1, r2) = match rel.reference {
            Some((a, b)) => (format!("{a:.5}"), format!("{b:.5}")),
            None => ("-".to_string(), "-".to_string()),
        };
        println!(
            "{:<14} {:<7} {:>7} {:>12.5} {:>12.5} {:>10.3e} {:>10.6} {:>4} {:>10} {:>10}",
            rel.label,
            kind,
            rel.fit.offset,
            rel.fit.params.0,
            rel.fit.params.1,
            rel.fit.rms_residual,
            rel.fit.r_squared,
            rel.fit.n_points,
            r1,
            r2,
        );
    }
    if table.param_name == "y" {
        // The depleted weight grows as y², so each exponent against 1−Z must
        // be half the exponent against y; print the measured ratios.
        let find = |label: &str| relations.iter().find(|r| r.label == label);
        for (a, b, name) in [
            ("S_cor vs 1-Z", "S_cor vs y", "S_cor"),
            ("D_cor vs 1-Z", "D_cor vs y", "D_cor"),
            ("C vs 1-Z", "C vs y", "C"),
        ] {
            if let (Some(rz), Some(ry)) = (find(a), find(b)) {
                println!(
                    "exponent ratio {name}: beta(1-Z)/beta(y) = {:.6}",
                    rz.fit.params.1 / ry.fit.params.1
                );
            }
        }
    }
    for note in notes {
        println!("{note}");
    }
}

fn write_report_csv(
    cfg: &RunConfig,
    input: &Path,
    relations: &[Relation],
) -> Result<PathBuf, Box<dyn Error>> {
    let path = Path::new(&cfg.out_dir).join("fit_report.csv");
    let meta = vec![("input", input.display().to_string())];
    let mut table = Table::create(
        &path,
        &meta,
        "relation,kind,offset,param1,param2,rms,r_squared,n_points,ref1,ref2",
    )?;
    for rel in relations {
        let kind = match rel.fit.kind {
            FitKind::PowerLaw => "power",
            FitKind::Linear => "linear",
        };
        let (r1, r2) = match rel.reference {
            Some((a, b)) => (num(a), num(b)),
            None => (String::new(), String::new()),
        };
        table.row(&[
            rel.label.clone(),
            kind.to_string(),
            num(rel.fit.offset),
            num(rel.fit.params.0),
            num(rel.fit.params.1),
            num(rel.fit.rms_residual),
            num(rel.fit.r_squared),
            rel.fit.n_points.to_string(),
            r1,
            r2,
        ])?;
    }
    table.finish()?;
    Ok(path)
}

pub fn run(cfg: &RunConfig, input: Option<&Path>) -> Result<(), Box<dyn Error>> {
    let default_input = Path::new(&cfg.out_dir).join(match cfg.model {
        ModelKind::HardSphere => "scan_hs.csv",
        ModelKind::Loa => "scan_loa.csv",
    });
    let input = input.map(Path::to_path_buf).unwrap_or(default_input);
    if !input.exists() {
        return Err(format!(
            "{}: not found; run `fermi-complexity scan` first or pass a CSV path",
            input.display()
        )
        .into());
    }

    let table = read_scan(&input)?;
    let (relations, notes) = build_relations(&table)?;
    print_report(&table, &relations, &notes);

    fs::create_dir_all(&cfg.out_dir)?;
    let report = write_report_csv(cfg, &input, &relations)?;
    println!("wrote {}", report.display());
    Ok(())
}
