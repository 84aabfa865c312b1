//! Run configuration: a small, strict, flat `key = value` format with
//! `[section]` headers, chosen so config files diff cleanly and round-trip
//! exactly (`parse(serialize(c)) == c`).
//!
//! Unknown sections or keys are errors rather than warnings — a typo in a
//! tolerance should never silently fall back to a default. The `[energy]`
//! block is the one optional part: the interaction-energy coefficients are
//! user-supplied (see the README for the source to transcribe them from),
//! so all four may be left blank, but a partially filled block is rejected.

use std::fmt::Write as _;

use crate::hardsphere::EnergyCoefficients;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ConfigError {
    #[error("line {line_no}: expected `key = value` or `[section]`, got `{line}`")]
    Syntax { line_no: usize, line: String },
    #[error("line {line_no}: unknown section [{name}]")]
    UnknownSection { line_no: usize, name: String },
    #[error("line {line_no}: unknown key `{key}` in section [{section}]")]
    UnknownKey {
        line_no: usize,
        section: String,
        key: String,
    },
    #[error("line {line_no}: cannot parse `{value}` as a value for `{key}`")]
    InvalidValue {
        line_no: usize,
        key: String,
        value: String,
    },
    #[error("[energy] block is partially filled; set all of d1..d4 or none")]
    PartialEnergy,
    #[error("invalid {field}: {reason}")]
    InvalidField {
        field: &'static str,
        reason: String,
    },
}

/// Which occupation model a run evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    HardSphere,
    Loa,
}

impl ModelKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelKind::HardSphere => "hs",
            ModelKind::Loa => "loa",
        }
    }
}

impl std::str::FromStr for ModelKind {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "hs" => Ok(ModelKind::HardSphere),
            "loa" => Ok(ModelKind::Loa),
            _ => Err(()),
        }
    }
}

/// Uniform scan grid `start, start+step, …, stop` (inclusive).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub step: f64,
    pub stop: f64,
}

impl GridSpec {
    /// Materialize the grid; by construction nonempty and strictly
    /// increasing when `step > 0` and `stop >= start`.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step).round() as usize + 1;
        (0..n).map(|i| self.start + i as f64 * self.step).collect()
    }

    fn validate(&self, field: &'static str) -> Result<(), ConfigError> {
        let ok = self.step > 0.0
            && self.stop >= self.start
            && self.start.is_finite()
            && self.stop.is_finite();
        if ok {
            Ok(())
        } else {
            Err(ConfigError::InvalidField {
                field,
                reason: format!(
                    "need step > 0 and stop >= start, got {} : {} : {}",
                    self.start, self.step, self.stop
                ),
            })
        }
    }
}

/// Everything a run needs; every field has a sensible default.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub model: ModelKind,
    pub nu: u32,
    pub k_f: f64,
    /// Hard-sphere coupling ceiling enforced by the model constructor.
    pub y_max: f64,
    pub y_grid: GridSpec,
    pub beta_grid: GridSpec,
    pub tol: f64,
    pub dist_x_max: f64,
    pub dist_points: usize,
    /// Offset of the one-sided rows that replace grid rows at jump points.
    pub dist_epsilon: f64,
    pub energy: Option<EnergyCoefficients>,
    pub out_dir: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            model: ModelKind::HardSphere,
            nu: 4,
            k_f: 1.33,
            y_max: 0.6,
            y_grid: GridSpec {
                start: 0.05,
                step: 0.025,
                stop: 0.55,
            },
            beta_grid: GridSpec {
                start: 1.01,
                step: 0.0736,
                stop: 2.482,
            },
            tol: 1e-8,
            dist_x_max: 5.0,
            dist_points: 401,
            dist_epsilon: 1e-6,
            energy: None,
            out_dir: "out".to_string(),
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), ConfigError> {
        fn check(field: &'static str, ok: bool, reason: String) -> Result<(), ConfigError> {
            if ok {
                Ok(())
            } else {
                Err(ConfigError::InvalidField { field, reason })
            }
        }
        check("nu", self.nu >= 1, format!("need nu >= 1, got {}", self.nu))?;
        check(
            "k_f",
            self.k_f > 0.0 && self.k_f.is_finite(),
            format!("need k_f > 0, got {}", self.k_f),
        )?;
        check(
            "y_max",
            self.y_max > 0.0 && self.y_max < 1.0,
            format!("need 0 < y_max < 1, got {}", self.y_max),
        )?;
        self.y_grid.validate("y_grid")?;
        self.beta_grid.validate("beta_grid")?;
        check(
            "tol",
            self.tol > 0.0 && self.tol.is_finite(),
            format!("need tol > 0, got {}", self.tol),
        )?;
        check(
            "dist_x_max",
            self.dist_x_max > 0.0,
            format!("need x_max > 0, got {}", self.dist_x_max),
        )?;
        check(
            "dist_points",
            self.dist_points >= 2,
            format!("need points >= 2, got {}", self.dist_points),
        )?;
        check(
            "dist_epsilon",
            self.dist_epsilon > 0.0 && self.dist_epsilon < 0.1,
            format!("need 0 < epsilon < 0.1, got {}", self.dist_epsilon),
        )?;
        Ok(())
    }
}

/// Parse a config text; omitted keys keep their defaults.
pub fn parse(text: &str) -> Result<RunConfig, ConfigError> {
    let mut cfg = RunConfig::default();
    let mut section = String::from("model");
    let mut energy = [None::<f64>; 4];

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim();
            match name {
                "model" | "scan" | "quadrature" | "dist" | "energy" | "output" => {
                    section = name.to_string();
                }
                _ => {
                    return Err(ConfigError::UnknownSection {
                        line_no,
                        name: name.to_string(),
                    })
                }
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ConfigError::Syntax {
                line_no,
                line: line.to_string(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let bad = |v: &str| ConfigError::InvalidValue {
            line_no,
            key: key.to_string(),
            value: v.to_string(),
        };
        let f = |v: &str| v.parse::<f64>().map_err(|_| bad(v));

        match (section.as_str(), key) {
            ("model", "kind") => cfg.model = value.parse().map_err(|()| bad(value))?,
            ("model", "nu") => cfg.nu = value.parse().map_err(|_| bad(value))?,
            ("model", "k_f") => cfg.k_f = f(value)?,
            ("model", "y_max") => cfg.y_max = f(value)?,
            ("scan", "y_start") => cfg.y_grid.start = f(value)?,
            ("scan", "y_step") => cfg.y_grid.step = f(value)?,
            ("scan", "y_stop") => cfg.y_grid.stop = f(value)?,
            ("scan", "beta_start") => cfg.beta_grid.start = f(value)?,
            ("scan", "beta_step") => cfg.beta_grid.step = f(value)?,
            ("scan", "beta_stop") => cfg.beta_grid.stop = f(value)?,
            ("quadrature", "tol") => cfg.tol = f(value)?,
            ("dist", "x_max") => cfg.dist_x_max = f(value)?,
            ("dist", "points") => cfg.dist_points = value.parse().map_err(|_| bad(value))?,
            ("dist", "epsilon") => cfg.dist_epsilon = f(value)?,
            ("energy", "d1" | "d2" | "d3" | "d4") => {
                let slot = (key.as_bytes()[1] - b'1') as usize;
                energy[slot] = if value.is_empty() {
                    None
                } else {
                    Some(f(value)?)
                };
            }
            ("output", "dir") => cfg.out_dir = value.to_string(),
            _ => {
                return Err(ConfigError::UnknownKey {
                    line_no,
                    section: section.clone(),
                    key: key.to_string(),
                })
            }
        }
    }

    cfg.energy = match energy {
        [Some(d1), Some(d2), Some(d3), Some(d4)] => Some(EnergyCoefficients { d1, d2, d3, d4 }),
        [None, None, None, None] => None,
        _ => return Err(ConfigError::PartialEnergy),
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Canonical text form; `{:?}` float formatting keeps the shortest exact
/// representation so values survive a parse/serialize round trip unchanged.
pub fn serialize(cfg: &RunConfig) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "[model]");
    let _ = writeln!(s, "kind = {}", cfg.model.as_str());
    let _ = writeln!(s, "nu = {}", cfg.nu);
    let _ = writeln!(s, "k_f = {:?}", cfg.k_f);
    let _ = writeln!(s, "y_max = {:?}", cfg.y_max);
    let _ = writeln!(s, "\n[scan]");
    let _ = writeln!(s, "y_start = {:?}", cfg.y_grid.start);
    let _ = writeln!(s, "y_step = {:?}", cfg.y_grid.step);
    let _ = writeln!(s, "y_stop = {:?}", cfg.y_grid.stop);
    let _ = writeln!(s, "beta_start = {:?}", cfg.beta_grid.start);
    let _ = writeln!(s, "beta_step = {:?}", cfg.beta_grid.step);
    let _ = writeln!(s, "beta_stop = {:?}", cfg.beta_grid.stop);
    let _ = writeln!(s, "\n[quadrature]");
    let _ = writeln!(s, "tol = {:?}", cfg.tol);
    let _ = writeln!(s, "\n[dist]");
    let _ = writeln!(s, "x_max = {:?}", cfg.dist_x_max);
    let _ = writeln!(s, "points = {}", cfg.dist_points);
    let _ = writeln!(s, "epsilon = {:?}", cfg.dist_epsilon);
    let _ = writeln!(s, "\n[energy]");
    match &cfg.energy {
        Some(e) => {
            let _ = writeln!(s, "d1 = {:?}", e.d1);
            let _ = writeln!(s, "d2 = {:?}", e.d2);
            let _ = writeln!(s, "d3 = {:?}", e.d3);
            let _ = writeln!(s, "d4 = {:?}", e.d4);
        }
        None => {
            let _ = writeln!(s, "d1 =");
            let _ = writeln!(s, "d2 =");
            let _ = writeln!(s, "d3 =");
            let _ = writeln!(s, "d4 =");
        }
    }
    let _ = writeln!(s, "\n[output]");
    let _ = writeln!(s, "dir = {}", cfg.out_dir);
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let cfg = RunConfig::default();
        assert_eq!(parse(&serialize(&cfg)).unwrap(), cfg);
    }

    #[test]
    fn energy_round_trips_when_set() {
        let cfg = RunConfig {
            energy: Some(EnergyCoefficients {
                d1: 0.35,
                d2: -0.1,
                d3: 0.02,
                d4: 1.5e-3,
            }),
            ..RunConfig::default()
        };
        assert_eq!(parse(&serialize(&cfg)).unwrap(), cfg);
    }

    #[test]
    fn rejects_partial_energy_block() {
        let text = "[energy]\nd1 = 0.3\nd2 =\nd3 =\nd4 =\n";
        assert_eq!(parse(text), Err(ConfigError::PartialEnergy));
    }

    #[test]
    fn rejects_unknown_key() {
        assert!(matches!(
            parse("[model]\nknd = hs\n"),
            Err(ConfigError::UnknownKey { .. })
        ));
    }

    #[test]
    fn default_grids_have_21_points() {
        let cfg = RunConfig::default();
        assert_eq!(cfg.y_grid.points().len(), 21);
        assert_eq!(cfg.beta_grid.points().len(), 21);
        let b = cfg.beta_grid.points();
        assert!((b[20] - 2.482).abs() < 1e-12);
    }
}
