//! Least-squares fits used to condense scan output into scaling relations.
//!
//! Two shapes cover everything reported here:
//!
//! * power law with a known offset, `v = offset + α·u^β` (offset 0 for
//!   entropy-like quantities, 1 for disequilibrium and complexity, whose
//!   ideal-gas value is 1);
//! * straight line, `v = intercept + slope·u`.
//!
//! The power-law fit seeds (α, β) from an ordinary least-squares line through
//! (ln u, ln|v − offset|) and then polishes with Gauss–Newton on the residual
//! in *linear* space, so the reported parameters minimize the plain sum of
//! squares rather than the log-space surrogate.

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum FitError {
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("power-law fit requires positive abscissae, got u = {u}")]
    NonPositiveAbscissa { u: f64 },
    #[error("v − offset changes sign or vanishes at u = {u}; a single power law cannot fit it")]
    SignMixed { u: f64 },
    #[error("normal equations are singular (degenerate abscissae or stalled iteration)")]
    SingularNormalEquations,
    #[error("iteration produced non-finite parameters")]
    Diverged,
}

/// Which model a [`FitResult`] reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitKind {
    /// `v = offset + α·u^β`; params = (α, β).
    PowerLaw,
    /// `v = intercept + slope·u`; params = (intercept, slope).
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub kind: FitKind,
    /// Fixed offset for power laws (0 or 1 in practice), 0 for lines.
    pub offset: f64,
    /// (α, β) for power laws, (intercept, slope) for lines.
    pub params: (f64, f64),
    /// Root-mean-square residual in linear space.
    pub rms_residual: f64,
    /// Coefficient of determination, 1 − SS_res/SS_tot.
    pub r_squared: f64,
    pub n_points: usize,
}

/// Plain OLS line through (x, y); returns (intercept, slope).
fn ols_line(xy: &[(f64, f64)]) -> Result<(f64, f64), FitError> {
    let n = xy.len() as f64;
    let sx: f64 = xy.iter().map(|p| p.0).sum();
    let sy: f64 = xy.iter().map(|p| p.1).sum();
    let sxx: f64 = xy.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = xy.iter().map(|p| p.0 * p.1).sum();
    let det = n * sxx - sx * sx;
    if det.abs() <= f64::EPSILON * n * sxx.abs().max(1.0) {
        return Err(FitError::SingularNormalEquations);
    }
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sy - slope * sx) / n;
    Ok((intercept, slope))
}

fn residual_stats(points: &[(f64, f64)], model: impl Fn(f64) -> f64) -> (f64, f64) {
    let n = points.len() as f64;
    let ss_res: f64 = points.iter().map(|&(u, v)| (v - model(u)).powi(2)).sum();
    let mean_v: f64 = points.iter().map(|p| p.1).sum::<f64>() / n;
    let ss_tot: f64 = points.iter().map(|&(_, v)| (v - mean_v).powi(2)).sum();
    let r2 = if ss_tot > 0.0 { 1.0 - ss_res / ss_tot } else { 1.0 };
    ((ss_res / n).sqrt(), r2)
}

/// Fit `v = offset + α·u^β` to `points` with the offset held fixed.
///
/// All u must be positive and all v − offset must share one sign. The fit is
/// exact (residual at rounding level) when the data actually lie on a power
/// law, and is invariant under reordering of the points.
pub fn fit_power_law(points: &[(f64, f64)], offset: f64) -> Result<FitResult, FitError> {
    if points.len() < 3 {
        return Err(FitError::TooFewPoints {
            need: 3,
            got: points.len(),
        });
    }
    for &(u, _) in points {
        if !(u > 0.0) || !u.is_finite() {
            return Err(FitError::NonPositiveAbscissa { u });
        }
    }
    let sign = (points[0].1 - offset).signum();
    for &(u, v) in points {
        let w = v - offset;
        if w == 0.0 || !w.is_finite() || w.signum() != sign {
            return Err(FitError::SignMixed { u });
        }
    }

    // Seed from log-log regression: ln|v − offset| = ln|α| + β ln u.
    let logged: Vec<(f64, f64)> = points
        .iter()
        .map(|&(u, v)| (u.ln(), (v - offset).abs().ln()))
        .collect();
    let (lna, mut beta) = ols_line(&logged)?;
    let mut alpha = sign * lna.exp();

    // Gauss–Newton on r_i = v_i − offset − α·u_i^β with J = [u^β, α·u^β·ln u].
    for _ in 0..100 {
        let mut j11 = 0.0;
        let mut j12 = 0.0;
        let mut j22 = 0.0;
        let mut g1 = 0.0;
        let mut g2 = 0.0;
        for &(u, v) in points {
            let ub = u.powf(beta);
            let r = v - offset - alpha * ub;
            let d_alpha = ub;
            let d_beta = alpha * ub * u.ln();
            j11 += d_alpha * d_alpha;
            j12 += d_alpha * d_beta;
            j22 += d_beta * d_beta;
            g1 += d_alpha * r;
            g2 += d_beta * r;
        }
        let det = j11 * j22 - j12 * j12;
        if !det.is_finite() || det.abs() <= 1e-300 {
            return Err(FitError::SingularNormalEquations);
        }
        let da = (j22 * g1 - j12 * g2) / det;
        let db = (j11 * g2 - j12 * g1) / det;
        alpha += da;
        beta += db;
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(FitError::Diverged);
        }
        let step = (da / alpha.abs().max(1e-300))
            .abs()
            .max((db / beta.abs().max(1e-300)).abs());
        if step < 1e-12 {
            break;
        }
    }

    let (rms, r2) = residual_stats(points, |u| offset + alpha * u.powf(beta));
    Ok(FitResult {
        kind: FitKind::PowerLaw,
        offset,
        params: (alpha, beta),
        rms_residual: rms,
        r_squared: r2,
        n_points: points.len(),
    })
}

/// Ordinary least-squares line `v = intercept + slope·u`.
pub fn fit_linear(points: &[(f64, f64)]) -> Result<FitResult, FitError> {
    if points.len() < 2 {
        return Err(FitError::TooFewPoints {
            need: 2,
            got: points.len(),
        });
    }
    let (intercept, slope) = ols_line(points)?;
    let (rms, r2) = residual_stats(points, |u| intercept + slope * u);
    Ok(FitResult {
        kind: FitKind::Linear,
        offset: 0.0,
        params: (intercept, slope),
        rms_residual: rms,
        r_squared: r2,
        n_points: points.len(),
    })
}
