//! Information-theoretic measures of a momentum distribution.
//!
//! For an occupation n̄(x) with x = k/k_F, the correlation entropy,
//! disequilibrium, and statistical complexity are
//!
//! ```text
//! S_cor = −3 ∫₀^∞ x² n̄(x) ln n̄(x) dx      (integrable jump at x = 1)
//! D_cor = +3 ∫₀^∞ x² n̄(x)² dx
//! C     = D_cor · e^(S_cor)
//! ```
//!
//! so the ideal step function n̄ = θ(1−x) gives S_cor = 0, D_cor = 1, C = 1,
//! and any correlation raises S_cor, lowers D_cor, and raises C.
//!
//! Dimensional (per-mode) measures reintroduce the Fermi-volume scale
//! V_k = (4/3)πk_F³: S_k = ln V_k + S_cor and D_k = D_cor/V_k; their product
//! structure makes C = (D_k·V_k)·e^(S_k − ln V_k) independent of k_F.
//!
//! The integrals are split at x = 1 and at any other declared singular
//! points. Power-law tails (n̄ ~ a/x^q) are truncated at an X chosen so the
//! analytically-bounded remainder is below a tenth of the tolerance, and the
//! leading-order remainder is added back; exponential tails are handed to the
//! semi-infinite integrator directly.

use crate::distribution::{MomentumDistribution, Tail};
use crate::hardsphere::SystemScale;
use crate::quadrature::{integrate_finite, integrate_semiinfinite, Integrand, QuadError};
use crate::special::xlnx;

/// Occupations more negative than this are treated as a model defect rather
/// than floating-point noise in a decaying tail.
const NEGATIVE_FLOOR: f64 = -1e-12;

#[derive(Debug, thiserror::Error)]
pub enum MeasuresError {
    #[error("integration failed: {0}")]
    Quadrature(#[from] QuadError),
    #[error("tolerance must be finite and positive, got {tol}")]
    InvalidTolerance { tol: f64 },
    #[error("power-law tail exponent {exponent} decays too slowly for a finite measure")]
    TailTooSlow { exponent: f64 },
    #[error("distribution evaluated to a significantly negative occupation near x = {x}")]
    NegativeOccupation { x: f64 },
}

/// The three correlation measures of one distribution, evaluated together.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationMeasures {
    pub s_cor: f64,
    pub d_cor: f64,
    pub complexity: f64,
}

/// One scan row: measures plus the quasiparticle weight and (optionally) the
/// energy ratio at the same coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureSet {
    /// Scan parameter: y for hard spheres, β for the LOA model.
    pub parameter: f64,
    pub z: f64,
    pub s_cor: f64,
    pub d_cor: f64,
    pub complexity: f64,
    pub energy_ratio: Option<f64>,
}

/// Clamp tail noise to zero, flag genuine negativity as NaN so the
/// integrator surfaces the offending abscissa.
fn occupation_or_nan(n: f64) -> f64 {
    if n <= 0.0 {
        if n < NEGATIVE_FLOOR {
            f64::NAN
        } else {
            0.0
        }
    } else {
        n
    }
}

fn check_tol(tol: f64) -> Result<(), MeasuresError> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(MeasuresError::InvalidTolerance { tol })
    }
}

/// Remap integrator NaN reports to the negative-occupation diagnosis when
/// that is what the closure injected.
fn map_nan<D: MomentumDistribution + ?Sized>(err: QuadError, d: &D) -> MeasuresError {
    if let QuadError::NonFiniteSample { x } = err {
        if d.nbar(x).is_nan() {
            return MeasuresError::Quadrature(err);
        }
        return MeasuresError::NegativeOccupation { x };
    }
    MeasuresError::Quadrature(err)
}

/// Truncation point X ≥ `start` (doubling) at which `bound(X)` < `budget`.
fn truncation_point(start: f64, budget: f64, bound: impl Fn(f64) -> f64) -> f64 {
    let mut x = start;
    while bound(x) >= budget && x < 1e300 {
        x *= 2.0;
    }
    x
}

/// ∫_X^∞ x²·(a/x^q)·ln(a/x^q) dx, the leading-order entropy-integrand tail.
fn entropy_tail_integral(a: f64, q: f64, x: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    a * x.powf(3.0 - q) / (q - 3.0) * (a.ln() - q * x.ln() - q / (q - 3.0))
}

/// ∫_X^∞ x²·(a/x^q)² dx.
fn disequilibrium_tail_integral(a: f64, q: f64, x: f64) -> f64 {
    if a == 0.0 {
        return 0.0;
    }
    a * a * x.powf(3.0 - 2.0 * q) / (2.0 * q - 3.0)
}

/// Interior singular points of `d` restricted to (lo, hi).
fn interior_singular<D: MomentumDistribution + ?Sized>(d: &D, lo: f64, hi: f64) -> Vec<f64> {
    d.singular_points()
        .iter()
        .copied()
        .filter(|&s| s > lo && s < hi)
        .collect()
}

/// ∫₀^∞ x²·g(n̄(x)) dx with the jump at x = 1 split out, returned as
/// (inner, outer-minus-tail) plus the analytic tail remainder.
fn split_integral<D, G>(d: &D, tol: f64, g: G, tail_kind: TailUse) -> Result<f64, MeasuresError>
where
    D: MomentumDistribution + ?Sized,
    G: Fn(f64) -> f64 + Copy,
{
    let f = move |x: f64| x * x * g(occupation_or_nan(d.nbar(x)));

    // Inner region [0, 1]: integrand is smooth, n̄ may fall steeply toward 1.
    let mut inner_sing = interior_singular(d, 0.0, 1.0);
    inner_sing.push(1.0);
    let inner = integrate_finite(
        &Integrand::new(f).with_singular_points(&inner_sing),
        0.0,
        1.0,
        tol / 3.0,
    )
    .map_err(|e| map_nan(e, d))?;

    // Outer region [1, ∞): handled per declared tail.
    let outer = match (d.tail(), tail_kind) {
        (Tail::PowerLaw { exponent: q, amplitude: a }, TailUse::Entropy) => {
            if q <= 3.0 {
                return Err(MeasuresError::TailTooSlow { exponent: q });
            }
            let last = d
                .singular_points()
                .iter()
                .copied()
                .fold(1.0_f64, f64::max);
            let x_cut = truncation_point(2.0 * last.max(4.0), tol / 10.0, |x| {
                3.0 * entropy_tail_integral(a, q, x).abs()
            });
            let mut sing = interior_singular(d, 1.0, x_cut);
            sing.insert(0, 1.0);
            let body = integrate_finite(
                &Integrand::new(f).with_singular_points(&sing),
                1.0,
                x_cut,
                tol / 3.0,
            )
            .map_err(|e| map_nan(e, d))?;
            body.value + entropy_tail_integral(a, q, x_cut)
        }
        (Tail::PowerLaw { exponent: q, amplitude: a }, TailUse::Disequilibrium) => {
            if 2.0 * q <= 3.0 {
                return Err(MeasuresError::TailTooSlow { exponent: q });
            }
            let last = d
                .singular_points()
                .iter()
                .copied()
                .fold(1.0_f64, f64::max);
            let x_cut = truncation_point(2.0 * last.max(4.0), tol / 10.0, |x| {
                3.0 * disequilibrium_tail_integral(a, q, x)
            });
            let mut sing = interior_singular(d, 1.0, x_cut);
            sing.insert(0, 1.0);
            let body = integrate_finite(
                &Integrand::new(f).with_singular_points(&sing),
                1.0,
                x_cut,
                tol / 3.0,
            )
            .map_err(|e| map_nan(e, d))?;
            body.value + disequilibrium_tail_integral(a, q, x_cut)
        }
        (Tail::Exponential, _) => {
            let sing = vec![1.0];
            integrate_semiinfinite(
                &Integrand::new(f)
                    .with_singular_points(&sing)
                    .with_exponential_tail(),
                1.0,
                tol / 3.0,
            )
            .map_err(|e| map_nan(e, d))?
            .value
        }
    };

    Ok(inner.value + outer)
}

#[derive(Clone, Copy)]
enum TailUse {
    Entropy,
    Disequilibrium,
}

/// Correlation entropy `S_cor = −3∫x²n̄ ln n̄ dx` (0 for the ideal step,
/// positive otherwise; the integrand is taken as 0 wherever n̄ = 0).
pub fn entropy_cor<D: MomentumDistribution + ?Sized>(
    d: &D,
    tol: f64,
) -> Result<f64, MeasuresError> {
    check_tol(tol)?;
    Ok(-3.0 * split_integral(d, tol / 3.0, xlnx, TailUse::Entropy)?)
}

/// Disequilibrium `D_cor = 3∫x²n̄² dx` (1 for the ideal step, in (0, 1)
/// otherwise).
pub fn disequilibrium_cor<D: MomentumDistribution + ?Sized>(
    d: &D,
    tol: f64,
) -> Result<f64, MeasuresError> {
    check_tol(tol)?;
    Ok(3.0 * split_integral(d, tol / 3.0, |n| n * n, TailUse::Disequilibrium)?)
}

/// Statistical (LMC-style) complexity `C = D_cor·e^(S_cor)` together with
/// its two factors.
pub fn complexity<D: MomentumDistribution + ?Sized>(
    d: &D,
    tol: f64,
) -> Result<CorrelationMeasures, MeasuresError> {
    let s_cor = entropy_cor(d, tol)?;
    let d_cor = disequilibrium_cor(d, tol)?;
    Ok(CorrelationMeasures {
        s_cor,
        d_cor,
        complexity: d_cor * s_cor.exp(),
    })
}

/// Dimensional entropy `S = ln V_k + S_cor` for a given Fermi-volume scale.
pub fn entropy_total<D: MomentumDistribution + ?Sized>(
    d: &D,
    scale: SystemScale,
    tol: f64,
) -> Result<f64, MeasuresError> {
    Ok(scale.v_k().ln() + entropy_cor(d, tol)?)
}

/// Dimensional disequilibrium `D = D_cor / V_k`.
pub fn disequilibrium_total<D: MomentumDistribution + ?Sized>(
    d: &D,
    scale: SystemScale,
    tol: f64,
) -> Result<f64, MeasuresError> {
    Ok(disequilibrium_cor(d, tol)? / scale.v_k())
}

/// Information content `H = e^S` — the effective occupied momentum-space
/// volume for the dimensional entropy `S`.
pub fn information_content(entropy: f64) -> f64 {
    entropy.exp()
}
