//! Low-order-approximation (LOA) momentum distribution of nuclear matter
//! with Gaussian correlations.
//!
//! The model is built from the auxiliary function
//!
//! ```text
//! Y(k,μ) = c_μ [ (e^(−k̃₊²) − e^(−k̃₋²))/(2k̃) + ∫₀^{k̃₊} e^(−t²)dt + sgn(k̃₋)∫₀^{|k̃₋|} e^(−t²)dt ]
//! c_μ = (1/(8√π))(μ/2)^(3/2),  k̃ = k/(β√μ),  k̃± = (k_F ± k)/(β√μ)
//! ```
//!
//! and the wound parameter `k_dir = (1/(3√(2π)))(k_F/β)³`, which equals
//! `ρ∫[f(r)−1]² d³r` for the Gaussian correlation function
//! `f(r) = 1 − e^(−β²r²)` at nuclear-matter degeneracy (ρ = 2k_F³/(3π²)).
//! The occupation is
//!
//! ```text
//! n_LOA(k) = θ(k_F−k)[1 − k_dir + Y(k,8)] + 8[k_dir·Y(k,2) − Y(k,4)²]
//! ```
//!
//! — a step of height `Z_LOA = 1 − k_dir + Y(k_F,8)` riding on a continuous,
//! Gaussian-tailed background. Momenta are in fm⁻¹ throughout.

use std::f64::consts::PI;

use crate::distribution::{MomentumDistribution, Tail};
use crate::special::{gauss_integral, SQRT_PI};

/// Standard nuclear-matter Fermi wavenumber (fm⁻¹) used as the default scale.
pub const DEFAULT_K_F: f64 = 1.33;

/// Correlation-strength window (in β, fm⁻¹) over which the model is used at
/// `k_F = 1.33`; outside it the truncated cluster expansion degrades.
pub const BETA_VALIDITY: (f64, f64) = (1.01, 2.482);

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum LoaError {
    #[error("parameters must be positive, got k_F = {k_f}, beta = {beta}")]
    InvalidParams { k_f: f64, beta: f64 },
    #[error("mu must be one of 2, 4, 8, got {mu}")]
    InvalidMu { mu: u32 },
    #[error("momentum must be nonnegative, got k = {k}")]
    NegativeMomentum { k: f64 },
}

/// Fermi wavenumber `k_F` and Gaussian correlation parameter `β` (both fm⁻¹).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoaParams {
    pub k_f: f64,
    pub beta: f64,
}

impl LoaParams {
    pub fn new(k_f: f64, beta: f64) -> Result<Self, LoaError> {
        if !(k_f > 0.0 && k_f.is_finite() && beta > 0.0 && beta.is_finite()) {
            return Err(LoaError::InvalidParams { k_f, beta });
        }
        Ok(LoaParams { k_f, beta })
    }

    /// Whether β lies inside the validity window the model is quoted for.
    pub fn in_validity_window(&self) -> bool {
        (BETA_VALIDITY.0..=BETA_VALIDITY.1).contains(&self.beta)
    }
}

/// Wound parameter: how strongly the correlation hole "wounds" the
/// uncorrelated wavefunction; a rough correlation-strength measure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WoundParameter {
    pub k_dir: f64,
}

/// `k_dir = (1/(3√(2π)))(k_F/β)³`.
pub fn wound_parameter(p: &LoaParams) -> WoundParameter {
    WoundParameter {
        k_dir: (p.k_f / p.beta).powi(3) / (3.0 * (2.0 * PI).sqrt()),
    }
}

/// The auxiliary function `Y(k, μ)` for μ ∈ {2, 4, 8}.
///
/// The first term is 0/0 at k = 0; its limit is `−2ã·e^(−ã²)` with
/// `ã = k_F/(β√μ)`, handled analytically.
pub fn y_function(k: f64, mu: u32, p: &LoaParams) -> Result<f64, LoaError> {
    if !matches!(mu, 2 | 4 | 8) {
        return Err(LoaError::InvalidMu { mu });
    }
    if !(k >= 0.0) || !k.is_finite() {
        return Err(LoaError::NegativeMomentum { k });
    }
    let c_mu = (mu as f64 / 2.0).powf(1.5) / (8.0 * SQRT_PI);
    let scale = p.beta * (mu as f64).sqrt();
    let kt = k / scale;
    let kp = (p.k_f + k) / scale;
    let km = (p.k_f - k) / scale;

    let first = if kt == 0.0 {
        let a = p.k_f / scale;
        -2.0 * a * (-a * a).exp()
    } else {
        ((-kp * kp).exp() - (-km * km).exp()) / (2.0 * kt)
    };
    // sgn(k̃₋)·∫₀^{|k̃₋|}: the Gaussian integral is odd, so this is just
    // gauss_integral(k̃₋) with its sign.
    Ok(c_mu * (first + gauss_integral(kp) + gauss_integral(km)))
}

/// Occupation `n_LOA(k)`; the step θ(k_F−k) is taken strict, so k = k_F
/// evaluates the outside branch (the jump itself is [`z_loa`]).
pub fn n_loa(k: f64, p: &LoaParams) -> Result<f64, LoaError> {
    let k_dir = wound_parameter(p).k_dir;
    let mut v = 8.0 * (k_dir * y_function(k, 2, p)? - y_function(k, 4, p)?.powi(2));
    if k < p.k_f {
        v += 1.0 - k_dir + y_function(k, 8, p)?;
    }
    Ok(v)
}

/// Discontinuity at the Fermi surface: `Z_LOA = 1 − k_dir + Y(k_F, 8)`
/// (the non-step part of the occupation is continuous across k_F).
pub fn z_loa(p: &LoaParams) -> Result<f64, LoaError> {
    Ok(1.0 - wound_parameter(p).k_dir + y_function(p.k_f, 8, p)?)
}

/// [`MomentumDistribution`] view in the dimensionless variable x = k/k_F,
/// with the Fermi surface declared singular and the Gaussian-dominated tail
/// declared exponential.
pub struct LoaDistribution {
    params: LoaParams,
    singular: [f64; 1],
}

pub fn as_distribution(p: LoaParams) -> LoaDistribution {
    LoaDistribution {
        params: p,
        singular: [1.0],
    }
}

impl LoaDistribution {
    pub fn params(&self) -> &LoaParams {
        &self.params
    }
}

impl MomentumDistribution for LoaDistribution {
    fn nbar(&self, x: f64) -> f64 {
        n_loa(x * self.params.k_f, &self.params).expect("x >= 0 is in domain")
    }

    fn singular_points(&self) -> &[f64] {
        &self.singular
    }

    fn tail(&self) -> Tail {
        Tail::Exponential
    }

    fn label(&self) -> &str {
        "loa"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wound_parameter_cubic_scaling() {
        let p1 = LoaParams::new(1.33, 1.2).unwrap();
        let p2 = LoaParams::new(1.33, 2.4).unwrap();
        let r = wound_parameter(&p1).k_dir / wound_parameter(&p2).k_dir;
        assert!((r - 8.0).abs() < 1e-12);
    }

    #[test]
    fn y_rejects_bad_mu() {
        let p = LoaParams::new(1.33, 1.5).unwrap();
        assert_eq!(y_function(1.0, 3, &p), Err(LoaError::InvalidMu { mu: 3 }));
    }

    #[test]
    fn y_continuous_at_origin() {
        // The analytic k = 0 limit agrees with a nearby finite-k evaluation.
        // (Much smaller k would test cancellation noise in the finite-k
        // branch, not the limit: the difference of exponentials loses
        // precision as k → 0, which is why the limit is closed-form.)
        let p = LoaParams::new(1.33, 2.0).unwrap();
        let at0 = y_function(0.0, 8, &p).unwrap();
        let near = y_function(1e-4, 8, &p).unwrap();
        assert!((at0 - near).abs() < 1e-9, "{at0} vs {near}");
    }
}
