//! Momentum distribution of a dilute hard-sphere Fermi gas, to second order
//! in the correlation parameter `y = k_F·c` (hard-core radius `c`).
//!
//! The occupation `n̄(x)`, `x = k/k_F`, is known in closed form in four
//! pieces: one below the Fermi surface and three above it, with seams at
//! x = √2 and x = 3 where the pieces join continuously. The distribution has
//! a finite jump `Z` at x = 1 and a logarithmic singularity in slope there —
//! the `(x−1)·ln|x−1|` term of the near-surface expansions — and a `x⁻⁴`
//! power-law tail.
//!
//! Beyond `x = 10` the closed form is abandoned for its inverse-power
//! series: the bracketed combinations cancel to ~x⁻³ of their individual
//! size, so in double precision the closed form loses ~7 digits at x = 10
//! and is pure noise past x ≈ 2000, while the series
//!
//! ```text
//! n̄(x) = 2(ν−1)y²/(3π²) · [ (2/3)x⁻⁴ + (4/5)x⁻⁶ + (34/35)x⁻⁸ + (56/45)x⁻¹⁰ + … ]
//! ```
//!
//! is accurate to better than 2e-8 relative at the switch point and improves
//! outward. The x⁻⁴ amplitude also feeds the analytic tail remainders used
//! by the measures module.

use std::f64::consts::{LN_2, PI, SQRT_2};

use crate::distribution::{MomentumDistribution, Tail};
use crate::special::xlnx;

/// Default upper validity bound on `y`; the expansion is low-density and the
/// fitted relations are only explored below this.
pub const DEFAULT_Y_MAX: f64 = 0.6;

/// Where `nbar_above` switches from the closed form to the tail series.
const SERIES_SWITCH: f64 = 10.0;

/// Half-window around the Fermi surface where the asymptotic expansions are
/// trustworthy (their error is O((x−1)²)).
const ASYMPTOTIC_WINDOW: f64 = 0.2;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum HardSphereError {
    #[error("degeneracy must satisfy nu >= 1, got {nu}")]
    InvalidDegeneracy { nu: u32 },
    #[error("correlation parameter must satisfy 0 <= y <= {max}, got {y}")]
    CorrelationOutOfRange { y: f64, max: f64 },
    #[error("{name} = {x} is outside the domain {domain}")]
    Domain {
        name: &'static str,
        x: f64,
        domain: &'static str,
    },
    #[error("input must be positive, got {value}")]
    NonPositive { value: f64 },
}

/// Degeneracy ν (spin–isospin species) and correlation strength `y = k_F·c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardSphereParams {
    pub nu: u32,
    pub y: f64,
}

impl HardSphereParams {
    /// Validates against the default `y` window [0, 0.6].
    pub fn new(nu: u32, y: f64) -> Result<Self, HardSphereError> {
        Self::with_limit(nu, y, DEFAULT_Y_MAX)
    }

    /// Validates against a caller-supplied upper `y` bound (the config may
    /// widen the window; the CLI warns when it does).
    pub fn with_limit(nu: u32, y: f64, y_max: f64) -> Result<Self, HardSphereError> {
        if nu < 1 {
            return Err(HardSphereError::InvalidDegeneracy { nu });
        }
        if !(y.is_finite() && (0.0..=y_max).contains(&y)) {
            return Err(HardSphereError::CorrelationOutOfRange { y, max: y_max });
        }
        Ok(HardSphereParams { nu, y })
    }

    /// The combination (ν−1)·y²/(3π²) that multiplies every correction.
    fn prefactor(&self) -> f64 {
        (self.nu - 1) as f64 * self.y * self.y / (3.0 * PI * PI)
    }
}

// ---------------------------------------------------------------------------
// Closed-form branches.
// ---------------------------------------------------------------------------

/// Occupation below the Fermi surface, 0 ≤ x < 1:
///
/// ```text
/// n̄_<(x) = 1 − (ν−1)y²/(3π²x) · [ (7ln2−8)x³ + (10−3ln2)x
///            + 2 ln((1+x)/(1−x)) − 2(2−x²)^(3/2) ln((s+x)/(s−x)) ],  s = √(2−x²)
/// ```
///
/// At x = 0 the bracket vanishes linearly, `bracket → (6−3ln2)x`, so the
/// 1/x prefactor has the finite limit used here.
pub fn nbar_below(x: f64, p: &HardSphereParams) -> Result<f64, HardSphereError> {
    if !(0.0..1.0).contains(&x) {
        return Err(HardSphereError::Domain {
            name: "x",
            x,
            domain: "[0, 1)",
        });
    }
    let pref = p.prefactor();
    if x == 0.0 {
        return Ok(1.0 - pref * (6.0 - 3.0 * LN_2));
    }
    let s = (2.0 - x * x).sqrt();
    let bracket = (7.0 * LN_2 - 8.0) * x.powi(3)
        + (10.0 - 3.0 * LN_2) * x
        + 2.0 * ((1.0 + x) / (1.0 - x)).ln()
        - 2.0 * s.powi(3) * ((s + x) / (s - x)).ln();
    Ok(1.0 - pref / x * bracket)
}

/// The polynomial-and-log combination shared by the two branches between the
/// Fermi surface and x = 3.
fn common_poly(x: f64) -> f64 {
    (7.0 * x.powi(3) - 3.0 * x - 6.0) * ((x - 1.0) / (x + 1.0)).ln()
        + (7.0 * x.powi(3) - 3.0 * x + 2.0) * LN_2
        - 8.0 * x.powi(3)
        + 22.0 * x * x
        + 6.0 * x
        - 24.0
}

/// Occupation above the Fermi surface, x > 1, in three seamed pieces plus
/// the tail series beyond `SERIES_SWITCH`. The seams at √2 and 3 are
/// continuous; x exactly at a seam evaluates the right-hand piece (the
/// pieces agree there to ~1e-16 relative, so no side-selection guard is
/// needed).
pub fn nbar_above(x: f64, p: &HardSphereParams) -> Result<f64, HardSphereError> {
    if !(x > 1.0) || !x.is_finite() {
        return Err(HardSphereError::Domain {
            name: "x",
            x,
            domain: "(1, inf)",
        });
    }
    let pref = p.prefactor();
    if x < SQRT_2 {
        let s = (2.0 - x * x).sqrt();
        let logs = ((2.0 + x + s) / (2.0 + x - s)).ln() + ((1.0 + s) / (1.0 - s)).ln()
            - 2.0 * ((x + s) / (x - s)).ln();
        Ok(pref / (2.0 * x) * (common_poly(x) + 2.0 * s.powi(3) * logs))
    } else if x < 3.0 {
        let t = (x * x - 2.0).sqrt();
        let arcs = ((x + 2.0) / t).atan() + t.recip().atan() - 2.0 * (x / t).atan();
        Ok(pref / (2.0 * x) * (common_poly(x) - 4.0 * t.powi(3) * arcs))
    } else if x < SERIES_SWITCH {
        let t = (x * x - 2.0).sqrt();
        let arcs =
            2.0 * (x / t).atan() - ((x - 2.0) / t).atan() - ((x + 2.0) / t).atan();
        let bracket = 2.0 * ((x + 1.0) / (x - 1.0)).ln() - 2.0 * x + t.powi(3) * arcs;
        Ok(2.0 * pref / x * bracket)
    } else {
        let u = 1.0 / (x * x);
        let series = u * u * (2.0 / 3.0 + u * (4.0 / 5.0 + u * (34.0 / 35.0 + u * 56.0 / 45.0)));
        Ok(2.0 * pref * series)
    }
}

/// Finite limit of `x⁴·n̄(x)` as x → ∞: `4(ν−1)y²/(9π²)`. This is the
/// amplitude of the power-law tail, used for truncation remainders.
pub fn tail_amplitude(p: &HardSphereParams) -> f64 {
    4.0 * (p.nu - 1) as f64 * p.y * p.y / (9.0 * PI * PI)
}

// ---------------------------------------------------------------------------
// Near-surface asymptotics and the discontinuity.
// ---------------------------------------------------------------------------

/// Expansion of `n̄` just below the Fermi surface (|x−1| < 0.2):
///
/// ```text
/// n̄(x→1⁻) ≈ 1 − 2(ν−1)y²/(3π²) · [ 3ln2 + 1 − 3(x−1)ln|x−1| + (6ln2 − 7)(x−1) ]
/// ```
///
/// This is the Taylor/log expansion of the exact branch: substituting
/// x = 1 − τ into [`nbar_below`] and discarding O(τ²ln τ) reproduces it
/// term by term. The `(x−1)ln|x−1|` slope singularity is evaluated with
/// the `t·ln t → 0` limit, so x = 1 itself is admissible and yields the
/// one-sided limit.
pub fn asymptotic_below(x: f64, p: &HardSphereParams) -> Result<f64, HardSphereError> {
    guard_window(x)?;
    let d = x - 1.0;
    let bracket = 3.0 * LN_2 + 1.0 - 3.0 * xlnx(d) + (6.0 * LN_2 - 7.0) * d;
    Ok(1.0 - 2.0 * p.prefactor() * bracket)
}

/// Expansion just above the Fermi surface (|x−1| < 0.2):
///
/// ```text
/// n̄(x→1⁺) ≈ 2(ν−1)y²/(3π²) · [ 3ln2 − 1 + 3(x−1)ln(x−1) − (6ln2 − 7)(x−1) ]
/// ```
///
/// Derived the same way from [`nbar_above`]; the positive log term is what
/// makes the occupation *fall* as x moves off the surface, matching the
/// exact branch to O((x−1)²ln(x−1)).
pub fn asymptotic_above(x: f64, p: &HardSphereParams) -> Result<f64, HardSphereError> {
    guard_window(x)?;
    let d = x - 1.0;
    let bracket = 3.0 * LN_2 - 1.0 + 3.0 * xlnx(d) - (6.0 * LN_2 - 7.0) * d;
    Ok(2.0 * p.prefactor() * bracket)
}

fn guard_window(x: f64) -> Result<(), HardSphereError> {
    if (x - 1.0).abs() < ASYMPTOTIC_WINDOW {
        Ok(())
    } else {
        Err(HardSphereError::Domain {
            name: "x",
            x,
            domain: "|x - 1| < 0.2",
        })
    }
}

/// Jump of the occupation at the Fermi surface:
/// `Z = 1 − (4/π²)·ln2·(ν−1)·y²`; equals the difference of the two
/// asymptotic expansions at x = 1 exactly.
pub fn discontinuity(p: &HardSphereParams) -> f64 {
    1.0 - 4.0 / (PI * PI) * LN_2 * (p.nu - 1) as f64 * p.y * p.y
}

// ---------------------------------------------------------------------------
// Energy expansion and system scale.
// ---------------------------------------------------------------------------

/// Low-density expansion coefficients of the ground-state energy ratio.
/// These are user-supplied external inputs (Baker 1982, Table VI) loaded
/// from the config file; the library never hard-codes values for them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyCoefficients {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub d4: f64,
}

/// Ground-state energy in units of the ideal-gas energy:
///
/// ```text
/// e(y) = 1 + D₁y + D₂y² + D₃y³ + D₄y⁴·ln y,    e(0) = 1.
/// ```
pub fn energy_ratio(y: f64, c: &EnergyCoefficients) -> f64 {
    // y⁴·ln y → 0 as y → 0⁺: write it as y³·(y·ln y) and reuse the t·ln t limit.
    1.0 + c.d1 * y + c.d2 * y * y + c.d3 * y.powi(3) + c.d4 * y.powi(3) * xlnx(y)
}

/// `k_F = (6π²ρ/ν)^(1/3)` from the number density ρ (fm⁻³).
pub fn fermi_wavenumber_from_density(rho: f64, nu: u32) -> Result<f64, HardSphereError> {
    if !(rho > 0.0) {
        return Err(HardSphereError::NonPositive { value: rho });
    }
    Ok((6.0 * PI * PI * rho / nu as f64).cbrt())
}

/// `k_F = (9π/(2ν))^(1/3)/r0` from the interparticle radius r0 (fm).
pub fn fermi_wavenumber_from_radius(r0: f64, nu: u32) -> Result<f64, HardSphereError> {
    if !(r0 > 0.0) {
        return Err(HardSphereError::NonPositive { value: r0 });
    }
    Ok((9.0 * PI / (2.0 * nu as f64)).cbrt() / r0)
}

/// Inverse of [`fermi_wavenumber_from_radius`].
pub fn radius_from_fermi_wavenumber(k_f: f64, nu: u32) -> Result<f64, HardSphereError> {
    if !(k_f > 0.0) {
        return Err(HardSphereError::NonPositive { value: k_f });
    }
    Ok((9.0 * PI / (2.0 * nu as f64)).cbrt() / k_f)
}

/// Dimensional momentum-space scale: `k_F` and the Fermi-sphere volume
/// `V_k = (4/3)π k_F³` that converts between the dimensionless and
/// dimensional measures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemScale {
    pub k_f: f64,
}

impl SystemScale {
    pub fn new(k_f: f64) -> Result<Self, HardSphereError> {
        if !(k_f > 0.0 && k_f.is_finite()) {
            return Err(HardSphereError::NonPositive { value: k_f });
        }
        Ok(SystemScale { k_f })
    }

    pub fn from_radius(r0: f64, nu: u32) -> Result<Self, HardSphereError> {
        Ok(SystemScale {
            k_f: fermi_wavenumber_from_radius(r0, nu)?,
        })
    }

    /// Fermi-sphere volume `V_k = (4/3)π k_F³` (fm⁻³).
    pub fn v_k(&self) -> f64 {
        4.0 / 3.0 * PI * self.k_f.powi(3)
    }
}

// ---------------------------------------------------------------------------
// Distribution adapter.
// ---------------------------------------------------------------------------

/// [`MomentumDistribution`] view of the hard-sphere occupation, with the
/// Fermi surface and branch seams declared as singular points and the x⁻⁴
/// tail declared with its analytic amplitude.
pub struct HardSphereDistribution {
    params: HardSphereParams,
    singular: [f64; 3],
}

/// Builds the distribution adapter for the measures module.
pub fn as_distribution(p: HardSphereParams) -> HardSphereDistribution {
    HardSphereDistribution {
        params: p,
        singular: [1.0, SQRT_2, 3.0],
    }
}

impl HardSphereDistribution {
    pub fn params(&self) -> &HardSphereParams {
        &self.params
    }
}

impl MomentumDistribution for HardSphereDistribution {
    fn nbar(&self, x: f64) -> f64 {
        if x < 1.0 {
            nbar_below(x, &self.params).expect("x in [0,1) is in domain")
        } else if x == 1.0 {
            // Exactly at the jump: report the inside limit (the step is
            // closed from below); integration never lands here.
            asymptotic_below(1.0, &self.params).expect("x = 1 is in the window")
        } else {
            nbar_above(x, &self.params).expect("x > 1 is in domain")
        }
    }

    fn singular_points(&self) -> &[f64] {
        &self.singular
    }

    fn tail(&self) -> Tail {
        Tail::PowerLaw {
            exponent: 4.0,
            amplitude: tail_amplitude(&self.params),
        }
    }

    fn label(&self) -> &str {
        "hard-sphere"
    }
}
