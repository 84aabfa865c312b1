//! The `MomentumDistribution` abstraction consumed by the measures module.
//!
//! A momentum distribution here is the dimensionless occupation `n̄(x)` with
//! `x = k/k_F`, normalized so that `3∫₀^∞ x² n̄(x) dx = 1`, together with the
//! structural facts integration needs: where `n̄` is non-smooth and how it
//! decays at large `x`.

/// Large-`x` behaviour of `x ↦ n̄(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail {
    /// `n̄(x) → amplitude·x^(−exponent)`; the amplitude is the finite limit
    /// of `x^exponent·n̄(x)`, used for analytic truncation remainders.
    PowerLaw { exponent: f64, amplitude: f64 },
    /// `n̄` decays faster than any power (Gaussian-dominated models).
    Exponential,
}

/// Dimensionless momentum distribution with its integration metadata.
pub trait MomentumDistribution {
    /// Occupation `n̄(x)` at `x = k/k_F ≥ 0`. Must be nonnegative up to
    /// floating-point noise wherever the measures module evaluates it.
    fn nbar(&self, x: f64) -> f64;

    /// Abscissas where `n̄` or its derivative is singular (always including
    /// the Fermi surface x = 1); integrals split here and never sample the
    /// points themselves.
    fn singular_points(&self) -> &[f64];

    /// Decay law of the tail beyond the last singular point.
    fn tail(&self) -> Tail;

    /// Short human-readable name used in reports and CSV metadata.
    fn label(&self) -> &str;
}
