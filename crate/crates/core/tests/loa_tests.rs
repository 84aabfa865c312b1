//! LOA occupation: the auxiliary function against frozen oracle values, the
//! wound parameter against its defining real-space integral, the jump at the
//! Fermi surface, and normalization.

mod common;

use std::f64::consts::PI;

use fermi_complexity_core::loa::{
    as_distribution, n_loa, wound_parameter, y_function, z_loa, LoaError, LoaParams,
    BETA_VALIDITY, DEFAULT_K_F,
};
use fermi_complexity_core::quadrature::{integrate_semiinfinite, Integrand};

fn p(beta: f64) -> LoaParams {
    LoaParams::new(DEFAULT_K_F, beta).unwrap()
}

fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got:.17e}, want {want:.17e}"
    );
}

#[test]
fn y_function_oracle_values() {
    assert_close(
        y_function(1.33, 8, &p(2.0)).unwrap(),
        0.008960980354888995,
        1e-13,
        "Y(k_F, 8) at β = 2",
    );
    assert_close(
        y_function(0.7, 4, &p(1.5)).unwrap(),
        0.01961301329064865,
        1e-13,
        "Y(0.7, 4) at β = 1.5",
    );
    // Closed-form k = 0 limit against a high-precision finite-k evaluation.
    assert_close(
        y_function(0.0, 8, &p(2.0)).unwrap(),
        0.009458780293563,
        1e-12,
        "Y(0, 8) at β = 2",
    );
}

#[test]
fn wound_parameter_endpoints() {
    assert_close(
        wound_parameter(&p(1.01)).k_dir,
        0.3036544238809129,
        1e-15,
        "k_dir at β = 1.01",
    );
    assert_close(
        wound_parameter(&p(2.482)).k_dir,
        0.02046154403000231,
        1e-16,
        "k_dir at β = 2.482",
    );
    // The strong- and weak-coupling ends of the validity window bracket
    // roughly 30% and 2% wound fractions.
    assert!((wound_parameter(&p(1.01)).k_dir / 0.30 - 1.0).abs() < 0.05);
    assert!((wound_parameter(&p(2.482)).k_dir / 0.02 - 1.0).abs() < 0.05);
}

#[test]
fn wound_parameter_matches_defining_integral() {
    // k_dir = ρ ∫ [f(r) − 1]² d³r with f(r) = 1 − exp(−β²r²) and
    // ρ = 2k_F³/(3π²): the closed form must agree with direct quadrature.
    for beta in [1.01, 1.5, 2.482] {
        let pr = p(beta);
        let rho = 2.0 * pr.k_f.powi(3) / (3.0 * PI * PI);
        let f = move |r: f64| 4.0 * PI * r * r * (-2.0 * beta * beta * r * r).exp();
        let integral = integrate_semiinfinite(
            &Integrand::new(f).with_exponential_tail(),
            0.0,
            1e-13,
        )
        .unwrap()
        .value;
        let direct = rho * integral;
        let closed = wound_parameter(&pr).k_dir;
        assert!(
            (direct - closed).abs() < 1e-10,
            "β = {beta}: integral {direct:.15e} vs closed form {closed:.15e}"
        );
    }
}

#[test]
fn occupation_oracle_values() {
    let pr = p(1.5);
    for (k, want) in [
        (0.5, 0.9386527107867838),
        (1.0, 0.9365461559771683),
        (1.32999, 0.9345871867601918),
        (1.33001, 0.007400003605113364),
        (2.0, 0.004899230061205739),
        (4.0, 0.0005156194513101192),
    ] {
        let got = n_loa(k, &pr).unwrap();
        assert!(
            ((got - want) / want).abs() < 1e-12,
            "n(k = {k}): got {got:.17e}, want {want:.17e}"
        );
    }
}

#[test]
fn jump_matches_closed_form() {
    for beta in [1.01, 1.5, 2.482] {
        let pr = p(beta);
        let jump = n_loa(pr.k_f - 1e-7, &pr).unwrap() - n_loa(pr.k_f + 1e-7, &pr).unwrap();
        let z = z_loa(&pr).unwrap();
        assert!(
            (jump - z).abs() < 1e-5,
            "β = {beta}: sampled jump {jump:.10} vs Z {z:.10}"
        );
    }
    assert_close(
        z_loa(&p(1.5)).unwrap(),
        0.9271870823415864,
        1e-14,
        "Z at β = 1.5",
    );
    assert_close(
        z_loa(&p(1.01)).unwrap(),
        0.7510904988399572,
        1e-14,
        "Z at β = 1.01",
    );
    assert_close(
        z_loa(&p(2.482)).unwrap(),
        0.984371040627108,
        1e-14,
        "Z at β = 2.482",
    );
}

#[test]
fn normalization_across_window() {
    for beta in [1.01, 1.5, 2.482] {
        let d = as_distribution(p(beta));
        let norm = common::normalization(&d, 1e-9);
        assert!(
            (norm - 1.0).abs() < 1e-6,
            "β = {beta}: 3∫x²n̄ = {norm:.12}"
        );
    }
}

#[test]
fn strong_smoothing_recovers_step() {
    // Very weak correlations (large β): occupation indistinguishable from
    // the ideal step well away from the surface. At β = 10³ the residual
    // is the genuine wound-parameter depletion k_dir ≈ 3·10⁻¹⁰; at larger β
    // cancellation noise in Y's difference quotient (~10⁻¹⁶/k̃ ∝ β) takes
    // over. Either way the step is recovered to a part in 10⁹.
    for beta in [1e3, 1e6] {
        let pr = p(beta);
        assert!((n_loa(0.5 * pr.k_f, &pr).unwrap() - 1.0).abs() < 1e-9);
        assert!(n_loa(1.5 * pr.k_f, &pr).unwrap().abs() < 1e-9);
    }
}

#[test]
fn validity_window_is_advisory() {
    assert!(p(1.5).in_validity_window());
    assert!(!p(0.5).in_validity_window());
    assert!(!p(1e3).in_validity_window());
    // Out-of-window parameters still construct — the window guides default
    // scans, it does not bound the formulas.
    assert!(LoaParams::new(1.33, 1e3).is_ok());
    assert_eq!(BETA_VALIDITY, (1.01, 2.482));
}

#[test]
fn parameter_and_domain_errors() {
    assert!(matches!(
        LoaParams::new(-1.0, 1.5),
        Err(LoaError::InvalidParams { .. })
    ));
    assert!(matches!(
        LoaParams::new(1.33, 0.0),
        Err(LoaError::InvalidParams { .. })
    ));
    let pr = p(1.5);
    assert_eq!(y_function(1.0, 5, &pr), Err(LoaError::InvalidMu { mu: 5 }));
    assert!(matches!(
        n_loa(-0.1, &pr),
        Err(LoaError::NegativeMomentum { .. })
    ));
}

#[test]
fn occupation_never_meaningfully_negative() {
    // The true model stays positive, but deep in the Gaussian tail its
    // value falls below double-precision evaluation noise (differences of
    // near-saturated error functions keep only ~10⁻¹⁶ absolute accuracy),
    // so tiny negative excursions at that level are tolerated — and
    // clamped to zero by the measure integrands.
    let pr = p(1.5);
    let mut k = 0.0;
    while k <= pr.k_f + 12.0 * pr.beta {
        let n = n_loa(k, &pr).unwrap();
        assert!(n >= -1e-15, "n({k}) = {n:.3e}");
        assert!(n <= 1.0 + 1e-12, "n({k}) = {n:.17}");
        k += 0.05;
    }
}
