//! Shared helpers for the integration tests: a brute-force graded-mesh
//! integrator that is deliberately independent of the adaptive quadrature
//! engine, so measure values can be cross-checked by a second method.

// Each integration-test binary compiles this module on its own and uses a
// different subset of the helpers.
#![allow(dead_code)]

use fermi_complexity_core::distribution::{MomentumDistribution, Tail};
use fermi_complexity_core::quadrature::{integrate_finite, integrate_semiinfinite, Integrand};
use fermi_complexity_core::special::xlnx;

/// Entropy and disequilibrium integrals by ~10⁶-point trapezoid sums on a
/// graded mesh: uniform over the bulk of the Fermi sea, geometrically
/// refined into both sides of the x = 1 jump, and logarithmically spaced
/// out to x = 3·10⁷ (far enough that the neglected x⁻⁴-tail contribution
/// to S_cor is below 10⁻⁷ for the couplings tested here).
///
/// Returns (s_cor, d_cor).
pub fn graded_mesh_measures<D: MomentumDistribution + ?Sized>(d: &D) -> (f64, f64) {
    let mut s_sum = 0.0;
    let mut d_sum = 0.0;

    let mut accumulate = |xs: &[f64]| {
        let f = |x: f64| {
            let n = d.nbar(x).max(0.0);
            (x * x * xlnx(n), x * x * n * n)
        };
        let mut prev_x = xs[0];
        let (mut prev_s, mut prev_d) = f(prev_x);
        for &x in &xs[1..] {
            let (fs, fd) = f(x);
            let w = 0.5 * (x - prev_x);
            s_sum += w * (fs + prev_s);
            d_sum += w * (fd + prev_d);
            prev_x = x;
            prev_s = fs;
            prev_d = fd;
        }
    };

    // Fermi sea: uniform on [0, 0.9], then x = 1 − δ with δ shrinking
    // geometrically from 0.1 to 10⁻¹⁴ (the jump itself is never sampled).
    let n1 = 300_000usize;
    let n2 = 200_000usize;
    let mut inner: Vec<f64> = (0..=n1).map(|i| 0.9 * i as f64 / n1 as f64).collect();
    let step = (1e-14f64 / 0.1).ln() / n2 as f64;
    inner.extend((1..=n2).map(|i| 1.0 - 0.1 * (step * i as f64).exp()));
    accumulate(&inner);

    // Above the jump: x = 1 + δ, δ from 10⁻¹⁴ to 3·10⁷ logarithmically,
    // passing smoothly through any interior branch seams.
    let n3 = 500_000usize;
    let step = (3e7f64 / 1e-14).ln() / n3 as f64;
    let outer: Vec<f64> = (0..=n3)
        .map(|i| 1.0 + 1e-14 * (step * i as f64).exp())
        .collect();
    accumulate(&outer);

    (-3.0 * s_sum, 3.0 * d_sum)
}

/// 3∫₀^∞ x²n̄(x)dx — unity for a properly normalized occupation.
pub fn normalization<D: MomentumDistribution + ?Sized>(d: &D, tol: f64) -> f64 {
    let f = |x: f64| {
        let n = d.nbar(x).max(0.0);
        x * x * n
    };
    let inner = integrate_finite(
        &Integrand::new(f).with_singular_points(&[1.0]),
        0.0,
        1.0,
        tol / 6.0,
    )
    .unwrap()
    .value;
    let outer = match d.tail() {
        Tail::PowerLaw { exponent, amplitude } => {
            // Truncate where the analytic remainder 3a/((q−3)X^{q−3}) is
            // negligible, then add it back.
            let mut x_cut = 8.0f64;
            let rem = |x: f64| {
                amplitude * x.powf(3.0 - exponent) / (exponent - 3.0)
            };
            while 3.0 * rem(x_cut) >= tol / 10.0 && x_cut < 1e300 {
                x_cut *= 2.0;
            }
            let mut sing: Vec<f64> = vec![1.0];
            sing.extend(
                d.singular_points()
                    .iter()
                    .copied()
                    .filter(|&s| s > 1.0 && s < x_cut),
            );
            integrate_finite(
                &Integrand::new(f).with_singular_points(&sing),
                1.0,
                x_cut,
                tol / 6.0,
            )
            .unwrap()
            .value
                + rem(x_cut)
        }
        Tail::Exponential => {
            integrate_semiinfinite(
                &Integrand::new(f)
                    .with_singular_points(&[1.0])
                    .with_exponential_tail(),
                1.0,
                tol / 6.0,
            )
            .unwrap()
            .value
        }
    };
    3.0 * (inner + outer)
}
