//! Property-based tests: randomized inputs exercising the invariants that
//! must hold for *every* valid parameter choice, not just the pinned cases.

use proptest::prelude::*;

use fermi_complexity_core::config::{parse, serialize, GridSpec, ModelKind, RunConfig};
use fermi_complexity_core::fitting::fit_power_law;
use fermi_complexity_core::hardsphere::{self, EnergyCoefficients, HardSphereParams};
use fermi_complexity_core::loa::{n_loa, LoaParams};
use fermi_complexity_core::quadrature::{integrate_finite, Integrand};

fn arb_grid(lo: f64, hi: f64) -> impl Strategy<Value = GridSpec> {
    (lo..hi, 0.005f64..0.05, 2usize..25).prop_map(|(start, step, n)| GridSpec {
        start,
        step,
        stop: start + step * (n - 1) as f64,
    })
}

fn arb_config() -> impl Strategy<Value = RunConfig> {
    (
        prop_oneof![Just(ModelKind::HardSphere), Just(ModelKind::Loa)],
        1u32..8,
        0.5f64..3.0,
        arb_grid(0.01, 0.3),
        arb_grid(1.0, 2.0),
        1e-12f64..1e-4,
        proptest::option::of(((-2.0f64..2.0), (-2.0f64..2.0), (-2.0f64..2.0), (-2.0f64..2.0))),
    )
        .prop_map(|(model, nu, k_f, y_grid, beta_grid, tol, energy)| RunConfig {
            model,
            nu,
            k_f,
            y_max: 0.6,
            y_grid,
            beta_grid,
            tol,
            dist_x_max: 5.0,
            dist_points: 201,
            dist_epsilon: 1e-6,
            energy: energy.map(|(d1, d2, d3, d4)| EnergyCoefficients { d1, d2, d3, d4 }),
            out_dir: "out".to_string(),
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn config_round_trips_exactly(cfg in arb_config()) {
        let text = serialize(&cfg);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back, cfg);
    }

    #[test]
    fn grid_points_are_strictly_increasing(grid in arb_grid(0.01, 2.0)) {
        let pts = grid.points();
        prop_assert!(!pts.is_empty());
        for w in pts.windows(2) {
            prop_assert!(w[1] > w[0]);
        }
        prop_assert!((pts[0] - grid.start).abs() < 1e-12);
    }

    #[test]
    fn hard_sphere_occupation_is_physical(
        y in 0.0f64..0.55,
        x in 0.0f64..20.0,
    ) {
        let p = HardSphereParams::new(4, y).unwrap();
        let n = if x < 1.0 {
            hardsphere::nbar_below(x, &p).unwrap()
        } else {
            hardsphere::nbar_above(x, &p).unwrap()
        };
        prop_assert!(n >= 0.0, "n({x}) = {n}");
        prop_assert!(n <= 1.0, "n({x}) = {n}");
        // The sea is depleted below the jump, the tail occupied above it.
        if y > 0.0 {
            if x < 1.0 { prop_assert!(n < 1.0); } else { prop_assert!(n > 0.0); }
        }
    }

    #[test]
    fn loa_occupation_is_physical(
        beta in 1.01f64..2.482,
        k in 0.0f64..12.0,
    ) {
        let p = LoaParams::new(1.33, beta).unwrap();
        let n = n_loa(k, &p).unwrap();
        // Deep in the tail the value is a difference of near-saturated
        // Gaussian integrals; the true result stays positive but f64 rounding
        // can leave ~1e-16-level negative residue, never anything material.
        prop_assert!(n >= -1e-15, "n({k}) = {n:e}");
        prop_assert!(n <= 1.0 + 1e-12, "n({k}) = {n}");
    }

    #[test]
    fn quadrature_is_linear_and_additive(
        a in -1.0f64..0.5,
        span in 0.5f64..2.0,
        c0 in -2.0f64..2.0,
        c1 in -2.0f64..2.0,
        c2 in -2.0f64..2.0,
        scale in prop_oneof![Just(-1.0), Just(2.0), Just(10.0)],
    ) {
        let tol = 1e-10;
        let b = a + span;
        let mid = a + 0.5 * span;
        let f = move |x: f64| c0 + c1 * x + c2 * (x * x).sin();
        let whole = integrate_finite(&Integrand::new(f), a, b, tol).unwrap().value;
        let left = integrate_finite(&Integrand::new(f), a, mid, tol).unwrap().value;
        let right = integrate_finite(&Integrand::new(f), mid, b, tol).unwrap().value;
        prop_assert!((left + right - whole).abs() <= 2.0 * tol);

        let scaled = integrate_finite(&Integrand::new(move |x| scale * f(x)), a, b, tol)
            .unwrap()
            .value;
        prop_assert!((scaled - scale * whole).abs() <= 2.0 * tol * scale.abs().max(1.0));
    }

    #[test]
    fn power_law_fit_recovers_synthetic_data(
        alpha_mag in prop_oneof![Just(0.1), Just(1.0), Just(10.0)],
        negate in any::<bool>(),
        beta in prop_oneof![Just(0.5), Just(1.0), Just(2.0)],
        offset in prop_oneof![Just(0.0), Just(1.0)],
    ) {
        let alpha = if negate { -alpha_mag } else { alpha_mag };
        let pts: Vec<(f64, f64)> = (1..=12)
            .map(|i| {
                let u = 0.045 * i as f64;
                (u, offset + alpha * u.powf(beta))
            })
            .collect();
        let fit = fit_power_law(&pts, offset).unwrap();
        prop_assert!((fit.params.0 - alpha).abs() < 1e-7 * alpha.abs());
        prop_assert!((fit.params.1 - beta).abs() < 1e-7);
        prop_assert!(fit.rms_residual < 1e-10);
    }
}
