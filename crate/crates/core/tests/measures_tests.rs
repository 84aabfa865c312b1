//! Correlation measures: frozen high-precision oracle values, the
//! brute-force mesh cross-check, scale invariance, fixed points, and the
//! monotone trends the measures are designed to expose.

mod common;

use fermi_complexity_core::hardsphere::{self, HardSphereParams, SystemScale};
use fermi_complexity_core::loa::{self, LoaParams};
use fermi_complexity_core::measures::{
    complexity, disequilibrium_cor, disequilibrium_total, entropy_cor, entropy_total,
    information_content,
};

fn hs(y: f64) -> hardsphere::HardSphereDistribution {
    hardsphere::as_distribution(HardSphereParams::new(4, y).unwrap())
}

#[test]
fn hard_sphere_measures_oracle() {
    // Frozen values computed with mpmath at 30 significant digits using the
    // same analytic occupation but its own integration.
    let m = complexity(&hs(0.3), 1e-10).unwrap();
    assert!((m.s_cor - 0.3879938112946515).abs() < 1e-9, "S {:.16}", m.s_cor);
    assert!((m.d_cor - 0.9145529207540164).abs() < 1e-9, "D {:.16}", m.d_cor);
    assert!((m.complexity - 1.348069901665906).abs() < 3e-9, "C {:.16}", m.complexity);

    let m = complexity(&hs(0.5), 1e-10).unwrap();
    assert!((m.s_cor - 0.9484574153145879).abs() < 1e-9, "S {:.16}", m.s_cor);
    assert!((m.d_cor - 0.7729898338031137).abs() < 1e-9, "D {:.16}", m.d_cor);
    assert!((m.complexity - 1.995646450556438).abs() < 5e-9, "C {:.16}", m.complexity);
}

#[test]
fn adaptive_engine_agrees_with_brute_force_mesh() {
    // Second, method-independent check: a 10⁶-point graded trapezoid mesh.
    let d = hs(0.3);
    let (s_mesh, d_mesh) = common::graded_mesh_measures(&d);
    let s = entropy_cor(&d, 1e-10).unwrap();
    let dq = disequilibrium_cor(&d, 1e-10).unwrap();
    assert!((s - s_mesh).abs() < 1e-6, "S: {s:.12} vs mesh {s_mesh:.12}");
    assert!((dq - d_mesh).abs() < 1e-8, "D: {dq:.12} vs mesh {d_mesh:.12}");
}

#[test]
fn complexity_is_product_of_parts() {
    let d = hs(0.35);
    let s = entropy_cor(&d, 1e-9).unwrap();
    let dq = disequilibrium_cor(&d, 1e-9).unwrap();
    let c = complexity(&d, 1e-9).unwrap().complexity;
    assert!((c - dq * s.exp()).abs() <= 1e-12 * c.abs());
}

#[test]
fn ideal_gas_fixed_point() {
    // Zero coupling: the occupation is the pure step and all three
    // dimensionless measures sit at their ideal values.
    let d = hs(0.0);
    let m = complexity(&d, 1e-10).unwrap();
    assert!(m.s_cor.abs() < 1e-9, "S = {:.3e}", m.s_cor);
    assert!((m.d_cor - 1.0).abs() < 1e-9);
    assert!((m.complexity - 1.0).abs() < 1e-9);
    assert!((hardsphere::discontinuity(d.params()) - 1.0).abs() < 1e-12);
}

#[test]
fn loa_weak_coupling_limit() {
    // β → ∞ switches correlations off, but the measures do not all converge
    // at the same rate.  At β = 10³ the interior depletion is k_dir ≈ 3.1e-10
    // and 1 − Z ≈ 2.3e-10, yet the occupation keeps a tail of amplitude
    // ~k_dir² ≈ 1.5e-19 all the way out to x ~ β√μ/k_F ≈ 4000, and
    // −3∫x²n ln n over that range is ~1.1e-8: the entropy decays only like
    // β⁻³ ln β and crosses 1e-9 near β ≈ 2.3e3.  Reference values below come
    // from a 25-digit quadrature of the same closed forms.
    let d = loa::as_distribution(LoaParams::new(1.33, 1e3).unwrap());
    let m = complexity(&d, 1e-10).unwrap();
    assert!(
        (m.s_cor - 1.07618598936e-8).abs() < 2e-10,
        "S = {:.11e}",
        m.s_cor
    );
    assert!(
        (m.d_cor - (1.0 - 4.6928e-10)).abs() < 1e-10,
        "D = {:.11e}",
        m.d_cor
    );
    assert!(
        (m.complexity - (1.0 + 1.0293e-8)).abs() < 3e-10,
        "C = {:.11e}",
        m.complexity
    );
    let z = loa::z_loa(d.params()).unwrap();
    assert!((z - (1.0 - 2.3464e-10)).abs() < 1e-12, "Z = {:.11e}", z);

    // One decade further in β the entropy residue has dropped by ~10³ and
    // every measure sits at the ideal values to well below 1e-9.
    let far = loa::as_distribution(LoaParams::new(1.33, 1e4).unwrap());
    let mf = complexity(&far, 1e-10).unwrap();
    assert!(mf.s_cor.abs() < 1e-9, "S(1e4) = {:.3e}", mf.s_cor);
    assert!((mf.d_cor - 1.0).abs() < 1e-9);
    assert!((mf.complexity - 1.0).abs() < 1e-9);
}

#[test]
fn loa_measures_oracle() {
    let d = loa::as_distribution(LoaParams::new(1.33, 1.5).unwrap());
    let m = complexity(&d, 1e-10).unwrap();
    assert!((m.s_cor - 0.4579474386818947).abs() < 1e-8, "S {:.16}", m.s_cor);
    assert!((m.d_cor - 0.8770745685041871).abs() < 1e-9, "D {:.16}", m.d_cor);
    assert!((m.complexity - 1.38650220340584).abs() < 2e-8, "C {:.16}", m.complexity);

    let m = complexity(&loa::as_distribution(LoaParams::new(1.33, 1.01).unwrap()), 1e-10).unwrap();
    assert!((m.s_cor - 0.94734683).abs() < 1e-7, "S {:.16}", m.s_cor);
    assert!((m.d_cor - 0.67108149).abs() < 1e-7, "D {:.16}", m.d_cor);
    assert!((m.complexity - 1.73062415).abs() < 1e-6, "C {:.16}", m.complexity);

    let m = complexity(&loa::as_distribution(LoaParams::new(1.33, 2.482).unwrap()), 1e-10).unwrap();
    assert!((m.s_cor - 0.15024793).abs() < 1e-7, "S {:.16}", m.s_cor);
    assert!((m.d_cor - 0.97017377).abs() < 1e-7, "D {:.16}", m.d_cor);
    assert!((m.complexity - 1.12746060).abs() < 1e-6, "C {:.16}", m.complexity);
}

#[test]
fn dimensional_measures_and_scale_invariance() {
    let scale = SystemScale { k_f: 1.33 };
    let d = hs(0.0);

    // Ideal-gas dimensional values at the standard nuclear k_F.
    let s0 = entropy_total(&d, scale, 1e-9).unwrap();
    let d0 = disequilibrium_total(&d, scale, 1e-9).unwrap();
    assert!((s0 - 2.2879).abs() < 1e-4, "S₀ = {s0:.6}");
    assert!((d0 - 0.10148).abs() < 1e-5, "D₀ = {d0:.6}");
    // H = e^S is the occupied momentum-space volume itself for the ideal gas.
    assert!((information_content(s0) - scale.v_k()).abs() < 1e-8);

    // The complexity D·e^S is independent of the momentum scale.
    let d = hs(0.3);
    let mut c_by_scale = Vec::new();
    for k_f in [1.0, 1.33] {
        let scale = SystemScale { k_f };
        let s = entropy_total(&d, scale, 1e-10).unwrap();
        let dq = disequilibrium_total(&d, scale, 1e-10).unwrap();
        c_by_scale.push(dq * s.exp());
    }
    assert!(
        (c_by_scale[0] - c_by_scale[1]).abs() <= 1e-9 * c_by_scale[0],
        "{c_by_scale:?}"
    );
}

#[test]
fn measures_move_monotonically_with_coupling() {
    // Correlations always add entropy, flatten the distribution, and raise
    // complexity; the depletion 1 − Z grows alongside, so the same ordering
    // holds against either variable.
    let mut prev: Option<(f64, f64, f64, f64)> = None;
    for i in 0..=20 {
        let y = 0.05 + 0.025 * i as f64;
        let d = hs(y);
        let m = complexity(&d, 1e-8).unwrap();
        let depletion = 1.0 - hardsphere::discontinuity(d.params());
        if let Some((s, dq, c, dep)) = prev {
            assert!(m.s_cor > s, "S not increasing at y = {y}");
            assert!(m.d_cor < dq, "D not decreasing at y = {y}");
            assert!(m.complexity > c, "C not increasing at y = {y}");
            assert!(depletion > dep, "1−Z not increasing at y = {y}");
        }
        prev = Some((m.s_cor, m.d_cor, m.complexity, depletion));
    }
}
