//! Reference constants for the scaling relations the default scans target.
//!
//! Each correlation measure follows a tight power law in the coupling and in
//! the Fermi-surface discontinuity; the energy ratio is nearly linear in each
//! measure over the dilute regime. The constants below are the target values
//! the fit reports print next to freshly fitted parameters, so drift is
//! visible at a glance.

/// Target parameters of `v = offset + α·u^β`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawReference {
    /// Which relation this is, e.g. `"S_cor vs y"`.
    pub label: &'static str,
    pub offset: f64,
    pub alpha: f64,
    pub beta: f64,
}

/// Target parameters of `v = intercept + slope·u`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearReference {
    pub label: &'static str,
    pub intercept: f64,
    pub slope: f64,
}

/// Correlation entropy of the hard-sphere gas versus the coupling y.
pub const S_COR_VS_Y: PowerLawReference = PowerLawReference {
    label: "S_cor vs y",
    offset: 0.0,
    alpha: 2.16379,
    beta: 1.67053,
};

/// Disequilibrium versus y (decreases from the ideal value 1).
pub const D_COR_VS_Y: PowerLawReference = PowerLawReference {
    label: "D_cor vs y",
    offset: 1.0,
    alpha: -0.79871,
    beta: 1.83155,
};

/// Complexity versus y (grows from the ideal value 1).
pub const C_VS_Y: PowerLawReference = PowerLawReference {
    label: "C vs y",
    offset: 1.0,
    alpha: 1.68358,
    beta: 1.67566,
};

/// Correlation entropy versus the depleted weight 1 − Z.
pub const S_COR_VS_ONE_MINUS_Z: PowerLawReference = PowerLawReference {
    label: "S_cor vs 1-Z",
    offset: 0.0,
    alpha: 2.49614,
    beta: 0.83527,
};

/// Disequilibrium versus 1 − Z.
pub const D_COR_VS_ONE_MINUS_Z: PowerLawReference = PowerLawReference {
    label: "D_cor vs 1-Z",
    offset: 1.0,
    alpha: -0.93413,
    beta: 0.91574,
};

/// Complexity versus 1 − Z.
pub const C_VS_ONE_MINUS_Z: PowerLawReference = PowerLawReference {
    label: "C vs 1-Z",
    offset: 1.0,
    alpha: 1.94305,
    beta: 0.83784,
};

/// Energy ratio e = E/E_free versus correlation entropy.
pub const E_VS_S_COR: LinearReference = LinearReference {
    label: "e vs S_cor",
    intercept: 1.0479,
    slope: 1.27353,
};

/// Energy ratio versus disequilibrium.
pub const E_VS_D_COR: LinearReference = LinearReference {
    label: "e vs D_cor",
    intercept: 4.6861,
    slope: -3.5985,
};

/// Energy ratio versus complexity.
pub const E_VS_C: LinearReference = LinearReference {
    label: "e vs C",
    intercept: -0.5847,
    slope: 1.6358,
};

/// All power-law references, in report order.
pub const POWER_LAW_REFERENCES: [&PowerLawReference; 6] = [
    &S_COR_VS_Y,
    &D_COR_VS_Y,
    &C_VS_Y,
    &S_COR_VS_ONE_MINUS_Z,
    &D_COR_VS_ONE_MINUS_Z,
    &C_VS_ONE_MINUS_Z,
];

/// All linear references, in report order.
pub const LINEAR_REFERENCES: [&LinearReference; 3] = [&E_VS_S_COR, &E_VS_D_COR, &E_VS_C];
