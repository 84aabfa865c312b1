//! Numerical library for momentum distributions and statistical complexity of
//! dilute Fermi gases.
//!
//! The crate computes, for two models of correlated nuclear matter,
//!
//! * the dimensionless momentum distribution `n̄(x)`, `x = k/k_F`
//!   ([`hardsphere`]: hard-sphere gas expanded to second order in `y = k_F·c`;
//!   [`loa`]: low-order cluster approximation with Gaussian correlations),
//! * the correlation parts of the information entropy `S_cor`, the
//!   disequilibrium `D_cor`, and the LMC statistical complexity
//!   `C = D_cor·exp(S_cor)` ([`measures`]),
//! * least-squares fits of those measures against the correlation strength,
//!   the Fermi-surface discontinuity, and the ground-state energy
//!   ([`fitting`]).
//!
//! All integrals route through the adaptive quadrature engine in
//! [`quadrature`], which is built for the two difficulties these
//! distributions pose: an integrable logarithmic singularity at the Fermi
//! surface and slowly decaying power-law tails.

pub mod config;
pub mod distribution;
pub mod fitting;
pub mod hardsphere;
pub mod loa;
pub mod measures;
pub mod quadrature;
pub mod reference;
pub mod special;
