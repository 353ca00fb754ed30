//! Affine (time-scale) Wigner calculus on the half-line.
//!
//! Everything here lives on `L²(ℝ₊, da/a)` — complex signals on the positive
//! half-line, square integrable against the Haar measure `da/a` — and on the
//! affine group `Aff = ℝ × ℝ₊` with its right Haar measure `da dx / a`.
//! Signals are sampled uniformly in `t = log a`, which turns the Haar measure
//! into Lebesgue measure, the Mellin transform into an FFT and dilations into
//! index shifts.
//!
//! The transforms and identities provided:
//!
//! - [`wigner::affine_wigner`]: the quadratic time-scale distribution
//!   `W(x,a) = ∫ ψ(aλ(u)) conj(φ(aλ(−u))) e^{−2πixu} du` with
//!   `λ(u) = u e^u / (e^u − 1)`, together with its marginals, covariance laws
//!   and the finite-support property.
//! - [`wigner::affine_ambiguity`]: the half-line ambiguity function, its peak
//!   lemma, orthogonality, and the Θ-multiplier factorization that recovers
//!   the Wigner distribution through a double Mellin transform.
//! - [`group`]: affine group algebra (product, inverse, modular function,
//!   right Haar measure, involution, group convolution) and the convolution
//!   representation of the wavelet scalogram.
//! - [`quantize`]: the symbol ↔ Hilbert-Schmidt operator correspondence in a
//!   truncated Laguerre basis, the best rank-one (Wigner space) approximation
//!   solver, the trace formula and a dilation-covariance diagnostic.
//! - [`polyan`]: the poly-analytic / anti-poly-analytic decomposition of
//!   `L²_r(Aff)` and ∂̄-residual diagnostics.
//! - [`wigner::grossmann_royer_apply`]: the reproducing operator for point
//!   evaluations of the Wigner distribution, plus support-constant estimation.
//! - [`checks`]: every identity above packaged as a seeded, machine-checkable
//!   suite (the same suites the `awig check` subcommand runs).
//!
//! Run `cargo run --example wigner_morse` (and friends) for tour-style
//! demonstrations of each capability.

pub mod checks;
pub mod error;
pub mod fourier;
pub mod grid;
pub mod group;
pub mod io;
pub mod mellin;
pub mod polyan;
pub mod quantize;
pub mod refquad;
pub mod special;
pub mod wigner;

pub use error::{Error, Result};
pub use grid::{
    bilinear_pair_affine, inner_product_affine, inner_product_halfline, AffineGrid, AffineMap,
    HalfLineSignal, LogGrid,
};
pub use group::{affine_convolve, haar_right_measure, involution, GroupElement, HaarBox};
pub use mellin::{mellin_dilation_residual, mellin_forward, mellin_inverse, MellinSpectrum};
pub use special::{
    bump_state, klauder_state, lambda_eval, lambda_inv, log_gamma, morse_state, theta_eval,
    LaguerreSpec,
};
pub use wigner::{
    affine_ambiguity, affine_wigner, affine_wigner_diag, apply_u, concentration_check,
    estimate_support_constant, grossmann_royer_apply, hyperbolic_shift, marginal_a, marginal_x,
    scalogram_direct, scalogram_via_convolution, wigner_via_ambiguity, UGrid,
};
