//! The Mellin transform `𝓜ψ(x) = ∫_0^∞ ψ(a) a^{−2πix} da/a`, its inverse
//! and the dilation law, realized as a centered DFT on the log axis.
//!
//! Exactly one exponent convention is implemented (the one above); the
//! transform is the Fourier transform of the log-pullback `Ψ(t) = ψ(e^t)`,
//! hence unitary from `L²(ℝ₊, da/a)` onto `L²(ℝ)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourier::CenteredDft;
use crate::grid::{sample_uniform_cubic, HalfLineSignal, LogGrid};

/// Samples of `𝓜ψ` on the centered dual axis `x_k = (k − n/2)·dx`,
/// `dx = 1/(n·dt)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MellinSpectrum {
    pub x_min: f64,
    pub dx: f64,
    pub nx: usize,
    pub values: Vec<Complex64>,
}

impl MellinSpectrum {
    #[inline]
    pub fn x(&self, k: usize) -> f64 {
        self.x_min + k as f64 * self.dx
    }

    /// Euclidean squared norm `dx·Σ|𝓜ψ|²`; equals `‖ψ‖²` by unitarity.
    pub fn norm_sq(&self) -> f64 {
        self.dx * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    /// Cubic interpolation of the spectrum at `x` (zero outside the axis).
    pub fn sample_at(&self, x: f64) -> Complex64 {
        sample_uniform_cubic(&self.values, (x - self.x_min) / self.dx)
    }
}

/// Fraction of signal energy carried by the outer 10% of the log grid.
/// The DFT silently periodizes; signals should keep this below ~1e−10.
pub fn edge_energy_fraction(f: &HalfLineSignal) -> f64 {
    let n = f.grid.n;
    let band = (n / 10).max(1);
    let total: f64 = f.values.iter().map(|v| v.norm_sqr()).sum();
    if total == 0.0 {
        return 0.0;
    }
    let edge: f64 = f.values[..band]
        .iter()
        .chain(&f.values[n - band..])
        .map(|v| v.norm_sqr())
        .sum();
    edge / total
}

/// Forward Mellin transform. Plancherel holds to machine rounding:
/// `dx·Σ|𝓜ψ|² = dt·Σ|ψ|²`.
pub fn mellin_forward(f: &HalfLineSignal) -> MellinSpectrum {
    let frac = edge_energy_fraction(f);
    if frac > 1e-10 {
        log::warn!(
            "mellin_forward: {:.2e} of the signal energy sits in the outer 10% of the log grid; \
             the DFT periodizes and aliasing may leak",
            frac
        );
    }
    let n = f.grid.n;
    let dft = CenteredDft::new(n);
    let mut values = f.values.clone();
    let axis = dft.forward(&mut values, f.grid.dt, f.grid.t_min);
    MellinSpectrum { x_min: axis.x_min, dx: axis.dx, nx: n, values }
}

/// Inverse Mellin transform onto `grid`; exact round trip with
/// [`mellin_forward`] when the axes are dual.
pub fn mellin_inverse(spec: &MellinSpectrum, grid: &LogGrid) -> Result<HalfLineSignal> {
    if spec.nx != grid.n {
        return Err(Error::Validation(format!(
            "mellin_inverse: spectrum has {} samples, grid has {}",
            spec.nx, grid.n
        )));
    }
    let dual_dx = 1.0 / (grid.n as f64 * grid.dt);
    if (spec.dx - dual_dx).abs() > 1e-9 * dual_dx {
        return Err(Error::Validation(format!(
            "mellin_inverse: spectrum step {} is not dual to the grid (expect {})",
            spec.dx, dual_dx
        )));
    }
    let dft = CenteredDft::new(grid.n);
    let mut values = spec.values.clone();
    dft.inverse(&mut values, spec.dx, spec.x_min, grid.t_min);
    HalfLineSignal::new(grid.clone(), values)
}

/// Sup-norm deviation between `𝓜(D_r ψ)` and `r^{−2πix−1/2}·𝓜ψ`, the Mellin
/// dilation law, for a grid-commensurate ratio `r` (`D_r ψ(a) = ψ(a/r)/√r`).
pub fn mellin_dilation_residual(f: &HalfLineSignal, r: f64) -> Result<f64> {
    let shift = f.grid.shift_for_factor(r)?;
    let n = f.grid.n;
    let mut dilated = vec![Complex64::default(); n];
    let scale = 1.0 / r.sqrt();
    for j in 0..n {
        let src = j as i64 - shift;
        if (0..n as i64).contains(&src) {
            dilated[j] = f.values[src as usize] * scale;
        }
    }
    let dil = HalfLineSignal::new(f.grid.clone(), dilated)?;
    let lhs = mellin_forward(&dil);
    let rhs = mellin_forward(f);
    let ln_r = r.ln();
    let mut sup: f64 = 0.0;
    for k in 0..n {
        let x = rhs.x(k);
        // r^{−2πix−1/2} = e^{−(2πix + 1/2)·log r}
        let law = Complex64::from_polar(
            (-0.5 * ln_r).exp(),
            -2.0 * std::f64::consts::PI * x * ln_r,
        );
        sup = sup.max((lhs.values[k] - law * rhs.values[k]).norm());
    }
    Ok(sup)
}
