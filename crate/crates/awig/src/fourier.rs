//! Centered discrete Fourier transforms on uniform axes.
//!
//! Conventions used throughout the crate: the forward kernel is
//! `e^{−2πi x t}` with quadrature weight equal to the step, and the dual
//! axis is centered, `x_k = (k − n/2)·dx` with `dx = 1/(n·h)`, so `x = 0`
//! is an exact sample. With these scalings the transform is unitary:
//! `dx·Σ|F|² = h·Σ|f|²` holds to machine rounding.

use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

/// A planned centered transform of fixed length.
pub struct CenteredDft {
    n: usize,
    forward: Arc<dyn Fft<f64>>,
    inverse: Arc<dyn Fft<f64>>,
}

/// Description of the (centered) dual axis produced by a forward transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualAxis {
    pub x_min: f64,
    pub dx: f64,
}

impl CenteredDft {
    pub fn new(n: usize) -> Self {
        let mut planner = FftPlanner::new();
        CenteredDft {
            n,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// In-place `F_k = h·Σ_j f_j e^{−2πi x_k t_j}` for `t_j = t0 + j·h`,
    /// `x_k = (k − n/2)/(n·h)`. Returns the dual axis.
    pub fn forward(&self, data: &mut [Complex64], h: f64, t0: f64) -> DualAxis {
        let n = self.n;
        debug_assert_eq!(data.len(), n);
        for (j, v) in data.iter_mut().enumerate() {
            if j % 2 == 1 {
                *v = -*v;
            }
        }
        self.forward.process(data);
        let dx = 1.0 / (n as f64 * h);
        let x_min = -(n as f64 / 2.0) * dx;
        for (k, v) in data.iter_mut().enumerate() {
            let x = x_min + k as f64 * dx;
            *v *= Complex64::from_polar(h, -2.0 * std::f64::consts::PI * x * t0);
        }
        DualAxis { x_min, dx }
    }

    /// In-place `f_j = h'·Σ_k F_k e^{+2πi t_j x_k}` for `x_k = x0 + k·h'`,
    /// onto the output axis `t_j = t0_out + j·(1/(n·h'))`.
    pub fn inverse(&self, data: &mut [Complex64], h: f64, x0: f64, t0_out: f64) {
        let n = self.n;
        debug_assert_eq!(data.len(), n);
        for (k, v) in data.iter_mut().enumerate() {
            let x = x0 + k as f64 * h;
            *v *= Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * t0_out * x);
        }
        self.inverse.process(data);
        let dt = 1.0 / (n as f64 * h);
        for (j, v) in data.iter_mut().enumerate() {
            let t_rel = j as f64 * dt;
            *v *= Complex64::from_polar(h, 2.0 * std::f64::consts::PI * t_rel * x0);
        }
    }
}
