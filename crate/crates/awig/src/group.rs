//! Affine group algebra: product, inverse, modular function, right Haar
//! measure of boxes, the convolution-algebra involution and the group
//! convolution itself.
//!
//! The group is `Aff = ℝ × ℝ₊` with `(x,a)·(y,b) = (x + ay, ab)`; the left
//! Haar measure is `a⁻² da dx`, the right one `a⁻¹ da dx`, and the modular
//! function is `Δ(x,a) = 1/a`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::AffineMap;

/// Element `(x, a)` of the affine group, `a > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroupElement {
    pub x: f64,
    pub a: f64,
}

impl GroupElement {
    pub fn new(x: f64, a: f64) -> Result<Self> {
        if !(x.is_finite() && a.is_finite() && a > 0.0) {
            return Err(Error::Validation(format!(
                "group element needs finite x and a > 0 (got ({x}, {a}))"
            )));
        }
        Ok(GroupElement { x, a })
    }

    pub fn identity() -> Self {
        GroupElement { x: 0.0, a: 1.0 }
    }

    /// Group law `(x, a)·(y, b) = (x + a y, a b)`.
    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement { x: self.x + self.a * other.x, a: self.a * other.a }
    }

    /// Inverse `(−x/a, 1/a)`.
    pub fn inv(&self) -> GroupElement {
        GroupElement { x: -self.x / self.a, a: 1.0 / self.a }
    }

    /// Modular function `Δ(x, a) = 1/a`; multiplicative.
    pub fn modular(&self) -> f64 {
        1.0 / self.a
    }
}

/// Product box `[x_lo, x_hi] × [a_lo, a_hi] ⊂ Aff`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HaarBox {
    pub x_lo: f64,
    pub x_hi: f64,
    pub a_lo: f64,
    pub a_hi: f64,
}

impl HaarBox {
    pub fn new(x_lo: f64, x_hi: f64, a_lo: f64, a_hi: f64) -> Result<Self> {
        if !(x_lo < x_hi && 0.0 < a_lo && a_lo < a_hi) {
            return Err(Error::Validation(format!(
                "box needs x_lo < x_hi and 0 < a_lo < a_hi (got [{x_lo},{x_hi}]×[{a_lo},{a_hi}])"
            )));
        }
        Ok(HaarBox { x_lo, x_hi, a_lo, a_hi })
    }
}

/// Right Haar measure of a box: `μ_r(U) = |U_1| · |log(U_2)|`.
pub fn haar_right_measure(u: &HaarBox) -> f64 {
    (u.x_hi - u.x_lo) * (u.a_hi.ln() - u.a_lo.ln())
}

/// Convolution-algebra involution `I(f)(x,a) = Δ(x,a)·conj(f((x,a)⁻¹))
/// = (1/a)·conj(f(−x/a, 1/a))`, sampled back onto the grid of `f`.
pub fn involution(f: &AffineMap) -> AffineMap {
    let grid = f.grid.clone();
    let nt = grid.log_axis.n;
    let mut out = AffineMap::zeros(grid.clone());
    for i in 0..grid.nx {
        let x = grid.x(i);
        for j in 0..nt {
            let t = grid.log_axis.t(j);
            let inv_x = -x * (-t).exp();
            let w = (-t).exp() * f.sample_at(inv_x, -t).conj();
            *out.at_mut(i, j) = w;
        }
    }
    out
}

/// Affine convolution in its right-Haar form:
/// `(f ∗ g)(x,a) = ∬ g(y,b) · f((x,a)·(y,b)⁻¹) db dy / b`,
/// with `(x,a)·(y,b)⁻¹ = (x − a y/b, a/b)` and `f` evaluated by bilinear
/// interpolation (zero outside its grid). O(N²) over grid nodes.
pub fn affine_convolve(f: &AffineMap, g: &AffineMap) -> Result<AffineMap> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch("affine_convolve: grids differ".into()));
    }
    let grid = f.grid.clone();
    let nt = grid.log_axis.n;
    let nx = grid.nx;
    let weight = grid.dx * grid.log_axis.dt;

    // gather the nonzero sources once; δ-like inputs then cost almost nothing
    let mut sources: Vec<(f64, f64, Complex64)> = Vec::new();
    for iy in 0..nx {
        let y = grid.x(iy);
        for jb in 0..nt {
            let v = g.at(iy, jb);
            if v != Complex64::default() {
                // store (y/b, log b) with b = e^{t}
                sources.push((y * (-grid.log_axis.t(jb)).exp(), grid.log_axis.t(jb), v));
            }
        }
    }

    let mut values = vec![Complex64::default(); nx * nt];
    values
        .par_chunks_mut(nt)
        .enumerate()
        .for_each(|(i, row)| {
            let x = grid.x(i);
            for (j, slot) in row.iter_mut().enumerate() {
                let t = grid.log_axis.t(j);
                let a = t.exp();
                let mut acc = Complex64::default();
                for &(y_over_b, tb, gv) in &sources {
                    acc += gv * f.sample_at(x - a * y_over_b, t - tb);
                }
                *slot = acc * weight;
            }
        });
    AffineMap::new(grid, values)
}
