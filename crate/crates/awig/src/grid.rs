//! Grids, quadrature and interpolation realizing `L²(ℝ₊, da/a)` and
//! `L²_r(Aff)` discretely.
//!
//! A [`LogGrid`] samples `t = log a` uniformly, so the Haar measure `da/a`
//! becomes `dt` and inner products are plain weighted sums. An [`AffineGrid`]
//! is the rectangular product of an `x` axis with a log axis; fields on it
//! carry the right Haar measure `da dx / a = dx dt`.
//!
//! Interpolation follows a fixed policy: 4-point Lagrange cubic in `t` for
//! signals (they get resampled inside oscillatory integrals), bilinear in
//! `(x, t)` for affine maps. Off-grid points are extended by zero.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform grid in `t = log a`; node `j` sits at `a_j = exp(t_min + j dt)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogGrid {
    /// Leftmost log coordinate.
    pub t_min: f64,
    /// Log-coordinate step; also the quadrature weight for `da/a`.
    pub dt: f64,
    /// Number of nodes.
    pub n: usize,
}

impl LogGrid {
    pub fn new(t_min: f64, dt: f64, n: usize) -> Result<Self> {
        if !(t_min.is_finite() && dt.is_finite() && dt > 0.0) || n == 0 {
            return Err(Error::Validation(format!(
                "log grid needs finite t_min, dt > 0, n > 0 (got t_min={t_min}, dt={dt}, n={n})"
            )));
        }
        Ok(LogGrid { t_min, dt, n })
    }

    /// Grid of `n` nodes over the half-open span `[t_min, t_max)`,
    /// `dt = (t_max − t_min)/n` (FFT periodization width = span).
    pub fn from_span(t_min: f64, t_max: f64, n: usize) -> Result<Self> {
        if !(t_max > t_min) {
            return Err(Error::Validation(format!(
                "log grid span needs t_min < t_max (got {t_min}, {t_max})"
            )));
        }
        LogGrid::new(t_min, (t_max - t_min) / n as f64, n)
    }

    /// Grid of `n` nodes at `(j − n/2)·dt`, so `t = 0` is an exact node.
    pub fn centered(dt: f64, n: usize) -> Result<Self> {
        LogGrid::new(-(n as f64 / 2.0) * dt, dt, n)
    }

    #[inline]
    pub fn t(&self, j: usize) -> f64 {
        self.t_min + j as f64 * self.dt
    }

    #[inline]
    pub fn a(&self, j: usize) -> f64 {
        self.t(j).exp()
    }

    /// Last node coordinate `t_min + (n−1) dt`.
    pub fn t_last(&self) -> f64 {
        self.t(self.n - 1)
    }

    /// Index shift realizing multiplication by `r > 0` on the nodes.
    /// Errors when `log r` is not an integer multiple of `dt`.
    pub fn shift_for_factor(&self, r: f64) -> Result<i64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::Validation(format!("factor must be > 0 (got {r})")));
        }
        let s = r.ln() / self.dt;
        let q = s.round();
        if (s - q).abs() > 1e-8 * (1.0 + s.abs()) {
            return Err(Error::Validation(format!(
                "factor {r} is not grid-commensurate: log(r)/dt = {s}"
            )));
        }
        Ok(q as i64)
    }
}

/// Complex samples of a half-line signal `ψ(a_j)` on a [`LogGrid`];
/// models `ψ ∈ L²(ℝ₊, da/a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfLineSignal {
    pub grid: LogGrid,
    pub values: Vec<Complex64>,
}

impl HalfLineSignal {
    pub fn new(grid: LogGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.n {
            return Err(Error::Validation(format!(
                "signal length {} does not match grid n = {}",
                values.len(),
                grid.n
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::Validation("signal contains non-finite samples".into()));
        }
        Ok(HalfLineSignal { grid, values })
    }

    pub fn zeros(grid: LogGrid) -> Self {
        let n = grid.n;
        HalfLineSignal { grid, values: vec![Complex64::default(); n] }
    }

    /// Sample a function of `a` on the grid nodes.
    pub fn from_fn(grid: LogGrid, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = (0..grid.n).map(|j| f(grid.a(j))).collect();
        HalfLineSignal::new(grid, values)
    }

    /// Haar squared norm `dt·Σ |ψ_j|²`.
    pub fn norm_sq(&self) -> f64 {
        self.grid.dt * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Rescale to unit Haar norm. Errors on the zero signal.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::Validation("cannot normalize the zero signal".into()));
        }
        let values = self.values.iter().map(|v| v / n).collect();
        Ok(HalfLineSignal { grid: self.grid.clone(), values })
    }

    /// Linear combination `Σ c_i ψ_i` of signals on a shared grid.
    pub fn superpose(terms: &[(Complex64, &HalfLineSignal)]) -> Result<Self> {
        let grid = match terms.first() {
            Some((_, s)) => s.grid.clone(),
            None => return Err(Error::Validation("superpose needs at least one term".into())),
        };
        let mut values = vec![Complex64::default(); grid.n];
        for (c, s) in terms {
            if s.grid != grid {
                return Err(Error::GridMismatch("superpose terms on different grids".into()));
            }
            for (v, w) in values.iter_mut().zip(&s.values) {
                *v += c * w;
            }
        }
        HalfLineSignal::new(grid, values)
    }

    /// Interpolated value at log-coordinate `t` (cubic; exact on nodes;
    /// zero outside `[t_min, t_min + (n−1) dt]`).
    pub fn sample_at_log(&self, t: f64) -> Complex64 {
        sample_uniform_cubic(&self.values, (t - self.grid.t_min) / self.grid.dt)
    }
}

/// Cubic Lagrange weights on the stencil `{j−1, j, j+1, j+2}` at fractional
/// offset `f ∈ [0,1)` from node `j`. Reproduces nodal values exactly at `f=0`.
#[inline]
pub(crate) fn cubic_weights(f: f64) -> [f64; 4] {
    let fm1 = f - 1.0;
    let fm2 = f - 2.0;
    let fp1 = f + 1.0;
    [
        -f * fm1 * fm2 / 6.0,
        fp1 * fm1 * fm2 / 2.0,
        -f * fp1 * fm2 / 2.0,
        f * fp1 * fm1 / 6.0,
    ]
}

/// Evaluate uniformly sampled data at fractional index `s` (cubic Lagrange,
/// stencil clamped near the edges, zero outside `[0, n−1]`).
pub(crate) fn sample_uniform_cubic(values: &[Complex64], s: f64) -> Complex64 {
    let n = values.len();
    let last = (n - 1) as f64;
    if !((-1e-9..=last + 1e-9).contains(&s)) {
        return Complex64::default();
    }
    let s = s.clamp(0.0, last);
    let j = s.floor() as usize;
    let f = s - j as f64;
    if f == 0.0 {
        return values[j];
    }
    if n < 4 {
        // short grids fall back to linear interpolation
        let j1 = (j + 1).min(n - 1);
        return values[j] * (1.0 - f) + values[j1] * f;
    }
    // shift the 4-point stencil to stay inside the array near the edges
    let base = (j as isize - 1).clamp(0, n as isize - 4) as usize;
    let x = s - base as f64; // position relative to the stencil, in [0,3]
    let w = lagrange4_at(x);
    values[base] * w[0] + values[base + 1] * w[1] + values[base + 2] * w[2] + values[base + 3] * w[3]
}

/// Lagrange weights for nodes {0,1,2,3} evaluated at `x ∈ [0,3]`.
#[inline]
fn lagrange4_at(x: f64) -> [f64; 4] {
    let x1 = x - 1.0;
    let x2 = x - 2.0;
    let x3 = x - 3.0;
    [
        -x1 * x2 * x3 / 6.0,
        x * x2 * x3 / 2.0,
        -x * x1 * x3 / 2.0,
        x * x1 * x2 / 6.0,
    ]
}

/// Haar inner product `dt·Σ f_j conj(g_j)` on a shared grid.
pub fn inner_product_halfline(f: &HalfLineSignal, g: &HalfLineSignal) -> Result<Complex64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch("inner_product_halfline: grids differ".into()));
    }
    let s: Complex64 = f.values.iter().zip(&g.values).map(|(a, b)| a * b.conj()).sum();
    Ok(s * f.grid.dt)
}

/// Interpolated values of `ψ` at positive targets `a` (cubic in `log a`,
/// zero extension outside the grid).
pub fn resample(f: &HalfLineSignal, targets: &[f64]) -> Result<Vec<Complex64>> {
    for &a in targets {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::Validation(format!("resample target must be > 0 (got {a})")));
        }
    }
    Ok(targets.iter().map(|&a| f.sample_at_log(a.ln())).collect())
}

/// Rectangular `(x, log a)` grid for fields on the affine group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AffineGrid {
    pub x_min: f64,
    pub dx: f64,
    pub nx: usize,
    pub log_axis: LogGrid,
}

impl AffineGrid {
    pub fn new(x_min: f64, dx: f64, nx: usize, log_axis: LogGrid) -> Result<Self> {
        if !(x_min.is_finite() && dx.is_finite() && dx > 0.0) || nx == 0 {
            return Err(Error::Validation(format!(
                "affine grid needs finite x_min, dx > 0, nx > 0 (got x_min={x_min}, dx={dx}, nx={nx})"
            )));
        }
        Ok(AffineGrid { x_min, dx, nx, log_axis })
    }

    /// `nx` nodes at `(i − nx/2)·dx`, so `x = 0` is an exact node.
    pub fn centered(dx: f64, nx: usize, log_axis: LogGrid) -> Result<Self> {
        AffineGrid::new(-(nx as f64 / 2.0) * dx, dx, nx, log_axis)
    }

    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx
    }

    /// Whether the x axis is the centered FFT layout `(i − nx/2)·dx`.
    pub fn is_x_centered(&self) -> bool {
        (self.x_min + (self.nx as f64 / 2.0) * self.dx).abs() < 1e-9 * self.dx * self.nx as f64
    }

    pub fn node_count(&self) -> usize {
        self.nx * self.log_axis.n
    }
}

/// Complex field sampled on an [`AffineGrid`]; models `f ∈ L²_r(Aff)`.
/// Values are row-major with `x` outer: `values[i · nt + j]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMap {
    pub grid: AffineGrid,
    pub values: Vec<Complex64>,
}

impl AffineMap {
    pub fn new(grid: AffineGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.node_count() {
            return Err(Error::Validation(format!(
                "map length {} does not match grid {}×{}",
                values.len(),
                grid.nx,
                grid.log_axis.n
            )));
        }
        Ok(AffineMap { grid, values })
    }

    pub fn zeros(grid: AffineGrid) -> Self {
        let len = grid.node_count();
        AffineMap { grid, values: vec![Complex64::default(); len] }
    }

    pub fn from_fn(grid: AffineGrid, f: impl Fn(f64, f64) -> Complex64) -> Self {
        let nt = grid.log_axis.n;
        let mut values = Vec::with_capacity(grid.node_count());
        for i in 0..grid.nx {
            let x = grid.x(i);
            for j in 0..nt {
                values.push(f(x, grid.log_axis.a(j)));
            }
        }
        AffineMap { grid, values }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.values[i * self.grid.log_axis.n + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Complex64 {
        &mut self.values[i * self.grid.log_axis.n + j]
    }

    /// Right-Haar squared norm `dx·dt·Σ |v|²`.
    pub fn norm_sq_right(&self) -> f64 {
        self.grid.dx
            * self.grid.log_axis.dt
            * self.values.iter().map(|v| v.norm_sqr()).sum::<f64>()
    }

    pub fn norm_right(&self) -> f64 {
        self.norm_sq_right().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// In-place `self += c·other` on a shared grid.
    pub fn scaled_add(&mut self, c: Complex64, other: &AffineMap) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch("scaled_add: grids differ".into()));
        }
        for (v, w) in self.values.iter_mut().zip(&other.values) {
            *v += c * w;
        }
        Ok(())
    }

    pub fn scale(&mut self, c: Complex64) {
        for v in self.values.iter_mut() {
            *v *= c;
        }
    }

    /// Bilinear interpolation at `(x, t = log a)`; exact on nodes, zero
    /// outside the grid rectangle.
    pub fn sample_at(&self, x: f64, t: f64) -> Complex64 {
        let g = &self.grid;
        let nt = g.log_axis.n;
        let sx = (x - g.x_min) / g.dx;
        let st = (t - g.log_axis.t_min) / g.log_axis.dt;
        let lx = (g.nx - 1) as f64;
        let lt = (nt - 1) as f64;
        if !((-1e-9..=lx + 1e-9).contains(&sx)) || !((-1e-9..=lt + 1e-9).contains(&st)) {
            return Complex64::default();
        }
        let sx = sx.clamp(0.0, lx);
        let st = st.clamp(0.0, lt);
        let i = (sx.floor() as usize).min(g.nx.saturating_sub(2));
        let j = (st.floor() as usize).min(nt.saturating_sub(2));
        let fx = sx - i as f64;
        let ft = st - j as f64;
        if g.nx == 1 || nt == 1 {
            return self.at(i.min(g.nx - 1), j.min(nt - 1));
        }
        let v00 = self.at(i, j);
        let v01 = self.at(i, j + 1);
        let v10 = self.at(i + 1, j);
        let v11 = self.at(i + 1, j + 1);
        v00 * ((1.0 - fx) * (1.0 - ft))
            + v01 * ((1.0 - fx) * ft)
            + v10 * (fx * (1.0 - ft))
            + v11 * (fx * ft)
    }

    /// Build from a `t`-outer scratch buffer (`buf[j · nx + i]`).
    pub(crate) fn from_t_outer(grid: AffineGrid, buf: &[Complex64]) -> Self {
        let nt = grid.log_axis.n;
        let nx = grid.nx;
        debug_assert_eq!(buf.len(), nt * nx);
        let mut values = vec![Complex64::default(); nt * nx];
        for j in 0..nt {
            for i in 0..nx {
                values[i * nt + j] = buf[j * nx + i];
            }
        }
        AffineMap { grid, values }
    }
}

/// Right-Haar inner product `dx·dt·Σ F conj(G)` on a shared grid.
pub fn inner_product_affine(f: &AffineMap, g: &AffineMap) -> Result<Complex64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch("inner_product_affine: grids differ".into()));
    }
    let s: Complex64 = f.values.iter().zip(&g.values).map(|(a, b)| a * b.conj()).sum();
    Ok(s * (f.grid.dx * f.grid.log_axis.dt))
}

/// Bilinear (unconjugated) pairing `dx·dt·Σ F·G`; the trace formula uses it.
pub fn bilinear_pair_affine(f: &AffineMap, g: &AffineMap) -> Result<Complex64> {
    if f.grid != g.grid {
        return Err(Error::GridMismatch("bilinear_pair_affine: grids differ".into()));
    }
    let s: Complex64 = f.values.iter().zip(&g.values).map(|(a, b)| a * b).sum();
    Ok(s * (f.grid.dx * f.grid.log_axis.dt))
}

/// Bilinear interpolation of `F` at points `(x, a)`, zero outside the grid.
pub fn resample_affine(f: &AffineMap, points: &[(f64, f64)]) -> Result<Vec<Complex64>> {
    for &(_, a) in points {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::Validation(format!(
                "resample_affine needs a > 0 (got a = {a})"
            )));
        }
    }
    Ok(points.iter().map(|&(x, a)| f.sample_at(x, a.ln())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn indicator_unit_interval(grid: &LogGrid) -> HalfLineSignal {
        // indicator of [1, e] in a-coordinates = [0, 1] in t
        HalfLineSignal::from_fn(grid.clone(), |a| {
            let t = a.ln();
            if (0.0..=1.0).contains(&t) { Complex64::new(1.0, 0.0) } else { Complex64::default() }
        })
        .unwrap()
    }

    #[test]
    fn haar_length_of_unit_log_interval() {
        let grid = LogGrid::from_span(-4.0, 4.0, 1024).unwrap();
        let f = indicator_unit_interval(&grid);
        let ip = inner_product_halfline(&f, &f).unwrap();
        // ∫_1^e da/a = 1, up to one dt of edge effect
        assert!((ip.re - 1.0).abs() <= grid.dt + 1e-12, "got {}", ip.re);
        assert!(ip.im.abs() < 1e-15);
    }

    #[test]
    fn disjoint_supports_are_orthogonal() {
        let grid = LogGrid::from_span(-4.0, 4.0, 512).unwrap();
        let f = HalfLineSignal::from_fn(grid.clone(), |a| {
            if a.ln() < 0.0 { Complex64::new(1.0, 0.5) } else { Complex64::default() }
        })
        .unwrap();
        let g = HalfLineSignal::from_fn(grid.clone(), |a| {
            if a.ln() >= 0.0 { Complex64::new(2.0, -1.0) } else { Complex64::default() }
        })
        .unwrap();
        assert_eq!(inner_product_halfline(&f, &g).unwrap(), Complex64::default());
    }

    #[test]
    fn morse_pair_matches_quadrature_oracle() {
        // ⟨ψ1, ψ2⟩ = ∫ ψ1 ψ2 da/a with ψs = r^s e^{-r/2}/Γ(2s); oracle by
        // adaptive Simpson on the closed-form integrand.
        let grid = LogGrid::from_span(-12.0, 8.0, 4096).unwrap();
        let p1 = crate::special::morse_state(1.0, &grid).unwrap();
        let p2 = crate::special::morse_state(2.0, &grid).unwrap();
        let ip = inner_product_halfline(&p1, &p2).unwrap();
        let oracle = crate::refquad::adaptive_simpson(
            &|r: f64| {
                let g2 = 1.0; // Γ(2)
                let g4 = 6.0; // Γ(4)
                (r * (-r / 2.0).exp() / g2) * (r * r * (-r / 2.0).exp() / g4) / r
            },
            1e-12,
            80.0,
            1e-11,
        );
        assert!(
            (ip.re - oracle).abs() <= 1e-6 * oracle.abs(),
            "ip = {}, oracle = {oracle}",
            ip.re
        );
    }

    #[test]
    fn grid_mismatch_is_rejected() {
        let g1 = LogGrid::from_span(-1.0, 1.0, 64).unwrap();
        let g2 = LogGrid::from_span(-1.0, 1.0, 128).unwrap();
        let f = HalfLineSignal::zeros(g1);
        let g = HalfLineSignal::zeros(g2);
        assert!(matches!(inner_product_halfline(&f, &g), Err(Error::GridMismatch(_))));
    }

    #[test]
    fn resample_reproduces_nodes_and_extends_by_zero() {
        let grid = LogGrid::from_span(-2.0, 2.0, 64).unwrap();
        let f = HalfLineSignal::from_fn(grid.clone(), |a| Complex64::new(a.ln().sin(), a)).unwrap();
        let nodes: Vec<f64> = (0..grid.n).map(|j| grid.a(j)).collect();
        let vals = resample(&f, &nodes).unwrap();
        assert_eq!(vals, f.values);
        let outside = resample(&f, &[(grid.t_min - 0.5).exp(), (grid.t_last() + 0.5).exp()]).unwrap();
        assert_eq!(outside, vec![Complex64::default(); 2]);
        assert!(resample(&f, &[-1.0]).is_err());
    }

    #[test]
    fn resample_is_fourth_order_on_smooth_signal() {
        // Gaussian in log coordinates, evaluated at cell midpoints.
        let gauss = |t: f64| Complex64::new((-t * t / 2.0).exp(), 0.0);
        let mut errs = Vec::new();
        for &n in &[128usize, 256] {
            let grid = LogGrid::from_span(-6.0, 6.0, n).unwrap();
            let f = HalfLineSignal::from_fn(grid.clone(), |a| gauss(a.ln())).unwrap();
            let mut emax: f64 = 0.0;
            for j in 10..n - 12 {
                let t = grid.t(j) + grid.dt / 2.0;
                let e = (f.sample_at_log(t) - gauss(t)).norm();
                emax = emax.max(e);
            }
            errs.push(emax);
        }
        // order ≥ 4: doubling n shrinks the error by ≥ ~14x
        assert!(errs[1] <= errs[0] / 14.0, "errors: {errs:?}");
        assert!(errs[0] < 1e-6);
    }

    #[test]
    fn indicator_self_product_equals_log_length() {
        let grid = LogGrid::from_span(-4.0, 4.0, 256).unwrap();
        // [e^p, e^q] with p = -1, q = 2 grid-aligned (dt = 8/256 divides 1)
        let f = HalfLineSignal::from_fn(grid.clone(), |a| {
            let t = a.ln();
            if (-1.0..=2.0).contains(&t) { Complex64::new(1.0, 0.0) } else { Complex64::default() }
        })
        .unwrap();
        let ip = inner_product_halfline(&f, &f).unwrap().re;
        assert!((ip - 3.0).abs() <= grid.dt + 1e-12);
    }

    #[test]
    fn affine_map_node_exact_and_zero_outside() {
        let log = LogGrid::from_span(-2.0, 2.0, 32).unwrap();
        let grid = AffineGrid::centered(0.25, 32, log).unwrap();
        let f = AffineMap::from_fn(grid.clone(), |x, a| Complex64::new(x + a, x * a));
        let v = f.sample_at(grid.x(5), grid.log_axis.t(7));
        assert_eq!(v, f.at(5, 7));
        assert_eq!(f.sample_at(1e9, 0.0), Complex64::default());
        assert!(resample_affine(&f, &[(0.0, -2.0)]).is_err());
    }

    #[test]
    fn affine_map_bilinear_is_second_order() {
        let field = |x: f64, t: f64| Complex64::new((x * 0.8).sin() * (-t * t).exp(), 0.0);
        let mut errs = Vec::new();
        for &n in &[64usize, 128] {
            let log = LogGrid::from_span(-3.0, 3.0, n).unwrap();
            let grid = AffineGrid::centered(6.0 / n as f64, n, log).unwrap();
            let f = AffineMap::from_fn(grid.clone(), |x, a| field(x, a.ln()));
            let mut emax: f64 = 0.0;
            for i in 4..n - 4 {
                for j in 4..n - 4 {
                    let x = grid.x(i) + grid.dx / 2.0;
                    let t = grid.log_axis.t(j) + grid.log_axis.dt / 2.0;
                    let e = (f.sample_at(x, t) - field(x, t)).norm();
                    emax = emax.max(e);
                }
            }
            errs.push(emax);
        }
        assert!(errs[1] <= errs[0] / 3.2, "errors: {errs:?}");
    }

    #[test]
    fn affine_inner_product_positive_definite_and_zero() {
        let log = LogGrid::from_span(-2.0, 2.0, 16).unwrap();
        let grid = AffineGrid::centered(0.5, 16, log).unwrap();
        let f = AffineMap::from_fn(grid.clone(), |x, a| Complex64::new(x.cos() * a, 0.3));
        let z = AffineMap::zeros(grid.clone());
        let ff = inner_product_affine(&f, &f).unwrap();
        assert!(ff.re > 0.0 && ff.im.abs() < 1e-14 * ff.re.abs());
        assert_eq!(inner_product_affine(&f, &z).unwrap(), Complex64::default());
    }

    proptest! {
        #[test]
        fn inner_product_is_conjugate_symmetric(seed in 0u64..200) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let grid = LogGrid::from_span(-2.0, 2.0, 32).unwrap();
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let vals = (0..32).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
                HalfLineSignal::new(grid.clone(), vals).unwrap()
            };
            let f = mk(&mut rng);
            let g = mk(&mut rng);
            let fg = inner_product_halfline(&f, &g).unwrap();
            let gf = inner_product_halfline(&g, &f).unwrap();
            prop_assert!((fg - gf.conj()).norm() <= 1e-12 * (1.0 + fg.norm()));
            let ff = inner_product_halfline(&f, &f).unwrap();
            prop_assert!(ff.re >= 0.0);
        }

        #[test]
        fn resample_is_linear(seed in 0u64..100) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let grid = LogGrid::from_span(-2.0, 2.0, 48).unwrap();
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let vals = (0..48).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
                HalfLineSignal::new(grid.clone(), vals).unwrap()
            };
            let f = mk(&mut rng);
            let g = mk(&mut rng);
            let a = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let b = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let combo = HalfLineSignal::superpose(&[(a, &f), (b, &g)]).unwrap();
            let targets: Vec<f64> = (0..40).map(|_| rng.gen_range(-2.2..2.2f64).exp()).collect();
            let lhs = resample(&combo, &targets).unwrap();
            let rf = resample(&f, &targets).unwrap();
            let rg = resample(&g, &targets).unwrap();
            for i in 0..targets.len() {
                let rhs = a * rf[i] + b * rg[i];
                prop_assert!((lhs[i] - rhs).norm() <= 1e-12 * (1.0 + rhs.norm()));
            }
        }
    }
}
