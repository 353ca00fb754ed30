//! The λ reparametrization and its inverse, the Θ multiplier, log-Gamma,
//! the normalized Laguerre basis of `L²(ℝ₊, da/a)`, and the named test
//! states (Morse, Klauder, smooth bump).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{HalfLineSignal, LogGrid};

/// `λ(u) = u e^u / (e^u − 1)`, the change of variables behind the affine
/// Wigner kernel. Strictly increasing, `λ(0) = 1`, `λ(u) > 1` iff `u > 0`.
///
/// Near the removable singularity the Bernoulli series of
/// `(u/2)·coth(u/2) + u/2` is used; elsewhere `−u / expm1(−u)`.
pub fn lambda_eval(u: f64) -> f64 {
    if u.abs() < 0.5 {
        let u2 = u * u;
        // 1 + u/2 + u²/12 − u⁴/720 + u⁶/30240 − u⁸/1209600 + u¹⁰/47900160
        let even = 1.0
            + u2 * (1.0 / 12.0
                + u2 * (-1.0 / 720.0
                    + u2 * (1.0 / 30240.0
                        + u2 * (-1.0 / 1209600.0 + u2 * (1.0 / 47900160.0)))));
        even + 0.5 * u
    } else {
        -u / f64::exp_m1(-u)
    }
}

/// Derivative `λ'(u)`; positive everywhere.
pub(crate) fn lambda_deriv(u: f64) -> f64 {
    if u.abs() < 0.5 {
        let u2 = u * u;
        0.5 + u * (1.0 / 6.0
            + u2 * (-1.0 / 180.0
                + u2 * (1.0 / 5040.0 + u2 * (-1.0 / 151200.0 + u2 * (1.0 / 4790016.0)))))
    } else {
        // λ'/λ = 1/u − 1/expm1(u)
        lambda_eval(u) * (1.0 / u - 1.0 / f64::exp_m1(u))
    }
}

/// Inverse of [`lambda_eval`]: the `u` with `λ(u) = v`, to
/// `|λ(u) − v| ≤ 1e−12·max(1, v)`. Bracketed Newton with bisection fallback.
pub fn lambda_inv(v: f64) -> Result<f64> {
    if !(v.is_finite() && v > 0.0) {
        return Err(Error::Validation(format!("lambda_inv needs v > 0 (got {v})")));
    }
    if v == 1.0 {
        return Ok(0.0);
    }
    let (mut lo, mut hi);
    if v > 1.0 {
        // λ(u) > u for u > 0, so hi = v brackets from above
        lo = 0.0;
        hi = v;
    } else {
        hi = 0.0;
        lo = -1.0;
        let mut guard = 0;
        while lambda_eval(lo) > v {
            lo *= 2.0;
            guard += 1;
            if guard > 64 || lo < -1e4 {
                break;
            }
        }
    }
    let tol = 1e-13 * v.max(1.0);
    let mut u = 0.5 * (lo + hi);
    for _ in 0..200 {
        let f = lambda_eval(u) - v;
        if f.abs() <= tol {
            return Ok(u);
        }
        if f > 0.0 {
            hi = u;
        } else {
            lo = u;
        }
        let step = f / lambda_deriv(u);
        let un = u - step;
        u = if un > lo && un < hi { un } else { 0.5 * (lo + hi) };
        if hi - lo < f64::EPSILON * (1.0 + u.abs()) {
            return Ok(u);
        }
    }
    let f = lambda_eval(u) - v;
    if f.abs() <= 1e-12 * v.max(1.0) {
        Ok(u)
    } else {
        Err(Error::Numerical(format!("lambda_inv did not converge for v = {v}")))
    }
}

/// `Θ(y, b) = (√b·log b / (b − 1))^{2πiy}`, with `Θ(y, 1) = 1`.
/// Unimodular by construction; the base equals `√(λ(log b)·λ(−log b))`.
pub fn theta_eval(y: f64, b: f64) -> Result<Complex64> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::Validation(format!("theta_eval needs b > 0 (got {b})")));
    }
    let tau = b.ln();
    let base_sq = lambda_eval(tau) * lambda_eval(-tau);
    let phase = std::f64::consts::PI * y * base_sq.ln();
    Ok(Complex64::from_polar(1.0, 2.0 * phase))
}

// Lanczos g = 7, 9-term coefficients (positive axis).
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// `log Γ(x)` for `x > 0`, Lanczos approximation (relative error ≲ 1e−13).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Validation(format!("log_gamma needs x > 0 (got {x})")));
    }
    if x < 0.5 {
        // reflection: Γ(x)Γ(1−x) = π / sin(πx); both arguments stay positive
        let refl = (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln();
        return Ok(refl - log_gamma(1.0 - x)?);
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + 7.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln())
}

/// Order and parameter of a normalized Laguerre function `𝓛_n^{(α)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreSpec {
    pub n: usize,
    pub alpha: f64,
}

impl LaguerreSpec {
    pub fn new(n: usize, alpha: f64) -> Result<Self> {
        if !(alpha.is_finite() && alpha > -1.0) {
            return Err(Error::Validation(format!(
                "Laguerre parameter needs alpha > -1 (got {alpha})"
            )));
        }
        Ok(LaguerreSpec { n, alpha })
    }

    /// `𝓛_n^{(α)}(r)` for `r > 0`.
    pub fn eval(&self, r: f64) -> f64 {
        laguerre_fn(self.n, self.alpha, r)
    }

    /// Samples on a log grid.
    pub fn sample(&self, grid: &LogGrid) -> HalfLineSignal {
        let values = (0..grid.n)
            .map(|j| Complex64::new(self.eval(grid.a(j)), 0.0))
            .collect();
        HalfLineSignal { grid: grid.clone(), values }
    }
}

/// Generalized Laguerre polynomial `L_n^{(α)}(x)` by the three-term
/// recurrence `(n+1)L_{n+1} = (2n+1+α−x)L_n − (n+α)L_{n−1}`.
pub fn laguerre_poly(n: usize, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut lm1 = 1.0;
    let mut l = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let lp1 = ((2.0 * kf + 1.0 + alpha - x) * l - (kf + alpha) * lm1) / (kf + 1.0);
        lm1 = l;
        l = lp1;
    }
    l
}

/// Normalized Laguerre function
/// `𝓛_n^{(α)}(x) = √(n!/Γ(n+α+1)) · x^{(α+1)/2} e^{−x/2} L_n^{(α)}(x)`.
/// These form an orthonormal basis of `L²(ℝ₊, da/a)` for each `α > −1`.
pub fn laguerre_fn(n: usize, alpha: f64, r: f64) -> f64 {
    if r <= 0.0 {
        return 0.0;
    }
    // normalization applied once through logs to avoid overflow up to n ~ 64
    let ln_norm = 0.5
        * (log_gamma(n as f64 + 1.0).expect("n+1 > 0")
            - log_gamma(n as f64 + alpha + 1.0).expect("n+alpha+1 > 0"));
    let envelope = (ln_norm + 0.5 * (alpha + 1.0) * r.ln() - 0.5 * r).exp();
    envelope * laguerre_poly(n, alpha, r)
}

/// Morse ground state `ψ_s(r) = r^s e^{−r/2} / Γ(2s)`, `s > 0`.
pub fn morse_state(s: f64, grid: &LogGrid) -> Result<HalfLineSignal> {
    if !(s.is_finite() && s > 0.0) {
        return Err(Error::Validation(format!("morse_state needs s > 0 (got {s})")));
    }
    let lg = log_gamma(2.0 * s)?;
    let values = (0..grid.n)
        .map(|j| {
            let t = grid.t(j);
            Complex64::new((s * t - 0.5 * t.exp() - lg).exp(), 0.0)
        })
        .collect();
    HalfLineSignal::new(grid.clone(), values)
}

/// Generalized Klauder wavelet `ψ(r) = C · r^{−iβ} e^{iγr}` with
/// `Im β > 0`, `Im γ > 0` (the membership conditions for `L²(ℝ₊, da/a)`).
pub fn klauder_state(
    c: Complex64,
    beta: Complex64,
    gamma: Complex64,
    grid: &LogGrid,
) -> Result<HalfLineSignal> {
    if !(beta.im > 0.0) || !(gamma.im > 0.0) {
        return Err(Error::Validation(format!(
            "klauder_state needs Im beta > 0 and Im gamma > 0 (got {beta}, {gamma})"
        )));
    }
    let i = Complex64::i();
    let values = (0..grid.n)
        .map(|j| {
            let t = grid.t(j);
            let r = t.exp();
            c * (-i * beta * t + i * gamma * r).exp()
        })
        .collect();
    HalfLineSignal::new(grid.clone(), values)
}

/// Smooth bump supported exactly on `[r_lo, r_hi]`, peak value 1.
pub fn bump_state(r_lo: f64, r_hi: f64, grid: &LogGrid) -> Result<HalfLineSignal> {
    if !(r_lo.is_finite() && r_hi.is_finite() && 0.0 < r_lo && r_lo < r_hi) {
        return Err(Error::Validation(format!(
            "bump_state needs 0 < r_lo < r_hi (got {r_lo}, {r_hi})"
        )));
    }
    let t_lo = r_lo.ln();
    let t_hi = r_hi.ln();
    let values = (0..grid.n)
        .map(|j| {
            let xi = 2.0 * (grid.t(j) - t_lo) / (t_hi - t_lo) - 1.0;
            if xi.abs() < 1.0 {
                Complex64::new((1.0 - 1.0 / (1.0 - xi * xi)).exp(), 0.0)
            } else {
                Complex64::default()
            }
        })
        .collect();
    HalfLineSignal::new(grid.clone(), values)
}
