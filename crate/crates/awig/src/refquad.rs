//! Reference quadratures for the verification suites.
//!
//! These are deliberately independent of the grid/FFT machinery in the rest
//! of the crate: plain adaptive Simpson on closed-form integrands. The check
//! suites and tests use them as oracles for values the transforms must hit.

/// Adaptive Simpson integral of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64) -> (f64, f64, f64) {
        let m = 0.5 * (a + b);
        let fm = f(m);
        ((b - a) / 6.0 * (fa + 4.0 * fm + fb), m, fm)
    }
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        whole: f64,
        m: f64,
        fm: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let (left, lm, flm) = simpson(f, a, fa, m, fm);
        let (right, rm, frm) = simpson(f, m, fm, b, fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        recurse(f, a, fa, m, fm, left, lm, flm, tol / 2.0, depth - 1)
            + recurse(f, m, fm, b, fb, right, rm, frm, tol / 2.0, depth - 1)
    }
    let fa = f(a);
    let fb = f(b);
    let (whole, m, fm) = simpson(f, a, fa, b, fb);
    recurse(f, a, fa, b, fb, whole, m, fm, tol, 48)
}

/// Adaptive Simpson for complex-valued integrands (real and imaginary parts
/// integrated separately).
pub fn adaptive_simpson_complex(
    f: &dyn Fn(f64) -> num_complex::Complex64,
    a: f64,
    b: f64,
    tol: f64,
) -> num_complex::Complex64 {
    let re = adaptive_simpson(&|x| f(x).re, a, b, tol);
    let im = adaptive_simpson(&|x| f(x).im, a, b, tol);
    num_complex::Complex64::new(re, im)
}
