//! Adaptive Simpson quadrature with an absolute tolerance and a bisection
//! depth cap.

use crate::{Error, Result};

/// Integral of `f` over `[a, b]` to absolute tolerance `tol`, together with
/// an error estimate. Bisection is capped at 40 levels.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<(f64, f64)> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidParameter("non-finite interval".into()));
    }
    if a == b {
        return Ok((0.0, 0.0));
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    let mut err_acc = 0.0;
    let value = recurse(&f, a, b, fa, fm, fb, whole, tol, 40, &mut err_acc);
    if err_acc > tol * value.abs().max(1.0) {
        return Err(Error::QuadratureFailure { estimate: err_acc });
    }
    Ok((value, err_acc))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
    err_acc: &mut f64,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || depth == 0 {
        *err_acc += delta.abs() / 15.0;
        return left + right + delta / 15.0;
    }
    let lv = recurse(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, err_acc);
    let rv = recurse(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, err_acc);
    lv + rv
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn integrates_polynomials_exactly() {
        let (v, _) = adaptive_simpson(|x| x * x * x - 2.0 * x, 0.0, 2.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn quarter_circle_area() {
        let (v, e) = adaptive_simpson(|x| (1.0 - x * x).max(0.0).sqrt(), 0.0, 1.0, 1e-10).unwrap();
        assert_abs_diff_eq!(v, std::f64::consts::PI / 4.0, epsilon = 1e-8);
        assert!(e <= 1e-7);
    }

    #[test]
    fn reversed_interval_changes_sign() {
        let (v, _) = adaptive_simpson(|x| x, 1.0, 0.0, 1e-12).unwrap();
        assert_abs_diff_eq!(v, -0.5, epsilon = 1e-12);
    }
}
