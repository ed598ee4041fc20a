//! Closed-form k-lens geometry: duality, radii, membership, support, and
//! volume quadrature.
//!
//! A k-lens `L_k(x, E, d)` is the c-hull of the k-dimensional sphere of
//! radius `d` in the affine slice `x + E`. These are the workhorse exact
//! bodies in dimensions n ≥ 3: every quantity here has a closed form or a
//! one-dimensional integral.

use crate::geom::{all_finite, axpy, dot, norm, scale, sub, ToleranceProfile, Vector};
use crate::quad::adaptive_simpson;
use crate::{Error, Result};

/// Volume of the unit ball in ℝⁿ. Exact low-n values are special-cased so
/// golden tests compare against 2, π, 4π/3 literally.
pub fn unit_ball_volume(n: usize) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0,
        2 => std::f64::consts::PI,
        3 => 4.0 * std::f64::consts::PI / 3.0,
        _ => unit_ball_volume(n - 2) * 2.0 * std::f64::consts::PI / n as f64,
    }
}

/// Parametric k-lens `L_k(x₀, E, d)`.
#[derive(Clone, Debug)]
pub struct KLens {
    pub center: Vector,
    /// Orthonormal basis of the k-dimensional subspace E (k rows).
    pub basis: Vec<Vector>,
    pub d: f64,
}

impl KLens {
    pub fn new(center: Vector, basis: Vec<Vector>, d: f64) -> Result<Self> {
        let n = center.len();
        let k = basis.len();
        if !(1..=n).contains(&k) {
            return Err(Error::InvalidParameter("need 1 <= k <= n".into()));
        }
        if !(0.0..=1.0).contains(&d) || !all_finite(&center) {
            return Err(Error::InvalidParameter("need d in [0,1], finite center".into()));
        }
        for (i, bi) in basis.iter().enumerate() {
            if bi.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: bi.len() });
            }
            for (j, bj) in basis.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                if (dot(bi, bj) - target).abs() > 1e-12 {
                    return Err(Error::NotOrthogonal {
                        defect: (dot(bi, bj) - target).abs(),
                    });
                }
            }
        }
        Ok(Self { center, basis, d })
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn k(&self) -> usize {
        self.basis.len()
    }

    /// Component of `v` in E, expressed in ambient coordinates.
    fn project_e(&self, v: &[f64]) -> Vector {
        let mut p = vec![0.0; self.dim()];
        for b in &self.basis {
            let c = dot(v, b);
            p = axpy(&p, c, b);
        }
        p
    }
}

/// Orthonormal basis of the orthogonal complement of `basis` in ℝⁿ.
fn orthogonal_complement(basis: &[Vector], n: usize) -> Vec<Vector> {
    let mut out: Vec<Vector> = Vec::with_capacity(n - basis.len());
    for j in 0..n {
        if out.len() == n - basis.len() {
            break;
        }
        let mut v = vec![0.0; n];
        v[j] = 1.0;
        for b in basis.iter().chain(out.iter()) {
            let c = dot(&v, b);
            v = axpy(&v, -c, b);
        }
        let nv = norm(&v);
        if nv > 1e-8 {
            out.push(scale(&v, 1.0 / nv));
        }
    }
    out
}

/// `L_k(x₀, E, d)ᶜ = L_{n−k}(x₀, E⊥, √(1−d²))`.
///
/// Requires `k ≤ n−1`; the full-dimensional case is a ball, whose dual is
/// the concentric ball of radius `1−d`.
pub fn klens_dual(lens: &KLens) -> Result<KLens> {
    let n = lens.dim();
    let k = lens.k();
    if k == n {
        return Err(Error::InvalidParameter(
            "k = n is a ball; its dual is B(x, 1-d), not a lens".into(),
        ));
    }
    let comp = orthogonal_complement(&lens.basis, n);
    KLens::new(
        lens.center.clone(),
        comp,
        (1.0 - lens.d * lens.d).max(0.0).sqrt(),
    )
}

/// Membership via `‖x‖² + 2√(1−d²)·‖P_{E⊥}x‖ ≤ d²` (x shifted to the
/// lens frame), with a `geom_eps` band.
pub fn klens_contains(lens: &KLens, x: &[f64], geom_eps: f64) -> bool {
    let y = sub(x, &lens.center);
    let pe = lens.project_e(&y);
    let perp = sub(&y, &pe);
    let c = (1.0 - lens.d * lens.d).max(0.0).sqrt();
    dot(&y, &y) + 2.0 * c * norm(&perp) <= lens.d * lens.d + geom_eps
}

/// `(out-radius, in-radius) = (d, 1 − √(1−d²))`; independent of k.
pub fn klens_radii(lens: &KLens) -> (f64, f64) {
    let c = (1.0 - lens.d * lens.d).max(0.0).sqrt();
    (lens.d, 1.0 - c)
}

/// Closed-form support function of the k-lens.
///
/// With `s = ‖P_E u‖` and `t = ‖P_{E⊥} u‖` for unit `u`, the support is
/// `1 − √(1−d²)·t` when `t ≥ √(1−d²)` (contact on a spherical cap) and
/// `d·s` otherwise (contact on the equatorial sphere).
pub fn klens_support(lens: &KLens, u: &[f64]) -> f64 {
    let pe = lens.project_e(u);
    let s = norm(&pe);
    let perp = sub(u, &pe);
    let t = norm(&perp);
    let c = (1.0 - lens.d * lens.d).max(0.0).sqrt();
    let h0 = if t >= c { 1.0 - c * t } else { lens.d * s };
    dot(&lens.center, u) + h0
}

/// Result of the k-lens volume quadrature.
#[derive(Clone, Copy, Debug)]
pub struct LensVolumeResult {
    pub value: f64,
    pub error_estimate: f64,
}

/// Volume of `L_k(·, ·, d)` in ℝⁿ:
///
/// `k·κ_k·κ_{n−k} ∫₀^d (√(1−s²) − √(1−d²))^{n−k} s^{k−1} ds`.
///
/// The radial factor is `s^{k−1}`, the polar-integration weight over the
/// k-dimensional equatorial disk; at `k = 1` this reduces to
/// `2·κ_{n−1}·F_n(d)` and at `(n,k,d) = (2,1,1)` it evaluates to π.
pub fn klens_volume(n: usize, k: usize, d: f64, tol: &ToleranceProfile) -> Result<LensVolumeResult> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter("need 1 <= k <= n-1".into()));
    }
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::InvalidParameter("need d in [0,1]".into()));
    }
    if d == 0.0 {
        return Ok(LensVolumeResult {
            value: 0.0,
            error_estimate: 0.0,
        });
    }
    let c = (1.0 - d * d).max(0.0).sqrt();
    let p = (n - k) as i32;
    let q = (k - 1) as i32;
    let (value, err) = adaptive_simpson(
        |s| ((1.0 - s * s).max(0.0).sqrt() - c).max(0.0).powi(p) * s.powi(q),
        0.0,
        d,
        tol.quad_tol,
    )?;
    let factor = k as f64 * unit_ball_volume(k) * unit_ball_volume(n - k);
    Ok(LensVolumeResult {
        value: factor * value,
        error_estimate: factor * err,
    })
}

/// 1-lens volume profile `F_n(d) = ∫₀^d (√(1−t²) − √(1−d²))^{n−1} dt`.
///
/// The volume of a 1-lens of half-diameter `d` is `2·κ_{n−1}·F_n(d)`.
pub fn one_lens_profile(n: usize, d: f64, tol: &ToleranceProfile) -> Result<f64> {
    if n < 2 || !(0.0..=1.0).contains(&d) {
        return Err(Error::InvalidParameter("need n >= 2, d in [0,1]".into()));
    }
    let c = (1.0 - d * d).max(0.0).sqrt();
    let (v, _) = adaptive_simpson(
        |t| ((1.0 - t * t).max(0.0).sqrt() - c).max(0.0).powi(n as i32 - 1),
        0.0,
        d,
        tol.quad_tol,
    )?;
    Ok(v)
}

/// Volume of the c-hull of two points at distance `2d` in ℝⁿ.
pub fn one_lens_volume(n: usize, d: f64, tol: &ToleranceProfile) -> Result<f64> {
    Ok(2.0 * unit_ball_volume(n - 1) * one_lens_profile(n, d, tol)?)
}

/// Central second difference of `F_n` at `d` with step `h`.
pub fn one_lens_profile_d2(n: usize, d: f64, h: f64, tol: &ToleranceProfile) -> Result<f64> {
    let lo = one_lens_profile(n, (d - h).max(0.0), tol)?;
    let mid = one_lens_profile(n, d, tol)?;
    let hi = one_lens_profile(n, (d + h).min(1.0), tol)?;
    Ok((hi - 2.0 * mid + lo) / (h * h))
}

/// Membership of `x` in the 1-lens `conv_c{x₀, x₁}` by the inscribed-angle
/// criterion: `x` is inside exactly when `∠x₀ x x₁ ≥ θ₀` with
/// `sin θ₀ = ‖x₁−x₀‖/2`, `θ₀ ∈ [π/2, π]`. Points of the segment are inside.
pub fn one_lens_angle_contains(x: &[f64], x0: &[f64], x1: &[f64], geom_eps: f64) -> Result<bool> {
    let chord = dist_pts(x0, x1);
    if chord > 2.0 + geom_eps {
        return Err(Error::OutradExceedsOne {
            outrad: chord / 2.0,
        });
    }
    if on_segment(x, x0, x1, geom_eps) {
        return Ok(true);
    }
    let a = sub(x0, x);
    let b = sub(x1, x);
    let na = norm(&a);
    let nb = norm(&b);
    if na < geom_eps || nb < geom_eps {
        return Ok(true);
    }
    let theta = (dot(&a, &b) / (na * nb)).clamp(-1.0, 1.0).acos();
    let theta0 = std::f64::consts::PI - ((chord / 2.0).min(1.0)).asin();
    Ok(theta >= theta0 - geom_eps)
}

/// Apollonius residual `2h − ab` for the boundary of `conv_c{x₀,x₁}`:
/// zero on the boundary, negative inside. `a`, `b` are the distances to
/// the endpoints and `h` the distance to the segment.
pub fn apollonius_boundary(x0: &[f64], x1: &[f64], y: &[f64]) -> Result<f64> {
    let chord = dist_pts(x0, x1);
    if chord > 2.0 + 1e-12 {
        return Err(Error::OutradExceedsOne {
            outrad: chord / 2.0,
        });
    }
    let a = dist_pts(y, x0);
    let b = dist_pts(y, x1);
    let h = dist_to_segment(y, x0, x1);
    Ok(2.0 * h - a * b)
}

fn dist_pts(a: &[f64], b: &[f64]) -> f64 {
    crate::geom::dist(a, b)
}

fn dist_to_segment(y: &[f64], x0: &[f64], x1: &[f64]) -> f64 {
    let d = sub(x1, x0);
    let dd = dot(&d, &d);
    if dd < 1e-300 {
        return dist_pts(y, x0);
    }
    let t = (dot(&sub(y, x0), &d) / dd).clamp(0.0, 1.0);
    dist_pts(y, &axpy(x0, t, &d))
}

fn on_segment(x: &[f64], x0: &[f64], x1: &[f64], eps: f64) -> bool {
    dist_to_segment(x, x0, x1) <= eps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::SeededRng;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn tol() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    fn axis_lens(n: usize, k: usize, d: f64) -> KLens {
        let basis = (0..k)
            .map(|i| {
                let mut e = vec![0.0; n];
                e[i] = 1.0;
                e
            })
            .collect();
        KLens::new(vec![0.0; n], basis, d).unwrap()
    }

    #[test]
    fn ball_volumes() {
        assert_abs_diff_eq!(unit_ball_volume(1), 2.0);
        assert_abs_diff_eq!(unit_ball_volume(2), PI);
        assert_abs_diff_eq!(unit_ball_volume(3), 4.0 * PI / 3.0);
        assert_abs_diff_eq!(unit_ball_volume(4), PI * PI / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn dual_examples() {
        // full-diameter 1-lens in the plane dualizes to a point-lens
        let l = axis_lens(2, 1, 1.0);
        let d = klens_dual(&l).unwrap();
        assert_abs_diff_eq!(d.d, 0.0);

        // 1-lens in R^3 with d = 0.6 dualizes to a 2-lens with 0.8
        let l = axis_lens(3, 1, 0.6);
        let d = klens_dual(&l).unwrap();
        assert_eq!(d.k(), 2);
        assert_abs_diff_eq!(d.d, 0.8, epsilon = 1e-15);

        // involution restores d exactly
        let dd = klens_dual(&d).unwrap();
        assert_eq!(dd.k(), 1);
        assert_abs_diff_eq!(dd.d, 0.6, epsilon = 1e-12);
    }

    #[test]
    fn radii_examples_and_duality_pairing() {
        assert_eq!(klens_radii(&axis_lens(3, 1, 1.0)), (1.0, 1.0));
        assert_eq!(klens_radii(&axis_lens(3, 1, 0.0)), (0.0, 0.0));
        let (o, i) = klens_radii(&axis_lens(3, 2, 0.6));
        assert_abs_diff_eq!(o, 0.6);
        assert_abs_diff_eq!(i, 0.2, epsilon = 1e-15);
        // Outrad(L) + Inrad(L^c) = 1
        for k in 1..3 {
            let l = axis_lens(3, k, 0.37);
            let (out, _) = klens_radii(&l);
            let (_, in_dual) = klens_radii(&klens_dual(&l).unwrap());
            assert_abs_diff_eq!(out + in_dual, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn membership_examples() {
        let l = axis_lens(3, 2, 0.5);
        assert!(klens_contains(&l, &[0.0, 0.0, 0.0], 1e-9));
        // equatorial extreme point lies on the boundary
        assert!(klens_contains(&l, &[0.5, 0.0, 0.0], 1e-9));
        assert!(!klens_contains(&l, &[0.5 + 1e-6, 0.0, 0.0], 1e-9));
        // d = 1 reduces to the unit ball
        let b = axis_lens(3, 2, 1.0);
        assert!(klens_contains(&b, &[0.0, 0.0, 0.999], 1e-9));
        assert!(!klens_contains(&b, &[0.0, 0.0, 1.001], 1e-9));
    }

    #[test]
    fn volume_exact_checks() {
        let t = tol();
        let v = klens_volume(2, 1, 1.0, &t).unwrap();
        assert_abs_diff_eq!(v.value, PI, epsilon = 1e-8);
        let v = klens_volume(2, 1, std::f64::consts::SQRT_2 / 2.0, &t).unwrap();
        assert_abs_diff_eq!(v.value, PI / 2.0 - 1.0, epsilon = 1e-8);
        assert_eq!(klens_volume(4, 2, 0.0, &t).unwrap().value, 0.0);
        assert!(klens_volume(3, 3, 0.5, &t).is_err());
    }

    #[test]
    fn volume_monotone_in_d_and_k() {
        let t = tol();
        let mut prev = 0.0;
        for i in 1..=10 {
            let d = i as f64 / 10.0;
            let v = klens_volume(3, 1, d, &t).unwrap().value;
            assert!(v > prev);
            prev = v;
        }
        // nesting: L_k ⊂ L_{k+1} for nested E, via membership implication
        let mut rng = SeededRng::new(5, 0);
        let l1 = axis_lens(4, 1, 0.7);
        let l2 = axis_lens(4, 2, 0.7);
        for _ in 0..10_000 {
            let x = rng.in_ball(4, 0.8);
            if klens_contains(&l1, &x, 0.0) {
                assert!(klens_contains(&l2, &x, 1e-12));
            }
        }
    }

    #[test]
    fn profile_matches_volume_normalization() {
        let t = tol();
        assert_abs_diff_eq!(one_lens_profile(2, 1.0, &t).unwrap(), PI / 4.0, epsilon = 1e-9);
        assert_eq!(one_lens_profile(5, 0.0, &t).unwrap(), 0.0);
        assert_abs_diff_eq!(
            one_lens_volume(2, std::f64::consts::SQRT_2 / 2.0, &t).unwrap(),
            PI / 2.0 - 1.0,
            epsilon = 1e-9
        );
        // profile and klens paths agree at k = 1
        for n in 2..=5 {
            for d in [0.25, 0.5, 0.75, 0.95] {
                assert_abs_diff_eq!(
                    one_lens_volume(n, d, &t).unwrap(),
                    klens_volume(n, 1, d, &t).unwrap().value,
                    epsilon = 1e-9
                );
            }
        }
    }

    #[test]
    fn profile_is_convex() {
        let t = tol();
        for n in 2..=4 {
            for i in 1..=18 {
                let d = 0.05 * i as f64;
                let d2 = one_lens_profile_d2(n, d, 1e-3, &t).unwrap();
                assert!(d2 >= -t.quad_tol, "F_{n} not convex at d={d}: {d2}");
            }
        }
    }

    #[test]
    fn angle_criterion_examples() {
        // Thales: distance-2 endpoints, boundary angle π/2
        let x0 = [-1.0, 0.0];
        let x1 = [1.0, 0.0];
        assert!(one_lens_angle_contains(&[0.0, 1.0], &x0, &x1, 1e-9).unwrap());
        assert!(!one_lens_angle_contains(&[0.0, 1.0 + 1e-6], &x0, &x1, 1e-9).unwrap());
        // midpoint sees the chord at angle π
        assert!(one_lens_angle_contains(&[0.0, 0.0], &x0, &x1, 1e-9).unwrap());
        // far away the angle tends to 0
        assert!(!one_lens_angle_contains(&[0.0, 5.0], &x0, &x1, 1e-9).unwrap());
        assert!(one_lens_angle_contains(&[0.0, 0.0], &[-1.5, 0.0], &[1.5, 0.0], 1e-9).is_err());
    }

    #[test]
    fn angle_criterion_agrees_with_klens_membership() {
        let mut rng = SeededRng::new(9, 0);
        let mut checked = 0;
        for _ in 0..4000 {
            let n = 2 + rng.below(2);
            let x0 = rng.in_ball(n, 0.8);
            let x1 = rng.in_ball(n, 0.8);
            let d = dist_pts(&x0, &x1) / 2.0;
            if d < 1e-3 {
                continue;
            }
            let mid = scale(&crate::geom::add(&x0, &x1), 0.5);
            let axis = normalize_or_skip(&sub(&x1, &x0));
            let lens = KLens::new(mid, vec![axis], d).unwrap();
            let x = rng.in_ball(n, 1.2);
            let by_angle = one_lens_angle_contains(&x, &x0, &x1, 1e-9).unwrap();
            let by_form = klens_contains(&lens, &x, 1e-9);
            // skip the razor-thin boundary band where the two eps conventions differ
            let r = apollonius_boundary(&x0, &x1, &x).unwrap();
            if r.abs() > 1e-6 {
                assert_eq!(by_angle, by_form, "x={x:?} x0={x0:?} x1={x1:?}");
                checked += 1;
            }
        }
        assert!(checked > 1000);
    }

    fn normalize_or_skip(v: &[f64]) -> Vector {
        crate::geom::normalize(v).unwrap()
    }

    #[test]
    fn apollonius_examples() {
        let x0 = [0.0, 0.0];
        let x1 = [std::f64::consts::SQRT_2, 0.0];
        // vertex: a = 0, h = 0
        assert_abs_diff_eq!(apollonius_boundary(&x0, &x1, &x0).unwrap(), 0.0);
        // midpoint: h = 0, ab = 1/2les
        let mid = [std::f64::consts::SQRT_2 / 2.0, 0.0];
        assert_abs_diff_eq!(apollonius_boundary(&x0, &x1, &mid).unwrap(), -0.5, epsilon = 1e-12);
        // arc midpoint of the lens: on the boundary
        // circle through x0, x1 with radius 1, center below the chord
        let cx = std::f64::consts::SQRT_2 / 2.0;
        let cy = -(1.0f64 - 0.5).sqrt();
        let apex = [cx, cy + 1.0];
        assert_abs_diff_eq!(apollonius_boundary(&x0, &x1, &apex).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn support_function_closed_form() {
        // two-ball lens in R^3: L_2(0, e1^perp, sqrt(1-0.36)) = B(0.6e1,1) ∩ B(-0.6e1,1)
        let lens = KLens::new(
            vec![0.0, 0.0, 0.0],
            vec![vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]],
            0.8,
        )
        .unwrap();
        // support orthogonal to the axis: sqrt(1 - 0.36) = 0.8
        assert_abs_diff_eq!(klens_support(&lens, &[0.0, 1.0, 0.0]), 0.8, epsilon = 1e-15);
        // support along the axis: 1 - 0.6
        assert_abs_diff_eq!(klens_support(&lens, &[1.0, 0.0, 0.0]), 0.4, epsilon = 1e-15);
        // duality identity h_{L^c}(u) = 1 - h_L(-u) via closed forms
        let dual = klens_dual(&lens).unwrap();
        let mut rng = SeededRng::new(12, 0);
        for _ in 0..500 {
            let u = rng.unit_vector(3);
            let lhs = klens_support(&dual, &u);
            let rhs = 1.0 - klens_support(&lens, &crate::geom::neg(&u));
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12);
        }
    }
}
