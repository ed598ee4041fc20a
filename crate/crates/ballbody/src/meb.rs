//! Minimum enclosing balls (Welzl move-to-front), the circumradius
//! functional `R_A`, and its relatives.
//!
//! The out-radius of a finite set is exact here; the same machinery decides
//! emptiness of ball intersections via the convex program
//! `min_x max_i (‖x − aᵢ‖ − rᵢ)`.

use crate::geom::{axpy, dist, norm, scale, sub, ToleranceProfile, Vector};
use crate::linalg::solve;
use crate::{Error, Result};

/// Smallest ball enclosing a point set, with its determining support.
#[derive(Clone, Debug)]
pub struct EnclosingBall {
    pub center: Vector,
    pub radius: f64,
    /// Indices of at most n+1 points whose circumball equals the output.
    pub support: Vec<usize>,
}

/// `R_A(x) = max_{a∈A} ‖x − a‖`; 1-Lipschitz and convex in `x`.
pub fn circumradius_at(points: &[Vector], x: &[f64]) -> Result<f64> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(points
        .iter()
        .map(|a| dist(a, x))
        .fold(f64::NEG_INFINITY, f64::max))
}

/// `R_{A+εB} = R_A + ε`: inflating every point inflates the circumradius.
pub fn circumradius_at_inflated(points: &[Vector], x: &[f64], eps: f64) -> Result<f64> {
    Ok(circumradius_at(points, x)? + eps)
}

/// In-radius of the dual body from the out-radius of the primal:
/// `Outrad(K) + Inrad(Kᶜ) = 1`. Out-radius above 1 means the dual is empty.
pub fn dual_inradius(outrad_of_k: f64) -> Result<f64> {
    if !(0.0..=1.0 + 1e-12).contains(&outrad_of_k) {
        return Err(Error::OutradExceedsOne {
            outrad: outrad_of_k,
        });
    }
    Ok((1.0 - outrad_of_k).max(0.0))
}

/// Circumball of a support set of at most n+1 points.
///
/// The center lies in the affine hull of the support and is equidistant
/// from all of its points. Degenerate (affinely dependent) supports return
/// `None`; the recursion never keeps them.
fn ball_from_support(points: &[Vector], support: &[usize]) -> Option<(Vector, f64)> {
    match support {
        [] => Some((Vec::new(), -1.0)),
        [i] => Some((points[*i].clone(), 0.0)),
        [first, rest @ ..] => {
            let p0 = &points[*first];
            let vs: Vec<Vector> = rest.iter().map(|&i| sub(&points[i], p0)).collect();
            let k = vs.len();
            let mut gram = vec![vec![0.0; k]; k];
            let mut rhs = vec![0.0; k];
            for i in 0..k {
                rhs[i] = 0.5 * crate::geom::dot(&vs[i], &vs[i]);
                for j in 0..k {
                    gram[i][j] = crate::geom::dot(&vs[i], &vs[j]);
                }
            }
            let lambda = solve(&mut gram, &mut rhs, 1e-13)?;
            let mut center = p0.clone();
            for (l, v) in lambda.iter().zip(&vs) {
                center = axpy(&center, *l, v);
            }
            let radius = dist(&center, p0);
            Some((center, radius))
        }
    }
}

/// Welzl's recursion with the move-to-front heuristic.
///
/// Recursion depth is bounded by the support size (≤ n+2); the point order
/// is the caller's order, so output is deterministic. `order[..limit]` is
/// the working prefix.
fn welzl_mtf(
    points: &[Vector],
    order: &mut Vec<usize>,
    limit: usize,
    support: &mut Vec<usize>,
    dim: usize,
) -> (Vector, f64, Vec<usize>) {
    let (mut center, mut radius) =
        ball_from_support(points, support).expect("support stays affinely independent");
    let mut best_support = support.clone();
    if support.len() == dim + 1 {
        return (center, radius, best_support);
    }
    let mut k = 0;
    while k < limit {
        let i = order[k];
        let inside = radius >= 0.0 && dist(&points[i], &center) <= radius * (1.0 + 1e-12) + 1e-13;
        if !inside {
            support.push(i);
            // Retry without this point if the support went degenerate.
            if ball_from_support(points, support).is_none() {
                support.pop();
                k += 1;
                continue;
            }
            let (c, r, s) = welzl_mtf(points, order, k, support, dim);
            support.pop();
            center = c;
            radius = r;
            best_support = s;
            order.remove(k);
            order.insert(0, i);
        }
        k += 1;
    }
    (center, radius, best_support)
}

/// Minimum enclosing ball of a finite point set.
///
/// Duplicates are merged ahead of the recursion, keeping the smallest index,
/// so ties resolve deterministically.
pub fn min_enclosing_ball(points: &[Vector]) -> Result<EnclosingBall> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = points[0].len();
    if points.iter().any(|p| p.len() != n || !crate::geom::all_finite(p)) {
        return Err(Error::InvalidParameter(
            "points must share a dimension and be finite".into(),
        ));
    }
    let mut kept: Vec<usize> = Vec::with_capacity(points.len());
    'outer: for i in 0..points.len() {
        for &j in &kept {
            if points[i] == points[j] {
                continue 'outer;
            }
        }
        kept.push(i);
    }
    let mut order = kept;
    let limit = order.len();
    let mut support = Vec::new();
    let (center, radius, support) = welzl_mtf(points, &mut order, limit, &mut support, n);
    let radius = radius.max(0.0);
    let worst = circumradius_at(points, &center)?;
    if worst > radius + 1e-9 * (1.0 + radius) {
        return Err(Error::NonConvergence {
            residual: worst - radius,
            iterations: 0,
        });
    }
    Ok(EnclosingBall {
        center,
        radius: worst.max(radius),
        support,
    })
}

/// Out-radius of a finite set: the value of the minimum enclosing ball.
pub fn outrad(points: &[Vector]) -> Result<f64> {
    Ok(min_enclosing_ball(points)?.radius)
}

/// Minimizes `f(x) = max_i (‖x − aᵢ‖ − rᵢ)` over `x`.
///
/// The intersection `∩ B(aᵢ, rᵢ)` is nonempty exactly when the minimum is
/// ≤ 0; the minimizer is a natural interior/witness point. Equal radii
/// reduce to the minimum enclosing ball, which is solved exactly; otherwise
/// a subgradient phase localizes the optimum and a log-sum-exp smoothing
/// phase polishes it.
pub fn intersection_program(
    centers: &[Vector],
    radii: &[f64],
    tol: &ToleranceProfile,
) -> Result<(Vector, f64)> {
    if centers.is_empty() || centers.len() != radii.len() {
        return Err(Error::EmptyInput);
    }
    let f = |x: &[f64]| -> f64 {
        centers
            .iter()
            .zip(radii)
            .map(|(a, r)| dist(x, a) - r)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let meb = min_enclosing_ball(centers)?;
    let r0 = radii[0];
    if radii.iter().all(|r| (r - r0).abs() < 1e-15) {
        let value = meb.radius - r0;
        return Ok((meb.center, value));
    }

    let mut x = meb.center;
    let mut best = (x.clone(), f(&x));
    for k in 1..=400usize {
        let (mut fi, mut gi) = (f64::NEG_INFINITY, 0usize);
        for (i, (a, r)) in centers.iter().zip(radii).enumerate() {
            let v = dist(&x, a) - r;
            if v > fi {
                fi = v;
                gi = i;
            }
        }
        if fi < best.1 {
            best = (x.clone(), fi);
        }
        let d = sub(&x, &centers[gi]);
        let nd = norm(&d);
        if nd < 1e-14 {
            break;
        }
        let step = 0.25 / (k as f64).sqrt();
        x = axpy(&x, -step / nd, &d);
    }
    x = best.0.clone();

    // log-sum-exp smoothing with decreasing temperature
    for &mu in &[1e-2, 1e-4, 1e-6, 1e-8] {
        for _ in 0..120 {
            let vals: Vec<f64> = centers
                .iter()
                .zip(radii)
                .map(|(a, r)| dist(&x, a) - r)
                .collect();
            let vmax = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let ws: Vec<f64> = vals.iter().map(|v| ((v - vmax) / mu).exp()).collect();
            let wsum: f64 = ws.iter().sum();
            let mut grad = vec![0.0; x.len()];
            for ((a, w), _r) in centers.iter().zip(&ws).zip(radii) {
                let d = sub(&x, a);
                let nd = norm(&d);
                if nd < 1e-14 {
                    continue;
                }
                for (gj, dj) in grad.iter_mut().zip(&d) {
                    *gj += (w / wsum) * dj / nd;
                }
            }
            let gn = norm(&grad);
            if gn < tol.solver_tol {
                break;
            }
            // Armijo backtracking on the smoothed objective
            let fmu = |y: &[f64]| -> f64 {
                let vals: Vec<f64> = centers
                    .iter()
                    .zip(radii)
                    .map(|(a, r)| dist(y, a) - r)
                    .collect();
                let m = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                m + mu * vals.iter().map(|v| ((v - m) / mu).exp()).sum::<f64>().ln()
            };
            let f0 = fmu(&x);
            let mut step = 1.0;
            let mut advanced = false;
            for _ in 0..40 {
                let y = axpy(&x, -step, &grad);
                if fmu(&y) <= f0 - 0.25 * step * gn * gn {
                    x = y;
                    advanced = true;
                    break;
                }
                step *= 0.5;
            }
            if !advanced {
                break;
            }
        }
        let fx = f(&x);
        if fx < best.1 {
            best = (x.clone(), fx);
        }
    }
    Ok(best)
}

/// Regular simplex with `n+1` vertices of edge length `d`, centered at the
/// origin of ℝⁿ (test and example scaffolding).
pub fn regular_simplex(n: usize, d: f64) -> Vec<Vector> {
    // Vertices eᵢ of ℝ^{n+1} have pairwise distance √2; rescale and express
    // in an orthonormal basis of the affine hull.
    let m = n + 1;
    let hi: Vec<Vector> = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| if i == j { d / std::f64::consts::SQRT_2 } else { 0.0 })
                .collect()
        })
        .collect();
    let centroid: Vector = (0..m)
        .map(|j| hi.iter().map(|v| v[j]).sum::<f64>() / m as f64)
        .collect();
    let shifted: Vec<Vector> = hi.iter().map(|v| sub(v, &centroid)).collect();
    // Gram–Schmidt on the first n shifted vertices spans the hull.
    let mut basis: Vec<Vector> = Vec::new();
    for v in shifted.iter().take(n) {
        let mut w = v.clone();
        for b in &basis {
            let p = crate::geom::dot(&w, b);
            w = axpy(&w, -p, b);
        }
        let nw = norm(&w);
        basis.push(scale(&w, 1.0 / nw));
    }
    shifted
        .iter()
        .map(|v| basis.iter().map(|b| crate::geom::dot(v, b)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::SeededRng;
    use approx::assert_abs_diff_eq;

    #[test]
    fn circumradius_examples() {
        assert_abs_diff_eq!(
            circumradius_at(&[vec![0.0, 0.0]], &[3.0, 4.0]).unwrap(),
            5.0
        );
        assert_abs_diff_eq!(
            circumradius_at(&[vec![1.0, 0.0], vec![-1.0, 0.0]], &[0.0, 0.0]).unwrap(),
            1.0
        );
        let square = vec![
            vec![0.5, 0.5],
            vec![-0.5, 0.5],
            vec![-0.5, -0.5],
            vec![0.5, -0.5],
        ];
        assert_abs_diff_eq!(
            circumradius_at(&square, &[0.0, 0.0]).unwrap(),
            std::f64::consts::SQRT_2 / 2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn circumradius_is_lipschitz_and_convex_on_samples() {
        let mut rng = SeededRng::new(3, 0);
        for _ in 0..50 {
            let pts: Vec<Vector> = (0..8).map(|_| rng.in_ball(3, 1.0)).collect();
            let x = rng.in_ball(3, 2.0);
            let y = rng.in_ball(3, 2.0);
            let rx = circumradius_at(&pts, &x).unwrap();
            let ry = circumradius_at(&pts, &y).unwrap();
            assert!((rx - ry).abs() <= dist(&x, &y) + 1e-12);
            let mid = scale(&crate::geom::add(&x, &y), 0.5);
            let rm = circumradius_at(&pts, &mid).unwrap();
            assert!(rm <= 0.5 * (rx + ry) + 1e-12);
        }
    }

    #[test]
    fn equilateral_triangle_meb() {
        let h = 3.0f64.sqrt() / 2.0;
        let pts = vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.5, h]];
        let b = min_enclosing_ball(&pts).unwrap();
        assert_abs_diff_eq!(b.radius, 1.0 / 3.0f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(b.center[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(b.center[1], h / 3.0, epsilon = 1e-12);
        assert!(b.support.len() <= 3);
    }

    #[test]
    fn regular_simplex_radii() {
        for n in 2..=5 {
            let edge_unit_outrad = (2.0 * (n as f64 + 1.0) / n as f64).sqrt();
            let b = min_enclosing_ball(&regular_simplex(n, edge_unit_outrad)).unwrap();
            assert_abs_diff_eq!(b.radius, 1.0, epsilon = 1e-12);

            let b = min_enclosing_ball(&regular_simplex(n, 1.0)).unwrap();
            assert_abs_diff_eq!(
                b.radius,
                (n as f64 / (2.0 * (n as f64 + 1.0))).sqrt(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn meb_handles_duplicates_and_singletons() {
        let b = min_enclosing_ball(&[vec![0.3, 0.4]]).unwrap();
        assert_eq!(b.radius, 0.0);
        let b = min_enclosing_ball(&[
            vec![1.0, 0.0],
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![1.0, 0.0],
        ])
        .unwrap();
        assert_abs_diff_eq!(b.radius, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b.center[0], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn meb_is_minimal_and_center_unique_on_random_sets() {
        let mut rng = SeededRng::new(17, 0);
        for n in 2..=4usize {
            for _ in 0..200 {
                let k = 2 + rng.below(9);
                let pts: Vec<Vector> = (0..k).map(|_| rng.in_ball(n, 1.0)).collect();
                let b = min_enclosing_ball(&pts).unwrap();
                let rc = circumradius_at(&pts, &b.center).unwrap();
                assert_abs_diff_eq!(rc, b.radius, epsilon = 1e-9);
                // no perturbed center does better (minimality + uniqueness)
                for _ in 0..20 {
                    let probe = axpy(&b.center, 1e-3, &rng.unit_vector(n));
                    assert!(circumradius_at(&pts, &probe).unwrap() > b.radius - 1e-12);
                }
                // support points certify the ball
                for &i in &b.support {
                    assert_abs_diff_eq!(dist(&pts[i], &b.center), b.radius, epsilon = 1e-9);
                }
                assert!(b.support.len() <= n + 1);
            }
        }
    }

    #[test]
    fn jung_inequality_on_random_sets() {
        let mut rng = SeededRng::new(23, 0);
        for n in 2..=4usize {
            let jung = (n as f64 / (2.0 * (n as f64 + 1.0))).sqrt();
            for _ in 0..100 {
                let k = 2 + rng.below(8);
                let pts: Vec<Vector> = (0..k).map(|_| rng.in_ball(n, 1.0)).collect();
                let r = outrad(&pts).unwrap();
                let mut diam: f64 = 0.0;
                for i in 0..pts.len() {
                    for j in 0..i {
                        diam = diam.max(dist(&pts[i], &pts[j]));
                    }
                }
                assert!(r <= jung * diam + 1e-12);
            }
            // equality on the regular simplex
            let simplex = regular_simplex(n, 1.0);
            let r = outrad(&simplex).unwrap();
            assert_abs_diff_eq!(r, jung, epsilon = 1e-9);
        }
    }

    #[test]
    fn dual_inradius_pairing() {
        assert_abs_diff_eq!(dual_inradius(1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(dual_inradius(0.0).unwrap(), 1.0);
        let r2 = (2.0f64 / 6.0).sqrt();
        assert_abs_diff_eq!(dual_inradius(r2).unwrap(), 1.0 - 1.0 / 3.0f64.sqrt(), epsilon = 1e-12);
        assert!(dual_inradius(1.2).is_err());
    }

    #[test]
    fn inflation_shifts_circumradius() {
        let mut rng = SeededRng::new(29, 0);
        let pts: Vec<Vector> = (0..6).map(|_| rng.in_ball(3, 1.0)).collect();
        for _ in 0..20 {
            let y = rng.in_ball(3, 1.5);
            let eps = rng.uniform();
            assert_abs_diff_eq!(
                circumradius_at_inflated(&pts, &y, eps).unwrap(),
                circumradius_at(&pts, &y).unwrap() + eps,
                epsilon = 1e-15
            );
        }
    }

    #[test]
    fn intersection_program_detects_emptiness() {
        let tol = ToleranceProfile::default();
        // two unit balls touching at the origin: nonempty, single point
        let (x, v) = intersection_program(
            &[vec![-1.0, 0.0], vec![1.0, 0.0]],
            &[1.0, 1.0],
            &tol,
        )
        .unwrap();
        assert!(v.abs() <= 1e-12);
        assert_abs_diff_eq!(norm(&x), 0.0, epsilon = 1e-12);
        // centers too far: empty
        let (_, v) = intersection_program(
            &[vec![-1.1, 0.0], vec![1.1, 0.0]],
            &[1.0, 1.0],
            &tol,
        )
        .unwrap();
        assert!(v > 0.05);
        // mixed radii, comfortably nonempty
        let (x, v) = intersection_program(
            &[vec![0.0, 0.0], vec![0.5, 0.0]],
            &[0.8, 1.0],
            &tol,
        )
        .unwrap();
        assert!(v < -0.1);
        assert!(dist(&x, &[0.0, 0.0]) < 0.8);
        // mixed radii, empty by a margin
        let (_, v) = intersection_program(
            &[vec![0.0, 0.0], vec![1.0, 0.0]],
            &[0.4, 0.5],
            &tol,
        )
        .unwrap();
        assert!(v > 0.04);
    }
}
