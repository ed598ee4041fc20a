//! Support-function solver for ball intersections: projected gradient
//! ascent with Dykstra feasibility steps for globalization, then an
//! active-set polish that solves the sphere-intersection subproblem in
//! closed form and certifies a KKT residual.

use crate::geom::{axpy, dist, dot, norm, scale, sub, Vector};
use crate::linalg::{nnls, solve};
use crate::{Error, Result};

/// Certified maximizer of `⟨x, u⟩` over the intersection.
#[derive(Clone, Debug)]
pub struct SupportCert {
    pub value: f64,
    pub point: Vector,
    /// max of stationarity, feasibility, and complementarity defects
    pub residual: f64,
    pub iterations: usize,
}

/// Projection onto one ball.
fn project_ball(x: &[f64], center: &[f64], radius: f64) -> Vector {
    let d = dist(x, center);
    if d <= radius || d < 1e-300 {
        x.to_vec()
    } else {
        axpy(center, radius / d, &sub(x, center))
    }
}

/// Dykstra alternating projections onto `∩ B(aᵢ, rᵢ)`; the correction
/// terms make the limit the nearest point of the intersection rather than
/// a cycle average. Returns the iterate, its worst violation, and the
/// sweep count.
pub fn dykstra_project(
    balls: &[(Vector, f64)],
    y: &[f64],
    tol: f64,
    max_sweeps: usize,
) -> (Vector, f64, usize) {
    let mut x = y.to_vec();
    let mut corrections: Vec<Vector> = vec![vec![0.0; y.len()]; balls.len()];
    let mut sweeps = 0;
    for _ in 0..max_sweeps {
        sweeps += 1;
        for (i, (c, r)) in balls.iter().enumerate() {
            let w = crate::geom::add(&x, &corrections[i]);
            let px = project_ball(&w, c, *r);
            corrections[i] = sub(&w, &px);
            x = px;
        }
        let viol = violation(balls, &x);
        if viol <= tol {
            return (x, viol, sweeps);
        }
    }
    let viol = violation(balls, &x);
    (x, viol, sweeps)
}

pub fn violation(balls: &[(Vector, f64)], x: &[f64]) -> f64 {
    balls
        .iter()
        .map(|(c, r)| dist(x, c) - r)
        .fold(0.0f64, f64::max)
}

/// KKT residual at `x`: distance from `u` to the cone of active outward
/// normals (via NNLS) plus feasibility and complementarity defects.
pub fn kkt_residual(balls: &[(Vector, f64)], x: &[f64], u: &[f64], act_band: f64) -> f64 {
    let mut normals: Vec<Vector> = Vec::new();
    let mut slacks: Vec<f64> = Vec::new();
    for (c, r) in balls {
        let d = dist(x, c);
        if r - d <= act_band && d > 1e-300 {
            normals.push(scale(&sub(x, c), 1.0 / d));
            slacks.push((r - d).abs());
        }
    }
    let feas = violation(balls, x);
    if normals.is_empty() {
        return norm(u).max(feas);
    }
    let mu = nnls(&normals, u, 60);
    let mut resid = u.to_vec();
    let mut comp = 0.0;
    for (k, nrm) in normals.iter().enumerate() {
        resid = axpy(&resid, -mu[k], nrm);
        comp += mu[k] * slacks[k];
    }
    norm(&resid).max(feas).max(comp)
}

/// Maximum of `⟨x, u⟩` over the intersection of the spheres `S(aᵢ, rᵢ)`,
/// `i ∈ active`, in closed form.
///
/// Pairwise differences of the sphere equations are affine; within that
/// flat, the first sphere cuts a lower-dimensional sphere with computable
/// center and radius, and a linear functional is maximized at
/// `center + ρ·Pu/‖Pu‖` with `P` the projector onto the flat's directions.
fn sphere_intersection_argmax(
    balls: &[(Vector, f64)],
    active: &[usize],
    u: &[f64],
) -> Option<Vector> {
    let n = u.len();
    let k = active.len();
    if k == 0 || k > n {
        return None;
    }
    let (a1, r1) = (&balls[active[0]].0, balls[active[0]].1);
    // affine constraints: 2(aⱼ−a₁)·x = ‖aⱼ‖²−‖a₁‖²−(rⱼ²−r₁²)
    let rows: Vec<Vector> = active[1..]
        .iter()
        .map(|&j| sub(&balls[j].0, a1))
        .collect();
    let rhs: Vec<f64> = active[1..]
        .iter()
        .map(|&j| {
            let (aj, rj) = (&balls[j].0, balls[j].1);
            0.5 * (dot(aj, aj) - dot(a1, a1) - (rj * rj - r1 * r1))
        })
        .collect();
    // project a vector onto the row space solving (R Rᵀ) λ = R v
    let gram_solve = |v: &[f64]| -> Option<Vec<f64>> {
        if rows.is_empty() {
            return Some(Vec::new());
        }
        let mut g = vec![vec![0.0; rows.len()]; rows.len()];
        for (i, ri) in rows.iter().enumerate() {
            for (j, rj) in rows.iter().enumerate() {
                g[i][j] = dot(ri, rj);
            }
        }
        let mut b: Vec<f64> = rows.iter().map(|r| dot(r, v)).collect();
        solve(&mut g, &mut b, 1e-13)
    };
    // particular solution x₀ = Rᵀ(RRᵀ)⁻¹ rhs
    let x0 = if rows.is_empty() {
        vec![0.0; n]
    } else {
        let mut g = vec![vec![0.0; rows.len()]; rows.len()];
        for (i, ri) in rows.iter().enumerate() {
            for (j, rj) in rows.iter().enumerate() {
                g[i][j] = dot(ri, rj);
            }
        }
        let mut b = rhs.clone();
        let lam = solve(&mut g, &mut b, 1e-13)?;
        let mut x = vec![0.0; n];
        for (l, r) in lam.iter().zip(&rows) {
            x = axpy(&x, *l, r);
        }
        x
    };
    let project = |v: &[f64]| -> Option<Vector> {
        let lam = gram_solve(v)?;
        let mut p = v.to_vec();
        for (l, r) in lam.iter().zip(&rows) {
            p = axpy(&p, -*l, r);
        }
        Some(p)
    };
    // sphere within the flat: center x₀ + P(a₁−x₀), radius from r₁
    let w = sub(a1, &x0);
    let pw = project(&w)?;
    let center = crate::geom::add(&x0, &pw);
    let off = sub(&w, &pw);
    let rho2 = r1 * r1 - dot(&off, &off);
    if rho2 < -1e-10 {
        return None;
    }
    let rho = rho2.max(0.0).sqrt();
    let pu = project(u)?;
    let npu = norm(&pu);
    if npu < 1e-12 {
        return Some(center);
    }
    Some(axpy(&center, rho / npu, &pu))
}

/// Active-set polish: exact subproblem solves with add/drop updates, then
/// a certified residual. Falls back to enumerating all supports of size
/// ≤ n when the working set cycles (the ball lists here are small).
fn polish(
    balls: &[(Vector, f64)],
    x: &[f64],
    u: &[f64],
    tol: f64,
) -> Option<(Vector, f64)> {
    let n = u.len();
    let mut gaps: Vec<(f64, usize)> = balls
        .iter()
        .enumerate()
        .map(|(i, (c, r))| (r - dist(x, c), i))
        .collect();
    gaps.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut active: Vec<usize> = gaps
        .iter()
        .take(n)
        .filter(|&&(g, _)| g <= 1e-4)
        .map(|&(_, i)| i)
        .collect();
    active.sort_unstable();
    let mut best: Option<(Vector, f64)> = None;
    let consider = |xc: &Vector, best: &mut Option<(Vector, f64)>| {
        let resid = kkt_residual(balls, xc, u, 1e-7);
        match best {
            Some((_, rb)) if *rb <= resid => {}
            _ => *best = Some((xc.clone(), resid)),
        }
    };
    for _cycle in 0..8 {
        let Some(xc) = sphere_intersection_argmax(balls, &active, u) else {
            break;
        };
        // violated ball? add it (drop the loosest if full)
        let (worst, wi) = balls
            .iter()
            .enumerate()
            .map(|(i, (c, r))| (dist(&xc, c) - r, i))
            .fold((f64::NEG_INFINITY, 0), |acc, v| if v.0 > acc.0 { v } else { acc });
        if worst > 1e-11 && !active.contains(&wi) {
            if active.len() == n {
                active.pop();
            }
            active.push(wi);
            active.sort_unstable();
            continue;
        }
        consider(&xc, &mut best);
        if let Some((_, r)) = &best {
            if *r <= tol {
                return best;
            }
        }
        // negative multiplier? drop that constraint and retry
        let normals: Vec<Vector> = active
            .iter()
            .map(|&i| {
                let d = dist(&xc, &balls[i].0).max(1e-12);
                scale(&sub(&xc, &balls[i].0), 1.0 / d)
            })
            .collect();
        let mu = nnls(&normals, u, 60);
        if let Some(kmin) = (0..active.len()).find(|&k| mu[k] <= 1e-12) {
            active.remove(kmin);
            if active.is_empty() {
                break;
            }
            continue;
        }
        break;
    }
    // enumeration fallback over all supports of size ≤ n
    if best.as_ref().map(|(_, r)| *r > tol).unwrap_or(true) && balls.len() <= 16 {
        let m = balls.len();
        let mut stack: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
        while let Some(s) = stack.pop() {
            if let Some(xc) = sphere_intersection_argmax(balls, &s, u) {
                if violation(balls, &xc) <= 1e-9 {
                    consider(&xc, &mut best);
                    if let Some((_, r)) = &best {
                        if *r <= tol {
                            return best;
                        }
                    }
                }
            }
            if s.len() < u.len() {
                for j in (s.last().copied().unwrap_or(0) + 1)..m {
                    let mut s2 = s.clone();
                    s2.push(j);
                    stack.push(s2);
                }
            }
        }
    }
    best
}

/// Maximizes `⟨x, u⟩` over `∩ B(aᵢ, rᵢ)` from an interior starting point.
///
/// Globalization is projected gradient ascent with step `1/√k` and Dykstra
/// projections; the polish solves the identified active manifold exactly.
/// The iteration cap (10⁵) counts Dykstra sweeps.
pub fn support_point(
    balls: &[(Vector, f64)],
    start: &[f64],
    u: &[f64],
    tol: f64,
) -> Result<SupportCert> {
    const CAP: usize = 100_000;
    let mut used = 0usize;
    let mut x = start.to_vec();
    let mut best: Option<SupportCert> = None;
    let feas_tol = (tol * 1e-3).max(1e-13);
    let push = |xc: &Vector, resid: f64, used: usize, best: &mut Option<SupportCert>| {
        let cert = SupportCert {
            value: dot(xc, u),
            point: xc.clone(),
            residual: resid,
            iterations: used,
        };
        match best {
            Some(b) if b.residual <= resid => {}
            _ => *best = Some(cert),
        }
    };
    for k in 1..=200usize {
        let y = axpy(&x, 1.0 / (k as f64).sqrt(), u);
        let (px, _viol, sweeps) = dykstra_project(balls, &y, feas_tol, 300);
        used += sweeps;
        x = px;
        if k >= 8 && (k % 8 == 0 || used > CAP) {
            if let Some((xc, resid)) = polish(balls, &x, u, tol) {
                push(&xc, resid, used, &mut best);
                if resid <= tol {
                    return Ok(best.unwrap());
                }
            }
            if used > CAP {
                break;
            }
        }
    }
    if let Some((xc, resid)) = polish(balls, &x, u, tol) {
        push(&xc, resid, used, &mut best);
    }
    let resid = kkt_residual(balls, &x, u, 1e-6);
    push(&x, resid, used, &mut best);
    let best = best.unwrap();
    if best.residual <= tol {
        Ok(best)
    } else {
        Err(Error::NonConvergence {
            residual: best.residual,
            iterations: best.iterations,
        })
    }
}
