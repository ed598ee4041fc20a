//! c-extremal points, Carathéodory-type decompositions, and the iterative
//! c-hull.
//!
//! Everything here is exact in the plane (arc-polygon arithmetic) and
//! sampled with certified residuals in higher dimensions.

use crate::body::{hull_contains, hull_view, BallIntersectionBody, HullView};
use crate::geom::{
    add, axpy, dist, dot, norm, normalize, scale, sub, DirectionGrid, Location, SeededRng,
    ToleranceProfile, Vector,
};
use crate::lens::one_lens_angle_contains;
use crate::planar::{spindle_hull, ArcPolygon, P2};
use crate::{Error, Result};
use std::sync::Arc;

/// Outcome of a per-point extremality query.
#[derive(Clone, Debug)]
pub enum Extremality {
    /// Witnessed by a normal direction spanning an extremal ray of the
    /// dual's normal cone (two distinct adjacent normals, or a sub-unit
    /// arc constraint).
    Extremal { normal: Vector },
    /// Witnessed by an open unit arc of the boundary strictly containing
    /// the point.
    NonExtremal {
        arc_center: Vector,
        arc_from: Vector,
        arc_to: Vector,
    },
}

#[derive(Clone, Debug)]
pub struct ExtremalityCertificate {
    pub point: Vector,
    pub status: Extremality,
}

/// Exact planar extremal points.
///
/// For unit-arc bodies these are precisely the vertices. Arcs of radius
/// strictly below 1 consist entirely of extremal points; their indices are
/// reported separately since the set is then a continuum.
#[derive(Clone, Debug)]
pub struct ExtremalSet2d {
    pub vertices: Vec<P2>,
    /// Indices (into the merged arc list) of sub-unit arcs, all of whose
    /// points are extremal.
    pub subunit_arcs: Vec<usize>,
}

pub fn extremal_points_2d(p: &ArcPolygon) -> ExtremalSet2d {
    if p.is_point() {
        return ExtremalSet2d {
            vertices: p.as_point().into_iter().collect(),
            subunit_arcs: Vec::new(),
        };
    }
    if let Some((_, r)) = p.as_disk() {
        return ExtremalSet2d {
            vertices: Vec::new(),
            // the unit disk has no extremal points; smaller disks are all
            // boundary-extremal
            subunit_arcs: if r < 1.0 - 1e-12 { vec![0] } else { Vec::new() },
        };
    }
    let merged = p.merged();
    let subunit_arcs = merged
        .arc_specs()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.radius < 1.0 - 1e-9)
        .map(|(i, _)| i)
        .collect();
    ExtremalSet2d {
        vertices: merged.vertices().to_vec(),
        subunit_arcs,
    }
}

/// Per-point extremality with an explicit witness, exact in the plane.
pub fn certify_extremal_2d(p: &ArcPolygon, x: P2, eps: f64) -> Result<ExtremalityCertificate> {
    if p.contains(x, eps) != Location::BoundaryBand {
        return Err(Error::InvalidParameter(
            "extremality is a boundary property".into(),
        ));
    }
    let merged = p.merged();
    if let Some((c, r)) = merged.as_disk() {
        let u = normalize(&sub(x.as_ref(), c.as_ref()))?;
        let t = (x[1] - c[1]).atan2(x[0] - c[0]);
        let span = 0.5;
        return Ok(ExtremalityCertificate {
            point: x.to_vec(),
            status: if r < 1.0 - 1e-12 {
                Extremality::Extremal { normal: u }
            } else {
                // every boundary point of the unit disk sits inside an
                // open unit arc
                Extremality::NonExtremal {
                    arc_center: c.to_vec(),
                    arc_from: vec![c[0] + (t - span).cos(), c[1] + (t - span).sin()],
                    arc_to: vec![c[0] + (t + span).cos(), c[1] + (t + span).sin()],
                }
            },
        });
    }
    let verts = merged.vertices();
    let arcs = merged.arc_specs();
    // vertex: two distinct adjacent normals span a nontrivial cone
    for (i, v) in verts.iter().enumerate() {
        if crate::planar::dist2(*v, x) <= 10.0 * eps {
            let a = arcs[(i + verts.len() - 1) % verts.len()];
            let n = normalize(&[v[0] - a.center[0], v[1] - a.center[1]])?;
            return Ok(ExtremalityCertificate {
                point: x.to_vec(),
                status: Extremality::Extremal { normal: n },
            });
        }
    }
    // interior of an arc
    for (i, a) in arcs.iter().enumerate() {
        let d = crate::planar::dist2(x, a.center);
        if (d - a.radius).abs() > 10.0 * eps {
            continue;
        }
        let t0 = crate::planar::angle_from(a.center, verts[i]);
        let tx = crate::planar::angle_from(a.center, x);
        let sweep = merged.arc_sweep(i);
        let along = crate::planar::ccw_sweep(t0, tx);
        if along > sweep {
            continue;
        }
        let n = normalize(&[x[0] - a.center[0], x[1] - a.center[1]])?;
        if a.radius < 1.0 - 1e-9 {
            return Ok(ExtremalityCertificate {
                point: x.to_vec(),
                status: Extremality::Extremal { normal: n },
            });
        }
        // open sub-arc strictly containing x
        let lo = 0.5 * along.min(1e-2);
        let hi = 0.5 * (sweep - along).min(1e-2);
        return Ok(ExtremalityCertificate {
            point: x.to_vec(),
            status: Extremality::NonExtremal {
                arc_center: a.center.to_vec(),
                arc_from: crate::planar::on_point(a.center, a.radius, tx - lo).to_vec(),
                arc_to: crate::planar::on_point(a.center, a.radius, tx + hi).to_vec(),
            },
        });
    }
    Err(Error::Degenerate("boundary point not located".into()))
}

/// Carathéodory decomposition in the plane, exact: a subset of at most 3
/// input points whose c-hull still contains `x`.
pub fn caratheodory_decompose_2d(x: P2, points: &[P2]) -> Result<Vec<usize>> {
    let hull = spindle_hull(points)?;
    let (_, outball_r) = hull.outball();
    if outball_r >= 1.0 - 1e-12 {
        return Err(Error::OutradExceedsOne { outrad: outball_r });
    }
    match hull.contains(x, 1e-9) {
        Location::Outside => {
            // separation witness: the direction with the largest support excess
            let mut best = (0usize, f64::NEG_INFINITY);
            for k in 0..1024 {
                let t = std::f64::consts::TAU * k as f64 / 1024.0;
                let u = [t.cos(), t.sin()];
                let gap = x[0] * u[0] + x[1] * u[1] - hull.support(u);
                if gap > best.1 {
                    best = (k, gap);
                }
            }
            return Err(Error::InvalidParameter(format!(
                "point lies outside the hull (separated at angle index {})",
                best.0
            )));
        }
        Location::BoundaryBand => {
            if let Some(i) = nearest_within(points, x, 1e-9) {
                return Ok(vec![i]);
            }
            return boundary_pair(&hull, points, x);
        }
        Location::Inside => {}
    }
    if let Some(i) = nearest_within(points, x, 1e-9) {
        return Ok(vec![i]);
    }
    // interior: walk a unit circle from an extremal input point through x
    // until it exits the hull, then decompose the exit point
    let merged = hull.merged();
    let v0 = merged.vertices()[0];
    let i0 = nearest_within(points, v0, 1e-7)
        .ok_or_else(|| Error::Degenerate("hull vertex is not an input point".into()))?;
    let exit = march_exit_2d(&merged, points[i0], x)?;
    let mut out = vec![i0];
    out.extend(boundary_pair(&merged, points, exit)?);
    out.sort_unstable();
    out.dedup();
    // re-verify membership in the sub-hull
    let sub: Vec<P2> = out.iter().map(|&i| points[i]).collect();
    let subhull = spindle_hull(&sub)?;
    if subhull.contains(x, 1e-7) == Location::Outside {
        return Err(Error::NonConvergence {
            residual: f64::NAN,
            iterations: 0,
        });
    }
    Ok(out)
}

fn nearest_within(points: &[P2], x: P2, eps: f64) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, p) in points.iter().enumerate() {
        let d = crate::planar::dist2(*p, x);
        if d <= eps && best.map(|(_, bd)| d < bd).unwrap_or(true) {
            best = Some((i, d));
        }
    }
    best.map(|(i, _)| i)
}

/// Indices of input points defining the boundary arc through `x`.
fn boundary_pair(hull: &ArcPolygon, points: &[P2], x: P2) -> Result<Vec<usize>> {
    let merged = hull.merged();
    let verts = merged.vertices();
    let arcs = merged.arc_specs();
    let m = verts.len();
    for (i, a) in arcs.iter().enumerate() {
        if (crate::planar::dist2(x, a.center) - a.radius).abs() > 1e-7 {
            continue;
        }
        let t0 = crate::planar::angle_from(a.center, verts[i]);
        let along = crate::planar::ccw_sweep(t0, crate::planar::angle_from(a.center, x));
        if along <= merged.arc_sweep(i) + 1e-9 {
            let mut out = Vec::new();
            for v in [verts[i], verts[(i + 1) % m]] {
                out.push(
                    nearest_within(points, v, 1e-7)
                        .ok_or_else(|| Error::Degenerate("hull vertex not in input".into()))?,
                );
            }
            out.sort_unstable();
            out.dedup();
            return Ok(out);
        }
    }
    Err(Error::Degenerate("boundary arc not located".into()))
}

/// From an interior `x`, extend the unit arc anchored at `anchor` through
/// `x` until it first leaves the hull; the hull cannot contain the
/// antipode of a boundary point, so the exit comes before sweep π.
fn march_exit_2d(hull: &ArcPolygon, anchor: P2, x: P2) -> Result<P2> {
    let chord = crate::planar::dist2(anchor, x);
    if !(1e-12..=2.0 - 1e-9).contains(&chord) {
        return Err(Error::Degenerate("anchor and point too close or far".into()));
    }
    let mid = [(anchor[0] + x[0]) / 2.0, (anchor[1] + x[1]) / 2.0];
    let e = [(x[0] - anchor[0]) / chord, (x[1] - anchor[1]) / chord];
    let h = (1.0 - chord * chord / 4.0).sqrt();
    // deterministic tie-break: the center on the left of anchor→x
    let c = [mid[0] - h * e[1], mid[1] + h * e[0]];
    let t_anchor = crate::planar::angle_from(c, anchor);
    let t_x = crate::planar::ccw_sweep(t_anchor, crate::planar::angle_from(c, x));
    // x sits CCW of the anchor iff t_x ≤ π; march onward past x
    let forward = t_x <= std::f64::consts::PI;
    let param = |s: f64| -> P2 {
        let t = if forward {
            t_anchor + t_x + s
        } else {
            t_anchor + t_x - s
        };
        crate::planar::on_point(c, 1.0, t)
    };
    let step = 1e-2;
    let mut lo = 0.0;
    let mut hi = None;
    let mut s = step;
    while s < std::f64::consts::TAU {
        if hull.contains(param(s), 1e-12) == Location::Outside {
            hi = Some(s);
            break;
        }
        lo = s;
        s += step;
    }
    let mut hi = hi.ok_or_else(|| Error::Degenerate("arc never exits the hull".into()))?;
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if hull.contains(param(mid), 1e-12) == Location::Outside {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(param(lo))
}

/// Carathéodory decomposition in dimension n ≥ 3, sampled: a subset of at
/// most n+1 points of `A` whose c-hull contains `x`, verified through the
/// grid membership test.
pub fn caratheodory_decompose_nd(
    x: &[f64],
    points: &[Vector],
    grid: &Arc<DirectionGrid>,
    tol: &ToleranceProfile,
) -> Result<Vec<usize>> {
    let n = x.len();
    let dual = BallIntersectionBody::c_dual_of_points(points, tol)?
        .ok_or(Error::OutradExceedsOne { outrad: f64::NAN })?;
    let view = hull_view(points, grid, tol)?;
    if view.contains(x, tol.geom_eps) == Location::Outside {
        return Err(Error::InvalidParameter("point lies outside the hull".into()));
    }
    if let Some(i) = (0..points.len()).find(|&i| dist(&points[i], x) <= 1e-9) {
        return Ok(vec![i]);
    }
    // anchor at an exposed input point
    let u0 = normalize(&sub(x, &centroid(points))).unwrap_or_else(|_| {
        let mut e = vec![0.0; n];
        e[0] = 1.0;
        e
    });
    let i0 = (0..points.len())
        .max_by(|&i, &j| {
            dot(&points[i], &u0)
                .partial_cmp(&dot(&points[j], &u0))
                .unwrap()
        })
        .unwrap();
    // circle through anchor and x, marched to the boundary
    let exit = march_exit_nd(&view, &points[i0], x, grid)?;
    let mut subset = boundary_caratheodory_nd(&exit, points, &dual, grid, tol)?;
    subset.push(i0);
    subset.sort_unstable();
    subset.dedup();
    if subset.len() > n + 1 {
        subset.truncate(n + 1);
    }
    let sub: Vec<Vector> = subset.iter().map(|&i| points[i].clone()).collect();
    if hull_contains(&sub, x, grid, tol)? == Location::Outside {
        return Err(Error::NonConvergence {
            residual: f64::NAN,
            iterations: 0,
        });
    }
    Ok(subset)
}

fn centroid(points: &[Vector]) -> Vector {
    let n = points[0].len();
    let mut c = vec![0.0; n];
    for p in points {
        c = add(&c, p);
    }
    scale(&c, 1.0 / points.len() as f64)
}

fn march_exit_nd(
    view: &HullView,
    anchor: &[f64],
    x: &[f64],
    grid: &Arc<DirectionGrid>,
) -> Result<Vector> {
    let chord = dist(anchor, x);
    let e = normalize(&sub(x, anchor))?;
    // a perpendicular completing the marching plane (deterministic)
    let mut w = None;
    for d in &grid.directions {
        let p = axpy(d, -dot(d, &e), &e);
        if norm(&p) > 0.3 {
            w = Some(scale(&p, 1.0 / norm(&p)));
            break;
        }
    }
    let w = w.ok_or_else(|| Error::Degenerate("no perpendicular direction".into()))?;
    let mid = scale(&add(anchor, x), 0.5);
    let h = (1.0 - chord * chord / 4.0).max(0.0).sqrt();
    let c = axpy(&mid, h, &w);
    let p = normalize(&sub(anchor, &c))?;
    let qdir = {
        let raw = sub(x, &c);
        let perp = axpy(&raw, -dot(&raw, &p), &p);
        scale(&perp, 1.0 / norm(&perp))
    };
    let phi_x = {
        let raw = sub(x, &c);
        dot(&raw, &qdir).atan2(dot(&raw, &p))
    };
    let at = |phi: f64| -> Vector {
        let mut y = c.clone();
        y = axpy(&y, phi.cos(), &p);
        y = axpy(&y, phi.sin(), &qdir);
        y
    };
    let mut lo = phi_x;
    let mut hi = None;
    let mut s = phi_x + 1e-2;
    while s < phi_x + std::f64::consts::PI {
        if view.contains(&at(s), 1e-9) == Location::Outside {
            hi = Some(s);
            break;
        }
        lo = s;
        s += 1e-2;
    }
    let mut hi = hi.ok_or_else(|| Error::Degenerate("arc never exits the hull".into()))?;
    for _ in 0..50 {
        let m = 0.5 * (lo + hi);
        if view.contains(&at(m), 1e-9) == Location::Outside {
            hi = m;
        } else {
            lo = m;
        }
    }
    Ok(at(lo))
}

/// Supporting dual contact of a hull boundary point: the fixed point of
/// `u ← normalize(x − z(−u))` where `z(v)` is the dual's support point.
fn boundary_contact(
    x: &[f64],
    dual: &BallIntersectionBody,
    grid: &DirectionGrid,
    tol: &ToleranceProfile,
) -> Result<(Vector, Vector)> {
    let mut best = (f64::NEG_INFINITY, 0usize);
    for (i, u) in grid.directions.iter().enumerate() {
        let h = 1.0 - dual.support_value(&crate::geom::neg(u), tol)?.value;
        let gap = dot(x, u) - h;
        if gap > best.0 {
            best = (gap, i);
        }
    }
    let mut u = grid.directions[best.1].clone();
    for _ in 0..60 {
        let z = dual.support_value(&crate::geom::neg(&u), tol)?.point;
        let next = normalize(&sub(x, &z))?;
        let delta = dist(&next, &u);
        u = next;
        if delta < 1e-13 {
            break;
        }
    }
    let y = dual.support_value(&crate::geom::neg(&u), tol)?.point;
    Ok((u, y))
}

/// Boundary Carathéodory step in nD: candidates are the input points on
/// the supporting sphere `S(y, 1)`; NNLS plus pivoting reduces the support
/// to at most n members.
fn boundary_caratheodory_nd(
    x: &[f64],
    points: &[Vector],
    dual: &BallIntersectionBody,
    grid: &Arc<DirectionGrid>,
    tol: &ToleranceProfile,
) -> Result<Vec<usize>> {
    let n = x.len();
    let (u, y) = boundary_contact(x, dual, grid, tol)?;
    let mut cand: Vec<usize> = (0..points.len())
        .filter(|&i| (dist(&points[i], &y) - 1.0).abs() <= 1e-5)
        .collect();
    if cand.is_empty() {
        let mut by_gap: Vec<(f64, usize)> = (0..points.len())
            .map(|i| ((dist(&points[i], &y) - 1.0).abs(), i))
            .collect();
        by_gap.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        cand = by_gap.iter().take(n).map(|&(_, i)| i).collect();
    }
    let cols: Vec<Vector> = cand.iter().map(|&i| sub(&points[i], &y)).collect();
    let mut lam = crate::linalg::nnls(&cols, &u, 80);
    // Carathéodory reduction: while more than n positive weights remain,
    // move along a null combination until one weight vanishes
    loop {
        let active: Vec<usize> = (0..cand.len()).filter(|&k| lam[k] > 1e-12).collect();
        if active.len() <= n {
            let mut out: Vec<usize> = active.iter().map(|&k| cand[k]).collect();
            if out.is_empty() {
                out.push(cand[0]);
            }
            return Ok(out);
        }
        let m = active.len();
        let mut gram = vec![vec![0.0; m]; m];
        for (a, &ka) in active.iter().enumerate() {
            for (b, &kb) in active.iter().enumerate() {
                gram[a][b] = dot(&cols[ka], &cols[kb]);
            }
        }
        // express the last active column through the others
        let mut null = vec![0.0; m];
        let mut g2: Vec<Vec<f64>> = (0..m - 1)
            .map(|a| (0..m - 1).map(|b| gram[a][b]).collect())
            .collect();
        let mut rhs: Vec<f64> = (0..m - 1).map(|a| gram[a][m - 1]).collect();
        match crate::linalg::solve(&mut g2, &mut rhs, 1e-12) {
            Some(coef) => {
                for (a, c) in coef.iter().enumerate() {
                    null[a] = *c;
                }
                null[m - 1] = -1.0;
            }
            None => {
                let kmin = active
                    .iter()
                    .min_by(|&&a, &&b| lam[a].partial_cmp(&lam[b]).unwrap())
                    .copied()
                    .unwrap();
                lam[kmin] = 0.0;
                continue;
            }
        }
        let mut tmax = f64::INFINITY;
        for (a, &ka) in active.iter().enumerate() {
            if null[a] > 1e-14 {
                tmax = tmax.min(lam[ka] / null[a]);
            }
        }
        if !tmax.is_finite() {
            for v in null.iter_mut() {
                *v = -*v;
            }
            tmax = f64::INFINITY;
            for (a, &ka) in active.iter().enumerate() {
                if null[a] > 1e-14 {
                    tmax = tmax.min(lam[ka] / null[a]);
                }
            }
            if !tmax.is_finite() {
                let kmin = active
                    .iter()
                    .min_by(|&&a, &&b| lam[a].partial_cmp(&lam[b]).unwrap())
                    .copied()
                    .unwrap();
                lam[kmin] = 0.0;
                continue;
            }
        }
        for (a, &ka) in active.iter().enumerate() {
            lam[ka] = (lam[ka] - tmax * null[a]).max(0.0);
        }
    }
}

/// Sampled iterative c-hull: round j+1 unions the pairwise c-hulls of
/// round-j samples, represented by boundary samples of the spindles.
/// Returns the cloud of every round (round 0 is the input).
pub fn iterative_c_hull(
    points: &[Vector],
    rounds: usize,
    budget: usize,
    rng: &mut SeededRng,
) -> Result<Vec<Vec<Vector>>> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let n = points[0].len();
    let out_r = crate::meb::outrad(points)?;
    if out_r >= 1.0 {
        return Err(Error::OutradExceedsOne { outrad: out_r });
    }
    let mut clouds = vec![points.to_vec()];
    for _ in 0..rounds {
        let prev = clouds.last().unwrap();
        let mut next = prev.clone();
        'pairs: for i in 0..prev.len() {
            for j in 0..i {
                sample_spindle(&prev[i], &prev[j], n, 12, &mut next, rng);
                if next.len() > 40 * budget {
                    break 'pairs;
                }
            }
        }
        if next.len() > budget {
            let stride = next.len().div_ceil(budget);
            next = next.iter().step_by(stride).cloned().collect();
            for p in points {
                if !next.iter().any(|q| dist(q, p) < 1e-12) {
                    next.push(p.clone());
                }
            }
        }
        clouds.push(next);
    }
    Ok(clouds)
}

/// Boundary samples of `conv_c{p, q}`: points of the unit arcs joining the
/// pair, over a few revolution planes when n ≥ 3.
fn sample_spindle(
    p: &[f64],
    q: &[f64],
    n: usize,
    per_arc: usize,
    out: &mut Vec<Vector>,
    rng: &mut SeededRng,
) {
    let chord = dist(p, q);
    if !(1e-12..=2.0 - 1e-9).contains(&chord) {
        return;
    }
    let e = normalize(&sub(q, p)).unwrap();
    let mid = scale(&add(p, q), 0.5);
    let h = (1.0 - chord * chord / 4.0).sqrt();
    let planes = if n == 2 { 2 } else { 6 };
    for _ in 0..planes {
        let w = if n == 2 {
            let v = vec![-e[1], e[0]];
            if rng.uniform() < 0.5 {
                v
            } else {
                scale(&v, -1.0)
            }
        } else {
            loop {
                let v = rng.unit_vector(n);
                let perp = axpy(&v, -dot(&v, &e), &e);
                if norm(&perp) > 0.2 {
                    break scale(&perp, 1.0 / norm(&perp));
                }
            }
        };
        let c = axpy(&mid, h, &w);
        let pdir = normalize(&sub(p, &c)).unwrap();
        let qraw = sub(q, &c);
        let qperp = axpy(&qraw, -dot(&qraw, &pdir), &pdir);
        let qdir = scale(&qperp, 1.0 / norm(&qperp));
        let phi_q = dot(&qraw, &qdir).atan2(dot(&qraw, &pdir));
        for s in 1..per_arc {
            let phi = phi_q * s as f64 / per_arc as f64;
            let mut y = c.clone();
            y = axpy(&y, phi.cos(), &pdir);
            y = axpy(&y, phi.sin(), &qdir);
            out.push(y);
        }
    }
}

/// Constructive coverage certificate for the planar iterative hull at
/// round 2: boundary and interior probes of the exact hull are certified
/// to lie in `A₂` via explicit pairwise hulls of `A₁` members. Returns
/// the worst probe residual (0 when every certificate holds).
pub fn iterative_hull_coverage_2d(points: &[P2], probes: usize) -> Result<f64> {
    let hull = spindle_hull(points)?.merged();
    if hull.is_point() || hull.is_disk() {
        return Ok(0.0);
    }
    let verts = hull.vertices();
    let arcs = hull.arc_specs();
    let m = verts.len();
    let mut worst = 0.0f64;
    // boundary probes: every hull arc joins consecutive vertices, which
    // are input points, so the arc lies in conv_c of that pair ⊆ A₁
    for (i, a) in arcs.iter().enumerate() {
        let t0 = crate::planar::angle_from(a.center, verts[i]);
        let sweep = hull.arc_sweep(i);
        let v0 = verts[i].to_vec();
        let v1 = verts[(i + 1) % m].to_vec();
        for s in 0..probes.max(4) {
            let z =
                crate::planar::on_point(a.center, a.radius, t0 + sweep * s as f64 / probes as f64);
            if !one_lens_angle_contains(&[z[0], z[1]], &v0, &v1, 1e-9)? {
                worst = worst.max(1.0);
            }
        }
    }
    // interior probes: the vertical chord through z exhibits it between
    // two boundary points, which are members of A₁
    let (c, inr) = hull.inball();
    for s in 0..probes {
        let frac = (s as f64 + 0.5) / probes as f64;
        let ang = std::f64::consts::TAU * frac;
        let z = [
            c[0] + 0.8 * inr * ang.cos() * frac,
            c[1] + 0.8 * inr * ang.sin() * frac,
        ];
        if hull.contains(z, 1e-9) != Location::Inside {
            continue;
        }
        let ys = boundary_ys(&hull, z[0]);
        if ys.len() < 2 {
            worst = worst.max(1.0);
            continue;
        }
        let lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if !(one_lens_angle_contains(&[z[0], z[1]], &[z[0], lo], &[z[0], hi], 1e-9)?) {
            worst = worst.max(1.0);
        }
    }
    Ok(worst)
}

fn boundary_ys(hull: &ArcPolygon, x: f64) -> Vec<f64> {
    let verts = hull.vertices();
    let arcs = hull.arc_specs();
    let mut ys = Vec::new();
    for (i, a) in arcs.iter().enumerate() {
        let dx = x - a.center[0];
        if dx.abs() > a.radius {
            continue;
        }
        let h = (a.radius * a.radius - dx * dx).max(0.0).sqrt();
        let t0 = crate::planar::angle_from(a.center, verts[i]);
        for y in [a.center[1] - h, a.center[1] + h] {
            let t = crate::planar::angle_from(a.center, [x, y]);
            if crate::planar::ccw_sweep(t0, t) <= hull.arc_sweep(i) + 1e-9 {
                ys.push(y);
            }
        }
    }
    ys
}

/// Constructive round-2 coverage certificate in ℝ³: hull boundary probes
/// are decomposed on their supporting sphere through the spherical
/// triangle of at most three contact points, each step certified by the
/// exact angle predicate. Returns the worst residual over the probes.
pub fn iterative_hull_coverage_3d(
    points: &[Vector],
    grid: &Arc<DirectionGrid>,
    probes: usize,
    tol: &ToleranceProfile,
) -> Result<f64> {
    let n = points[0].len();
    let dual = BallIntersectionBody::c_dual_of_points(points, tol)?
        .ok_or(Error::OutradExceedsOne { outrad: f64::NAN })?;
    let mut worst = 0.0f64;
    let stride = (grid.len() / probes.max(1)).max(1);
    for gi in (0..grid.len()).step_by(stride) {
        let u = &grid.directions[gi];
        // boundary point of the hull in direction u, via the pairing
        let y = dual.support_value(&crate::geom::neg(u), tol)?.point;
        let z = add(&y, u);
        let cand: Vec<usize> = (0..points.len())
            .filter(|&i| (dist(&points[i], &y) - 1.0).abs() <= 1e-6)
            .collect();
        if cand.is_empty() {
            worst = worst.max(1.0);
            continue;
        }
        let cols: Vec<Vector> = cand.iter().map(|&i| sub(&points[i], &y)).collect();
        let lam = crate::linalg::nnls(&cols, u, 80);
        let mut support: Vec<usize> = (0..cand.len()).filter(|&k| lam[k] > 1e-9).collect();
        support.sort_by(|&a, &b| lam[b].partial_cmp(&lam[a]).unwrap());
        support.truncate(n);
        let pts: Vec<Vector> = support.iter().map(|&k| points[cand[k]].clone()).collect();
        let resid = match pts.len() {
            0 => 1.0,
            1 => dist(&z, &pts[0]),
            2 => {
                if one_lens_angle_contains(&z, &pts[0], &pts[1], 1e-7)? {
                    0.0
                } else {
                    1.0
                }
            }
            _ => {
                let a0 = normalize(&sub(&pts[0], &y))?;
                let a1 = normalize(&sub(&pts[1], &y))?;
                let a2 = normalize(&sub(&pts[2], &y))?;
                let zh = normalize(&sub(&z, &y))?;
                match geodesic_crossing(&a0, &a1, &a2, &zh) {
                    Some(wh) => {
                        let w = add(&y, &wh);
                        let ok1 = one_lens_angle_contains(&w, &pts[0], &pts[1], 1e-7)?;
                        let ok2 = one_lens_angle_contains(&z, &w, &pts[2], 1e-7)?;
                        if ok1 && ok2 {
                            0.0
                        } else {
                            1.0
                        }
                    }
                    None => 1.0,
                }
            }
        };
        worst = worst.max(resid);
    }
    Ok(worst)
}

/// Intersection of the great circle through (a2, z) with the great circle
/// through (a0, a1) on the unit sphere (3-D only), on z's side.
fn geodesic_crossing(a0: &[f64], a1: &[f64], a2: &[f64], z: &[f64]) -> Option<Vector> {
    if a0.len() != 3 {
        return None;
    }
    let cr = |a: &[f64], b: &[f64]| -> Vector {
        vec![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let n1 = cr(a0, a1);
    let n2 = cr(a2, z);
    let dir = cr(&n1, &n2);
    let nd = norm(&dir);
    if nd < 1e-12 {
        return None;
    }
    let w = scale(&dir, 1.0 / nd);
    if dot(&w, z) >= 0.0 {
        Some(w)
    } else {
        Some(scale(&w, -1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::fibonacci_grid;
    use std::f64::consts::SQRT_2;

    fn tolp() -> ToleranceProfile {
        ToleranceProfile::default()
    }

    #[test]
    fn extremal_points_named_bodies() {
        // unit disk: no extremal points
        let disk = ArcPolygon::disk([0.2, 0.0], 1.0).unwrap();
        let e = extremal_points_2d(&disk);
        assert!(e.vertices.is_empty() && e.subunit_arcs.is_empty());

        // 1-lens: exactly its two vertices
        let lens = spindle_hull(&[[-SQRT_2 / 2.0, 0.0], [SQRT_2 / 2.0, 0.0]]).unwrap();
        let e = extremal_points_2d(&lens);
        assert_eq!(e.vertices.len(), 2);
        assert!(e.subunit_arcs.is_empty());

        // spindle hull of generic points: extremal set within the inputs
        let mut rng = SeededRng::new(91, 0);
        for _ in 0..30 {
            let pts: Vec<P2> = (0..5)
                .map(|_| {
                    let v = rng.in_ball(2, 0.6);
                    [v[0], v[1]]
                })
                .collect();
            let hull = match spindle_hull(&pts) {
                Ok(h) if !h.is_point() && !h.is_disk() => h,
                _ => continue,
            };
            let e = extremal_points_2d(&hull);
            assert!(e.subunit_arcs.is_empty());
            assert!(e.vertices.len() <= pts.len());
            for v in &e.vertices {
                assert!(
                    pts.iter().any(|p| crate::planar::dist2(*p, *v) < 1e-7),
                    "extremal point not among inputs"
                );
            }
        }
    }

    #[test]
    fn extremality_certificates() {
        let lens = spindle_hull(&[[-0.6, 0.0], [0.6, 0.0]]).unwrap();
        // vertex is extremal
        let cert = certify_extremal_2d(&lens, [0.6, 0.0], 1e-9).unwrap();
        assert!(matches!(cert.status, Extremality::Extremal { .. }));
        // arc midpoint is not: it carries an open-arc witness on the boundary
        let top = lens.support_with_point([0.0, 1.0]).1;
        let cert = certify_extremal_2d(&lens, top, 1e-9).unwrap();
        match cert.status {
            Extremality::NonExtremal {
                arc_center,
                arc_from,
                arc_to,
            } => {
                for p in [arc_from, arc_to] {
                    assert_eq!(
                        lens.contains([p[0], p[1]], 1e-7),
                        Location::BoundaryBand
                    );
                }
                assert!((norm(&sub(top.as_ref(), &arc_center)) - 1.0).abs() < 1e-9);
            }
            _ => panic!("arc midpoint must be non-extremal"),
        }
        // interior query is rejected
        assert!(certify_extremal_2d(&lens, [0.0, 0.0], 1e-9).is_err());
    }

    #[test]
    fn caratheodory_2d_examples() {
        let pts: Vec<P2> = vec![
            [0.45, 0.0],
            [0.14, 0.43],
            [-0.36, 0.26],
            [-0.36, -0.26],
            [0.14, -0.43],
        ];
        // member point: itself
        assert_eq!(caratheodory_decompose_2d(pts[2], &pts).unwrap(), vec![2]);
        // boundary point: the two arc-defining vertices
        let hull = spindle_hull(&pts).unwrap().merged();
        let a = hull.arc_specs()[0];
        let t0 = crate::planar::angle_from(a.center, hull.vertices()[0]);
        let z = crate::planar::on_point(a.center, a.radius, t0 + 0.4 * hull.arc_sweep(0));
        let sel = caratheodory_decompose_2d(z, &pts).unwrap();
        assert!(sel.len() <= 2, "boundary points decompose into the arc pair");
        // interior point: at most 3, and membership re-verifies
        let mut rng = SeededRng::new(93, 0);
        for _ in 0..50 {
            let q = rng.in_ball(2, 0.35);
            let q2 = [q[0], q[1]];
            if hull.contains(q2, 1e-9) != Location::Inside {
                continue;
            }
            let sel = caratheodory_decompose_2d(q2, &pts).unwrap();
            assert!(sel.len() <= 3);
            let sub: Vec<P2> = sel.iter().map(|&i| pts[i]).collect();
            let subhull = spindle_hull(&sub).unwrap();
            assert_ne!(subhull.contains(q2, 1e-7), Location::Outside);
        }
        // outside points are rejected with a separation message
        assert!(caratheodory_decompose_2d([2.0, 2.0], &pts).is_err());
    }

    #[test]
    fn caratheodory_3d_sampled() {
        let t = tolp();
        let grid = Arc::new(fibonacci_grid(3, 2048).unwrap());
        let mut rng = SeededRng::new(97, 0);
        let mut done = 0;
        'outer: for _ in 0..12 {
            let pts: Vec<Vector> = (0..5).map(|_| {
                let v = rng.in_ball(3, 0.55);
                add(&v, &[0.05, -0.02, 0.01])
            }).collect();
            let out = crate::meb::outrad(&pts).unwrap();
            if !(0.45..0.9).contains(&out) {
                continue;
            }
            let center = crate::meb::min_enclosing_ball(&pts).unwrap().center;
            for _ in 0..4 {
                let x = add(&center, &rng.in_ball(3, 0.1));
                if hull_contains(&pts, &x, &grid, &t).unwrap() != Location::Inside {
                    continue;
                }
                let sel = match caratheodory_decompose_nd(&x, &pts, &grid, &t) {
                    Ok(s) => s,
                    Err(Error::Degenerate(_)) => continue,
                    Err(e) => panic!("{e}"),
                };
                assert!(sel.len() <= 4);
                let sub: Vec<Vector> = sel.iter().map(|&i| pts[i].clone()).collect();
                assert_ne!(
                    hull_contains(&sub, &x, &grid, &t).unwrap(),
                    Location::Outside
                );
                done += 1;
                if done >= 10 {
                    break 'outer;
                }
            }
        }
        assert!(done >= 5, "too few successful decompositions: {done}");
    }

    #[test]
    fn iterative_hull_rounds() {
        let t = tolp();
        let mut rng = SeededRng::new(101, 0);
        // two points: one round reaches the full spindle (samples on it)
        let pts = vec![vec![-0.4, 0.0], vec![0.4, 0.0]];
        let clouds = iterative_c_hull(&pts, 1, 3000, &mut rng).unwrap();
        let hull = spindle_hull(&[[-0.4, 0.0], [0.4, 0.0]]).unwrap();
        for p in &clouds[1] {
            assert_ne!(hull.contains([p[0], p[1]], 1e-7), Location::Outside);
        }
        // square corners, j = 2 (2² > 2): samples stay inside the hull
        let sq = vec![
            vec![0.35, 0.35],
            vec![-0.35, 0.35],
            vec![-0.35, -0.35],
            vec![0.35, -0.35],
        ];
        let clouds = iterative_c_hull(&sq, 2, 4000, &mut rng).unwrap();
        let hull = spindle_hull(&[[0.35, 0.35], [-0.35, 0.35], [-0.35, -0.35], [0.35, -0.35]])
            .unwrap();
        for cloud in &clouds {
            for p in cloud {
                assert_ne!(hull.contains([p[0], p[1]], 1e-7), Location::Outside);
            }
        }
        // coverage certificate: A₂ ⊇ hull within the probe residuals
        let worst =
            iterative_hull_coverage_2d(&[[0.35, 0.35], [-0.35, 0.35], [-0.35, -0.35], [0.35, -0.35]], 200)
                .unwrap();
        assert!(worst <= 1e-3, "coverage defect {worst}");
        // out-radius ≥ 1 is rejected
        assert!(iterative_c_hull(&[vec![-1.2, 0.0], vec![1.2, 0.0]], 1, 100, &mut rng).is_err());

        // 3-D: membership side plus the constructive coverage certificate
        let grid = Arc::new(fibonacci_grid(3, 512).unwrap());
        let pts: Vec<Vector> = (0..5).map(|_| rng.in_ball(3, 0.45)).collect();
        let clouds = iterative_c_hull(&pts, 2, 2500, &mut rng).unwrap();
        for p in clouds.last().unwrap().iter().step_by(7) {
            assert_ne!(
                hull_contains(&pts, p, &grid, &t).unwrap(),
                Location::Outside
            );
        }
        let worst = iterative_hull_coverage_3d(&pts, &grid, 160, &t).unwrap();
        assert!(worst <= 1e-3, "3-D coverage defect {worst}");
    }
}
