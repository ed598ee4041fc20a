//! Planar Steiner symmetrization and two-dimensional shadow systems.

use super::{clip::intersect_disks, spindle_hull, ArcPolygon, P2};
use crate::{Error, Result};

/// Steiner symmetral sampled on a fiber grid.
///
/// The body lives in a rotated frame where the symmetrization direction is
/// vertical; `angle` maps the frame back to the caller's coordinates. The
/// midpoint construction makes the fiber table exact per fiber (closed-form
/// line/arc intersections), so area and curvature statements below are
/// about the grid, not about an approximation of the fibers.
#[derive(Clone, Debug)]
pub struct SampledPlanarBody {
    /// Rotation applied to the input (input frame → fiber frame).
    pub angle: f64,
    /// Fiber abscissae in the rotated frame.
    pub xs: Vec<f64>,
    /// Half fiber lengths; the symmetral occupies `|y| ≤ half`.
    pub half: Vec<f64>,
    /// Exact area of the input body (preserved by symmetrization).
    pub input_area: f64,
    /// Quadrature of the fiber table.
    pub area: f64,
    /// Worst discrete boundary curvature over the scan window.
    pub min_curvature: f64,
    /// Scan diagnostics: (x, slope, discrete curvature).
    pub curvature_scan: Vec<(f64, f64, f64)>,
}

impl SampledPlanarBody {
    /// Upper boundary points with tangent directions and discrete
    /// curvature, mapped back to the input frame.
    pub fn boundary_points(&self) -> Vec<(P2, P2, f64)> {
        let (s, c) = (-self.angle).sin_cos();
        let back = |p: P2| -> P2 { [c * p[0] - s * p[1], s * p[0] + c * p[1]] };
        self.curvature_scan
            .iter()
            .map(|&(x, slope, kappa)| {
                let idx = self
                    .xs
                    .iter()
                    .position(|&g| (g - x).abs() < 1e-12)
                    .unwrap_or(0);
                let p = back([x, self.half[idx]]);
                let n = (1.0 + slope * slope).sqrt();
                let t = back([1.0 / n, slope / n]);
                (p, t, kappa)
            })
            .collect()
    }
}

/// All intersections of the vertical line at `x` with the boundary of `p`
/// (rotated frame), as `y` values.
fn fiber_ys(p: &ArcPolygon, x: f64) -> Vec<f64> {
    let mut ys = Vec::new();
    if let Some((c, r)) = p.as_disk() {
        let dx = x - c[0];
        if dx.abs() <= r {
            let h = (r * r - dx * dx).max(0.0).sqrt();
            ys.push(c[1] - h);
            ys.push(c[1] + h);
        }
        return ys;
    }
    if let Some(q) = p.as_point() {
        if (x - q[0]).abs() < 1e-12 {
            ys.push(q[1]);
        }
        return ys;
    }
    let verts = p.vertices();
    let arcs = p.arc_specs();
    let m = verts.len();
    for (i, a) in arcs.iter().enumerate() {
        let dx = x - a.center[0];
        if dx.abs() > a.radius {
            continue;
        }
        let h = (a.radius * a.radius - dx * dx).max(0.0).sqrt();
        let t0 = super::angle_from(a.center, verts[i]);
        let sweep = p.arc_sweep(i);
        for y in [a.center[1] - h, a.center[1] + h] {
            let t = super::angle_from(a.center, [x, y]);
            if super::ccw_sweep(t0, t) <= sweep + 1e-9 {
                ys.push(y);
            }
        }
    }
    // vertices sit on two circles and may be missed by both range tests
    for v in verts.iter().take(m) {
        if (v[0] - x).abs() <= WELD_X {
            ys.push(v[1]);
        }
    }
    ys
}

const WELD_X: f64 = 1e-12;

/// Fiber `[a(x), b(x)]` of the rotated body, or `None` off the support.
fn fiber(p: &ArcPolygon, x: f64) -> Option<(f64, f64)> {
    let ys = fiber_ys(p, x);
    if ys.is_empty() {
        return None;
    }
    let lo = ys.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Some((lo, hi))
}

/// Steiner symmetrization of an arc-polygon in direction `u`.
///
/// Per-fiber midpoints are exact; the area is integrated on a grid of
/// `fibers` nodes (at least 64) under the substitution `x = c + w·sin φ`,
/// which removes the square-root endpoint behavior. The curvature scan
/// evaluates the graph-curvature formula by centered second differences at
/// fibers with moderate slope.
pub fn steiner_2d(p: &ArcPolygon, u: P2, fibers: usize) -> Result<SampledPlanarBody> {
    if fibers < 64 {
        return Err(Error::InvalidParameter(
            "fiber grid needs at least 64 nodes".into(),
        ));
    }
    let nu = u[0].hypot(u[1]);
    if nu < 1e-12 {
        return Err(Error::NonUnitVector { norm: nu });
    }
    if p.is_point() {
        return Err(Error::Degenerate(
            "point bodies have no interior to symmetrize".into(),
        ));
    }
    // rotate so the direction becomes e₂
    let angle = std::f64::consts::FRAC_PI_2 - u[1].atan2(u[0]);
    let body = p.rotate(angle);
    let xmax = body.support([1.0, 0.0]);
    let xmin = -body.support([-1.0, 0.0]);
    let cx = 0.5 * (xmin + xmax);
    let w = 0.5 * (xmax - xmin);
    let n = fibers.div_ceil(2) * 2; // even interval count for Simpson
    let mut xs = Vec::with_capacity(n + 1);
    let mut half = Vec::with_capacity(n + 1);
    let mut weights = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let phi = -std::f64::consts::FRAC_PI_2
            + std::f64::consts::PI * j as f64 / n as f64;
        let x = cx + w * phi.sin();
        let f = fiber(&body, x).map(|(a, b)| (b - a).max(0.0)).unwrap_or(0.0);
        xs.push(x);
        half.push(0.5 * f);
        // Simpson weight times dx/dφ
        let sw = if j == 0 || j == n {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };
        weights.push(sw * w * phi.cos());
    }
    let hstep = std::f64::consts::PI / n as f64;
    let area: f64 = xs
        .iter()
        .zip(&half)
        .zip(&weights)
        .map(|((_, f), w)| 2.0 * f * w)
        .sum::<f64>()
        * hstep
        / 3.0;

    // Curvature scan on h(x) = half fiber length by centered 3-point
    // second differences. The stencil is kink-safe: boundary corners are
    // concave kinks of h, which only push the estimate up, and on circle
    // pieces h⁗ < 0, so the truncation bias is also upward. Steep fibers
    // (|h'| > 3) are excluded; the graph formula degenerates there.
    let mut scan = Vec::new();
    let mut min_curvature = f64::INFINITY;
    let delta = 1e-4;
    for &x in xs.iter().take(n).skip(1) {
        if x - delta <= xmin || x + delta >= xmax {
            continue;
        }
        let sample = |dx: f64| -> Option<f64> {
            fiber(&body, x + dx).map(|(a, b)| 0.5 * (b - a))
        };
        let (h_1, h0, h1) = match (sample(-delta), sample(0.0), sample(delta)) {
            (Some(a), Some(b), Some(c)) => (a, b, c),
            _ => continue,
        };
        let d1 = (h1 - h_1) / (2.0 * delta);
        if d1.abs() > 3.0 {
            continue;
        }
        let d2 = (h1 - 2.0 * h0 + h_1) / (delta * delta);
        let kappa = -d2 / (1.0 + d1 * d1).powf(1.5);
        scan.push((x, d1, kappa));
        min_curvature = min_curvature.min(kappa);
    }
    Ok(SampledPlanarBody {
        angle,
        xs,
        half,
        input_area: p.area(),
        area,
        min_curvature,
        curvature_scan: scan,
    })
}

/// One evaluation of a planar shadow system.
#[derive(Clone, Copy, Debug)]
pub struct ShadowRow {
    pub t: f64,
    /// `Vol(L_t)`; infinite once the moving points exceed out-radius 1.
    pub area: f64,
    pub dual_area: f64,
}

/// Areas of the c-hull `L_t = conv_c{xᵢ + t·αᵢ·v}` and of its dual along a
/// grid of times.
pub fn shadow_system_2d(
    points: &[P2],
    velocities: &[f64],
    v: P2,
    ts: &[f64],
) -> Result<Vec<ShadowRow>> {
    if points.is_empty() || points.len() != velocities.len() {
        return Err(Error::InvalidParameter(
            "need matching nonempty point/velocity lists".into(),
        ));
    }
    let nv = v[0].hypot(v[1]);
    if nv < 1e-12 {
        return Err(Error::NonUnitVector { norm: nv });
    }
    let dir = [v[0] / nv, v[1] / nv];
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let moved: Vec<P2> = points
            .iter()
            .zip(velocities)
            .map(|(p, a)| [p[0] + t * a * dir[0], p[1] + t * a * dir[1]])
            .collect();
        let row = match spindle_hull(&moved) {
            Ok(hull) => {
                let disks: Vec<(P2, f64)> = moved.iter().map(|&p| (p, 1.0)).collect();
                let dual_area = intersect_disks(&disks)?.map(|d| d.area()).unwrap_or(0.0);
                ShadowRow {
                    t,
                    area: hull.area(),
                    dual_area,
                }
            }
            Err(Error::OutradExceedsOne { .. }) => ShadowRow {
                t,
                area: f64::INFINITY,
                dual_area: 0.0,
            },
            Err(e) => return Err(e),
        };
        rows.push(row);
    }
    Ok(rows)
}
