//! Incremental clipping of convex arc regions by disks, and the exact
//! planar spindle hull built from it.

use super::{angle_from, ccw_sweep, dist2, on_point, ArcPolygon, ArcSpec, P2, WELD};
use crate::meb::min_enclosing_ball;
use crate::{Error, Result};

/// Angular welding tolerance for crossings landing on segment endpoints.
const ANG_EPS: f64 = 1e-9;

/// Oriented boundary piece: CCW on the circle `(c, r)` from angle `t0`,
/// sweeping `sweep ∈ (0, 2π]`.
#[derive(Clone, Copy, Debug)]
struct Seg {
    c: P2,
    r: f64,
    t0: f64,
    sweep: f64,
}

impl Seg {
    fn start(&self) -> P2 {
        on_point(self.c, self.r, self.t0)
    }
    fn end(&self) -> P2 {
        on_point(self.c, self.r, self.t0 + self.sweep)
    }
    fn mid(&self) -> P2 {
        on_point(self.c, self.r, self.t0 + 0.5 * self.sweep)
    }
}

#[derive(Clone, Debug)]
enum Region {
    Empty,
    Point(P2),
    Disk(P2, f64),
    Segs(Vec<Seg>),
}

fn point_in_segs(segs: &[Seg], p: P2) -> bool {
    // convex region = vertex polygon ∪ per-arc bulges (valid for any sweeps)
    let verts: Vec<P2> = segs.iter().map(|s| s.start()).collect();
    let m = verts.len();
    let mut inside_poly = m >= 3;
    for i in 0..m {
        let a = verts[i];
        let b = verts[(i + 1) % m];
        let e = [b[0] - a[0], b[1] - a[1]];
        if e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0]) < -WELD {
            inside_poly = false;
            break;
        }
    }
    if inside_poly {
        return true;
    }
    for (i, s) in segs.iter().enumerate() {
        let a = verts[i];
        let b = verts[(i + 1) % m];
        let e = [b[0] - a[0], b[1] - a[1]];
        let right = e[0] * (p[1] - a[1]) - e[1] * (p[0] - a[0]) <= WELD;
        if right && dist2(p, s.c) <= s.r + WELD {
            return true;
        }
    }
    false
}

/// Intersection angles of the circle carrying `seg` with the circle
/// `(q, s)`, as angles on the first circle. Tangencies return nothing.
fn circle_crossings(c: P2, r: f64, q: P2, s: f64) -> Vec<f64> {
    let d = dist2(c, q);
    if d < 1e-300 {
        return Vec::new();
    }
    let a = (d * d + r * r - s * s) / (2.0 * d);
    let h2 = r * r - a * a;
    if h2 <= 1e-300 {
        return Vec::new();
    }
    let h = h2.sqrt();
    let ex = [(q[0] - c[0]) / d, (q[1] - c[1]) / d];
    let base = [c[0] + a * ex[0], c[1] + a * ex[1]];
    let p1 = [base[0] - h * ex[1], base[1] + h * ex[0]];
    let p2 = [base[0] + h * ex[1], base[1] - h * ex[0]];
    vec![angle_from(c, p1), angle_from(c, p2)]
}

fn clip(region: Region, q: P2, s: f64) -> Region {
    match region {
        Region::Empty => Region::Empty,
        Region::Point(p) => {
            if dist2(p, q) <= s + WELD {
                Region::Point(p)
            } else {
                Region::Empty
            }
        }
        Region::Disk(c, r) => clip_disk(c, r, q, s),
        Region::Segs(segs) => clip_segs(segs, q, s),
    }
}

fn clip_disk(c: P2, r: f64, q: P2, s: f64) -> Region {
    let d = dist2(c, q);
    if d >= r + s {
        return if d <= r + s + WELD {
            // externally tangent: a single point
            Region::Point([c[0] + r * (q[0] - c[0]) / d, c[1] + r * (q[1] - c[1]) / d])
        } else {
            Region::Empty
        };
    }
    if d + s <= r {
        return Region::Disk(q, s);
    }
    if d + r <= s {
        return Region::Disk(c, r);
    }
    // proper lens: arc of circle (c,r) inside B(q,s) then arc of (q,s)
    // inside B(c,r)
    let angs_c = circle_crossings(c, r, q, s);
    if angs_c.len() < 2 {
        // grazing contact below resolution
        return Region::Disk(c, r.min(s));
    }
    let (mut a0, mut a1) = (angs_c[0], angs_c[1]);
    // choose the labeling that makes the CCW arc from a0 to a1 face q
    let facing = on_point(c, r, a0 + 0.5 * ccw_sweep(a0, a1));
    if dist2(facing, q) > s {
        std::mem::swap(&mut a0, &mut a1);
    }
    let v0 = on_point(c, r, a0);
    let v1 = on_point(c, r, a1);
    let b0 = angle_from(q, v1);
    let b1 = angle_from(q, v0);
    let segs = vec![
        Seg {
            c,
            r,
            t0: a0,
            sweep: ccw_sweep(a0, a1),
        },
        Seg {
            c: q,
            r: s,
            t0: b0,
            sweep: ccw_sweep(b0, b1),
        },
    ];
    Region::Segs(segs)
}

fn clip_segs(segs: Vec<Seg>, q: P2, s: f64) -> Region {
    // cut every segment at its crossings with the clipping circle
    let mut pieces: Vec<(Seg, bool)> = Vec::new();
    for seg in &segs {
        let mut cuts: Vec<f64> = circle_crossings(seg.c, seg.r, q, s)
            .into_iter()
            .map(|t| ccw_sweep(seg.t0, t))
            .filter(|&u| u > ANG_EPS && u < seg.sweep - ANG_EPS)
            .collect();
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.push(seg.sweep);
        let mut from = 0.0;
        for &u in &cuts {
            if u - from > 1e-13 {
                let piece = Seg {
                    c: seg.c,
                    r: seg.r,
                    t0: seg.t0 + from,
                    sweep: u - from,
                };
                let inside = dist2(piece.mid(), q) <= s + 1e-12;
                pieces.push((piece, inside));
            }
            from = u;
        }
    }
    if pieces.is_empty() {
        return Region::Empty;
    }
    if pieces.iter().all(|&(_, keep)| keep) {
        return Region::Segs(segs);
    }
    if pieces.iter().all(|&(_, keep)| !keep) {
        return if point_in_segs(&segs, q) {
            // the clipping disk sits strictly inside the region
            Region::Disk(q, s)
        } else {
            Region::Empty
        };
    }
    // rotate so the walk starts at a kept-run boundary
    let n = pieces.len();
    let mut start = 0;
    for i in 0..n {
        if !pieces[(i + n - 1) % n].1 && pieces[i].1 {
            start = i;
            break;
        }
    }
    pieces.rotate_left(start);
    let mut out: Vec<Seg> = Vec::new();
    let mut i = 0;
    while i < pieces.len() {
        if !pieces[i].1 {
            i += 1;
            continue;
        }
        // kept run
        let run_start = pieces[i].0.start();
        let mut exit = pieces[i].0.end();
        while i < pieces.len() && pieces[i].1 {
            out.push(pieces[i].0);
            exit = pieces[i].0.end();
            i += 1;
        }
        // entry point of the next kept run (cyclically)
        let mut j = i;
        while j < pieces.len() && !pieces[j].1 {
            j += 1;
        }
        let entry = if j < pieces.len() {
            pieces[j].0.start()
        } else {
            run_start
        };
        if dist2(exit, entry) > WELD {
            let b0 = angle_from(q, exit);
            let b1 = angle_from(q, entry);
            let sweep = ccw_sweep(b0, b1);
            if sweep > 1e-13 {
                out.push(Seg {
                    c: q,
                    r: s,
                    t0: b0,
                    sweep,
                });
            }
        }
    }
    // weld: drop vanishing pieces
    out.retain(|sg| sg.sweep * sg.r > WELD);
    match out.len() {
        0 => Region::Empty,
        1 => {
            let sg = out[0];
            if sg.sweep > std::f64::consts::TAU - 1e-9 {
                Region::Disk(sg.c, sg.r)
            } else if sg.sweep * sg.r <= 10.0 * WELD {
                Region::Point(sg.start())
            } else {
                // single open arc cannot bound a region; treat its chord
                // endpoints as welded (degenerate sliver)
                Region::Point(sg.mid())
            }
        }
        _ => Region::Segs(out),
    }
}

fn region_to_body(region: Region) -> Result<Option<ArcPolygon>> {
    match region {
        Region::Empty => Ok(None),
        Region::Point(p) => Ok(Some(ArcPolygon::point(p))),
        Region::Disk(c, r) => Ok(Some(ArcPolygon::disk(c, r)?)),
        Region::Segs(segs) => {
            let verts: Vec<P2> = segs.iter().map(|s| s.start()).collect();
            let arcs: Vec<ArcSpec> = segs
                .iter()
                .map(|s| ArcSpec {
                    center: s.c,
                    radius: s.r,
                })
                .collect();
            Ok(Some(ArcPolygon::from_parts(verts, arcs)?))
        }
    }
}

/// Intersection of closed disks with radii in (0, 1], exact.
///
/// Returns `None` when the intersection is empty; single points and full
/// disks come back in their degenerate representations. Only active
/// constraints survive into the output arcs.
pub fn intersect_disks(disks: &[(P2, f64)]) -> Result<Option<ArcPolygon>> {
    if disks.is_empty() {
        return Err(Error::EmptyInput);
    }
    for &(_, r) in disks {
        if !(r > 0.0 && r <= 1.0 + 1e-12) {
            return Err(Error::InvalidParameter(format!(
                "disk radius {r} out of (0,1]"
            )));
        }
    }
    let mut region = Region::Disk(disks[0].0, disks[0].1);
    for &(q, s) in &disks[1..] {
        region = clip(region, q, s);
        if matches!(region, Region::Empty) {
            return Ok(None);
        }
    }
    region_to_body(region)
}

/// Exact planar c-hull `conv_c(A) = (Aᶜ)ᶜ` of a finite point set.
///
/// `Aᶜ` is the intersection of the unit disks centered at `A`; the hull is
/// the intersection of unit disks centered at the vertices of `Aᶜ`, so the
/// hull's arc centers are the vertices of `Aᶜ` and its vertices land in `A`.
/// Out-radius above 1 means the hull is all of ℝ² and is rejected.
pub fn spindle_hull(points: &[P2]) -> Result<ArcPolygon> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut distinct: Vec<P2> = Vec::new();
    for &p in points {
        if distinct.iter().all(|&d| dist2(d, p) > WELD) {
            distinct.push(p);
        }
    }
    if distinct.len() == 1 {
        return Ok(ArcPolygon::point(distinct[0]));
    }
    let pts: Vec<Vec<f64>> = distinct.iter().map(|p| p.to_vec()).collect();
    let ball = min_enclosing_ball(&pts)?;
    let center = [ball.center[0], ball.center[1]];
    if ball.radius > 1.0 + 1e-12 {
        return Err(Error::OutradExceedsOne {
            outrad: ball.radius,
        });
    }
    if ball.radius > 1.0 - 1e-12 {
        // the unique containing unit ball is the hull
        return ArcPolygon::disk(center, 1.0);
    }
    let dual_disks: Vec<(P2, f64)> = distinct.iter().map(|&p| (p, 1.0)).collect();
    let dual = intersect_disks(&dual_disks)?
        .ok_or_else(|| Error::Degenerate("dual of a set with out-radius < 1 is nonempty".into()))?
        .merged();
    let hull = if let Some(p) = dual.as_point() {
        ArcPolygon::disk(p, 1.0)?
    } else if dual.as_disk().is_some() {
        return Err(Error::Degenerate(
            "dual of a multi-point set cannot be a full disk".into(),
        ));
    } else {
        let hull_disks: Vec<(P2, f64)> = dual.vertices().iter().map(|&v| (v, 1.0)).collect();
        intersect_disks(&hull_disks)?
            .ok_or_else(|| Error::Degenerate("hull intersection is nonempty".into()))?
    };
    Ok(hull)
}
