//! Exact planar ball-body arithmetic.
//!
//! An [`ArcPolygon`] is a convex region bounded by circular arcs of radius
//! at most 1: cyclic CCW vertices joined by arcs about stored centers.
//! Degenerate members (full disk, single point) carry explicit
//! representations so dual pairs stay total. Everything in this module is
//! closed-form: areas, perimeters, support values, membership, radii, and
//! the planar c-dual are exact up to rounding, which is what makes this the
//! oracle module for the sampled n-dimensional machinery.

mod clip;
mod steiner;
pub mod svg;

pub use clip::{intersect_disks, spindle_hull};
pub use steiner::{shadow_system_2d, steiner_2d, SampledPlanarBody, ShadowRow};

pub use crate::geom::Location;
use crate::{Error, Result};

/// Planar point.
pub type P2 = [f64; 2];

/// Vertex welding tolerance: clipping may produce near-coincident vertices.
pub const WELD: f64 = 1e-10;

pub(crate) fn sub2(a: P2, b: P2) -> P2 {
    [a[0] - b[0], a[1] - b[1]]
}

pub(crate) fn dist2(a: P2, b: P2) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

pub(crate) fn cross2(a: P2, b: P2) -> f64 {
    a[0] * b[1] - a[1] * b[0]
}

pub(crate) fn dot2(a: P2, b: P2) -> f64 {
    a[0] * b[0] + a[1] * b[1]
}

/// Angle of `p` as seen from `c`.
pub(crate) fn angle_from(c: P2, p: P2) -> f64 {
    (p[1] - c[1]).atan2(p[0] - c[0])
}

/// CCW sweep from angle `a` to angle `b`, in `[0, 2π)`.
pub(crate) fn ccw_sweep(a: f64, b: f64) -> f64 {
    let t = (b - a) % std::f64::consts::TAU;
    if t < 0.0 {
        t + std::f64::consts::TAU
    } else {
        t
    }
}

pub(crate) fn on_point(c: P2, r: f64, theta: f64) -> P2 {
    [c[0] + r * theta.cos(), c[1] + r * theta.sin()]
}

/// One boundary arc: CCW about `center` with the given radius. The angular
/// interval is implied by the adjacent vertices.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcSpec {
    pub center: P2,
    pub radius: f64,
}

#[derive(Clone, Debug)]
enum Shape {
    Point(P2),
    /// Full disk; radius 0 is not used (points are explicit).
    Disk { center: P2, radius: f64 },
    /// verts[i] –(arcs[i])→ verts[i+1 mod m], all CCW.
    Gon { verts: Vec<P2>, arcs: Vec<ArcSpec> },
}

/// Exact planar ball-body: cyclic vertices joined by circular arcs of
/// radius in (0, 1], or a degenerate disk/point.
#[derive(Clone, Debug)]
pub struct ArcPolygon {
    shape: Shape,
}

impl ArcPolygon {
    pub fn point(p: P2) -> Self {
        Self {
            shape: Shape::Point(p),
        }
    }

    pub fn disk(center: P2, radius: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&radius) {
            return Err(Error::InvalidParameter("disk radius must be in [0,1]".into()));
        }
        if radius == 0.0 {
            return Ok(Self::point(center));
        }
        Ok(Self {
            shape: Shape::Disk { center, radius },
        })
    }

    /// Builds a non-degenerate arc-polygon from matching vertex/arc lists.
    /// Arcs subtending more than π are split so every stored arc is minor;
    /// the result is validated.
    pub fn from_parts(verts: Vec<P2>, arcs: Vec<ArcSpec>) -> Result<Self> {
        if verts.len() != arcs.len() || verts.len() < 2 {
            return Err(Error::InvalidParameter(
                "need matching vertex/arc lists of length >= 2".into(),
            ));
        }
        let mut v2 = Vec::new();
        let mut a2 = Vec::new();
        let m = verts.len();
        for i in 0..m {
            let a = arcs[i];
            let v0 = verts[i];
            let v1 = verts[(i + 1) % m];
            let t0 = angle_from(a.center, v0);
            let sweep = ccw_sweep(t0, angle_from(a.center, v1));
            let parts = (sweep / (std::f64::consts::PI - 1e-9)).floor() as usize + 1;
            for p in 0..parts {
                v2.push(if p == 0 {
                    v0
                } else {
                    on_point(a.center, a.radius, t0 + sweep * p as f64 / parts as f64)
                });
                a2.push(a);
            }
        }
        let body = Self {
            shape: Shape::Gon {
                verts: v2,
                arcs: a2,
            },
        };
        body.validate()?;
        Ok(body.normalized())
    }

    pub fn is_point(&self) -> bool {
        matches!(self.shape, Shape::Point(_))
    }

    pub fn is_disk(&self) -> bool {
        matches!(self.shape, Shape::Disk { .. })
    }

    pub fn as_point(&self) -> Option<P2> {
        match self.shape {
            Shape::Point(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_disk(&self) -> Option<(P2, f64)> {
        match self.shape {
            Shape::Disk { center, radius } => Some((center, radius)),
            _ => None,
        }
    }

    /// Cyclic vertex list (empty for disks and points).
    pub fn vertices(&self) -> &[P2] {
        match &self.shape {
            Shape::Gon { verts, .. } => verts,
            _ => &[],
        }
    }

    pub fn arc_specs(&self) -> &[ArcSpec] {
        match &self.shape {
            Shape::Gon { arcs, .. } => arcs,
            _ => &[],
        }
    }

    /// Sweep angle of arc `i`.
    pub fn arc_sweep(&self, i: usize) -> f64 {
        match &self.shape {
            Shape::Gon { verts, arcs } => {
                let m = verts.len();
                let t0 = angle_from(arcs[i].center, verts[i]);
                let t1 = angle_from(arcs[i].center, verts[(i + 1) % m]);
                ccw_sweep(t0, t1)
            }
            Shape::Disk { .. } => std::f64::consts::TAU,
            Shape::Point(_) => 0.0,
        }
    }

    /// Checks the representation invariants: vertices sit on their two
    /// adjacent arcs within `WELD`-scale tolerance, arcs are minor and CCW,
    /// and exterior angles are nonnegative (convexity).
    pub fn validate(&self) -> Result<()> {
        let (verts, arcs) = match &self.shape {
            Shape::Gon { verts, arcs } => (verts, arcs),
            _ => return Ok(()),
        };
        let m = verts.len();
        for i in 0..m {
            let a = arcs[i];
            if !(a.radius > 0.0 && a.radius <= 1.0 + 1e-12) {
                return Err(Error::InvalidParameter(format!(
                    "arc radius {} out of (0,1]",
                    a.radius
                )));
            }
            let v0 = verts[i];
            let v1 = verts[(i + 1) % m];
            for v in [v0, v1] {
                let d = (dist2(v, a.center) - a.radius).abs();
                if d > 100.0 * WELD {
                    return Err(Error::InvalidParameter(format!(
                        "vertex {v:?} off its arc by {d}"
                    )));
                }
            }
            let sweep = self.arc_sweep(i);
            if sweep > std::f64::consts::PI + 1e-6 {
                return Err(Error::InvalidParameter(format!(
                    "arc {i} subtends {sweep}, not minor"
                )));
            }
            // exterior angle at v1: outgoing tangent of arc i vs incoming of arc i+1;
            // tangent at angle θ on a CCW arc is θ + π/2
            let tan_out = angle_from(a.center, v1) + std::f64::consts::FRAC_PI_2;
            let next = arcs[(i + 1) % m];
            let tan_in = angle_from(next.center, v1) + std::f64::consts::FRAC_PI_2;
            let turn = ccw_sweep(tan_out, tan_in);
            if turn > std::f64::consts::PI + 1e-6 && turn < std::f64::consts::TAU - 1e-6 {
                return Err(Error::InvalidParameter(format!(
                    "negative exterior angle at vertex {i}"
                )));
            }
        }
        Ok(())
    }

    /// Deterministic orientation: rotate the cyclic lists so the
    /// lexicographically smallest vertex comes first.
    fn normalized(mut self) -> Self {
        if let Shape::Gon { verts, arcs } = &mut self.shape {
            let mut k = 0;
            for i in 1..verts.len() {
                if (verts[i][0], verts[i][1]) < (verts[k][0], verts[k][1]) {
                    k = i;
                }
            }
            verts.rotate_left(k);
            arcs.rotate_left(k);
        }
        self
    }

    /// Merges consecutive arcs that lie on the same circle (artifacts of
    /// minor-arc splitting), dropping the artificial vertices.
    pub fn merged(&self) -> Self {
        let (verts, arcs) = match &self.shape {
            Shape::Gon { verts, arcs } => (verts, arcs),
            _ => return self.clone(),
        };
        let m = verts.len();
        let mut keep: Vec<usize> = Vec::new();
        for i in 0..m {
            let prev = arcs[(i + m - 1) % m];
            let cur = arcs[i];
            let same = dist2(prev.center, cur.center) <= 10.0 * WELD
                && (prev.radius - cur.radius).abs() <= 10.0 * WELD;
            if !same {
                keep.push(i);
            }
        }
        if keep.is_empty() {
            // single full circle: representable as a disk
            return Self::disk(arcs[0].center, arcs[0].radius).expect("radius validated");
        }
        if keep.len() == verts.len() {
            return self.clone();
        }
        let verts2: Vec<P2> = keep.iter().map(|&i| verts[i]).collect();
        let arcs2: Vec<ArcSpec> = keep.iter().map(|&i| arcs[i]).collect();
        Self {
            shape: Shape::Gon {
                verts: verts2,
                arcs: arcs2,
            },
        }
    }

    /// Exact area: shoelace over the vertex polygon plus one circular
    /// segment per arc.
    pub fn area(&self) -> f64 {
        match &self.shape {
            Shape::Point(_) => 0.0,
            Shape::Disk { radius, .. } => std::f64::consts::PI * radius * radius,
            Shape::Gon { verts, arcs } => {
                let m = verts.len();
                let mut a = 0.0;
                for i in 0..m {
                    a += 0.5 * cross2(verts[i], verts[(i + 1) % m]);
                }
                for (i, arc) in arcs.iter().enumerate() {
                    let th = self.arc_sweep(i);
                    a += 0.5 * arc.radius * arc.radius * (th - th.sin());
                }
                a
            }
        }
    }

    /// Exact perimeter: sum of arc lengths.
    pub fn perimeter(&self) -> f64 {
        match &self.shape {
            Shape::Point(_) => 0.0,
            Shape::Disk { radius, .. } => std::f64::consts::TAU * radius,
            Shape::Gon { arcs, .. } => arcs
                .iter()
                .enumerate()
                .map(|(i, a)| a.radius * self.arc_sweep(i))
                .sum(),
        }
    }

    /// Exact support value `h(u) = max_{x∈P} ⟨x,u⟩` for unit `u`.
    pub fn support(&self, u: P2) -> f64 {
        self.support_with_point(u).0
    }

    /// Support value together with a maximizing boundary point.
    pub fn support_with_point(&self, u: P2) -> (f64, P2) {
        match &self.shape {
            Shape::Point(p) => (dot2(*p, u), *p),
            Shape::Disk { center, radius } => {
                let n = u[0].hypot(u[1]);
                let p = [center[0] + radius * u[0] / n, center[1] + radius * u[1] / n];
                (dot2(*center, u) + radius * n, p)
            }
            Shape::Gon { verts, arcs } => {
                let mut best = (f64::NEG_INFINITY, verts[0]);
                for v in verts {
                    let s = dot2(*v, u);
                    if s > best.0 {
                        best = (s, *v);
                    }
                }
                let un = u[0].hypot(u[1]);
                let ut = u[1].atan2(u[0]);
                for (i, a) in arcs.iter().enumerate() {
                    let t0 = angle_from(a.center, verts[i]);
                    let sweep = self.arc_sweep(i);
                    if ccw_sweep(t0, ut) <= sweep {
                        let s = dot2(a.center, u) + a.radius * un;
                        if s > best.0 {
                            best = (s, on_point(a.center, a.radius, ut));
                        }
                    }
                }
                best
            }
        }
    }

    /// Exact membership with a `band`-wide boundary classification.
    pub fn contains(&self, p: P2, band: f64) -> Location {
        match &self.shape {
            Shape::Point(q) => {
                let d = dist2(p, *q);
                if d <= band {
                    Location::BoundaryBand
                } else {
                    Location::Outside
                }
            }
            Shape::Disk { center, radius } => {
                let d = dist2(p, *center);
                if (d - radius).abs() <= band {
                    Location::BoundaryBand
                } else if d < *radius {
                    Location::Inside
                } else {
                    Location::Outside
                }
            }
            Shape::Gon { verts, arcs } => {
                let m = verts.len();
                // boundary band first: on some arc within its range
                for (i, a) in arcs.iter().enumerate() {
                    if (dist2(p, a.center) - a.radius).abs() <= band {
                        let t0 = angle_from(a.center, verts[i]);
                        let tp = angle_from(a.center, p);
                        if ccw_sweep(t0, tp) <= self.arc_sweep(i) + band {
                            return Location::BoundaryBand;
                        }
                    }
                }
                for v in verts {
                    if dist2(p, *v) <= band {
                        return Location::BoundaryBand;
                    }
                }
                // interior = open vertex polygon ∪ open circular segments
                let mut inside_poly = m >= 3;
                for i in 0..m {
                    let e = sub2(verts[(i + 1) % m], verts[i]);
                    if cross2(e, sub2(p, verts[i])) <= 0.0 {
                        inside_poly = false;
                        break;
                    }
                }
                if inside_poly {
                    return Location::Inside;
                }
                for (i, a) in arcs.iter().enumerate() {
                    let v0 = verts[i];
                    let v1 = verts[(i + 1) % m];
                    let e = sub2(v1, v0);
                    // the segment bulges to the right of the chord
                    if cross2(e, sub2(p, v0)) < 0.0 && dist2(p, a.center) < a.radius {
                        return Location::Inside;
                    }
                }
                // chords themselves (needed when m == 2)
                for i in 0..m {
                    let v0 = verts[i];
                    let v1 = verts[(i + 1) % m];
                    let e = sub2(v1, v0);
                    let t = (dot2(sub2(p, v0), e) / dot2(e, e)).clamp(0.0, 1.0);
                    let q = [v0[0] + t * e[0], v0[1] + t * e[1]];
                    if dist2(p, q) <= band.max(WELD) {
                        return Location::Inside;
                    }
                }
                Location::Outside
            }
        }
    }

    /// Translate by `t`.
    pub fn translate(&self, t: P2) -> Self {
        let mv = |p: P2| [p[0] + t[0], p[1] + t[1]];
        let shape = match &self.shape {
            Shape::Point(p) => Shape::Point(mv(*p)),
            Shape::Disk { center, radius } => Shape::Disk {
                center: mv(*center),
                radius: *radius,
            },
            Shape::Gon { verts, arcs } => Shape::Gon {
                verts: verts.iter().map(|&v| mv(v)).collect(),
                arcs: arcs
                    .iter()
                    .map(|a| ArcSpec {
                        center: mv(a.center),
                        radius: a.radius,
                    })
                    .collect(),
            },
        };
        Self { shape }
    }

    /// Rotate by `phi` about the origin.
    pub fn rotate(&self, phi: f64) -> Self {
        let (s, c) = phi.sin_cos();
        let mv = |p: P2| [c * p[0] - s * p[1], s * p[0] + c * p[1]];
        let shape = match &self.shape {
            Shape::Point(p) => Shape::Point(mv(*p)),
            Shape::Disk { center, radius } => Shape::Disk {
                center: mv(*center),
                radius: *radius,
            },
            Shape::Gon { verts, arcs } => Shape::Gon {
                verts: verts.iter().map(|&v| mv(v)).collect(),
                arcs: arcs
                    .iter()
                    .map(|a| ArcSpec {
                        center: mv(a.center),
                        radius: a.radius,
                    })
                    .collect(),
            },
        };
        Self { shape }
    }

    /// Diameter, exact: the farthest pair is vertex–vertex, vertex–arc, or
    /// arc–arc, each with a closed form.
    pub fn diameter(&self) -> f64 {
        match &self.shape {
            Shape::Point(_) => 0.0,
            Shape::Disk { radius, .. } => 2.0 * radius,
            Shape::Gon { verts, arcs } => {
                let m = verts.len();
                let mut best: f64 = 0.0;
                let in_range = |i: usize, p: P2| -> bool {
                    let a = arcs[i];
                    let t0 = angle_from(a.center, verts[i]);
                    ccw_sweep(t0, angle_from(a.center, p)) <= self.arc_sweep(i)
                };
                for i in 0..m {
                    for j in 0..i {
                        best = best.max(dist2(verts[i], verts[j]));
                    }
                }
                for (i, a) in arcs.iter().enumerate() {
                    // vertex–arc: far point of circle i from v
                    for v in verts {
                        let d = dist2(*v, a.center);
                        if d < 1e-300 {
                            continue;
                        }
                        let far = [
                            a.center[0] + a.radius * (a.center[0] - v[0]) / d,
                            a.center[1] + a.radius * (a.center[1] - v[1]) / d,
                        ];
                        if in_range(i, far) {
                            best = best.max(d + a.radius);
                        }
                    }
                    // arc–arc, along the line of centers
                    for (j, b) in arcs.iter().enumerate().take(i) {
                        let d = dist2(a.center, b.center);
                        if d < 1e-300 {
                            continue;
                        }
                        let fa = [
                            a.center[0] + a.radius * (a.center[0] - b.center[0]) / d,
                            a.center[1] + a.radius * (a.center[1] - b.center[1]) / d,
                        ];
                        let fb = [
                            b.center[0] + b.radius * (b.center[0] - a.center[0]) / d,
                            b.center[1] + b.radius * (b.center[1] - a.center[1]) / d,
                        ];
                        if in_range(i, fa) && in_range(j, fb) {
                            best = best.max(d + a.radius + b.radius);
                        }
                    }
                }
                best
            }
        }
    }

    /// Planar c-dual by the vertex/arc-center swap, exact.
    ///
    /// Requires every arc to have radius exactly 1 (a true unit-disk
    /// intersection). Disks and points dualize by `B(x,r) ↦ B(x,1−r)`.
    /// Sub-unit arcs have no planar closed form; callers fall back to the
    /// grid duality in `body`.
    pub fn c_dual(&self) -> Result<Self> {
        match &self.shape {
            Shape::Point(p) => Self::disk(*p, 1.0),
            Shape::Disk { center, radius } => {
                if (radius - 1.0).abs() <= 1e-12 {
                    Ok(Self::point(*center))
                } else {
                    Self::disk(*center, 1.0 - radius)
                }
            }
            Shape::Gon { .. } => {
                let merged = self.merged();
                let (verts, arcs) = match &merged.shape {
                    Shape::Gon { verts, arcs } => (verts.clone(), arcs.clone()),
                    // merging collapsed to a full disk
                    _ => return merged.c_dual(),
                };
                if arcs.iter().any(|a| (a.radius - 1.0).abs() > 1e-9) {
                    return Err(Error::InvalidParameter(
                        "planar dual needs unit-radius arcs; use grid duality".into(),
                    ));
                }
                let m = verts.len();
                let dual_verts: Vec<P2> = arcs.iter().map(|a| a.center).collect();
                let dual_arcs: Vec<ArcSpec> = (0..m)
                    .map(|i| ArcSpec {
                        center: verts[(i + 1) % m],
                        radius: 1.0,
                    })
                    .collect();
                Self::from_parts(dual_verts, dual_arcs)
            }
        }
    }

    /// `√area(P) + √area(Pᶜ)`, the planar volume-product functional.
    pub fn mahler(&self) -> Result<f64> {
        let dual = self.c_dual()?;
        Ok(self.area().max(0.0).sqrt() + dual.area().max(0.0).sqrt())
    }

    /// Exact out-radius and out-center, by support-set enumeration over the
    /// boundary elements (vertices and arcs).
    pub fn outball(&self) -> (P2, f64) {
        match &self.shape {
            Shape::Point(p) => (*p, 0.0),
            Shape::Disk { center, radius } => (*center, *radius),
            Shape::Gon { verts, arcs } => {
                let elems = self.elements(verts, arcs);
                enclosing_ball_of_elements(&elems, |x, r| self.covers_all(x, r))
            }
        }
    }

    /// Exact in-radius and in-center (Chebyshev ball).
    pub fn inball(&self) -> (P2, f64) {
        match &self.shape {
            Shape::Point(p) => (*p, 0.0),
            Shape::Disk { center, radius } => (*center, *radius),
            Shape::Gon { verts, arcs } => inscribed_ball(self, verts, arcs),
        }
    }

    fn elements(&self, verts: &[P2], arcs: &[ArcSpec]) -> Vec<Element> {
        let mut out: Vec<Element> = verts.iter().map(|&v| Element { c: v, r: 0.0 }).collect();
        for a in arcs {
            out.push(Element {
                c: a.center,
                r: a.radius,
            });
        }
        out
    }

    /// True when `B(x, r)` covers every boundary element reachable within
    /// its angular range (arcs fall back to their endpoints, which are
    /// vertices and therefore separate elements).
    fn covers_all(&self, x: P2, r: f64) -> bool {
        let (verts, arcs) = match &self.shape {
            Shape::Gon { verts, arcs } => (verts, arcs),
            _ => return true,
        };
        let tol = 1e-9;
        for v in verts {
            if dist2(*v, x) > r + tol {
                return false;
            }
        }
        for (i, a) in arcs.iter().enumerate() {
            let d = dist2(a.center, x);
            if d < 1e-300 {
                if a.radius > r + tol {
                    return false;
                }
                continue;
            }
            let far = [
                a.center[0] + a.radius * (a.center[0] - x[0]) / d,
                a.center[1] + a.radius * (a.center[1] - x[1]) / d,
            ];
            let t0 = angle_from(a.center, verts[i]);
            if ccw_sweep(t0, angle_from(a.center, far)) <= self.arc_sweep(i)
                && d + a.radius > r + tol
            {
                return false;
            }
        }
        true
    }
}

/// Boundary element for radius enumeration: a point (r = 0) or a circle.
#[derive(Clone, Copy, Debug)]
struct Element {
    c: P2,
    r: f64,
}

/// Smallest `(x, R)` with `‖x − cᵢ‖ + rᵢ ≤ R` for a validated subset of
/// elements, by support-set enumeration (pairs and triples have closed
/// forms; the optimum has 2 or 3 contacts).
fn enclosing_ball_of_elements<F: Fn(P2, f64) -> bool>(elems: &[Element], valid: F) -> (P2, f64) {
    let mut best: Option<(P2, f64)> = None;
    let mut consider = |x: P2, r: f64| {
        if r.is_finite() && valid(x, r) {
            match best {
                Some((_, rb)) if rb <= r => {}
                _ => best = Some((x, r)),
            }
        }
    };
    let n = elems.len();
    // single element
    for e in elems {
        consider(e.c, e.r);
    }
    // pairs: contacts are antipodal through the center
    for i in 0..n {
        for j in 0..i {
            let (a, b) = (elems[i], elems[j]);
            let d = dist2(a.c, b.c);
            if d < 1e-300 {
                continue;
            }
            let e = [(b.c[0] - a.c[0]) / d, (b.c[1] - a.c[1]) / d];
            let za = [a.c[0] - a.r * e[0], a.c[1] - a.r * e[1]];
            let zb = [b.c[0] + b.r * e[0], b.c[1] + b.r * e[1]];
            let x = [(za[0] + zb[0]) / 2.0, (za[1] + zb[1]) / 2.0];
            let r = dist2(za, zb) / 2.0;
            consider(x, r);
        }
    }
    // triples: ‖x−cᵢ‖ = R − rᵢ reduces to a linear system in (x, R) plus
    // one quadratic in R
    for i in 0..n {
        for j in 0..i {
            for k in 0..j {
                for (x, r) in three_contact_ball(elems[i], elems[j], elems[k]) {
                    consider(x, r);
                }
            }
        }
    }
    best.unwrap_or(([f64::NAN, f64::NAN], f64::NAN))
}

/// Candidate balls with three prescribed tangencies `‖x − cᵢ‖² = (R − rᵢ)²`.
///
/// The squared equations cover both the enclosing (`‖x−c‖ = R − r`) and the
/// inscribed (`‖x−c‖ = r − R`) tangency; the caller's validity check picks
/// the meaningful roots. Subtracting pairs of equations is linear in
/// `(x, R)`, leaving one quadratic in `R`.
fn three_contact_ball(a: Element, b: Element, c: Element) -> Vec<(P2, f64)> {
    // 2⟨x, q.c − p.c⟩ = c0 + c1·R for each pair (p, q)
    let pair = |p: Element, q: Element| -> ([f64; 2], f64, f64) {
        let row = [2.0 * (q.c[0] - p.c[0]), 2.0 * (q.c[1] - p.c[1])];
        let c0 = (dot2(q.c, q.c) - dot2(p.c, p.c)) - (q.r * q.r - p.r * p.r);
        let c1 = 2.0 * (q.r - p.r);
        (row, c0, c1)
    };
    let (m0, c00, c01) = pair(a, b);
    let (m1, c10, c11) = pair(a, c);
    let det = m0[0] * m1[1] - m0[1] * m1[0];
    if det.abs() < 1e-14 {
        return Vec::new();
    }
    // x = p + q·R
    let solve2 = |b0: f64, b1: f64| -> P2 {
        [(b0 * m1[1] - m0[1] * b1) / det, (m0[0] * b1 - b0 * m1[0]) / det]
    };
    let p = solve2(c00, c10);
    let q = solve2(c01, c11);
    // substitute into ‖x − c_a‖² = R² − 2·r_a·R + r_a²
    let w = [p[0] - a.c[0], p[1] - a.c[1]];
    let aa = dot2(q, q) - 1.0;
    let bb = 2.0 * dot2(w, q) + 2.0 * a.r;
    let cc = dot2(w, w) - a.r * a.r;
    let mut out = Vec::new();
    let mut push = |r: f64| {
        if r.is_finite() && r >= -1e-12 {
            out.push(([p[0] + q[0] * r, p[1] + q[1] * r], r.max(0.0)));
        }
    };
    if aa.abs() < 1e-14 {
        if bb.abs() > 1e-300 {
            push(-cc / bb);
        }
    } else {
        let disc = bb * bb - 4.0 * aa * cc;
        if disc >= 0.0 {
            let s = disc.sqrt();
            push((-bb + s) / (2.0 * aa));
            push((-bb - s) / (2.0 * aa));
        }
    }
    out
}

/// Largest ball inside the arc-polygon. Contacts are arcs (from inside,
/// `‖x−c‖ = ρ − r`) and, in principle, chords never (arcs are strictly
/// convex), so the same enumeration applies with flipped signs.
fn inscribed_ball(body: &ArcPolygon, verts: &[P2], arcs: &[ArcSpec]) -> (P2, f64) {
    let clearance = |x: P2| -> f64 {
        let mut c = f64::INFINITY;
        let m = verts.len();
        for (i, a) in arcs.iter().enumerate() {
            let d = dist2(x, a.center);
            let t0 = angle_from(a.center, verts[i]);
            let near = if d > 1e-300 {
                [
                    a.center[0] + a.radius * (x[0] - a.center[0]) / d,
                    a.center[1] + a.radius * (x[1] - a.center[1]) / d,
                ]
            } else {
                verts[i]
            };
            if ccw_sweep(t0, angle_from(a.center, near)) <= body.arc_sweep(i) {
                c = c.min(a.radius - d);
            } else {
                c = c.min(dist2(x, verts[i]).min(dist2(x, verts[(i + 1) % m])));
            }
        }
        c
    };
    let mut best: Option<(P2, f64)> = None;
    let mut consider = |x: P2, r: f64| {
        if !r.is_finite() || r < 0.0 {
            return;
        }
        // clearance is only a boundary distance for interior centers
        if body.contains(x, WELD) == Location::Outside {
            return;
        }
        if clearance(x) >= r - 1e-9 {
            match best {
                Some((_, rb)) if rb >= r => {}
                _ => best = Some((x, r)),
            }
        }
    };
    let elems: Vec<Element> = arcs
        .iter()
        .map(|a| Element {
            c: a.center,
            r: a.radius,
        })
        .chain(verts.iter().map(|&v| Element { c: v, r: 0.0 }))
        .collect();
    let n = elems.len();
    for i in 0..n {
        for j in 0..i {
            // two contacts: x on the segment between the two inner contact
            // points; ‖x−cᵢ‖ = rᵢ − R pairs
            let (a, b) = (elems[i], elems[j]);
            let d = dist2(a.c, b.c);
            // inner tangency pair along the line of centers
            if d > 1e-300 {
                let e = [(b.c[0] - a.c[0]) / d, (b.c[1] - a.c[1]) / d];
                // contact points: za = ca + ra·e (toward b), zb = cb − rb·e
                let za = [a.c[0] + a.r * e[0], a.c[1] + a.r * e[1]];
                let zb = [b.c[0] - b.r * e[0], b.c[1] - b.r * e[1]];
                let x = [(za[0] + zb[0]) / 2.0, (za[1] + zb[1]) / 2.0];
                let r = dist2(za, zb) / 2.0;
                consider(x, r);
            }
            for k in 0..j {
                for (x, r) in three_contact_ball(elems[i], elems[j], elems[k]) {
                    consider(x, r);
                }
            }
        }
    }
    best.unwrap_or(([f64::NAN, f64::NAN], f64::NAN))
}
