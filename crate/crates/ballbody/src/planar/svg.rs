//! SVG emission for planar bodies: unit-arc paths at 200 px per unit with
//! a 10 px margin, deterministic byte output.

use super::{SampledPlanarBody, ArcPolygon, P2};

pub const SCALE: f64 = 200.0;
pub const MARGIN: f64 = 10.0;

/// A drawing surface collecting bodies, sampled outlines, and markers.
#[derive(Clone, Debug, Default)]
pub struct Scene {
    items: Vec<Item>,
}

#[derive(Clone, Debug)]
enum Item {
    Body(ArcPolygon, String),
    Outline(Vec<P2>, String),
    Dot(P2, String),
}

impl Scene {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_body(&mut self, body: &ArcPolygon, style: &str) {
        self.items.push(Item::Body(body.clone(), style.to_string()));
    }

    pub fn add_outline(&mut self, pts: Vec<P2>, style: &str) {
        self.items.push(Item::Outline(pts, style.to_string()));
    }

    pub fn add_sampled(&mut self, body: &SampledPlanarBody, style: &str) {
        let (s, c) = (-body.angle).sin_cos();
        let back = |p: P2| -> P2 { [c * p[0] - s * p[1], s * p[0] + c * p[1]] };
        let mut pts: Vec<P2> = body
            .xs
            .iter()
            .zip(&body.half)
            .map(|(&x, &h)| back([x, h]))
            .collect();
        pts.extend(
            body.xs
                .iter()
                .zip(&body.half)
                .rev()
                .map(|(&x, &h)| back([x, -h])),
        );
        self.items.push(Item::Outline(pts, style.to_string()));
    }

    pub fn add_dot(&mut self, p: P2, style: &str) {
        self.items.push(Item::Dot(p, style.to_string()));
    }

    fn bounds(&self) -> (P2, P2) {
        let mut lo = [f64::INFINITY, f64::INFINITY];
        let mut hi = [f64::NEG_INFINITY, f64::NEG_INFINITY];
        let mut grow = |p: P2| {
            lo[0] = lo[0].min(p[0]);
            lo[1] = lo[1].min(p[1]);
            hi[0] = hi[0].max(p[0]);
            hi[1] = hi[1].max(p[1]);
        };
        for item in &self.items {
            match item {
                Item::Body(b, _) => {
                    if let Some(p) = b.as_point() {
                        grow(p);
                    } else {
                        grow([b.support([1.0, 0.0]), b.support([0.0, 1.0])]);
                        grow([-b.support([-1.0, 0.0]), -b.support([0.0, -1.0])]);
                    }
                }
                Item::Outline(pts, _) => pts.iter().for_each(|&p| grow(p)),
                Item::Dot(p, _) => grow(*p),
            }
        }
        if !lo[0].is_finite() {
            (lo, hi) = ([0.0, 0.0], [1.0, 1.0]);
        }
        (lo, hi)
    }

    /// Serializes the scene. Math coordinates are y-up; SVG is y-down, so
    /// points map through `(x, y) ↦ (x − x₀, y₁ − y)·SCALE + MARGIN`.
    pub fn render(&self) -> String {
        let (lo, hi) = self.bounds();
        let m = |p: P2| -> P2 {
            [
                (p[0] - lo[0]) * SCALE + MARGIN,
                (hi[1] - p[1]) * SCALE + MARGIN,
            ]
        };
        let width = (hi[0] - lo[0]) * SCALE + 2.0 * MARGIN;
        let height = (hi[1] - lo[1]) * SCALE + 2.0 * MARGIN;
        let mut out = String::new();
        out.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {:.2} {:.2}\">\n",
            width, height
        ));
        for item in &self.items {
            match item {
                Item::Body(b, style) => out.push_str(&body_path(b, &m, style)),
                Item::Outline(pts, style) => {
                    if pts.is_empty() {
                        continue;
                    }
                    let mut d = String::new();
                    for (i, &p) in pts.iter().enumerate() {
                        let q = m(p);
                        let cmd = if i == 0 { 'M' } else { 'L' };
                        d.push_str(&format!("{}{:.6} {:.6} ", cmd, q[0], q[1]));
                    }
                    d.push('Z');
                    out.push_str(&format!("  <path d=\"{}\" {}/>\n", d.trim_end(), style));
                }
                Item::Dot(p, style) => {
                    let q = m(*p);
                    out.push_str(&format!(
                        "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"3\" {}/>\n",
                        q[0], q[1], style
                    ));
                }
            }
        }
        out.push_str("</svg>\n");
        out
    }
}

fn body_path<F: Fn(P2) -> P2>(b: &ArcPolygon, m: &F, style: &str) -> String {
    if let Some(p) = b.as_point() {
        let q = m(p);
        return format!(
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"2\" {}/>\n",
            q[0], q[1], style
        );
    }
    if let Some((c, r)) = b.as_disk() {
        let q = m(c);
        return format!(
            "  <circle cx=\"{:.6}\" cy=\"{:.6}\" r=\"{:.6}\" {}/>\n",
            q[0],
            q[1],
            r * SCALE,
            style
        );
    }
    let verts = b.vertices();
    let arcs = b.arc_specs();
    let mlen = verts.len();
    let start = m(verts[0]);
    let mut d = format!("M{:.6} {:.6} ", start[0], start[1]);
    for i in 0..mlen {
        let to = m(verts[(i + 1) % mlen]);
        // arcs are minor (split at construction) and CCW in math
        // coordinates, which is sweep-flag 0 after the y flip
        d.push_str(&format!(
            "A{:.6} {:.6} 0 0 0 {:.6} {:.6} ",
            arcs[i].radius * SCALE,
            arcs[i].radius * SCALE,
            to[0],
            to[1]
        ));
    }
    d.push('Z');
    format!("  <path d=\"{}\" {}/>\n", d, style)
}

/// Single-body render used by the command line.
pub fn render_body(body: &ArcPolygon) -> String {
    let mut scene = Scene::new();
    scene.add_body(body, "fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"");
    scene.render()
}
