//! Browser bindings for the interactive demo page: spindle hulls with
//! their duals, the k-lens explorer, and planar Steiner symmetrization.
//!
//! Each export takes plain JSON/scalars and returns a JSON string with an
//! `svg` field plus the numbers the page displays, so the page needs no
//! framework. The functions are ordinary Rust functions as well, which
//! keeps them testable on the host target.

use ballbody::geom::ToleranceProfile;
use ballbody::planar::{spindle_hull, steiner_2d, svg, ArcPolygon, P2};
use wasm_bindgen::prelude::wasm_bindgen;

fn parse_points(points_json: &str) -> Result<Vec<P2>, String> {
    let pts: Vec<[f64; 2]> =
        serde_json::from_str(points_json).map_err(|e| format!("bad points: {e}"))?;
    if pts.is_empty() {
        return Err("need at least one point".into());
    }
    Ok(pts)
}

fn err_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

const HULL_STYLE: &str = "fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"";
const DUAL_STYLE: &str = "fill=\"none\" stroke=\"#db2777\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"";
const POINT_STYLE: &str = "fill=\"#1f2937\"";
const GHOST_STYLE: &str = "fill=\"none\" stroke=\"#9ca3af\" stroke-width=\"1\"";
const SYM_STYLE: &str = "fill=\"#dcfce7\" stroke=\"#15803d\" stroke-width=\"1.5\"";

/// Spindle hull of clicked points, with its c-dual overlaid.
///
/// Returns `{svg, area, dual_area, perimeter, mahler, outradius,
/// inradius, diameter, extremal_count}` or `{error}` when the points have
/// out-radius above 1.
#[wasm_bindgen]
pub fn hull_scene(points_json: &str, show_dual: bool) -> String {
    let pts = match parse_points(points_json) {
        Ok(p) => p,
        Err(e) => return err_json(&e),
    };
    let hull = match spindle_hull(&pts) {
        Ok(h) => h,
        Err(e) => return err_json(&format!("{e}")),
    };
    let dual = match hull.c_dual() {
        Ok(d) => d,
        Err(e) => return err_json(&format!("{e}")),
    };
    let mut scene = svg::Scene::new();
    scene.add_body(&hull, HULL_STYLE);
    if show_dual {
        scene.add_body(&dual, DUAL_STYLE);
    }
    for p in &pts {
        scene.add_dot(*p, POINT_STYLE);
    }
    let (_, outradius) = hull.outball();
    let (_, inradius) = hull.inball();
    let extremal = ballbody::hull::extremal_points_2d(&hull).vertices.len();
    serde_json::json!({
        "svg": scene.render(),
        "area": hull.area(),
        "dual_area": dual.area(),
        "perimeter": hull.perimeter(),
        "mahler": hull.area().sqrt() + dual.area().sqrt(),
        "outradius": outradius,
        "inradius": inradius,
        "diameter": hull.diameter(),
        "extremal_count": extremal,
    })
    .to_string()
}

/// k-lens explorer: closed-form volume, radii, the dual lens, and the
/// planar cross-section through the lens axis.
#[wasm_bindgen]
pub fn lens_scene(dim: usize, k: usize, d: f64) -> String {
    let tol = ToleranceProfile::default();
    if !(0.0..=1.0).contains(&d) || k == 0 || k >= dim {
        return err_json("need 1 <= k <= dim-1 and d in [0,1]");
    }
    let vol = match ballbody::lens::klens_volume(dim, k, d, &tol) {
        Ok(v) => v,
        Err(e) => return err_json(&format!("{e}")),
    };
    let basis: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            let mut e = vec![0.0; dim];
            e[i] = 1.0;
            e
        })
        .collect();
    let lens = match ballbody::lens::KLens::new(vec![0.0; dim], basis, d) {
        Ok(l) => l,
        Err(e) => return err_json(&format!("{e}")),
    };
    let (outradius, inradius) = ballbody::lens::klens_radii(&lens);
    let dual_d = (1.0 - d * d).max(0.0).sqrt();
    // cross-section through the equatorial plane: a planar two-ball lens
    let cross = if dual_d < 1.0 {
        intersected_lens(dual_d)
    } else {
        ArcPolygon::point([0.0, 0.0])
    };
    let mut scene = svg::Scene::new();
    scene.add_body(&cross, HULL_STYLE);
    let dual_cross = if d < 1.0 {
        intersected_lens(d)
    } else {
        ArcPolygon::point([0.0, 0.0])
    };
    scene.add_body(&dual_cross, DUAL_STYLE);
    serde_json::json!({
        "svg": scene.render(),
        "volume": vol.value,
        "quadrature_error": vol.error_estimate,
        "outradius": outradius,
        "inradius": inradius,
        "dual_k": dim - k,
        "dual_d": dual_d,
    })
    .to_string()
}

/// Planar lens `B(c·e₁, 1) ∩ B(−c·e₁, 1)` of out-radius `√(1−c²)`.
fn intersected_lens(axis_offset: f64) -> ArcPolygon {
    ballbody::planar::intersect_disks(&[([-axis_offset, 0.0], 1.0), ([axis_offset, 0.0], 1.0)])
        .ok()
        .flatten()
        .unwrap_or_else(|| ArcPolygon::point([0.0, 0.0]))
}

/// Steiner symmetrization of the hull of the clicked points along the
/// given direction (degrees), with the input ghosted behind the symmetral.
#[wasm_bindgen]
pub fn steiner_scene(points_json: &str, angle_degrees: f64, fibers: usize) -> String {
    let pts = match parse_points(points_json) {
        Ok(p) => p,
        Err(e) => return err_json(&e),
    };
    let hull = match spindle_hull(&pts) {
        Ok(h) if !h.is_point() => h,
        Ok(_) => return err_json("hull is a single point"),
        Err(e) => return err_json(&format!("{e}")),
    };
    let theta = angle_degrees.to_radians();
    let sym = match steiner_2d(&hull, [theta.cos(), theta.sin()], fibers.max(64)) {
        Ok(s) => s,
        Err(e) => return err_json(&format!("{e}")),
    };
    let mut scene = svg::Scene::new();
    scene.add_body(&hull, GHOST_STYLE);
    scene.add_sampled(&sym, SYM_STYLE);
    serde_json::json!({
        "svg": scene.render(),
        "area_before": sym.input_area,
        "area_after": sym.area,
        "min_curvature": sym.min_curvature,
    })
    .to_string()
}
