//! Symmetrizations in ℝⁿ, constant-width machinery, curvature pairing,
//! and the three-dimensional Steiner counterexample.

use crate::body::{Provenance, SupportSampledBody};
use crate::geom::{axpy, dist, dot, norm, normalize, scale, Vector};
use crate::planar::{ArcPolygon, ArcSpec};
use crate::{Error, Result};
use serde::Serialize;
use std::sync::Arc;

/// Support grid body certified to have constant width 1.
#[derive(Clone, Debug)]
pub struct ConstantWidthBody {
    pub body: SupportSampledBody,
    /// max over the grid of |h(u) + h(−u) − 1|
    pub width_deviation: f64,
}

/// Minkowski symmetral `M_u K = ½(K + R_u K)` for an axis direction; the
/// grid is closed under axis reflections by construction, so the values
/// combine exactly.
pub fn minkowski_symmetral(k: &SupportSampledBody, axis: usize) -> Result<SupportSampledBody> {
    if axis >= k.grid.dim {
        return Err(Error::InvalidParameter("axis out of range".into()));
    }
    let values = (0..k.values.len())
        .map(|i| 0.5 * (k.values[i] + k.values[k.grid.axis_reflection_index(i, axis)]))
        .collect();
    Ok(SupportSampledBody {
        grid: Arc::clone(&k.grid),
        values,
        lipschitz: k.lipschitz,
        provenance: Provenance::Combined,
    })
}

/// Minkowski symmetral about an arbitrary direction: reflected directions
/// are looked up by nearest grid neighbor, and the worst angular gap of
/// that interpolation is reported alongside.
pub fn minkowski_symmetral_general(
    k: &SupportSampledBody,
    u: &[f64],
) -> Result<(SupportSampledBody, f64)> {
    let nu = norm(u);
    if (nu - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitVector { norm: nu });
    }
    let mut worst_gap = 0.0f64;
    let mut values = Vec::with_capacity(k.values.len());
    for (i, d) in k.grid.directions.iter().enumerate() {
        let r = crate::geom::reflect(d, u)?;
        let (j, gap) = k.grid.nearest(&r);
        worst_gap = worst_gap.max(gap);
        values.push(0.5 * (k.values[i] + k.values[j]));
    }
    Ok((
        SupportSampledBody {
            grid: Arc::clone(&k.grid),
            values,
            lipschitz: k.lipschitz,
            provenance: Provenance::Combined,
        },
        worst_gap,
    ))
}

/// Steiner symmetral of a membership predicate along a direction,
/// evaluated fiber-by-fiber with bisection: the symmetral contains
/// `base + t·u` exactly when `2|t|` is at most the fiber length over
/// `base`.
type Membership<'a> = Box<dyn Fn(&[f64]) -> bool + 'a>;

pub struct SteinerSymmetral<'a> {
    member: Membership<'a>,
    pub direction: Vector,
    /// fiber search range (bounding-ball scale)
    pub reach: f64,
    scan_steps: usize,
}

impl<'a> SteinerSymmetral<'a> {
    pub fn new<F: Fn(&[f64]) -> bool + 'a>(
        member: F,
        direction: Vector,
        reach: f64,
    ) -> Result<Self> {
        let n = normalize(&direction)?;
        Ok(Self {
            member: Box::new(member),
            direction: n,
            reach,
            scan_steps: 96,
        })
    }

    /// Finer initial scans resolve thin fibers (cost grows linearly).
    pub fn with_scan_steps(mut self, steps: usize) -> Self {
        self.scan_steps = steps.max(8);
        self
    }

    /// Fiber `[a, b]` of the original body over `base + t·u`, or `None`
    /// when the scan misses the body.
    pub fn fiber(&self, base: &[f64]) -> Option<(f64, f64)> {
        let at = |t: f64| axpy(base, t, &self.direction);
        let mut t_in = None;
        for i in 0..=self.scan_steps {
            let t = -self.reach + 2.0 * self.reach * i as f64 / self.scan_steps as f64;
            if (self.member)(&at(t)) {
                t_in = Some(t);
                break;
            }
        }
        let t0 = t_in?;
        let step = 2.0 * self.reach / self.scan_steps as f64;
        let mut hi = t0;
        let mut hi_out = t0 + step;
        while (self.member)(&at(hi_out)) {
            hi = hi_out;
            hi_out += step;
        }
        for _ in 0..50 {
            let m = 0.5 * (hi + hi_out);
            if (self.member)(&at(m)) {
                hi = m;
            } else {
                hi_out = m;
            }
        }
        let mut lo = t0;
        let mut lo_out = t0 - step;
        while (self.member)(&at(lo_out)) {
            lo = lo_out;
            lo_out -= step;
        }
        for _ in 0..50 {
            let m = 0.5 * (lo + lo_out);
            if (self.member)(&at(m)) {
                lo = m;
            } else {
                lo_out = m;
            }
        }
        Some((lo, hi))
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        let t = dot(x, &self.direction);
        let base = axpy(x, -t, &self.direction);
        match self.fiber(&base) {
            Some((a, b)) => 2.0 * t.abs() <= (b - a).max(0.0) + 1e-12,
            None => false,
        }
    }
}

/// `(K + Kᶜ)/2`: a certified constant-width-1 body.
pub fn constant_width_average(k: &SupportSampledBody) -> Result<ConstantWidthBody> {
    let dual = k.c_dual()?;
    let body = k.minkowski_combine(&dual, 0.5)?;
    let width_deviation = (0..body.values.len())
        .map(|i| (body.width(i) - 1.0).abs())
        .fold(0.0f64, f64::max);
    if width_deviation > 1e-9 {
        return Err(Error::Degenerate(format!(
            "constant-width certification failed: deviation {width_deviation}"
        )));
    }
    Ok(ConstantWidthBody {
        body,
        width_deviation,
    })
}

/// Whether `T` averages to the given constant-width body. Both the direct
/// test `(T+Tᶜ)/2 = K` and the equivalent even-parity test of `h_T − h_K`
/// are computed; they must agree.
pub fn basin_parity_check(
    target: &ConstantWidthBody,
    t: &SupportSampledBody,
    tol: f64,
) -> Result<bool> {
    if !crate::body::same_grid(&target.body, t) {
        return Err(Error::GridMismatch);
    }
    let avg = constant_width_average(t)?;
    let direct = avg
        .body
        .values
        .iter()
        .zip(&target.body.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max)
        <= tol;
    let parity = (0..t.values.len())
        .map(|i| {
            let di = t.values[i] - target.body.values[i];
            let ni = t.grid.negation_index(i);
            let dn = t.values[ni] - target.body.values[ni];
            (di - dn).abs()
        })
        .fold(0.0f64, f64::max)
        <= 2.0 * tol;
    if direct != parity {
        return Err(Error::Degenerate(
            "direct and parity basin tests disagree".into(),
        ));
    }
    Ok(direct)
}

/// Directional certificate for Schramm's covering ball.
#[derive(Clone, Copy, Debug)]
pub struct SchrammReport {
    /// `√(5/4 − R²) − ½`
    pub bound: f64,
    /// `min_u max(a(u), b(u))`
    pub worst_cover: f64,
    pub pass: bool,
}

/// For `K, Kᶜ ⊆ B(0,R)` with `R < 1`: every grid direction is covered to
/// depth `max(a(u), b(u)) ≥ √(5/4 − R²) − ½`, with
/// `a(u) = √(1−R²+h_K(−u)²) − h_K(−u)` and `b` its dual twin.
pub fn schramm_ball_check(
    k: &SupportSampledBody,
    r_enclosing: f64,
    tol: f64,
) -> Result<SchrammReport> {
    if !(0.0 < r_enclosing && r_enclosing < 1.0) {
        return Err(Error::InvalidParameter("need 0 < R < 1".into()));
    }
    let dual = k.c_dual()?;
    for (hk, hd) in k.values.iter().zip(&dual.values) {
        if *hk > r_enclosing + 1e-9 || *hd > r_enclosing + 1e-9 {
            return Err(Error::InvalidParameter(
                "body or dual exceeds the enclosing radius".into(),
            ));
        }
    }
    let r2 = 1.0 - r_enclosing * r_enclosing;
    let bound = (1.25 - r_enclosing * r_enclosing).sqrt() - 0.5;
    let mut worst = f64::INFINITY;
    for i in 0..k.values.len() {
        let hk_neg = k.values[k.grid.negation_index(i)];
        let hd = dual.values[i];
        let a = (r2 + hk_neg * hk_neg).sqrt() - hk_neg;
        let b = (r2 + hd * hd).sqrt() - hd;
        worst = worst.min(a.max(b));
    }
    Ok(SchrammReport {
        bound,
        worst_cover: worst,
        pass: worst >= bound - tol,
    })
}

/// Principal radii of curvature at a pair of dual support directions.
#[derive(Clone, Debug)]
pub struct CurvaturePairing {
    /// sorted ascending radii of K at u
    pub radii: Vec<f64>,
    /// sorted ascending radii of Kᶜ at −u
    pub dual_radii: Vec<f64>,
    /// ‖Hess h_K(u) + Hess h_{Kᶜ}(−u) − (I − u⊗u)‖_max
    pub hessian_sum_defect: f64,
    /// Hessian blow-up detected (non-smooth point); radii unreliable
    pub non_smooth: bool,
}

/// Central-difference Hessian of the 1-homogeneous extension of `h`.
fn fd_hessian<F: Fn(&[f64]) -> f64>(h: &F, u: &[f64], step: f64) -> Vec<Vec<f64>> {
    let n = u.len();
    let hp = |v: &[f64]| -> f64 {
        let nv = norm(v);
        nv * h(&scale(v, 1.0 / nv))
    };
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let mut vpp = u.to_vec();
            vpp[i] += step;
            vpp[j] += step;
            let mut vpm = u.to_vec();
            vpm[i] += step;
            vpm[j] -= step;
            let mut vmp = u.to_vec();
            vmp[i] -= step;
            vmp[j] += step;
            let mut vmm = u.to_vec();
            vmm[i] -= step;
            vmm[j] -= step;
            let v = (hp(&vpp) - hp(&vpm) - hp(&vmp) + hp(&vmm)) / (4.0 * step * step);
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    out
}

/// Eigenvalues of the Hessian restricted to `u⊥`.
fn tangent_eigenvalues(hess: &[Vec<f64>], u: &[f64]) -> Vec<f64> {
    let n = u.len();
    let basis = crate::body::hyperplane_basis(u);
    let k = basis.len();
    let mut m = vec![vec![0.0; k]; k];
    for a in 0..k {
        for b in 0..k {
            let mut hv = vec![0.0; n];
            for (i, hvi) in hv.iter_mut().enumerate() {
                for j in 0..n {
                    *hvi += hess[i][j] * basis[b][j];
                }
            }
            m[a][b] = dot(&basis[a], &hv);
        }
    }
    match k {
        1 => vec![m[0][0]],
        2 => {
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let disc = (tr * tr / 4.0 - det).max(0.0).sqrt();
            let mut e = vec![tr / 2.0 - disc, tr / 2.0 + disc];
            e.sort_by(|a, b| a.partial_cmp(b).unwrap());
            e
        }
        _ => {
            // Jacobi sweeps for the small symmetric case
            let mut a = m.clone();
            for _ in 0..60 {
                let mut p = 0;
                let mut q = 1;
                let mut off = 0.0;
                for i in 0..k {
                    for j in 0..i {
                        if a[i][j].abs() > off {
                            off = a[i][j].abs();
                            p = i;
                            q = j;
                        }
                    }
                }
                if off < 1e-14 {
                    break;
                }
                let theta = 0.5 * (2.0 * a[p][q]).atan2(a[q][q] - a[p][p]);
                let (s, c) = theta.sin_cos();
                for i in 0..k {
                    let aip = a[i][p];
                    let aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for j in 0..k {
                    let apj = a[p][j];
                    let aqj = a[q][j];
                    a[p][j] = c * apj - s * aqj;
                    a[q][j] = s * apj + c * aqj;
                }
            }
            let mut e: Vec<f64> = (0..k).map(|i| a[i][i]).collect();
            e.sort_by(|a, b| a.partial_cmp(b).unwrap());
            e
        }
    }
}

/// Pairing of principal curvature radii: `rᵢ + s_{n−i} = 1`, through FD
/// Hessians of `h` and its dual `h_c(v) = ‖v‖ − h(−v̂)·‖v‖`.
pub fn curvature_pairing<F: Fn(&[f64]) -> f64>(
    h: F,
    u: &[f64],
    fd_step: f64,
) -> Result<CurvaturePairing> {
    let nu = norm(u);
    if (nu - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitVector { norm: nu });
    }
    let n = u.len();
    let hess_k = fd_hessian(&h, u, fd_step);
    let hdual = |v: &[f64]| -> f64 { 1.0 - h(&crate::geom::neg(v)) };
    let neg_u = crate::geom::neg(u);
    let hess_d = fd_hessian(&hdual, &neg_u, fd_step);
    let blowup = hess_k
        .iter()
        .chain(hess_d.iter())
        .flatten()
        .any(|v| !v.is_finite() || v.abs() > 1.0 / fd_step);
    let mut defect = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 } - u[i] * u[j];
            defect = defect.max((hess_k[i][j] + hess_d[i][j] - target).abs());
        }
    }
    let radii = tangent_eigenvalues(&hess_k, u);
    let dual_radii = tangent_eigenvalues(&hess_d, &neg_u);
    Ok(CurvaturePairing {
        radii,
        dual_radii,
        hessian_sum_defect: defect,
        non_smooth: blowup,
    })
}

/// Support function of the quadrant body `B(0,1) ∩ (ℝ⁺)ⁿ`:
/// `h(u) = ‖u₊‖`. Width at least 1 in every direction, yet containing no
/// constant-width body.
pub fn quadrant_body_support(u: &[f64]) -> f64 {
    u.iter().map(|x| x.max(0.0).powi(2)).sum::<f64>().sqrt()
}

/// Reuleaux triangle: c-hull of an equilateral triangle of side 1,
/// circumcenter at the origin.
pub fn reuleaux_triangle() -> ArcPolygon {
    let r = 1.0 / 3.0f64.sqrt();
    crate::planar::spindle_hull(&[[r, 0.0], [-r / 2.0, 0.5], [-r / 2.0, -0.5]])
        .expect("equilateral triangle of side 1 has out-radius below 1")
}

/// The four-arc constant-width body built from quarter disks of radii
/// `R = 1 − 1/√2` and `r = 1/√2` in opposite quadrants.
pub fn quadrant_constant_width_body() -> ArcPolygon {
    let r = 1.0 / std::f64::consts::SQRT_2;
    let big = 1.0 - r;
    ArcPolygon::from_parts(
        vec![[r, 0.0], [0.0, r], [-big, 0.0], [0.0, -big]],
        vec![
            ArcSpec {
                center: [0.0, 0.0],
                radius: r,
            },
            ArcSpec {
                center: [r, 0.0],
                radius: 1.0,
            },
            ArcSpec {
                center: [0.0, 0.0],
                radius: big,
            },
            ArcSpec {
                center: [0.0, r],
                radius: 1.0,
            },
        ],
    )
    .expect("the quadrant body is a valid arc-polygon")
}

/// Power-law fit of the ellipse-dual boundary near its south pole.
#[derive(Clone, Debug)]
pub struct EllipseDualFit {
    pub exponent: f64,
    pub coefficient: f64,
    pub samples: Vec<(f64, f64)>,
}

/// Boundary of the dual of `E = {x²/b + y²/b² ≤ 1}` near `(0, b−1)`,
/// parametrized as `x − n_E(x)`: fits `v(u) − (b−1) ≈ C·|u|^{4/3}`.
pub fn ellipse_dual_profile(b: f64, samples: usize) -> Result<EllipseDualFit> {
    if !(0.0 < b && b < 1.0) {
        return Err(Error::InvalidParameter("need b in (0,1)".into()));
    }
    let ax = b.sqrt();
    let ay = b;
    let v0 = b - 1.0;
    let mut pts = Vec::with_capacity(samples);
    for s in 0..samples {
        // log-spaced approach to the top of the ellipse
        let f = s as f64 / (samples - 1).max(1) as f64;
        let dt = 1e-3 * (3e-2f64 / 1e-3).powf(f);
        let t = std::f64::consts::FRAC_PI_2 - dt;
        let x = ax * t.cos();
        let y = ay * t.sin();
        let mut nvec = vec![2.0 * x / b, 2.0 * y / (b * b)];
        let nn = norm(&nvec);
        nvec = scale(&nvec, 1.0 / nn);
        let u = x - nvec[0];
        let v = y - nvec[1];
        pts.push((u.abs(), v - v0));
    }
    let mut sx = 0.0;
    let mut sy = 0.0;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let m = pts.len() as f64;
    for &(u, dv) in &pts {
        let lx = u.ln();
        let ly = dv.max(1e-300).ln();
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    let slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    let intercept = (sy - slope * sx) / m;
    Ok(EllipseDualFit {
        exponent: slope,
        coefficient: intercept.exp(),
        samples: pts,
    })
}

/// All numbers of the three-dimensional Steiner counterexample: the lens
/// `B(c₀,1) ∩ B(−c₀,1)`, `c₀ = (x₀,y₀,z₀)`, symmetrized along e₃, shows a
/// sectional curvature below 1 in the e₁ direction.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub x0: f64,
    pub y0: f64,
    pub z0: f64,
    pub x: f64,
    pub y: f64,
    pub f_u: f64,
    pub g_u: f64,
    pub minus_f_d: f64,
    pub minus_g_d: f64,
    pub grad_f_u: [f64; 2],
    pub grad_g_d: [f64; 2],
    /// ψ(s,t) = √(s²+t²)·(1+s²) at the averaged gradient
    pub psi_at_mean: f64,
    pub psi_f: f64,
    pub psi_g: f64,
    pub psi_average: f64,
    /// ψ-quotient certificate ψ̄/ψ(mean); below 1
    pub kappa_psi_quotient: f64,
    /// sectional curvature κ_h(w, e₁) of the averaged upper sheet
    pub kappa_h: f64,
    /// worst κ_h over the symmetral's feasible mixed-fiber region
    pub region_min_kappa: f64,
    /// a violating probe with fiber length at least 0.02, if any
    pub region_probe: [f64; 2],
    pub region_probe_kappa: f64,
    pub in_class: bool,
}

fn psi(s: f64, t: f64) -> f64 {
    (s * s + t * t).sqrt() * (1.0 + s * s)
}

fn graph_denominator(grad: [f64; 2]) -> f64 {
    (1.0 + grad[0] * grad[0] + grad[1] * grad[1]).sqrt() * (1.0 + grad[0] * grad[0])
}

struct LensSheets {
    x0: f64,
    y0: f64,
}

impl LensSheets {
    fn w1(&self, x: f64, y: f64) -> f64 {
        (1.0 - (x - self.x0).powi(2) - (y - self.y0).powi(2))
            .max(0.0)
            .sqrt()
    }
    fn w2(&self, x: f64, y: f64) -> f64 {
        (1.0 - (x + self.x0).powi(2) - (y + self.y0).powi(2))
            .max(0.0)
            .sqrt()
    }
    fn grad_f_u(&self, x: f64, y: f64) -> [f64; 2] {
        let w = self.w1(x, y);
        [-(x - self.x0) / w, -(y - self.y0) / w]
    }
    fn grad_g_d(&self, x: f64, y: f64) -> [f64; 2] {
        let w = self.w2(x, y);
        [-(x + self.x0) / w, -(y + self.y0) / w]
    }
    fn hess11_f_u(&self, x: f64, y: f64) -> f64 {
        let w = self.w1(x, y);
        -(1.0 - (y - self.y0).powi(2)) / (w * w * w)
    }
    fn hess11_g_d(&self, x: f64, y: f64) -> f64 {
        let w = self.w2(x, y);
        -(1.0 - (y + self.y0).powi(2)) / (w * w * w)
    }
    /// κ along e₁ of the averaged upper sheet h = z₀ + (w₁+w₂)/2.
    fn kappa_h(&self, x: f64, y: f64) -> f64 {
        let g1 = self.grad_f_u(x, y);
        let g2 = self.grad_g_d(x, y);
        let gm = [(g1[0] + g2[0]) / 2.0, (g1[1] + g2[1]) / 2.0];
        let hm = 0.5 * (self.hess11_f_u(x, y) + self.hess11_g_d(x, y));
        -hm / graph_denominator(gm)
    }
}

/// Recomputes the counterexample from its fixed constants.
///
/// The lens centers are `±(x₀, y₀, z₀)` with `z₀ = −0.4` (the sign makes
/// the sheet values come out as 0.134, 0.59, −0.934, 0.209); all other
/// quantities are closed-form evaluations at `(x, y)`.
pub fn r3_counterexample() -> CounterexampleReport {
    let (x0, y0, z0) = (-0.2807, 0.2457, -0.4);
    let (x, y) = (0.4142, 0.7268);
    let sheets = LensSheets { x0, y0 };
    let w1 = sheets.w1(x, y);
    let w2 = sheets.w2(x, y);
    let g1 = sheets.grad_f_u(x, y);
    let g2 = sheets.grad_g_d(x, y);
    let gm = [(g1[0] + g2[0]) / 2.0, (g1[1] + g2[1]) / 2.0];
    let psi_f = psi(g1[0].abs(), g1[1].abs());
    let psi_g = psi(g2[0].abs(), g2[1].abs());
    let psi_at_mean = psi(gm[0].abs(), gm[1].abs());
    let psi_average = 0.5 * (psi_f + psi_g);
    let kappa_h = sheets.kappa_h(x, y);

    // worst curvature over the feasible mixed-fiber region of the
    // symmetral (upper sheet f_u, lower sheet −g_d, fiber nonempty)
    let mut region_min = f64::INFINITY;
    let mut probe = ([f64::NAN, f64::NAN], f64::INFINITY);
    let steps = 400;
    for i in 0..=steps {
        for j in 0..=steps {
            let px = -1.2 + 2.4 * i as f64 / steps as f64;
            let py = -1.2 + 2.4 * j as f64 / steps as f64;
            let in_dom = (px - x0).powi(2) + (py - y0).powi(2) < 1.0
                && (px + x0).powi(2) + (py + y0).powi(2) < 1.0;
            if !in_dom {
                continue;
            }
            let fu = z0 + sheets.w1(px, py);
            let gu = -z0 + sheets.w2(px, py);
            let mfd = z0 - sheets.w1(px, py);
            let mgd = -z0 - sheets.w2(px, py);
            if !(fu <= gu && mgd >= mfd && fu.min(gu) >= mgd.max(mfd)) {
                continue;
            }
            let k = sheets.kappa_h(px, py);
            region_min = region_min.min(k);
            // a probe deep enough for fiber-sampled verification, away
            // from the sheet-switching curves
            if fu - mgd >= 0.02 && gu - fu >= 0.01 && mgd - mfd >= 0.01 && k < probe.1 {
                probe = ([px, py], k);
            }
        }
    }

    CounterexampleReport {
        x0,
        y0,
        z0,
        x,
        y,
        f_u: z0 + w1,
        g_u: -z0 + w2,
        minus_f_d: z0 - w1,
        minus_g_d: -z0 - w2,
        grad_f_u: g1,
        grad_g_d: g2,
        psi_at_mean,
        psi_f,
        psi_g,
        psi_average,
        kappa_psi_quotient: psi_average / psi_at_mean,
        kappa_h,
        region_min_kappa: region_min,
        region_probe: probe.0,
        region_probe_kappa: probe.1,
        in_class: !(kappa_h < 1.0 || region_min < 1.0),
    }
}

/// Membership predicate, bounding center, and bounding radius of the
/// counterexample lens, for symmetral experiments.
pub type LensPredicate = (Membership<'static>, Vector, f64);

pub fn counterexample_lens() -> LensPredicate {
    let c0 = vec![-0.2807, 0.2457, -0.4];
    let c1 = crate::geom::neg(&c0);
    let member = move |p: &[f64]| dist(p, &c0) <= 1.0 && dist(p, &c1) <= 1.0;
    (Box::new(member), vec![0.0, 0.0, 0.0], 1.0)
}
