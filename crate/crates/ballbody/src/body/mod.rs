//! n-dimensional ball-body engine.
//!
//! Two representations coexist: the primal [`BallIntersectionBody`]
//! (finite intersection of balls, support values solved on demand) and the
//! [`SupportSampledBody`] (support values on a fixed direction grid). The
//! duality `h_{Kᶜ}(u) = 1 − h_K(−u)` makes the grid representation closed
//! under every operation here, so the solver is only needed at ingestion.

pub mod schema;
mod solver;

pub use solver::{dykstra_project, support_point, SupportCert};

use crate::geom::{
    add, axpy, dist, dot, norm, scale, sub, ClosedBall, DirectionGrid, Location, SeededRng,
    ToleranceProfile, Vector,
};
use crate::meb::{intersection_program, min_enclosing_ball};
use crate::{Error, Result};
use std::sync::Arc;

/// Finite intersection `∩ B(aᵢ, rᵢ)` with radii in (0, 1].
///
/// Construction decides emptiness (the `meb` convex program) and stores an
/// interior witness; empty intersections are represented by `None` at the
/// construction sites, so every live body is nonempty.
#[derive(Clone, Debug)]
pub struct BallIntersectionBody {
    balls: Vec<(Vector, f64)>,
    dim: usize,
    /// Chebyshev-style witness: minimizer of `max_i (‖x−aᵢ‖ − rᵢ)`.
    witness: Vector,
    /// `−min_i max (…)`; zero for degenerate single-point bodies.
    margin: f64,
}

impl BallIntersectionBody {
    /// Intersects the given balls; `Ok(None)` means the intersection is
    /// empty (declared when the program minimum exceeds `solver_tol`).
    pub fn intersect(balls: Vec<(Vector, f64)>, tol: &ToleranceProfile) -> Result<Option<Self>> {
        if balls.is_empty() {
            return Err(Error::EmptyInput);
        }
        let dim = balls[0].0.len();
        for (c, r) in &balls {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: c.len(),
                });
            }
            if !(*r > 0.0 && *r <= 1.0 + 1e-12) || !crate::geom::all_finite(c) {
                return Err(Error::InvalidParameter(format!(
                    "ball radius {r} out of (0,1] or non-finite center"
                )));
            }
        }
        let centers: Vec<Vector> = balls.iter().map(|(c, _)| c.clone()).collect();
        let radii: Vec<f64> = balls.iter().map(|(_, r)| *r).collect();
        let (witness, fmin) = intersection_program(&centers, &radii, tol)?;
        if fmin > tol.solver_tol {
            return Ok(None);
        }
        Ok(Some(Self {
            balls,
            dim,
            witness,
            margin: (-fmin).max(0.0),
        }))
    }

    /// c-dual of a finite point set: `Aᶜ = ∩ B(a, 1)`, empty exactly when
    /// `Outrad(A) > 1`.
    pub fn c_dual_of_points(points: &[Vector], tol: &ToleranceProfile) -> Result<Option<Self>> {
        let balls = points.iter().map(|p| (p.clone(), 1.0)).collect();
        Self::intersect(balls, tol)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn balls(&self) -> &[(Vector, f64)] {
        &self.balls
    }

    pub fn witness(&self) -> &[f64] {
        &self.witness
    }

    /// Positive when the body has interior; zero for a single point.
    pub fn interior_margin(&self) -> f64 {
        self.margin
    }

    /// `h_K(u)` with a certified KKT residual.
    pub fn support_value(&self, u: &[f64], tol: &ToleranceProfile) -> Result<SupportCert> {
        let nu = norm(u);
        if (nu - 1.0).abs() > 1e-9 {
            return Err(Error::NonUnitVector { norm: nu });
        }
        if self.margin <= tol.solver_tol {
            // degenerate single-point body
            return Ok(SupportCert {
                value: dot(&self.witness, u),
                point: self.witness.clone(),
                residual: 0.0,
                iterations: 0,
            });
        }
        support_point(&self.balls, &self.witness, u, tol.solver_tol)
    }

    /// Samples the support function on every grid direction.
    pub fn sample_support(
        &self,
        grid: &Arc<DirectionGrid>,
        tol: &ToleranceProfile,
    ) -> Result<SupportSampledBody> {
        if grid.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: grid.dim,
            });
        }
        let mut values = Vec::with_capacity(grid.len());
        for u in &grid.directions {
            values.push(self.support_value(u, tol)?.value);
        }
        // any single ball gives a sound bound on max ‖x‖ over K
        let lipschitz = self
            .balls
            .iter()
            .map(|(c, r)| norm(c) + r)
            .fold(f64::INFINITY, f64::min);
        Ok(SupportSampledBody {
            grid: Arc::clone(grid),
            values,
            lipschitz,
            provenance: Provenance::PrimalSolved,
        })
    }

    /// Exact membership against the defining balls.
    pub fn contains(&self, x: &[f64], band: f64) -> Location {
        let worst = self
            .balls
            .iter()
            .map(|(c, r)| dist(x, c) - r)
            .fold(f64::NEG_INFINITY, f64::max);
        if worst.abs() <= band {
            Location::BoundaryBand
        } else if worst < 0.0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// Section by the hyperplane `⟨normal, x⟩ = offset`, expressed in an
    /// orthonormal basis of the hyperplane: each ball shrinks to radius
    /// `√(rᵢ² − dᵢ²)`.
    pub fn section(
        &self,
        normal: &[f64],
        offset: f64,
        tol: &ToleranceProfile,
    ) -> Result<SectionResult> {
        let nn = norm(normal);
        if (nn - 1.0).abs() > 1e-9 {
            return Err(Error::NonUnitVector { norm: nn });
        }
        let basis = hyperplane_basis(normal);
        let origin = scale(normal, offset);
        let mut balls = Vec::with_capacity(self.balls.len());
        let mut tangent: Option<Vector> = None;
        for (c, r) in &self.balls {
            let d = dot(c, normal) - offset;
            if d.abs() > *r + tol.geom_eps {
                return Ok(SectionResult::Empty);
            }
            let proj: Vector = basis.iter().map(|b| dot(c, b)).collect();
            let r2 = (r * r - d * d).max(0.0).sqrt();
            if r2 <= tol.geom_eps {
                tangent = Some(proj.clone());
            }
            balls.push((proj, r2.max(tol.geom_eps)));
        }
        if let Some(t) = tangent {
            // a tangent ball pins the section to (at most) one point
            let ok = balls.iter().all(|(c, r)| dist(c, &t) <= r + 1e-7);
            return Ok(if ok {
                SectionResult::Point {
                    in_plane: t.clone(),
                    ambient: embed(&basis, &origin, &t),
                }
            } else {
                SectionResult::Empty
            });
        }
        match Self::intersect(balls, tol)? {
            Some(body) => Ok(SectionResult::Body { body, basis, origin }),
            None => Ok(SectionResult::Empty),
        }
    }

    /// Projection onto the span of an orthonormal `basis`, sampled on a
    /// fresh grid: `h_{P_E K}(v) = h_K(Σ vⱼ eⱼ)`.
    pub fn project(
        &self,
        basis: &[Vector],
        grid: &Arc<DirectionGrid>,
        tol: &ToleranceProfile,
    ) -> Result<SupportSampledBody> {
        check_orthonormal(basis, self.dim)?;
        if grid.dim != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                got: grid.dim,
            });
        }
        let mut values = Vec::with_capacity(grid.len());
        for v in &grid.directions {
            let mut u = vec![0.0; self.dim];
            for (vj, b) in v.iter().zip(basis) {
                u = axpy(&u, *vj, b);
            }
            values.push(self.support_value(&u, tol)?.value);
        }
        let lipschitz = self
            .balls
            .iter()
            .map(|(c, r)| norm(c) + r)
            .fold(f64::INFINITY, f64::min);
        Ok(SupportSampledBody {
            grid: Arc::clone(grid),
            values,
            lipschitz,
            provenance: Provenance::PrimalSolved,
        })
    }

    /// Boundary points in every grid direction (the solver's maximizers).
    pub fn boundary_samples(
        &self,
        grid: &DirectionGrid,
        tol: &ToleranceProfile,
    ) -> Result<Vec<Vector>> {
        grid.directions
            .iter()
            .map(|u| self.support_value(u, tol).map(|c| c.point))
            .collect()
    }

    /// A bounding ball: the enclosing ball of the centers inflated by the
    /// largest radius.
    pub fn bounding_ball(&self) -> Result<ClosedBall> {
        let centers: Vec<Vector> = self.balls.iter().map(|(c, _)| c.clone()).collect();
        let meb = min_enclosing_ball(&centers)?;
        let rmax = self.balls.iter().map(|(_, r)| *r).fold(0.0f64, f64::max);
        ClosedBall::new(meb.center, meb.radius + rmax)
    }
}

/// Result of slicing a body with a hyperplane.
#[derive(Clone, Debug)]
pub enum SectionResult {
    Empty,
    /// Tangency: the section degenerates to a single point.
    Point { in_plane: Vector, ambient: Vector },
    /// Full-dimensional slice in hyperplane coordinates, with the basis
    /// and origin that embed it back into ambient space.
    Body {
        body: BallIntersectionBody,
        basis: Vec<Vector>,
        origin: Vector,
    },
}

fn embed(basis: &[Vector], origin: &[f64], x: &[f64]) -> Vector {
    let mut p = origin.to_vec();
    for (xi, b) in x.iter().zip(basis) {
        p = axpy(&p, *xi, b);
    }
    p
}

/// Orthonormal basis of `normal⊥`.
pub fn hyperplane_basis(normal: &[f64]) -> Vec<Vector> {
    let n = normal.len();
    let mut basis: Vec<Vector> = Vec::with_capacity(n - 1);
    for j in 0..n {
        if basis.len() == n - 1 {
            break;
        }
        let mut v = vec![0.0; n];
        v[j] = 1.0;
        let p = dot(&v, normal);
        v = axpy(&v, -p, normal);
        for b in &basis {
            let q = dot(&v, b);
            v = axpy(&v, -q, b);
        }
        let nv = norm(&v);
        if nv > 1e-8 {
            basis.push(scale(&v, 1.0 / nv));
        }
    }
    basis
}

fn check_orthonormal(basis: &[Vector], dim: usize) -> Result<()> {
    for (i, bi) in basis.iter().enumerate() {
        if bi.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: bi.len(),
            });
        }
        for (j, bj) in basis.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            if (dot(bi, bj) - target).abs() > 1e-9 {
                return Err(Error::NotOrthogonal {
                    defect: (dot(bi, bj) - target).abs(),
                });
            }
        }
    }
    Ok(())
}

/// How a grid of support values came to be.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    PrimalSolved,
    DualFormula,
    Combined,
}

/// Support function sampled on a fixed direction grid.
#[derive(Clone, Debug)]
pub struct SupportSampledBody {
    pub grid: Arc<DirectionGrid>,
    pub values: Vec<f64>,
    /// Bound on max ‖x‖ over the body: |h(u) − h(v)| ≤ lipschitz·∠(u,v).
    pub lipschitz: f64,
    pub provenance: Provenance,
}

/// Estimate carrying the grid value and the mesh-induced error budget.
#[derive(Clone, Copy, Debug)]
pub struct GridEstimate {
    pub grid_value: f64,
    pub mesh_error: f64,
}

pub fn same_grid(a: &SupportSampledBody, b: &SupportSampledBody) -> bool {
    Arc::ptr_eq(&a.grid, &b.grid)
        || (a.grid.dim == b.grid.dim && a.grid.directions == b.grid.directions)
}

impl SupportSampledBody {
    /// Builds a grid body from explicit support values (e.g. a closed-form
    /// support function).
    pub fn from_support_fn<F: Fn(&[f64]) -> f64>(
        grid: &Arc<DirectionGrid>,
        lipschitz: f64,
        f: F,
    ) -> Self {
        let values = grid.directions.iter().map(|u| f(u)).collect();
        Self {
            grid: Arc::clone(grid),
            values,
            lipschitz,
            provenance: Provenance::Combined,
        }
    }

    /// Ball `B(c, r)` on the grid: `h(u) = ⟨c,u⟩ + r`.
    pub fn ball(grid: &Arc<DirectionGrid>, center: &[f64], radius: f64) -> Self {
        let values = grid
            .directions
            .iter()
            .map(|u| dot(center, u) + radius)
            .collect();
        Self {
            grid: Arc::clone(grid),
            values,
            lipschitz: norm(center) + radius,
            provenance: Provenance::Combined,
        }
    }

    /// `h_{Kᶜ}(u) = 1 − h_K(−u)`; an exact involution on the grid.
    pub fn c_dual(&self) -> Result<Self> {
        let mut values = vec![0.0; self.values.len()];
        for i in 0..self.values.len() {
            values[i] = 1.0 - self.values[self.grid.negation_index(i)];
        }
        Ok(Self {
            grid: Arc::clone(&self.grid),
            values,
            // the dual sits inside any B(a,1) with a in the primal
            lipschitz: (self.lipschitz + 1.0).min(2.0 + self.lipschitz),
            provenance: Provenance::DualFormula,
        })
    }

    /// `(1−λ)K + λT` on a shared grid: support values combine linearly.
    pub fn minkowski_combine(&self, other: &Self, lambda: f64) -> Result<Self> {
        if !same_grid(self, other) {
            return Err(Error::GridMismatch);
        }
        if !(0.0..=1.0).contains(&lambda) {
            return Err(Error::InvalidParameter("need λ in [0,1]".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (1.0 - lambda) * a + lambda * b)
            .collect();
        Ok(Self {
            grid: Arc::clone(&self.grid),
            values,
            lipschitz: (1.0 - lambda) * self.lipschitz + lambda * other.lipschitz,
            provenance: Provenance::Combined,
        })
    }

    /// Hausdorff distance via support functions: the grid value is exact
    /// for grid directions; the mesh term bounds what off-grid directions
    /// could add.
    pub fn hausdorff(&self, other: &Self) -> Result<GridEstimate> {
        if !same_grid(self, other) {
            return Err(Error::GridMismatch);
        }
        let grid_value = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0f64, f64::max);
        Ok(GridEstimate {
            grid_value,
            mesh_error: (self.lipschitz + other.lipschitz) * self.grid.mesh,
        })
    }

    /// Width in the grid direction `i`.
    pub fn width(&self, i: usize) -> f64 {
        self.values[i] + self.values[self.grid.negation_index(i)]
    }

    /// Diameter as the maximal grid width; the true diameter exceeds the
    /// grid value by at most the mesh term.
    pub fn diameter(&self) -> GridEstimate {
        let grid_value = (0..self.values.len())
            .map(|i| self.width(i))
            .fold(0.0f64, f64::max);
        GridEstimate {
            grid_value,
            mesh_error: 2.0 * self.lipschitz * self.grid.mesh,
        }
    }

    /// Mean width `M*(K)` as the grid average of `h`.
    pub fn mean_width(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Certified membership from the outer description: `x ∈ K` needs
    /// `⟨x,u⟩ ≤ h(u)` for all unit `u`; on a grid the margin
    /// `(‖x‖ + L)·mesh` covers the gap to off-grid directions.
    pub fn contains(&self, x: &[f64], eps: f64) -> Location {
        self.contains_recentered(x, eps, &vec![0.0; self.grid.dim], self.lipschitz)
    }

    /// Membership with the margin recentered at `c`: for any unit `v` and
    /// its nearest grid `u`, both `⟨x−c, ·⟩` and `h_{K−c}` move by at most
    /// their radius times the angular gap, so
    /// `(‖x−c‖ + radius)·mesh` certifies off-grid directions.
    pub fn contains_recentered(&self, x: &[f64], eps: f64, c: &[f64], radius: f64) -> Location {
        let mut worst = f64::NEG_INFINITY;
        for (u, h) in self.grid.directions.iter().zip(&self.values) {
            worst = worst.max(dot(x, u) - h);
        }
        if worst > eps {
            Location::Outside
        } else if worst <= -(dist(x, c) + radius) * self.grid.mesh {
            Location::Inside
        } else {
            Location::BoundaryBand
        }
    }
}

/// Monte Carlo volume of a membership predicate inside a bounding ball.
///
/// Unbiased hit-ratio estimate; the standard error comes from the binomial
/// variance. Deterministic for a fixed rng state.
pub fn mc_volume<F: Fn(&[f64]) -> bool>(
    member: F,
    bounding: &ClosedBall,
    samples: usize,
    rng: &mut SeededRng,
) -> Result<(f64, f64)> {
    if samples == 0 {
        return Err(Error::InvalidParameter("need samples > 0".into()));
    }
    let n = bounding.center.len();
    let vol_ball = crate::lens::unit_ball_volume(n) * bounding.radius.powi(n as i32);
    let mut hits = 0usize;
    for _ in 0..samples {
        let p = add(&bounding.center, &rng.in_ball(n, bounding.radius));
        if member(&p) {
            hits += 1;
        }
    }
    if hits == 0 {
        return Err(Error::Degenerate(
            "no Monte Carlo hits; bounding ball too large or body empty".into(),
        ));
    }
    let p = hits as f64 / samples as f64;
    let est = vol_ball * p;
    let se = vol_ball * (p * (1.0 - p) / samples as f64).sqrt();
    Ok((est, se))
}

/// Witness for membership in `(Kᶜ + Tᶜ)/2`.
#[derive(Clone, Debug)]
pub struct HalfDualSumWitness {
    pub query: Vector,
    pub enclosing_center: Vector,
    pub max_defect: f64,
}

/// Membership of `x` in `(Kᶜ + Tᶜ)/2` via the enclosing-ball description:
/// `x` belongs exactly when `Outrad((K−x) ∪ (x−T)) ≤ 1`. The out-ball of
/// dense boundary samples certifies the radius; its center `z` witnesses
/// `z ∈ Kᶜ − x` and `z ∈ x − Tᶜ`.
pub fn half_dual_sum_membership(
    k: &BallIntersectionBody,
    t: &BallIntersectionBody,
    x: &[f64],
    grid: &DirectionGrid,
    tol: &ToleranceProfile,
) -> Result<(bool, HalfDualSumWitness)> {
    let mut cloud: Vec<Vector> = Vec::with_capacity(2 * grid.len());
    for u in &grid.directions {
        let pk = k.support_value(u, tol)?.point;
        cloud.push(sub(&pk, x));
        let pt = t.support_value(u, tol)?.point;
        cloud.push(sub(x, &pt));
    }
    let meb = min_enclosing_ball(&cloud)?;
    let ok = meb.radius <= 1.0 + tol.geom_eps;
    Ok((
        ok,
        HalfDualSumWitness {
            query: x.to_vec(),
            enclosing_center: meb.center,
            max_defect: meb.radius,
        },
    ))
}

/// Grid view of `conv_c(A)`: support values from the outer description
/// `h(u) = 1 − h_{Aᶜ}(−u)`, plus the out-ball of `A` (= out-ball of the
/// hull), which recenters membership margins. Build once, query often.
#[derive(Clone, Debug)]
pub struct HullView {
    pub body: SupportSampledBody,
    pub outball: ClosedBall,
}

impl HullView {
    pub fn contains(&self, x: &[f64], eps: f64) -> Location {
        self.body
            .contains_recentered(x, eps, &self.outball.center, self.outball.radius)
    }
}

pub fn hull_view(
    points: &[Vector],
    grid: &Arc<DirectionGrid>,
    tol: &ToleranceProfile,
) -> Result<HullView> {
    let dual = BallIntersectionBody::c_dual_of_points(points, tol)?
        .ok_or(Error::OutradExceedsOne { outrad: f64::NAN })?;
    let mut body = dual.sample_support(grid, tol)?.c_dual()?;
    let meb = min_enclosing_ball(points)?;
    body.lipschitz = body.lipschitz.min(norm(&meb.center) + meb.radius);
    Ok(HullView {
        body,
        outball: ClosedBall::new(meb.center, meb.radius)?,
    })
}

/// Membership in `conv_c(A)` through the outer description
/// `⟨x,u⟩ ≤ 1 − h_{Aᶜ}(−u)` over a grid, with the recentered margin.
pub fn hull_contains(
    points: &[Vector],
    x: &[f64],
    grid: &Arc<DirectionGrid>,
    tol: &ToleranceProfile,
) -> Result<Location> {
    Ok(hull_view(points, grid, tol)?.contains(x, tol.geom_eps))
}

/// Random primal test body: the c-dual of a handful of points in a small
/// ball, so the intersection is comfortably nonempty.
pub fn random_ball_intersection(
    n: usize,
    spread: f64,
    rng: &mut SeededRng,
    tol: &ToleranceProfile,
) -> BallIntersectionBody {
    loop {
        let k = 2 + rng.below(5);
        let pts: Vec<Vector> = (0..k).map(|_| rng.in_ball(n, spread)).collect();
        if let Ok(Some(body)) = BallIntersectionBody::c_dual_of_points(&pts, tol) {
            return body;
        }
    }
}

#[cfg(test)]
mod tests;
