//! Shared geometric primitives: vectors, balls, rigid motions, direction
//! grids, the tolerance profile, and deterministic randomness.
//!
//! All coordinates are `f64`; every quantity checked downstream tolerates
//! well over 1e-6 relative error, and the planar module gets tighter
//! guarantees from closed forms rather than exact arithmetic.

use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

/// Euclidean point/vector with dimension fixed by the computation context.
pub type Vector = Vec<f64>;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

pub fn add(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[f64], t: f64) -> Vector {
    a.iter().map(|x| x * t).collect()
}

/// `a + t·b`.
pub fn axpy(a: &[f64], t: f64, b: &[f64]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + t * y).collect()
}

pub fn neg(a: &[f64]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// Returns `a/‖a‖`, or an error when the norm is numerically zero.
pub fn normalize(a: &[f64]) -> Result<Vector> {
    let n = norm(a);
    if n < 1e-300 {
        return Err(Error::Degenerate("cannot normalize zero vector".into()));
    }
    Ok(scale(a, 1.0 / n))
}

pub fn all_finite(a: &[f64]) -> bool {
    a.iter().all(|x| x.is_finite())
}

/// Angle between two unit vectors, clamped against rounding.
pub fn angle(a: &[f64], b: &[f64]) -> f64 {
    dot(a, b).clamp(-1.0, 1.0).acos()
}

/// Classification returned by membership tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    BoundaryBand,
    Outside,
}

/// Closed Euclidean ball `B(center, radius)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedBall {
    pub center: Vector,
    pub radius: f64,
}

impl ClosedBall {
    pub fn new(center: Vector, radius: f64) -> Result<Self> {
        if !all_finite(&center) || !radius.is_finite() || radius < 0.0 {
            return Err(Error::InvalidParameter(
                "ball needs finite center and radius >= 0".into(),
            ));
        }
        Ok(Self { center, radius })
    }

    pub fn contains(&self, x: &[f64], eps: f64) -> bool {
        dist(&self.center, x) <= self.radius + eps
    }
}

/// Tolerance policy threaded through all modules; one knob for calibration.
#[derive(Clone, Copy, Debug)]
pub struct ToleranceProfile {
    /// Band for geometric predicates (membership, boundary tests).
    pub geom_eps: f64,
    /// Certified KKT residual for the support solver.
    pub solver_tol: f64,
    /// Absolute tolerance for adaptive quadrature.
    pub quad_tol: f64,
    /// Monte Carlo confidence band in standard errors.
    pub mc_confidence_sigmas: f64,
}

impl Default for ToleranceProfile {
    fn default() -> Self {
        Self {
            geom_eps: 1e-9,
            solver_tol: 1e-9,
            quad_tol: 1e-10,
            mc_confidence_sigmas: 3.0,
        }
    }
}

impl ToleranceProfile {
    pub fn validate(&self) -> Result<()> {
        if self.geom_eps > 0.0
            && self.solver_tol > 0.0
            && self.quad_tol > 0.0
            && self.mc_confidence_sigmas > 0.0
        {
            Ok(())
        } else {
            Err(Error::InvalidParameter(
                "tolerances must be strictly positive".into(),
            ))
        }
    }
}

/// Reflection `R_u(x) = x − 2⟨x,u⟩u` across the hyperplane `u⊥`.
///
/// An involution and an isometry; `u` must be unit length.
pub fn reflect(x: &[f64], u: &[f64]) -> Result<Vector> {
    let nu = norm(u);
    if (nu - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitVector { norm: nu });
    }
    let c = 2.0 * dot(x, u);
    Ok(axpy(x, -c, u))
}

/// Rigid motion `g(x) = x₀ + Ux` with `U` orthogonal.
#[derive(Clone, Debug)]
pub struct RigidMotion {
    /// Row-major n×n orthogonal matrix.
    pub rotation: Vec<Vector>,
    pub translation: Vector,
}

impl RigidMotion {
    /// Checks `UᵀU = I` within 1e-12 at construction.
    pub fn new(rotation: Vec<Vector>, translation: Vector) -> Result<Self> {
        let n = translation.len();
        if rotation.len() != n || rotation.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: rotation.len(),
            });
        }
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                // (UᵀU)_{ij} = Σ_k U_{ki} U_{kj}
                let s: f64 = (0..n).map(|k| rotation[k][i] * rotation[k][j]).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                defect = defect.max((s - target).abs());
            }
        }
        if defect > 1e-12 {
            return Err(Error::NotOrthogonal { defect });
        }
        Ok(Self {
            rotation,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        let rotation = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Self {
            rotation,
            translation: vec![0.0; n],
        }
    }

    pub fn translation(t: Vector) -> Self {
        let mut g = Self::identity(t.len());
        g.translation = t;
        g
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn apply(&self, x: &[f64]) -> Result<Vector> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.len(),
            });
        }
        let mut y = self.translation.clone();
        for (i, row) in self.rotation.iter().enumerate() {
            y[i] += dot(row, x);
        }
        Ok(y)
    }

    /// Random rotation + translation inside `B(0, shift)`, via QR of a
    /// Gaussian matrix.
    pub fn random(n: usize, shift: f64, rng: &mut SeededRng) -> Self {
        let mut cols: Vec<Vector> = Vec::with_capacity(n);
        for _ in 0..n {
            let mut v: Vector = (0..n).map(|_| rng.gaussian()).collect();
            for c in &cols {
                let p = dot(&v, c);
                v = axpy(&v, -p, c);
            }
            // Degenerate draws are measure zero; retry by perturbation.
            while norm(&v) < 1e-9 {
                v = (0..n).map(|_| rng.gaussian()).collect();
                for c in &cols {
                    let p = dot(&v, c);
                    v = axpy(&v, -p, c);
                }
            }
            let nv = norm(&v);
            cols.push(scale(&v, 1.0 / nv));
        }
        // cols are the columns of U; store rows.
        let rotation: Vec<Vector> = (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect();
        let translation = rng.in_ball(n, shift);
        Self::new(rotation, translation).expect("QR produces an orthogonal matrix")
    }
}

/// Applies a rigid motion to every point of a finite set.
///
/// Pairwise distances between images equal those between pre-images.
pub fn apply_motion(g: &RigidMotion, points: &[Vector]) -> Result<Vec<Vector>> {
    points.iter().map(|p| g.apply(p)).collect()
}

/// Deterministic grid of near-uniform unit directions.
///
/// For `n = 2` the grid is exactly uniform on the circle with mesh `π/m`.
/// For `n ≥ 3` a low-discrepancy base set in the open positive orthant is
/// expanded by all `2ⁿ` sign patterns, so the grid is closed under negation
/// and under every axis reflection `R_{eᵢ}` exactly, by index arithmetic.
/// The mesh (covering radius) is then certified probabilistically.
#[derive(Clone, Debug)]
pub struct DirectionGrid {
    pub dim: usize,
    pub directions: Vec<Vector>,
    /// Upper bound on the angular distance from any unit vector to the grid.
    pub mesh: f64,
    /// For n ≥ 3: directions are stored in orbits of size 2ⁿ.
    orbit_bits: usize,
}

impl DirectionGrid {
    /// Near-uniform grid of at least `m` directions (`m ≥ 2n`, `n ≥ 2`).
    ///
    /// For `n = 2` the count is rounded up to a multiple of 4; for `n ≥ 3`
    /// to a multiple of `2ⁿ`.
    pub fn fibonacci(n: usize, m: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter("grid needs dimension >= 2".into()));
        }
        if m < 2 * n {
            return Err(Error::InvalidParameter(format!(
                "grid needs at least {} directions in dimension {}",
                2 * n,
                n
            )));
        }
        if n == 2 {
            let m = m.div_ceil(4) * 4;
            let directions = (0..m)
                .map(|k| {
                    let t = 2.0 * std::f64::consts::PI * k as f64 / m as f64;
                    vec![t.cos(), t.sin()]
                })
                .collect();
            return Ok(Self {
                dim: 2,
                directions,
                mesh: std::f64::consts::PI / m as f64,
                orbit_bits: 0,
            });
        }

        let orbit = 1usize << n;
        let bases = m.div_ceil(orbit);
        // Greedy best-candidate (blue noise) points on the open positive
        // orthant of the sphere: deterministic, and the min-distance
        // greedy keeps the covering radius close to optimal.
        let mut rng = SeededRng::new(0xF1B0_u64 + n as u64, 0);
        let mut base_pts: Vec<Vector> = Vec::with_capacity(bases);
        while base_pts.len() < bases {
            let cands = 24;
            let mut best: Option<(f64, Vector)> = None;
            for _ in 0..cands {
                let mut v: Vector = (0..n).map(|_| rng.gaussian().abs().max(1e-6)).collect();
                let nv = norm(&v);
                v = scale(&v, 1.0 / nv);
                let d = base_pts
                    .iter()
                    .map(|b| crate::geom::dist(b, &v))
                    .fold(f64::INFINITY, f64::min);
                if best.as_ref().map(|(bd, _)| d > *bd).unwrap_or(true) {
                    best = Some((d, v));
                }
            }
            base_pts.push(best.unwrap().1);
        }
        let mut directions = Vec::with_capacity(bases * orbit);
        for base in &base_pts {
            for pat in 0..orbit {
                let d: Vector = base
                    .iter()
                    .enumerate()
                    .map(|(j, x)| if pat >> j & 1 == 1 { -x } else { *x })
                    .collect();
                directions.push(d);
            }
        }
        let mut grid = Self {
            dim: n,
            directions,
            mesh: 0.0,
            orbit_bits: n,
        };
        grid.mesh = grid.estimate_mesh(8192, 0xB0D1E5);
        grid.certify_mesh(4096, 0x5EED)?;
        Ok(grid)
    }

    /// Restores a grid from stored directions, verifying that the
    /// positional negation structure holds (bit-exact round trips only).
    pub fn from_saved(dim: usize, directions: Vec<Vector>, mesh: f64) -> Result<Self> {
        if dim < 2 || directions.len() < 2 * dim || mesh <= 0.0 {
            return Err(Error::InvalidParameter("invalid saved grid".into()));
        }
        let grid = Self {
            dim,
            directions,
            mesh,
            orbit_bits: if dim == 2 { 0 } else { dim },
        };
        if dim == 2 && !grid.directions.len().is_multiple_of(4) {
            return Err(Error::InvalidParameter("saved circle grid not 4-periodic".into()));
        }
        if dim >= 3 && !grid.directions.len().is_multiple_of(1 << dim) {
            return Err(Error::InvalidParameter("saved grid not orbit-aligned".into()));
        }
        for i in 0..grid.directions.len() {
            let ni = grid.negation_index(i);
            let d = &grid.directions[i];
            let nd = &grid.directions[ni];
            if d.iter().zip(nd).any(|(a, b)| (a + b).abs() > 1e-12) {
                return Err(Error::AsymmetricGrid);
            }
        }
        Ok(grid)
    }

    pub fn len(&self) -> usize {
        self.directions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.directions.is_empty()
    }

    /// Index of `−directions[i]`; exact by construction.
    pub fn negation_index(&self, i: usize) -> usize {
        if self.dim == 2 {
            let m = self.directions.len();
            (i + m / 2) % m
        } else {
            let orbit = 1usize << self.orbit_bits;
            let base = i / orbit;
            let pat = i % orbit;
            base * orbit + (pat ^ (orbit - 1))
        }
    }

    /// Index of `R_{e_axis}(directions[i])`; exact by construction.
    pub fn axis_reflection_index(&self, i: usize, axis: usize) -> usize {
        if self.dim == 2 {
            let m = self.directions.len();
            // start angle is 0, so reflection across e₂⊥ maps k ↦ m−k,
            // and across e₁⊥ maps k ↦ m/2−k.
            match axis {
                0 => (m + m / 2 - i % m) % m,
                _ => (m - i % m) % m,
            }
        } else {
            let orbit = 1usize << self.orbit_bits;
            let base = i / orbit;
            let pat = i % orbit;
            base * orbit + (pat ^ (1 << axis))
        }
    }

    /// Index of the grid direction nearest to `u`, with its angular gap.
    pub fn nearest(&self, u: &[f64]) -> (usize, f64) {
        let mut best = (0usize, f64::INFINITY);
        for (i, d) in self.directions.iter().enumerate() {
            let a = angle(d, u);
            if a < best.1 {
                best = (i, a);
            }
        }
        best
    }

    fn estimate_mesh(&self, samples: usize, seed: u64) -> f64 {
        let mut rng = SeededRng::new(seed, 0);
        let mut worst = 0.0f64;
        for _ in 0..samples {
            let u = rng.unit_vector(self.dim);
            let (_, a) = self.nearest(&u);
            worst = worst.max(a);
        }
        // Safety margin over the empirical covering radius.
        1.3 * worst + 1e-3
    }

    fn certify_mesh(&self, samples: usize, seed: u64) -> Result<()> {
        let mut rng = SeededRng::new(seed, 1);
        for _ in 0..samples {
            let u = rng.unit_vector(self.dim);
            let (_, a) = self.nearest(&u);
            if a > self.mesh {
                return Err(Error::InvalidParameter(format!(
                    "mesh certification failed: gap {a} exceeds recorded mesh {}",
                    self.mesh
                )));
            }
        }
        Ok(())
    }
}

/// Convenience wrapper matching the operation name used throughout.
pub fn fibonacci_grid(n: usize, m: usize) -> Result<DirectionGrid> {
    DirectionGrid::fibonacci(n, m)
}

/// Deterministic, platform-stable RNG keyed by `(seed, stream)`.
///
/// Workers receive distinct stream ids; identical keys reproduce identical
/// sample sequences.
#[derive(Clone, Debug)]
pub struct SeededRng {
    pub seed: u64,
    pub stream: u64,
    inner: ChaCha12Rng,
    spare_gaussian: Option<f64>,
}

impl SeededRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        key[8..16].copy_from_slice(&seed.rotate_left(17).to_le_bytes());
        let mut inner = ChaCha12Rng::from_seed(key);
        inner.set_stream(stream);
        Self {
            seed,
            stream,
            inner,
            spare_gaussian: None,
        }
    }

    /// Child generator with its own stream id.
    pub fn substream(&self, stream: u64) -> Self {
        Self::new(self.seed, stream)
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.inner.gen::<f64>()
    }

    /// Uniform in `[lo, hi)`.
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.inner.gen_range(0..n)
    }

    /// Standard normal via Box–Muller (platform-stable).
    pub fn gaussian(&mut self) -> f64 {
        if let Some(z) = self.spare_gaussian.take() {
            return z;
        }
        let u1 = self.uniform().max(1e-300);
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let t = 2.0 * std::f64::consts::PI * u2;
        self.spare_gaussian = Some(r * t.sin());
        r * t.cos()
    }

    pub fn unit_vector(&mut self, n: usize) -> Vector {
        loop {
            let v: Vector = (0..n).map(|_| self.gaussian()).collect();
            let nv = norm(&v);
            if nv > 1e-12 {
                return scale(&v, 1.0 / nv);
            }
        }
    }

    /// Uniform in the ball `B(0, radius)`.
    pub fn in_ball(&mut self, n: usize, radius: f64) -> Vector {
        let u = self.unit_vector(n);
        let r = radius * self.uniform().powf(1.0 / n as f64);
        scale(&u, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn reflect_matches_hand_values() {
        assert_eq!(reflect(&[1.0, 0.0], &[0.0, 1.0]).unwrap(), vec![1.0, 0.0]);
        assert_eq!(reflect(&[0.0, 1.0], &[0.0, 1.0]).unwrap(), vec![0.0, -1.0]);
        assert_eq!(reflect(&[3.0, 4.0], &[1.0, 0.0]).unwrap(), vec![-3.0, 4.0]);
        assert!(reflect(&[1.0, 0.0], &[0.5, 0.0]).is_err());
    }

    #[test]
    fn reflect_is_an_isometric_involution() {
        let mut rng = SeededRng::new(7, 0);
        for _ in 0..200 {
            let n = 2 + rng.below(3);
            let u = rng.unit_vector(n);
            let x = rng.in_ball(n, 2.0);
            let y = rng.in_ball(n, 2.0);
            let rx = reflect(&x, &u).unwrap();
            let ry = reflect(&y, &u).unwrap();
            assert_abs_diff_eq!(dist(&rx, &ry), dist(&x, &y), epsilon = 1e-12);
            let rrx = reflect(&rx, &u).unwrap();
            assert_abs_diff_eq!(dist(&rrx, &x), 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn motions_preserve_distances() {
        let mut rng = SeededRng::new(11, 0);
        for _ in 0..50 {
            let n = 2 + rng.below(3);
            let g = RigidMotion::random(n, 1.0, &mut rng);
            let pts: Vec<Vector> = (0..6).map(|_| rng.in_ball(n, 2.0)).collect();
            let imgs = apply_motion(&g, &pts).unwrap();
            for i in 0..pts.len() {
                for j in 0..i {
                    assert_abs_diff_eq!(
                        dist(&imgs[i], &imgs[j]),
                        dist(&pts[i], &pts[j]),
                        epsilon = 1e-12
                    );
                }
            }
        }
    }

    #[test]
    fn motion_examples() {
        let id = RigidMotion::identity(2);
        assert_eq!(id.apply(&[0.3, -0.7]).unwrap(), vec![0.3, -0.7]);

        // rotation by π/2 in the plane
        let rot = RigidMotion::new(vec![vec![0.0, -1.0], vec![1.0, 0.0]], vec![0.0, 0.0]).unwrap();
        let img = rot.apply(&[1.0, 0.0]).unwrap();
        assert_abs_diff_eq!(img[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(img[1], 1.0, epsilon = 1e-15);

        let tr = RigidMotion::translation(vec![1.0, 1.0]);
        let imgs = apply_motion(&tr, &[vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert_eq!(imgs, vec![vec![1.0, 1.0], vec![2.0, 1.0]]);
    }

    #[test]
    fn rejects_non_orthogonal_rotation() {
        let r = RigidMotion::new(vec![vec![1.0, 0.1], vec![0.0, 1.0]], vec![0.0, 0.0]);
        assert!(r.is_err());
    }

    #[test]
    fn circle_grid_is_uniform() {
        let g = fibonacci_grid(2, 4).unwrap();
        assert_eq!(g.len(), 4);
        assert_abs_diff_eq!(g.mesh, std::f64::consts::PI / 4.0);
        let expect = [[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
        for (d, e) in g.directions.iter().zip(expect.iter()) {
            assert_abs_diff_eq!(dist(d, e), 0.0, epsilon = 1e-12);
        }
        let g = fibonacci_grid(2, 360).unwrap();
        assert_abs_diff_eq!(g.mesh, std::f64::consts::PI / 360.0);
    }

    #[test]
    fn sphere_grid_is_unit_and_sign_closed() {
        let g = fibonacci_grid(3, 1000).unwrap();
        assert_eq!(g.len(), 1000);
        for (i, d) in g.directions.iter().enumerate() {
            assert_abs_diff_eq!(norm(d), 1.0, epsilon = 1e-12);
            let ni = g.negation_index(i);
            assert_abs_diff_eq!(dist(&neg(d), &g.directions[ni]), 0.0, epsilon = 0.0);
            for axis in 0..3 {
                let ri = g.axis_reflection_index(i, axis);
                let refl = reflect(d, &[
                    if axis == 0 { 1.0 } else { 0.0 },
                    if axis == 1 { 1.0 } else { 0.0 },
                    if axis == 2 { 1.0 } else { 0.0 },
                ])
                .unwrap();
                assert_abs_diff_eq!(dist(&refl, &g.directions[ri]), 0.0, epsilon = 0.0);
            }
        }
    }

    #[test]
    fn circle_grid_reflection_indices() {
        let g = fibonacci_grid(2, 360).unwrap();
        for i in 0..g.len() {
            let ni = g.negation_index(i);
            assert_abs_diff_eq!(
                dist(&neg(&g.directions[i]), &g.directions[ni]),
                0.0,
                epsilon = 1e-12
            );
            for axis in 0..2 {
                let u = if axis == 0 { [1.0, 0.0] } else { [0.0, 1.0] };
                let ri = g.axis_reflection_index(i, axis);
                let refl = reflect(&g.directions[i], &u).unwrap();
                assert_abs_diff_eq!(dist(&refl, &g.directions[ri]), 0.0, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn rng_is_reproducible() {
        let mut a = SeededRng::new(42, 3);
        let mut b = SeededRng::new(42, 3);
        for _ in 0..10_000 {
            assert_eq!(a.uniform().to_bits(), b.uniform().to_bits());
        }
        let mut c = SeededRng::new(42, 4);
        assert_ne!(a.uniform().to_bits(), c.uniform().to_bits());
    }
}
