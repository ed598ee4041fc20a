//! Geometry of ball-bodies: finite intersections of closed Euclidean unit
//! balls and the duality `A ↦ Aᶜ = ∩_{x∈A} B(x,1)` that comes with them.
//!
//! The crate has three layers:
//!
//! - exact kernels: planar arc-polygon arithmetic ([`planar`]), closed-form
//!   k-lens geometry ([`lens`]), minimum enclosing balls ([`meb`]);
//! - sampled n-dimensional machinery: support-function grids, the primal
//!   ball-intersection solver, Monte Carlo volume ([`body`], [`symwidth`],
//!   [`hull`]);
//! - a verification harness ([`verify`]) that binds named identities and
//!   inequalities about this class of bodies to reproducible, seeded checks.

pub mod body;
pub mod geom;
pub mod hull;
pub mod lens;
pub mod meb;
pub mod planar;
pub mod quad;
pub mod symwidth;
pub mod verify;

mod linalg;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is not unit length (norm {norm})")]
    NonUnitVector { norm: f64 },
    #[error("matrix is not orthogonal (max defect {defect})")]
    NotOrthogonal { defect: f64 },
    #[error("input set is empty")]
    EmptyInput,
    #[error("body is empty")]
    EmptyBody,
    #[error("section hyperplane misses the body")]
    EmptySection,
    #[error("out-radius {outrad} exceeds 1: c-hull is all of space, c-dual is empty")]
    OutradExceedsOne { outrad: f64 },
    #[error("grids do not match")]
    GridMismatch,
    #[error("grid is not closed under negation")]
    AsymmetricGrid,
    #[error("grid is not closed under the requested reflection (max angular gap {gap})")]
    GridNotReflectionClosed { gap: f64 },
    #[error("solver did not converge: residual {residual} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },
    #[error("quadrature did not reach the requested tolerance (estimate {estimate})")]
    QuadratureFailure { estimate: f64 },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown verification suite tag: {0}")]
    UnknownSuite(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
