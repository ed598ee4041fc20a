//! Body file schema: `{"dim": n, "kind": ..., payload arrays}`.
//!
//! File I/O lives in the command-line crate; the schema is defined here so
//! library users and the CLI agree on one format.

use super::{BallIntersectionBody, Provenance, SupportSampledBody};
use crate::geom::{DirectionGrid, ToleranceProfile, Vector};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BallEntry {
    pub center: Vector,
    pub radius: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BodyKind {
    BallIntersection {
        balls: Vec<BallEntry>,
    },
    SupportSamples {
        directions: Vec<Vector>,
        values: Vec<f64>,
        lipschitz: f64,
        mesh: f64,
    },
    PointCloud {
        points: Vec<Vector>,
        #[serde(skip_serializing_if = "Option::is_none")]
        velocities: Option<Vec<f64>>,
    },
}

/// One body as stored on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BodyFile {
    pub dim: usize,
    #[serde(flatten)]
    pub kind: BodyKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl BodyFile {
    pub fn from_ball_intersection(body: &BallIntersectionBody) -> Self {
        Self {
            dim: body.dim(),
            kind: BodyKind::BallIntersection {
                balls: body
                    .balls()
                    .iter()
                    .map(|(c, r)| BallEntry {
                        center: c.clone(),
                        radius: *r,
                    })
                    .collect(),
            },
            meta: None,
        }
    }

    pub fn from_support_samples(body: &SupportSampledBody) -> Self {
        Self {
            dim: body.grid.dim,
            kind: BodyKind::SupportSamples {
                directions: body.grid.directions.clone(),
                values: body.values.clone(),
                lipschitz: body.lipschitz,
                mesh: body.grid.mesh,
            },
            meta: None,
        }
    }

    pub fn from_points(points: Vec<Vector>) -> Self {
        let dim = points.first().map(|p| p.len()).unwrap_or(0);
        Self {
            dim,
            kind: BodyKind::PointCloud {
                points,
                velocities: None,
            },
            meta: None,
        }
    }

    pub fn to_ball_intersection(
        &self,
        tol: &ToleranceProfile,
    ) -> Result<Option<BallIntersectionBody>> {
        match &self.kind {
            BodyKind::BallIntersection { balls } => BallIntersectionBody::intersect(
                balls.iter().map(|b| (b.center.clone(), b.radius)).collect(),
                tol,
            ),
            BodyKind::PointCloud { points, .. } => {
                BallIntersectionBody::c_dual_of_points(points, tol)
            }
            BodyKind::SupportSamples { .. } => Err(Error::InvalidParameter(
                "support-sample bodies have no primal ball list".into(),
            )),
        }
    }

    pub fn to_support_samples(&self) -> Result<SupportSampledBody> {
        match &self.kind {
            BodyKind::SupportSamples {
                directions,
                values,
                lipschitz,
                mesh,
            } => {
                if directions.len() != values.len() || directions.is_empty() {
                    return Err(Error::InvalidParameter(
                        "directions/values length mismatch".into(),
                    ));
                }
                let grid = reconstruct_grid(self.dim, directions.clone(), *mesh)?;
                Ok(SupportSampledBody {
                    grid: Arc::new(grid),
                    values: values.clone(),
                    lipschitz: *lipschitz,
                    provenance: Provenance::Combined,
                })
            }
            _ => Err(Error::InvalidParameter(
                "body is not in support-sample form".into(),
            )),
        }
    }
}

/// Rebuilds a `DirectionGrid` wrapper around stored directions. The
/// negation/reflection index structure is positional, so the directions
/// must come from a grid written by this crate (round-trips bit-exactly).
fn reconstruct_grid(dim: usize, directions: Vec<Vector>, mesh: f64) -> Result<DirectionGrid> {
    if directions.iter().any(|d| d.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: directions.first().map(|d| d.len()).unwrap_or(0),
        });
    }
    DirectionGrid::from_saved(dim, directions, mesh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::fibonacci_grid;

    #[test]
    fn round_trip_is_bit_exact() {
        let tol = ToleranceProfile::default();
        let grid = Arc::new(fibonacci_grid(3, 64).unwrap());
        let body = crate::body::BallIntersectionBody::c_dual_of_points(
            &[vec![0.1, 0.0, -0.2], vec![-0.1, 0.25, 0.0]],
            &tol,
        )
        .unwrap()
        .unwrap();
        let sampled = body.sample_support(&grid, &tol).unwrap();
        let json = serde_json::to_string(&BodyFile::from_support_samples(&sampled)).unwrap();
        let parsed: BodyFile = serde_json::from_str(&json).unwrap();
        let back = parsed.to_support_samples().unwrap();
        for (a, b) in sampled.values.iter().zip(&back.values) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
        for (a, b) in sampled.grid.directions.iter().zip(&back.grid.directions) {
            assert_eq!(a, b);
        }

        let json = serde_json::to_string(&BodyFile::from_ball_intersection(&body)).unwrap();
        let parsed: BodyFile = serde_json::from_str(&json).unwrap();
        let back = parsed.to_ball_intersection(&tol).unwrap().unwrap();
        assert_eq!(back.balls(), body.balls());
    }
}
