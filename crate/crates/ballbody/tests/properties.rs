//! Property tests for the geometric predicates that carry the most
//! floating-point risk.

use ballbody::geom::{dist, reflect, ToleranceProfile};
use ballbody::lens::{apollonius_boundary, one_lens_angle_contains};
use ballbody::planar::{intersect_disks, spindle_hull, Location};
use proptest::prelude::*;

fn small_coord() -> impl Strategy<Value = f64> {
    (-0.75f64..0.75).prop_map(|x| (x * 1e12).round() / 1e12)
}

fn point2() -> impl Strategy<Value = [f64; 2]> {
    (small_coord(), small_coord()).prop_map(|(x, y)| [x, y])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reflection_is_isometric_involution(
        x in prop::collection::vec(-2.0f64..2.0, 2..5),
        y in prop::collection::vec(-2.0f64..2.0, 2..5),
        raw in prop::collection::vec(-1.0f64..1.0, 2..5),
    ) {
        let n = x.len().min(y.len()).min(raw.len());
        let (x, y) = (&x[..n], &y[..n]);
        let nr = raw[..n].iter().map(|v| v * v).sum::<f64>().sqrt();
        prop_assume!(nr > 1e-3);
        let u: Vec<f64> = raw[..n].iter().map(|v| v / nr).collect();
        let rx = reflect(x, &u).unwrap();
        let ry = reflect(y, &u).unwrap();
        prop_assert!((dist(&rx, &ry) - dist(x, y)).abs() < 1e-12);
        let rrx = reflect(&rx, &u).unwrap();
        prop_assert!(dist(&rrx, x) < 1e-12);
    }

    #[test]
    fn angle_and_apollonius_predicates_agree(
        x0 in point2(),
        x1 in point2(),
        q in point2(),
    ) {
        prop_assume!(dist(x0.as_ref(), x1.as_ref()) > 1e-3);
        let resid = apollonius_boundary(&x0, &x1, &q).unwrap();
        // skip the boundary band where the two eps conventions differ
        prop_assume!(resid.abs() > 1e-6);
        let inside = one_lens_angle_contains(&q, &x0, &x1, 1e-9).unwrap();
        prop_assert_eq!(inside, resid < 0.0);
    }

    #[test]
    fn hull_contains_generators_and_support_is_consistent(
        pts in prop::collection::vec(point2(), 2..7),
        angle in 0.0f64..std::f64::consts::TAU,
    ) {
        let hull = match spindle_hull(&pts) {
            Ok(h) => h,
            Err(_) => return Ok(()), // out-radius above 1
        };
        for p in &pts {
            prop_assert_ne!(hull.contains(*p, 1e-9), Location::Outside);
        }
        if !hull.is_point() {
            let u = [angle.cos(), angle.sin()];
            let (h, p) = hull.support_with_point(u);
            prop_assert!((p[0] * u[0] + p[1] * u[1] - h).abs() < 1e-12);
            prop_assert_ne!(hull.contains(p, 1e-7), Location::Outside);
        }
    }

    #[test]
    fn disk_intersection_is_exactly_the_common_points(
        centers in prop::collection::vec(point2(), 1..5),
        probe in point2(),
    ) {
        let disks: Vec<([f64; 2], f64)> = centers.iter().map(|&c| (c, 1.0)).collect();
        let body = intersect_disks(&disks).unwrap();
        let in_all = centers
            .iter()
            .all(|c| dist(probe.as_ref(), c.as_ref()) <= 1.0);
        let margin = centers
            .iter()
            .map(|c| (dist(probe.as_ref(), c.as_ref()) - 1.0).abs())
            .fold(f64::INFINITY, f64::min);
        prop_assume!(margin > 1e-7);
        match body {
            Some(b) => {
                let loc = b.contains(probe, 1e-9);
                prop_assert_eq!(loc == Location::Inside, in_all);
            }
            None => prop_assert!(!in_all),
        }
    }

    #[test]
    fn dual_support_identity_on_grids(
        centers in prop::collection::vec(point2(), 1..5),
        k in 0usize..240,
    ) {
        let tol = ToleranceProfile::default();
        let vv: Vec<Vec<f64>> = centers.iter().map(|c| c.to_vec()).collect();
        let body = match ballbody::body::BallIntersectionBody::c_dual_of_points(&vv, &tol) {
            Ok(Some(b)) => b,
            _ => return Ok(()),
        };
        let grid = std::sync::Arc::new(ballbody::geom::fibonacci_grid(2, 240).unwrap());
        let sampled = body.sample_support(&grid, &tol).unwrap();
        let dual = sampled.c_dual().unwrap();
        let i = k % grid.len();
        let sum = sampled.values[i] + dual.values[grid.negation_index(i)];
        prop_assert!((sum - 1.0).abs() < 1e-12);
    }
}
