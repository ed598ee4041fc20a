//! Command-line front end: body construction, computation commands, the
//! verification runner, and SVG/CSV/JSON emission.
//!
//! Exit codes: 0 success, 1 validation error, 2 numerical non-convergence.

use ballbody::body::{
    mc_volume, schema::BodyFile, schema::BodyKind, BallIntersectionBody, SupportSampledBody,
};
use ballbody::geom::{fibonacci_grid, Location, SeededRng, ToleranceProfile};
use ballbody::planar::{intersect_disks, spindle_hull, steiner_2d, svg, ArcPolygon, P2};
use ballbody::verify::{registry, run_suite, SuiteConfig};
use ballbody::Error as BbError;
use clap::{Args, Parser, Subcommand};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "ballbody", version, about = "ball-body geometry kernel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Input body file(s); commands taking two bodies accept --in twice
    #[arg(long = "in", value_name = "FILE", num_args = 1, action = clap::ArgAction::Append)]
    input: Vec<PathBuf>,
    /// Output path
    #[arg(long = "out", value_name = "FILE")]
    out: Option<PathBuf>,
    /// Direction grid size
    #[arg(long, default_value_t = 720)]
    grid: usize,
    /// Monte Carlo sample count
    #[arg(long, default_value_t = 200_000)]
    samples: usize,
    /// Random seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Solver/geometry tolerance override
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// c-hull of a point cloud (exact in the plane)
    Hull(Common),
    /// c-dual of a body
    Dual(Common),
    /// Volume (exact area in the plane, Monte Carlo otherwise)
    Volume(Common),
    /// Out-radius and in-radius
    Radii(Common),
    /// Diameter
    Diameter(Common),
    /// Steiner symmetrization; with --t-steps, a shadow-system CSV sweep
    Steiner {
        #[command(flatten)]
        common: Common,
        /// Symmetrization / shadow direction "x,y"
        #[arg(long, default_value = "0,1")]
        direction: String,
        /// Fiber count for the symmetral
        #[arg(long, default_value_t = 1024)]
        fibers: usize,
        #[arg(long = "t-min", default_value_t = 0.0)]
        t_min: f64,
        #[arg(long = "t-max", default_value_t = 1.0)]
        t_max: f64,
        /// When set, emit a (t, area, dual_area) sweep instead
        #[arg(long = "t-steps")]
        t_steps: Option<usize>,
    },
    /// Minkowski combination (1−λ)K + λT on a shared grid
    Minkowski {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0.5)]
        lambda: f64,
    },
    /// k-lens calculator: volume, radii, dual parameters
    Lens {
        /// ambient dimension
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// lens dimension k
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// lens radius d in [0,1]
        #[arg(long, default_value_t = 0.6)]
        d: f64,
        #[arg(long = "out")]
        out: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run verification suites and write JSONL reports
    Verify {
        /// Suite tag, or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trial-count multiplier
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
    /// Emit the Steiner counterexample report as JSON
    Counterexample {
        #[arg(long = "out")]
        out: Option<PathBuf>,
    },
    /// Render a planar body to SVG
    Render(Common),
}

/// 12 significant digits, locale-free.
fn sig12(x: f64) -> String {
    format!("{:.11e}", x)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                BbError::NonConvergence { .. } | BbError::QuadratureFailure { .. } => {
                    ExitCode::from(2)
                }
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn tolerances(over: Option<f64>) -> ToleranceProfile {
    let mut t = ToleranceProfile::default();
    if let Some(x) = over {
        t.geom_eps = x;
        t.solver_tol = x;
    }
    t
}

fn load_body(path: &Path) -> Result<BodyFile, BbError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn save(out: &Option<PathBuf>, contents: &str) -> Result<(), BbError> {
    if let Some(path) = out {
        std::fs::write(path, contents)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn one_input(common: &Common) -> Result<&PathBuf, BbError> {
    common
        .input
        .first()
        .ok_or_else(|| BbError::InvalidParameter("missing --in".into()))
}

fn points2(file: &BodyFile) -> Result<Vec<P2>, BbError> {
    match &file.kind {
        BodyKind::PointCloud { points, .. } => Ok(points.iter().map(|p| [p[0], p[1]]).collect()),
        _ => Err(BbError::InvalidParameter("expected a point cloud".into())),
    }
}

/// Planar arc-polygon view of a body file (dimension 2 only).
fn planar_body(file: &BodyFile) -> Result<ArcPolygon, BbError> {
    if file.dim != 2 {
        return Err(BbError::DimensionMismatch {
            expected: 2,
            got: file.dim,
        });
    }
    match &file.kind {
        BodyKind::PointCloud { points, .. } => {
            spindle_hull(&points.iter().map(|p| [p[0], p[1]]).collect::<Vec<_>>())
        }
        BodyKind::BallIntersection { balls } => {
            let disks: Vec<(P2, f64)> = balls
                .iter()
                .map(|b| ([b.center[0], b.center[1]], b.radius))
                .collect();
            intersect_disks(&disks)?.ok_or(BbError::EmptyBody)
        }
        BodyKind::SupportSamples { .. } => Err(BbError::InvalidParameter(
            "support-sample bodies have no exact planar form".into(),
        )),
    }
}

fn run(cli: Cli) -> Result<(), BbError> {
    match cli.command {
        Command::Hull(common) => hull_cmd(&common),
        Command::Dual(common) => dual_cmd(&common),
        Command::Volume(common) => volume_cmd(&common),
        Command::Radii(common) => radii_cmd(&common),
        Command::Diameter(common) => diameter_cmd(&common),
        Command::Steiner {
            common,
            direction,
            fibers,
            t_min,
            t_max,
            t_steps,
        } => steiner_cmd(&common, &direction, fibers, t_min, t_max, t_steps),
        Command::Minkowski { common, lambda } => minkowski_cmd(&common, lambda),
        Command::Lens { dim, k, d, out, tol } => lens_cmd(dim, k, d, &out, tol),
        Command::Verify {
            suite,
            seed,
            scale,
            out,
        } => verify_cmd(&suite, seed, scale, &out),
        Command::Counterexample { out } => {
            let rep = ballbody::symwidth::r3_counterexample();
            let json = serde_json::to_string_pretty(&rep)?;
            println!("psi_at_mean  {}", sig12(rep.psi_at_mean));
            println!("psi_average  {}", sig12(rep.psi_average));
            println!("kappa_h      {}", sig12(rep.kappa_h));
            println!("in_class     {}", rep.in_class);
            save(&out, &json)?;
            Ok(())
        }
        Command::Render(common) => {
            let file = load_body(one_input(&common)?)?;
            let body = planar_body(&file)?;
            let rendered = svg::render_body(&body);
            match &common.out {
                Some(_) => save(&common.out, &rendered)?,
                None => println!("{rendered}"),
            }
            Ok(())
        }
    }
}

fn hull_cmd(common: &Common) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    let file = load_body(one_input(common)?)?;
    if file.dim == 2 {
        let pts = points2(&file)?;
        let hull = spindle_hull(&pts)?;
        let merged = hull.merged();
        let (oc, orad) = merged.outball();
        let (_, inrad) = merged.inball();
        println!("area      {}", sig12(merged.area()));
        println!("perimeter {}", sig12(merged.perimeter()));
        println!("diameter  {}", sig12(merged.diameter()));
        println!("outradius {}", sig12(orad));
        println!("inradius  {}", sig12(inrad));
        let mut out_file = if merged.is_point() || merged.is_disk() {
            // degenerate hulls round-trip through their defining data
            BodyFile::from_points(pts.iter().map(|p| p.to_vec()).collect())
        } else {
            BodyFile {
                dim: 2,
                kind: BodyKind::BallIntersection {
                    balls: merged
                        .arc_specs()
                        .iter()
                        .map(|a| ballbody::body::schema::BallEntry {
                            center: a.center.to_vec(),
                            radius: a.radius,
                        })
                        .collect(),
                },
                meta: None,
            }
        };
        out_file.meta = Some(serde_json::json!({
            "area": merged.area(),
            "perimeter": merged.perimeter(),
            "diameter": merged.diameter(),
            "outradius": orad,
            "outcenter": oc,
            "inradius": inrad,
            "vertices": merged.vertices(),
        }));
        save(&common.out, &serde_json::to_string_pretty(&out_file)?)?;
        return Ok(());
    }
    // n ≥ 3: grid view of the hull
    let points = match &file.kind {
        BodyKind::PointCloud { points, .. } => points.clone(),
        _ => return Err(BbError::InvalidParameter("expected a point cloud".into())),
    };
    let grid = Arc::new(fibonacci_grid(file.dim, common.grid)?);
    let view = ballbody::body::hull_view(&points, &grid, &t)?;
    let diam = view.body.diameter();
    println!("outradius {}", sig12(view.outball.radius));
    println!(
        "diameter  {} (mesh error {})",
        sig12(diam.grid_value),
        sig12(diam.mesh_error)
    );
    let mut out_file = BodyFile::from_support_samples(&view.body);
    out_file.meta = Some(serde_json::json!({
        "outradius": view.outball.radius,
        "outcenter": view.outball.center,
        "diameter_grid": diam.grid_value,
        "diameter_mesh_error": diam.mesh_error,
    }));
    save(&common.out, &serde_json::to_string_pretty(&out_file)?)?;
    Ok(())
}

fn dual_cmd(common: &Common) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    let file = load_body(one_input(common)?)?;
    match &file.kind {
        BodyKind::PointCloud { points, .. } => {
            let body = BallIntersectionBody::c_dual_of_points(points, &t)?;
            match body {
                Some(b) => {
                    let mut out = BodyFile::from_ball_intersection(&b);
                    out.meta = Some(serde_json::json!({"empty": false}));
                    println!(
                        "dual: nonempty ball intersection ({} balls)",
                        b.balls().len()
                    );
                    save(&common.out, &serde_json::to_string_pretty(&out)?)?;
                }
                None => {
                    let out = serde_json::json!({
                        "dim": file.dim,
                        "kind": "ball_intersection",
                        "balls": points
                            .iter()
                            .map(|p| serde_json::json!({"center": p, "radius": 1.0}))
                            .collect::<Vec<_>>(),
                        "meta": {"empty": true},
                    });
                    println!("dual: empty (out-radius above 1)");
                    save(&common.out, &serde_json::to_string_pretty(&out)?)?;
                }
            }
        }
        BodyKind::BallIntersection { balls } => {
            if file.dim == 2 && balls.iter().all(|b| (b.radius - 1.0).abs() < 1e-9) {
                // exact planar dual by the vertex swap
                let body = planar_body(&file)?;
                let dual = body.c_dual()?;
                println!("dual area {}", sig12(dual.area()));
                let out = planar_to_file(&dual)?;
                save(&common.out, &serde_json::to_string_pretty(&out)?)?;
            } else {
                let body = file.to_ball_intersection(&t)?.ok_or(BbError::EmptyBody)?;
                let grid = Arc::new(fibonacci_grid(file.dim, common.grid)?);
                let dual = body.sample_support(&grid, &t)?.c_dual()?;
                println!("dual mean width {}", sig12(dual.mean_width()));
                save(
                    &common.out,
                    &serde_json::to_string_pretty(&BodyFile::from_support_samples(&dual))?,
                )?;
            }
        }
        BodyKind::SupportSamples { .. } => {
            let body = file.to_support_samples()?;
            let dual = body.c_dual()?;
            println!("dual mean width {}", sig12(dual.mean_width()));
            save(
                &common.out,
                &serde_json::to_string_pretty(&BodyFile::from_support_samples(&dual))?,
            )?;
        }
    }
    Ok(())
}

fn planar_to_file(body: &ArcPolygon) -> Result<BodyFile, BbError> {
    if let Some(p) = body.as_point() {
        return Ok(BodyFile::from_points(vec![p.to_vec()]));
    }
    if let Some((c, r)) = body.as_disk() {
        return Ok(BodyFile {
            dim: 2,
            kind: BodyKind::BallIntersection {
                balls: vec![ballbody::body::schema::BallEntry {
                    center: c.to_vec(),
                    radius: r,
                }],
            },
            meta: None,
        });
    }
    let merged = body.merged();
    Ok(BodyFile {
        dim: 2,
        kind: BodyKind::BallIntersection {
            balls: merged
                .arc_specs()
                .iter()
                .map(|a| ballbody::body::schema::BallEntry {
                    center: a.center.to_vec(),
                    radius: a.radius,
                })
                .collect(),
        },
        meta: Some(serde_json::json!({"area": merged.area()})),
    })
}

fn volume_cmd(common: &Common) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    let file = load_body(one_input(common)?)?;
    if file.dim == 2 {
        if let Ok(body) = planar_body(&file) {
            println!("area {}", sig12(body.area()));
            return Ok(());
        }
    }
    let body = file.to_ball_intersection(&t)?.ok_or(BbError::EmptyBody)?;
    let bound = body.bounding_ball()?;
    let mut rng = SeededRng::new(common.seed, 0);
    let (vol, se) = mc_volume(
        |p| body.contains(p, 0.0) != Location::Outside,
        &bound,
        common.samples,
        &mut rng,
    )?;
    println!("volume {}", sig12(vol));
    println!("stderr {}", sig12(se));
    Ok(())
}

fn radii_cmd(common: &Common) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    let file = load_body(one_input(common)?)?;
    if file.dim == 2 {
        let body = planar_body(&file)?;
        let (_, orad) = body.outball();
        let (_, inrad) = body.inball();
        println!("outradius {}", sig12(orad));
        println!("inradius  {}", sig12(inrad));
        return Ok(());
    }
    let body = file.to_ball_intersection(&t)?.ok_or(BbError::EmptyBody)?;
    let grid = fibonacci_grid(file.dim, common.grid)?;
    let samples = body.boundary_samples(&grid, &t)?;
    let meb = ballbody::meb::min_enclosing_ball(&samples)?;
    println!("outradius {} (boundary-sample estimate)", sig12(meb.radius));
    println!(
        "dual inradius {}",
        sig12(ballbody::meb::dual_inradius(meb.radius.min(1.0))?)
    );
    Ok(())
}

fn diameter_cmd(common: &Common) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    let file = load_body(one_input(common)?)?;
    if file.dim == 2 {
        if let Ok(body) = planar_body(&file) {
            println!("diameter {}", sig12(body.diameter()));
            return Ok(());
        }
    }
    let sampled = match &file.kind {
        BodyKind::SupportSamples { .. } => file.to_support_samples()?,
        _ => {
            let body = file.to_ball_intersection(&t)?.ok_or(BbError::EmptyBody)?;
            let grid = Arc::new(fibonacci_grid(file.dim, common.grid)?);
            body.sample_support(&grid, &t)?
        }
    };
    let d = sampled.diameter();
    println!(
        "diameter {} (mesh error {})",
        sig12(d.grid_value),
        sig12(d.mesh_error)
    );
    Ok(())
}

fn parse_direction(s: &str) -> Result<Vec<f64>, BbError> {
    let parts: Result<Vec<f64>, _> = s.split(',').map(|p| p.trim().parse::<f64>()).collect();
    parts.map_err(|_| BbError::InvalidParameter(format!("bad direction '{s}'")))
}

fn steiner_cmd(
    common: &Common,
    direction: &str,
    fibers: usize,
    t_min: f64,
    t_max: f64,
    t_steps: Option<usize>,
) -> Result<(), BbError> {
    let file = load_body(one_input(common)?)?;
    let dir = parse_direction(direction)?;
    if let Some(steps) = t_steps {
        // shadow-system sweep: points + velocities from the cloud
        let (points, velocities) = match &file.kind {
            BodyKind::PointCloud { points, velocities } => {
                let v = velocities
                    .clone()
                    .unwrap_or_else(|| vec![1.0; points.len()]);
                (points.clone(), v)
            }
            _ => {
                return Err(BbError::InvalidParameter(
                    "shadow sweeps need a point cloud with velocities".into(),
                ))
            }
        };
        if file.dim != 2 {
            return Err(BbError::InvalidParameter("shadow sweeps are planar".into()));
        }
        let pts: Vec<P2> = points.iter().map(|p| [p[0], p[1]]).collect();
        let ts: Vec<f64> = (0..=steps)
            .map(|i| t_min + (t_max - t_min) * i as f64 / steps.max(1) as f64)
            .collect();
        let rows = ballbody::planar::shadow_system_2d(&pts, &velocities, [dir[0], dir[1]], &ts)?;
        let mut csv = String::from("t,area,dual_area\n");
        for r in &rows {
            csv.push_str(&format!(
                "{},{},{}\n",
                sig12(r.t),
                sig12(r.area),
                sig12(r.dual_area)
            ));
        }
        match &common.out {
            Some(_) => save(&common.out, &csv)?,
            None => print!("{csv}"),
        }
        return Ok(());
    }
    if file.dim != 2 {
        return Err(BbError::InvalidParameter(
            "direct symmetrization output is planar; use the library for nD".into(),
        ));
    }
    let body = planar_body(&file)?;
    let s = steiner_2d(&body, [dir[0], dir[1]], fibers)?;
    println!("area preserved {} -> {}", sig12(s.input_area), sig12(s.area));
    println!("min curvature  {}", sig12(s.min_curvature));
    let mut scene = svg::Scene::new();
    scene.add_body(&body, "fill=\"none\" stroke=\"#9ca3af\" stroke-width=\"1\"");
    scene.add_sampled(&s, "fill=\"#dbeafe\" stroke=\"#1d4ed8\" stroke-width=\"1.5\"");
    save(&common.out, &scene.render())?;
    Ok(())
}

fn minkowski_cmd(common: &Common, lambda: f64) -> Result<(), BbError> {
    let t = tolerances(common.tol);
    if common.input.len() != 2 {
        return Err(BbError::InvalidParameter(
            "minkowski needs two --in bodies".into(),
        ));
    }
    let a = load_body(&common.input[0])?;
    let b = load_body(&common.input[1])?;
    if a.dim != b.dim {
        return Err(BbError::DimensionMismatch {
            expected: a.dim,
            got: b.dim,
        });
    }
    let grid = Arc::new(fibonacci_grid(a.dim, common.grid)?);
    let to_sampled = |f: &BodyFile| -> Result<SupportSampledBody, BbError> {
        match &f.kind {
            BodyKind::SupportSamples { .. } => f.to_support_samples(),
            _ => f
                .to_ball_intersection(&t)?
                .ok_or(BbError::EmptyBody)?
                .sample_support(&grid, &t),
        }
    };
    let ka = to_sampled(&a)?;
    let kb = to_sampled(&b)?;
    if !ballbody::body::same_grid(&ka, &kb) {
        return Err(BbError::GridMismatch);
    }
    let combined = ka.minkowski_combine(&kb, lambda)?;
    println!("mean width {}", sig12(combined.mean_width()));
    save(
        &common.out,
        &serde_json::to_string_pretty(&BodyFile::from_support_samples(&combined))?,
    )?;
    Ok(())
}

fn lens_cmd(
    dim: usize,
    k: usize,
    d: f64,
    out: &Option<PathBuf>,
    tol: Option<f64>,
) -> Result<(), BbError> {
    let t = tolerances(tol);
    let vol = ballbody::lens::klens_volume(dim, k, d, &t)?;
    let basis: Vec<Vec<f64>> = (0..k)
        .map(|i| {
            let mut e = vec![0.0; dim];
            e[i] = 1.0;
            e
        })
        .collect();
    let lens = ballbody::lens::KLens::new(vec![0.0; dim], basis, d)?;
    let (orad, inrad) = ballbody::lens::klens_radii(&lens);
    let dual = ballbody::lens::klens_dual(&lens)?;
    println!("volume    {}", sig12(vol.value));
    println!("quaderr   {}", sig12(vol.error_estimate));
    println!("outradius {}", sig12(orad));
    println!("inradius  {}", sig12(inrad));
    println!("dual      L_{}(d = {})", dim - k, sig12(dual.d));
    if out.is_some() {
        let json = serde_json::json!({
            "dim": dim, "k": k, "d": d,
            "volume": vol.value,
            "quadrature_error": vol.error_estimate,
            "outradius": orad,
            "inradius": inrad,
            "dual_k": dim - k,
            "dual_d": dual.d,
        });
        save(out, &serde_json::to_string_pretty(&json)?)?;
    }
    Ok(())
}

fn verify_cmd(suite: &str, seed: u64, scale: f64, out: &Option<PathBuf>) -> Result<(), BbError> {
    let cfg = SuiteConfig {
        seed,
        scale,
        tol: ToleranceProfile::default(),
    };
    let tags: Vec<&str> = if suite == "all" {
        registry().iter().map(|(t, _)| *t).collect()
    } else {
        vec![suite]
    };
    let mut lines = Vec::new();
    let mut failures = 0usize;
    println!(
        "{:<28} {:>8} {:>13} {:>9}  status",
        "suite", "n", "margin", "tol"
    );
    for tag in tags {
        let rep = run_suite(tag, &cfg)?;
        println!(
            "{:<28} {:>8} {:>13.3e} {:>9.1e}  {}{}",
            rep.tag,
            rep.instances,
            rep.worst_margin,
            rep.tolerance,
            if rep.pass { "pass" } else { "FAIL" },
            rep.note
                .as_deref()
                .map(|n| format!(" ({n})"))
                .unwrap_or_default()
        );
        if !rep.pass {
            failures += 1;
        }
        lines.push(rep.to_jsonl());
    }
    save(out, &(lines.join("\n") + "\n"))?;
    if failures > 0 {
        return Err(BbError::Degenerate(format!("{failures} suite(s) failed")));
    }
    Ok(())
}
