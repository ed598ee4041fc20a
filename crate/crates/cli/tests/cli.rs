//! End-to-end runs of the binary: golden values, round trips, exit codes,
//! and byte determinism.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ballbody"))
}

fn write_tmp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

fn grab(stdout: &str, key: &str) -> f64 {
    stdout
        .lines()
        .find(|l| l.starts_with(key))
        .unwrap_or_else(|| panic!("no line starting with {key} in:\n{stdout}"))
        .split_whitespace()
        .last()
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn hull_of_a_self_dual_lens_reports_its_area() {
    let dir = tempfile::tempdir().unwrap();
    let h = std::f64::consts::SQRT_2 / 2.0;
    let input = write_tmp(
        &dir,
        "points.json",
        &format!(r#"{{"dim":2,"kind":"point_cloud","points":[[{},0.0],[{},0.0]]}}"#, -h, h),
    );
    let out = dir.path().join("hull.json");
    let res = bin()
        .args(["hull", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let stdout = String::from_utf8(res.stdout).unwrap();
    let area = grab(&stdout, "area");
    assert!((area - (std::f64::consts::PI / 2.0 - 1.0)).abs() < 1e-9);
    // the output file carries the area in its metadata
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let meta_area = parsed["meta"]["area"].as_f64().unwrap();
    assert!((meta_area - (std::f64::consts::PI / 2.0 - 1.0)).abs() < 1e-9);
}

#[test]
fn dual_round_trip_is_close_on_support_values() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(
        &dir,
        "body.json",
        r#"{"dim":2,"kind":"ball_intersection","balls":[
            {"center":[0.5,0.0],"radius":1.0},
            {"center":[-0.4,0.2],"radius":1.0},
            {"center":[0.0,-0.45],"radius":1.0}]}"#,
    );
    let dual = dir.path().join("dual.json");
    let back = dir.path().join("back.json");
    assert!(bin()
        .args(["dual", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&dual)
        .status()
        .unwrap()
        .success());
    assert!(bin()
        .args(["dual", "--in"])
        .arg(&dual)
        .arg("--out")
        .arg(&back)
        .status()
        .unwrap()
        .success());
    // the double dual returns the original ball intersection
    let orig: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&input).unwrap()).unwrap();
    let rt: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&back).unwrap()).unwrap();
    let centers = |v: &serde_json::Value| -> Vec<(f64, f64)> {
        let mut c: Vec<(f64, f64)> = v["balls"]
            .as_array()
            .unwrap()
            .iter()
            .map(|b| {
                (
                    b["center"][0].as_f64().unwrap(),
                    b["center"][1].as_f64().unwrap(),
                )
            })
            .collect();
        c.sort_by(|a, b| a.partial_cmp(b).unwrap());
        c
    };
    for (a, b) in centers(&orig).iter().zip(centers(&rt)) {
        assert!((a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    }
}

#[test]
fn volume_of_the_unit_disk() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(
        &dir,
        "disk.json",
        r#"{"dim":2,"kind":"ball_intersection","balls":[{"center":[0.0,0.0],"radius":1.0}]}"#,
    );
    let res = bin().args(["volume", "--in"]).arg(&input).output().unwrap();
    assert!(res.status.success());
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!((grab(&stdout, "area") - std::f64::consts::PI).abs() < 1e-9);
}

#[test]
fn lens_golden_values() {
    let res = bin()
        .args(["lens", "--dim", "2", "--k", "1", "--d", "0.7071067811865476"])
        .output()
        .unwrap();
    assert!(res.status.success());
    let stdout = String::from_utf8(res.stdout).unwrap();
    assert!((grab(&stdout, "volume") - (std::f64::consts::PI / 2.0 - 1.0)).abs() < 1e-8);
    assert!((grab(&stdout, "outradius") - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
}

#[test]
fn counterexample_reports_the_golden_constants() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ce.json");
    let res = bin()
        .args(["counterexample", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success());
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!((parsed["psi_at_mean"].as_f64().unwrap() - 6.313).abs() <= 0.01);
    assert!((parsed["psi_average"].as_f64().unwrap() - 5.9545).abs() <= 0.01);
    assert!(parsed["kappa_h"].as_f64().unwrap() < 1.0);
}

#[test]
fn verify_single_suite_writes_jsonl() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.jsonl");
    let res = bin()
        .args(["verify", "--suite", "mahler-plane", "--seed", "0", "--out"])
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let line = std::fs::read_to_string(&out).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    assert_eq!(parsed["tag"], "mahler-plane");
    assert_eq!(parsed["pass"], true);
}

#[test]
fn render_reuleaux_svg_with_three_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let r = 1.0 / 3.0f64.sqrt();
    let input = write_tmp(
        &dir,
        "tri.json",
        &format!(
            r#"{{"dim":2,"kind":"point_cloud","points":[[{r},0.0],[{},0.5],[{},-0.5]]}}"#,
            -r / 2.0,
            -r / 2.0
        ),
    );
    let out = dir.path().join("tri.svg");
    assert!(bin()
        .args(["render", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap()
        .success());
    let svg1 = std::fs::read_to_string(&out).unwrap();
    assert_eq!(svg1.matches('A').count(), 3);
    // byte determinism across runs
    assert!(bin()
        .args(["render", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap()
        .success());
    assert_eq!(svg1, std::fs::read_to_string(&out).unwrap());
}

#[test]
fn render_rejects_higher_dimensions_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(
        &dir,
        "b3.json",
        r#"{"dim":3,"kind":"point_cloud","points":[[0.0,0.0,0.0]]}"#,
    );
    let res = bin().args(["render", "--in"]).arg(&input).output().unwrap();
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn shadow_sweep_emits_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_tmp(
        &dir,
        "sys.json",
        r#"{"dim":2,"kind":"point_cloud","points":[[0.0,-0.1],[0.0,0.1]],"velocities":[-1.0,1.0]}"#,
    );
    let out = dir.path().join("sweep.csv");
    let res = bin()
        .args([
            "steiner",
            "--direction",
            "0,1",
            "--t-min",
            "0",
            "--t-max",
            "0.4",
            "--t-steps",
            "4",
            "--in",
        ])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let csv = std::fs::read_to_string(&out).unwrap();
    assert!(csv.starts_with("t,area,dual_area\n"));
    assert_eq!(csv.lines().count(), 6);
    // identical argv and files give identical bytes
    let rerun = bin()
        .args([
            "steiner",
            "--direction",
            "0,1",
            "--t-min",
            "0",
            "--t-max",
            "0.4",
            "--t-steps",
            "4",
            "--in",
        ])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(rerun.status.success());
    assert_eq!(csv, std::fs::read_to_string(&out).unwrap());
}

#[test]
fn steiner_symmetral_svg_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let r = 1.0 / 3.0f64.sqrt();
    let input = write_tmp(
        &dir,
        "tri.json",
        &format!(
            r#"{{"dim":2,"kind":"point_cloud","points":[[{r},0.0],[{},0.5],[{},-0.5]]}}"#,
            -r / 2.0,
            -r / 2.0
        ),
    );
    let out = dir.path().join("sym.svg");
    let res = bin()
        .args(["steiner", "--direction", "0,1", "--fibers", "512", "--in"])
        .arg(&input)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let stdout = String::from_utf8(res.stdout).unwrap();
    let kappa = grab(&stdout, "min curvature");
    assert!(kappa >= 1.0 - 1e-6);
    assert!(std::fs::read_to_string(&out).unwrap().starts_with("<svg"));
}
