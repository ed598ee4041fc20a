use ballbody::verify::*;

fn main() {
    let scale: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.2);
    let cfg = SuiteConfig { seed: 0, scale, tol: Default::default() };
    let mut failures = 0;
    for (tag, _) in registry() {
        let t0 = std::time::Instant::now();
        match run_suite(tag, &cfg) {
            Ok(rep) => {
                let status = if rep.pass { "pass" } else { { failures += 1; "FAIL" } };
                println!("{status} {tag:28} margin {:+.3e} tol {:.1e} n={} ({:?})",
                    rep.worst_margin, rep.tolerance, rep.instances, t0.elapsed());
            }
            Err(e) => {
                failures += 1;
                println!("ERR  {tag:28} {e} ({:?})", t0.elapsed());
            }
        }
    }
    std::process::exit(if failures > 0 { 1 } else { 0 });
}
