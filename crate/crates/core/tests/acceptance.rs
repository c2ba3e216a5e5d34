use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use nlab_core::ainf::examples;
use nlab_core::matrix_rep::DimVec;
use nlab_core::verify::ainf::{ainf_suite, data_suite, CycleConfig};
use nlab_core::verify::diagram::{diagram_suite, worked_value_check};
use nlab_core::verify::hopf::{hopf_suite, limits_suite, SweepConfig};
use nlab_core::verify::lie::{lie_suite, LieConfig};
use nlab_core::verify::ribbon::{cochain_suite, complex_suite, polygon_suite, CochainConfig};
use nlab_core::verify::{standard_quivers, Check, Report};

fn sweep() -> SweepConfig {
    SweepConfig { max_len: 4, with_idempotent: true, random_cases: 200, random_max_len: 6, seed: 0 }
}

/// Checks that may legitimately see no cases: data without products has
/// nothing to rotate.
const MAY_BE_EMPTY: &[&str] = &["single-edge/cyclicity", "single-edge-category/cyclicity"];

/// A criterion passes when every check passes and none of them is vacuous.
fn verdict(n: usize, title: &str, reports: &[Report]) -> bool {
    let checks: Vec<&Check> = reports.iter().flat_map(|r| &r.checks).collect();
    let empty: Vec<&str> =
        checks.iter().filter(|c| c.cases == 0 && !MAY_BE_EMPTY.contains(&c.name.as_str())).map(|c| c.name.as_str()).collect();
    let ok = reports.iter().all(Report::passed) && empty.is_empty() && !checks.is_empty();
    let cases: usize = checks.iter().map(|c| c.cases).sum();
    println!("{} criterion {n}: {title} ({} checks, {cases} cases)", if ok { "PASS" } else { "FAIL" }, checks.len());
    if !ok {
        for r in reports {
            print!("{r}");
        }
        if !empty.is_empty() {
            println!("  checks without cases: {}", empty.join(", "));
        }
    }
    ok
}

fn per_quiver(f: impl Fn(&nlab_core::quiver::Quiver) -> Report) -> Vec<Report> {
    standard_quivers()
        .into_iter()
        .map(|(name, q)| {
            let mut r = f(&q);
            r.suite = format!("{} [{name}]", r.suite);
            r
        })
        .collect()
}

fn main() -> ExitCode {
    let cache_dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("nlab-acceptance-cache");
    let cache = Some(cache_dir.as_path());
    let mut all = true;
    let mut run = |n: usize, title: &str, reports: &dyn Fn() -> Vec<Report>| {
        let t = Instant::now();
        let r = reports();
        all &= verdict(n, title, &r);
        eprintln!("  criterion {n} took {:.1?}", t.elapsed());
    };

    run(1, "Hopf axioms, total length <= 4 plus 200 random cases of length <= 6", &|| {
        per_quiver(|q| hopf_suite(q, &sweep()))
    });
    run(2, "classical limits on the same sweep", &|| per_quiver(|q| limits_suite(q, &sweep())));
    run(3, "trace map against the Moyal and Weyl oracles, l in {1, 2}, length <= 4", &|| {
        let mut out = per_quiver(|q| {
            let dims: Vec<DimVec> = ["1", "2"].iter().map(|s| DimVec::parse(q, s).expect("dimension vector")).collect();
            diagram_suite(q, 4, &dims)
        });
        let (_, one_loop) = standard_quivers().into_iter().next().expect("one-loop quiver");
        let mut worked = Report::new("worked-value");
        worked.checks.push(worked_value_check(&one_loop));
        out.push(worked);
        out
    });
    run(4, "Lie bialgebra axioms on necklaces of length <= 6", &|| {
        per_quiver(|q| lie_suite(q, &LieConfig { max_len: 6, max_total: 8, random_cases: 200, seed: 0 }))
    });
    let t = Instant::now();
    let ribbon = complex_suite(7, cache);
    eprintln!("  ribbon complexes built in {:.1?}", t.elapsed());
    run(5, "ribbon complexes with at most 7 edges", &|| {
        let mut r = ribbon.clone();
        r.checks.retain(|c| c.name != "euler-characteristic");
        vec![r]
    });
    run(6, "polygon homology in degrees 3 mod 4 up to 12 edges, Euler characteristics", &|| {
        let mut polygons = polygon_suite(12);
        polygons.checks.extend(ribbon.checks.iter().filter(|c| c.name == "euler-characteristic").cloned());
        vec![polygons]
    });
    run(7, "A-infinity cycles with at most 6 edges, 50 rechecks per graph", &|| {
        let cfg = CycleConfig { max_edges: 6, rechecks: 50, seed: 0 };
        vec![
            data_suite("dual-numbers", &examples::dual_numbers(), &cfg, cache),
            data_suite("single-edge", &examples::single_edge_category(), &cfg, cache),
            ainf_suite(&cfg, cache),
        ]
    });
    run(8, "graph cochains commute with the differentials and are invariant, N <= 3", &|| {
        per_quiver(|q| cochain_suite(q, &CochainConfig::default()))
    });

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
