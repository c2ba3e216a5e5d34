use std::path::PathBuf;

use clap::{Args, ValueEnum};
use nlab_core::matrix_rep::DimVec;
use nlab_core::necklace::{parse_element, parse_necklace, Element, Necklace};
use nlab_core::quiver::Quiver;
use nlab_core::verify::ainf::{ainf_suite, CycleConfig};
use nlab_core::verify::diagram::{algebra_map_case, closure_case, diagram_suite, realized_product_case, trace_poisson_case};
use nlab_core::verify::hopf::{hopf_suite, limits_suite, single_case, SweepConfig};
use nlab_core::verify::lie::{
    action_case, antisymmetry_case, co_jacobi_case, cobracket_antisymmetry_case, cocycle_case, jacobi_case, lie_suite,
    LieConfig,
};
use nlab_core::verify::ribbon::{cochain_suite, complex_suite, polygon_suite, CochainConfig};
use nlab_core::verify::{standard_quivers, Check, Report};

use crate::{print_reports, Format, Global, Outcome};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    Limits,
    Diagram,
    Lie,
    Ribbon,
    Polygon,
    Cochain,
    Ainf,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,
    /// Quiver file; the standard quivers are used when omitted.
    #[arg(short, long)]
    pub quiver: Option<PathBuf>,
    /// Exhaustive bound on total necklace length.
    #[arg(long, default_value_t = 4)]
    pub max_len: usize,
    /// Edge bound for the ribbon suites (defaults: ribbon 7, polygon 12,
    /// cochain 3, ainf 6).
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// Random cases on top of the exhaustive sweep.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Comma-separated dimension vectors for the diagram suite.
    #[arg(long, default_value = "1,2")]
    pub dims: String,
    /// Run a single case instead of the sweep (repeat for several
    /// arguments).
    #[arg(long = "case")]
    pub cases: Vec<String>,
    #[arg(short, long)]
    pub lhs: Option<String>,
    #[arg(short, long)]
    pub rhs: Option<String>,
}

fn quivers(a: &VerifyArgs) -> Result<Vec<(String, Quiver)>, String> {
    match &a.quiver {
        Some(p) => Ok(vec![(p.display().to_string(), crate::load_quiver(&a.quiver)?)]),
        None => Ok(standard_quivers().into_iter().map(|(n, q)| (n.to_string(), q)).collect()),
    }
}

fn one_quiver(a: &VerifyArgs) -> Result<(String, Quiver), String> {
    let mut qs = quivers(a)?;
    if a.quiver.is_none() {
        return Err("single cases need -q/--quiver".into());
    }
    Ok(qs.remove(0))
}

fn single(name: &str, ok: bool, describe: String) -> Check {
    let mut c = Check::new(name);
    c.record(ok, || describe);
    c
}

fn lie_case(q: &Quiver, args: &[String]) -> Result<Report, String> {
    let ns: Vec<Necklace> =
        args.iter().map(|s| parse_necklace(q, s).map_err(|e| format!("`{s}`: {e}"))).collect::<Result<_, _>>()?;
    let d = args.iter().map(|s| format!("--case \"{s}\"")).collect::<Vec<_>>().join(" ");
    let mut rep = Report::new("lie");
    match ns.as_slice() {
        [f] => {
            rep.checks.push(single("cobracket-antisymmetry", cobracket_antisymmetry_case(q, f), d.clone()));
            rep.checks.push(single("co-jacobi", co_jacobi_case(q, f), d));
        }
        [f, g] => {
            rep.checks.push(single("bracket-antisymmetry", antisymmetry_case(q, f, g), d.clone()));
            rep.checks.push(single("cocycle", cocycle_case(q, f, g), d.clone()));
            rep.checks.push(single("hamiltonian-action", action_case(q, f, g), d));
        }
        [f, g, k] => rep.checks.push(single("jacobi", jacobi_case(q, f, g, k), d)),
        _ => return Err("give one, two or three --case necklaces".into()),
    }
    Ok(rep)
}

fn diagram_case(q: &Quiver, a: &VerifyArgs, dims: &[DimVec]) -> Result<Report, String> {
    let parse = |s: &str| parse_element(q, s).map_err(|e| format!("`{s}`: {e}"));
    let p: Element = parse(a.lhs.as_deref().expect("checked"))?;
    let mut rep = Report::new("diagram");
    for l in dims {
        let tag = l.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":");
        match &a.rhs {
            Some(r) => {
                let r = parse(r)?;
                let d = format!("--dims {tag} -l \"{}\" -r \"{}\"", a.lhs.as_deref().unwrap_or(""), a.rhs.as_deref().unwrap_or(""));
                rep.checks.push(single(&format!("trace-algebra-map l={tag}"), algebra_map_case(q, &p, &r, l), d.clone()));
                rep.checks.push(single(&format!("trace-poisson l={tag}"), trace_poisson_case(q, &p, &r, l), d.clone()));
                rep.checks.push(single(&format!("realized-product l={tag}"), realized_product_case(q, &p, &r, l), d));
            }
            None => {
                let d = format!("--dims {tag} -l \"{}\"", a.lhs.as_deref().unwrap_or(""));
                rep.checks.push(single(&format!("height-average-closure l={tag}"), closure_case(q, &p, l), d));
            }
        }
    }
    Ok(rep)
}

pub fn verify(a: &VerifyArgs, g: &Global) -> Outcome {
    let cache = g.cache_dir.as_deref();
    let mut reports = Vec::new();
    let mut randomized = a.random > 0;
    match a.suite {
        Suite::Hopf | Suite::Limits => {
            let hopf = a.suite == Suite::Hopf;
            if !a.cases.is_empty() {
                let (_, q) = one_quiver(a)?;
                let els: Vec<Element> = a
                    .cases
                    .iter()
                    .map(|s| parse_element(&q, s).map_err(|e| format!("`{s}`: {e}")))
                    .collect::<Result<_, _>>()?;
                if els.is_empty() || els.len() > 3 {
                    return Err("give one, two or three --case elements".into());
                }
                reports.push(single_case(&q, &els, hopf));
            } else {
                let cfg = SweepConfig { max_len: a.max_len, random_cases: a.random, seed: g.seed, ..SweepConfig::default() };
                for (name, q) in quivers(a)? {
                    let mut r = if hopf { hopf_suite(&q, &cfg) } else { limits_suite(&q, &cfg) };
                    r.notes.insert(0, format!("quiver {name}"));
                    reports.push(r);
                }
            }
        }
        Suite::Lie => {
            if !a.cases.is_empty() {
                let (_, q) = one_quiver(a)?;
                reports.push(lie_case(&q, &a.cases)?);
            } else {
                let cfg = LieConfig { random_cases: a.random, seed: g.seed, ..LieConfig::exhaustive(a.max_len) };
                for (name, q) in quivers(a)? {
                    let mut r = lie_suite(&q, &cfg);
                    r.notes.insert(0, format!("quiver {name}"));
                    reports.push(r);
                }
            }
        }
        Suite::Diagram => {
            for (name, q) in quivers(a)? {
                let dims: Vec<DimVec> = a
                    .dims
                    .split(',')
                    .map(|s| DimVec::parse(&q, s.trim()).map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                let mut r = if a.lhs.is_some() {
                    if a.quiver.is_none() {
                        return Err("single cases need -q/--quiver".into());
                    }
                    diagram_case(&q, a, &dims)?
                } else {
                    diagram_suite(&q, a.max_len, &dims)
                };
                r.notes.insert(0, format!("quiver {name}"));
                reports.push(r);
            }
        }
        Suite::Ribbon => reports.push(complex_suite(a.max_edges.unwrap_or(7), cache)),
        Suite::Polygon => reports.push(polygon_suite(a.max_edges.unwrap_or(12))),
        Suite::Cochain => {
            randomized = true;
            let cfg = CochainConfig { max_edges: a.max_edges.unwrap_or(3), seed: g.seed, ..CochainConfig::default() };
            for (name, q) in quivers(a)? {
                let mut r = cochain_suite(&q, &cfg);
                r.notes.insert(0, format!("quiver {name}"));
                reports.push(r);
            }
        }
        Suite::Ainf => {
            randomized = true;
            let cfg = CycleConfig { max_edges: a.max_edges.unwrap_or(6), seed: g.seed, ..CycleConfig::default() };
            reports.push(ainf_suite(&cfg, cache));
        }
    }
    let ok = print_reports(&reports, g, randomized);
    if !ok && g.format == Format::Text {
        rerun_hints(a, &reports);
    }
    Ok(ok)
}

fn rerun_hints(a: &VerifyArgs, reports: &[Report]) {
    let suite = format!("{:?}", a.suite).to_lowercase();
    let q = a.quiver.as_ref().map(|p| format!(" -q {}", p.display())).unwrap_or_default();
    if !matches!(a.suite, Suite::Hopf | Suite::Limits | Suite::Lie | Suite::Diagram) {
        return;
    }
    for r in reports {
        for c in &r.checks {
            if let Some(f) = &c.failure {
                let q = if q.is_empty() {
                    r.notes.first().and_then(|n| n.strip_prefix("quiver ")).map(|n| format!(" -q <{n}.json>")).unwrap_or_default()
                } else {
                    q.clone()
                };
                println!("rerun: nlab verify {suite}{q} {f}");
            }
        }
    }
}
