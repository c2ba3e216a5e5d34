//! Cyclic A∞ data: axioms, choice independence of weights, and cycles.

use std::path::Path;

use num_traits::Zero;

use super::ribbon::{describe, feasible_types, label_multisets};
use super::{rng, Check, Report};
use crate::ainf::examples;
use crate::ainf::{build_cycle, check_ainf, cycle_boundary, cyclicity_check, weight, weight_with, Choices, CyclicAInf};
use crate::quiver::AdjacencyGraph;
use crate::ribbon::canonical::code_of;
use crate::ribbon::complex::ComplexParams;
use crate::ribbon::enumerate::EnumParams;

#[derive(Clone, Debug)]
pub struct CycleConfig {
    pub max_edges: usize,
    /// Random choices tried per graph.
    pub rechecks: usize,
    pub seed: u64,
}

impl Default for CycleConfig {
    fn default() -> Self {
        CycleConfig { max_edges: 6, rechecks: 50, seed: 0 }
    }
}

/// Complexes a data set lives on: `RG^{g,m}` for one object, otherwise
/// every labeled complex over its adjacency graph.
pub fn cycle_params(data: &CyclicAInf, max_edges: usize) -> Vec<ComplexParams> {
    let mut out = Vec::new();
    for (g, m) in feasible_types(max_edges, 3) {
        if data.objects().len() == 1 {
            out.push(ComplexParams::unlabeled(g, m, 3, max_edges));
            continue;
        }
        let adj = data.adjacency();
        for x in label_multisets(adj.num_vertices(), m) {
            out.push(ComplexParams::labeled(EnumParams::new(g, m, 3, max_edges), adj.clone(), x));
        }
    }
    out
}

fn renamed(mut c: Check, prefix: &str) -> Check {
    c.name = format!("{prefix}/{}", c.name);
    c
}

/// Axioms of one data set, then `∂ Σ W(Γ)/|Aut Γ| Γ = 0` and choice independence
/// on every complex of `cycle_params`.
pub fn data_suite(name: &str, data: &CyclicAInf, cfg: &CycleConfig, cache: Option<&Path>) -> Report {
    let mut report = Report::new(&format!("ainf-{name}"));
    let n_max = data.arities().iter().max().map_or(3, |a| (a + 1).max(3));
    report.checks.push(renamed(check_ainf(data, n_max), name));
    report.checks.push(renamed(cyclicity_check(data), name));
    let mut boundary = Check::new(&format!("{name}/cycle-boundary-zero"));
    let mut choices = Check::new(&format!("{name}/weight-choice-invariance"));
    let (mut graphs, mut nonzero) = (0, 0);
    for (i, p) in cycle_params(data, cfg.max_edges).iter().enumerate() {
        let cycle = match build_cycle(p, data, cache) {
            Ok(c) => c,
            Err(e) => {
                boundary.record(false, || format!("{}: {e}", describe(p)));
                continue;
            }
        };
        for (k, v) in cycle_boundary(&cycle) {
            boundary.record(v.iter().all(Zero::is_zero), || {
                let bad = v.iter().filter(|x| !x.is_zero()).count();
                format!("{}: boundary has {bad} nonzero entries in degree {k}", describe(p))
            });
        }
        let mut r = rng(cfg.seed.wrapping_add(i as u64));
        for (k, basis) in &cycle.complex.bases {
            for (j, g) in basis.iter().enumerate() {
                graphs += 1;
                if !cycle.coefficients[k][j].is_zero() {
                    nonzero += 1;
                }
                let w = weight(g, data).expect("computed once already");
                for _ in 0..cfg.rechecks {
                    let ch = Choices::random(g, &mut r);
                    let got = weight_with(g, data, &ch);
                    choices.record(got.as_ref().ok() == Some(&w), || {
                        format!("{} graph {}: weight {w}, with {ch:?} got {got:?}", describe(p), g.display())
                    });
                }
            }
        }
    }
    report.notes.push(format!("{name}: {nonzero} of {graphs} graphs have nonzero weight"));
    report.checks.push(boundary);
    report.checks.push(choices);
    report
}

/// One-object data over the graph with one vertex and a loop: the labeled
/// complex is `RG^{g,m}` and the weights are the unlabeled ones.
pub fn one_object_agreement(data: &CyclicAInf, max_edges: usize) -> Check {
    let mut c = Check::new("one-object-labels-agree");
    let loop_graph = AdjacencyGraph::new(1, &[(0, 0)]);
    for (g, m) in feasible_types(max_edges, 3) {
        let plain = ComplexParams::unlabeled(g, m, 3, max_edges);
        let labeled = ComplexParams::labeled(EnumParams::new(g, m, 3, max_edges), loop_graph.clone(), vec![0; m]);
        let (a, b) = match (build_cycle(&plain, data, None), build_cycle(&labeled, data, None)) {
            (Ok(a), Ok(b)) => (a, b),
            (a, b) => {
                c.record(false, || format!("g={g} m={m}: {:?} / {:?}", a.err(), b.err()));
                continue;
            }
        };
        let codes = |x: &crate::ainf::Cycle| -> Vec<_> {
            x.complex.bases.iter().flat_map(|(k, gs)| gs.iter().zip(&x.coefficients[k]).map(|(g, w)| (code_of(g), w.clone()))).collect()
        };
        let (ca, cb) = (codes(&a), codes(&b));
        c.record(ca == cb, || format!("g={g} m={m}: labeled and unlabeled chains differ"));
    }
    c
}

/// Everything: each example data set, the agreement check, and the two
/// broken data sets being rejected.
pub fn ainf_suite(cfg: &CycleConfig, cache: Option<&Path>) -> Report {
    let mut report = Report::new("ainf");
    for (name, data) in examples::all() {
        report.merge(data_suite(name, &data, cfg, cache));
    }
    report.checks.push(one_object_agreement(&examples::ground_field(), cfg.max_edges));
    let mut broken = Check::new("broken-data-rejected");
    broken.record(!check_ainf(&examples::nonassociative(), 3).passed(), || "nonassociative data passed".into());
    broken.record(!cyclicity_check(&examples::noninvariant()).passed(), || "noninvariant data passed".into());
    report.checks.push(broken);
    report
}
