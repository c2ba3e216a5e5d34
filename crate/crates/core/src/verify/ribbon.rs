//! Ribbon graph complexes, polygon homology, and the cochain map.

use std::collections::BTreeSet;
use std::path::Path;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{rng, Check, Report};
use crate::necklace::{necklaces_of_length, Necklace};
use crate::poly::Q;
use crate::quiver::{AdjacencyGraph, Letter, Quiver};
use crate::ribbon::canonical::{canonical_form, code_of};
use crate::ribbon::cochain::{action_defect, coboundary_terms, lie_differential, pairing_tuples, GraphCochain};
use crate::ribbon::complex::{build_complex, classes, ComplexParams};
use crate::ribbon::enumerate::{unlabeled_levels, EnumParams};
use crate::ribbon::examples::planar_two_vertex_four_edge;
use crate::ribbon::homology::{euler_characteristics, homology_ranks};
use crate::ribbon::orientable;
use crate::ribbon::RibbonGraph;

/// Feasible `(g, m)` whose lowest degree is at most `max_edges`.
pub fn feasible_types(max_edges: usize, min_valence: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for g in 0..=max_edges / 2 + 1 {
        for m in 1..=max_edges + 2 {
            let p = EnumParams::new(g, m, min_valence, max_edges);
            if p.check().is_ok() && p.min_edges() <= max_edges {
                out.push((g, m));
            }
        }
    }
    out
}

/// Sorted multisets of size `m` from `0..n`.
pub fn label_multisets(n: usize, m: usize) -> Vec<Vec<u32>> {
    fn rec(n: u32, m: usize, from: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            cur.push(v);
            rec(n, m, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, m, 0, &mut Vec::new(), &mut out);
    out
}

/// The adjacency graphs of the labeled sweeps: two vertices joined by an
/// edge with a loop at the second, and a single edge.
pub fn label_graphs() -> Vec<(&'static str, AdjacencyGraph)> {
    vec![
        ("edge-and-loop", AdjacencyGraph::new(2, &[(0, 1), (1, 1)])),
        ("single-edge", AdjacencyGraph::new(2, &[(0, 1)])),
    ]
}

pub(crate) fn describe(p: &ComplexParams) -> String {
    let e = &p.enumeration;
    let mut s = format!("g={} m={} min_valence={} max_edges={}", e.genus, e.faces, e.min_valence, e.max_edges);
    if let Some((adj, x)) = &p.labels {
        s.push_str(&format!(" G={} X={x:?}", adj.key()));
    }
    s
}

/// Every complex of the sweep: unlabeled with both valence bounds, and
/// labeled over each graph of `label_graphs` for every label multiset.
pub fn sweep_params(max_edges: usize) -> Vec<ComplexParams> {
    let mut out = Vec::new();
    for val in [3, 2] {
        for (g, m) in feasible_types(max_edges, val) {
            out.push(ComplexParams::unlabeled(g, m, val, max_edges));
        }
    }
    for (_, adj) in label_graphs() {
        for val in [3, 2] {
            for (g, m) in feasible_types(max_edges, val) {
                for x in label_multisets(adj.num_vertices(), m) {
                    out.push(ComplexParams::labeled(EnumParams::new(g, m, val, max_edges), adj.clone(), x));
                }
            }
        }
    }
    out
}

/// `d² = 0`, closure under contraction, the Euler characteristic identity,
/// and the top degree of trivalent complexes, over the whole sweep.
pub fn complex_suite(max_edges: usize, cache: Option<&Path>) -> Report {
    let mut report = Report::new("ribbon-complexes");
    let mut build = Check::new("complex-built-and-closed");
    let mut dsq = Check::new("d-squared-zero");
    let mut euler = Check::new("euler-characteristic");
    let mut top = Check::new("top-degree-trivalent");
    let mut nonempty_top = 0;
    for p in sweep_params(max_edges) {
        let c = match build_complex(&p, cache) {
            Ok(c) => c,
            Err(e) => {
                build.record(false, || format!("{}: {e}", describe(&p)));
                continue;
            }
        };
        build.record(true, String::new);
        let bad = c.d_squared_failures();
        dsq.record(bad.is_empty(), || format!("{}: degrees {bad:?}", describe(&p)));
        let (a, b) = euler_characteristics(&homology_ranks(&c));
        euler.record(a == b, || format!("{}: {a} != {b}", describe(&p)));
        if p.enumeration.min_valence == 3 {
            let (ok, hit) = top_degree_case(&p, cache);
            nonempty_top += hit as usize;
            top.record(ok, || format!("{}: unexpected top degree", describe(&p)));
        }
    }
    report.notes.push(format!("{} complexes with at most {max_edges} edges", build.cases));
    report.notes.push(format!("{nonempty_top} trivalent complexes reach 6g-6+3m within range"));
    let mut nonor = Check::new("planar-two-vertex-four-edge-nonorientable");
    nonor.record(!orientable(&planar_two_vertex_four_edge()), || "orientable".into());
    let mut bip = Check::new("bipartite-labels-have-no-trivalent-graph");
    for (g, m) in [(0, 3), (0, 4), (1, 1), (1, 2)] {
        for x in label_multisets(2, m) {
            let adj = AdjacencyGraph::new(2, &[(0, 1)]);
            let p = ComplexParams::labeled(EnumParams::new(g, m, 3, 7), adj, x.clone());
            let levels = classes(&p, cache).unwrap_or_default();
            let trivalent = levels.values().flatten().any(|gr| gr.valences().iter().all(|&v| v == 3));
            bip.record(!trivalent, || format!("g={g} m={m} X={x:?}"));
        }
    }
    report.checks.extend([build, dsq, euler, top, nonor, bip]);
    report
}

/// Classes with all vertices trivalent sit exactly at `6g − 6 + 3m` edges,
/// and no class exceeds it. Returns the verdict and whether that degree
/// is inhabited.
fn top_degree_case(p: &ComplexParams, cache: Option<&Path>) -> (bool, bool) {
    let e = &p.enumeration;
    let top = 6 * e.genus + 3 * e.faces - 6;
    let Ok(levels) = classes(p, cache) else { return (false, false) };
    let mut ok = true;
    for (&k, gs) in &levels {
        for g in gs {
            let trivalent = g.valences().iter().all(|&v| v == 3);
            ok &= k <= top && (trivalent == (k == top));
        }
    }
    let hit = top <= e.max_edges && levels.get(&top).is_some_and(|gs| !gs.is_empty());
    if p.labels.is_none() && top <= e.max_edges {
        ok &= hit;
    }
    (ok, hit)
}

/// Betti numbers of the polygon complex `(g, m) = (0, 2)`, valence 2, in
/// degrees `1..=max_edges`; one extra degree is built so that the top
/// requested degree is exact.
pub fn polygon_betti(labels: Option<(AdjacencyGraph, Vec<u32>)>, max_edges: usize) -> Vec<(usize, usize)> {
    let mut p = ComplexParams::unlabeled(0, 2, 2, max_edges + 1);
    if let Some((adj, x)) = labels {
        p = ComplexParams::labeled(p.enumeration, adj, x);
    }
    let c = build_complex(&p, None).expect("polygon complex");
    homology_ranks(&c).into_iter().filter(|r| r.degree <= max_edges).map(|r| (r.degree, r.betti)).collect()
}

/// Both faces on a vertex with a loop (`sp` type) give homology exactly in
/// degrees `3 mod 4`; faces on two adjacent vertices (`gl` type) give it
/// in every odd degree.
pub fn polygon_suite(max_edges: usize) -> Report {
    let mut report = Report::new("polygon-homology");
    let mut sp = Check::new("sp-polygons-nonzero-iff-3-mod-4");
    let sp_rows = polygon_betti(Some((AdjacencyGraph::new(1, &[(0, 0)]), vec![0, 0])), max_edges);
    for &(k, b) in &sp_rows {
        sp.record((b != 0) == (k % 4 == 3) && b <= 1, || format!("degree {k}: betti {b}"));
    }
    let mut gl = Check::new("gl-polygons-nonzero-iff-odd");
    let gl_rows = polygon_betti(Some((AdjacencyGraph::new(2, &[(0, 1)]), vec![0, 1])), max_edges);
    for &(k, b) in &gl_rows {
        gl.record((b != 0) == (k % 2 == 1) && b <= 1, || format!("degree {k}: betti {b}"));
    }
    let fmt = |rows: &[(usize, usize)]| rows.iter().map(|(k, b)| format!("{k}:{b}")).collect::<Vec<_>>().join(" ");
    report.notes.push(format!("sp betti {}", fmt(&sp_rows)));
    report.notes.push(format!("gl betti {}", fmt(&gl_rows)));
    report.checks.extend([sp, gl]);
    report
}

/// A random necklace of the given length, by rejection sampling of closed
/// walks.
pub fn random_necklace<R: Rng>(q: &Quiver, len: usize, rng: &mut R) -> Option<Necklace> {
    if len <= 6 {
        return necklaces_of_length(q, len).choose(rng).cloned();
    }
    let letters: Vec<Letter> = q.letters().collect();
    for _ in 0..200 {
        let start = rng.gen_range(0..q.num_vertices());
        let mut at = start;
        let mut word = Vec::with_capacity(len);
        for _ in 0..len {
            let out: Vec<&Letter> = letters.iter().filter(|a| q.tail(**a) == at).collect();
            let Some(&&a) = out.choose(rng) else { break };
            word.push(a);
            at = q.head(a);
        }
        if word.len() == len && at == start {
            return Necklace::new(q, word).ok();
        }
    }
    None
}

/// Instances for the cochain checks: orientable classes with at most
/// `max_edges` edges and valence at least 2, over the adjacency graph of
/// `q` (unlabeled when `q` has one vertex).
pub fn cochain_instances(q: &Quiver, max_edges: usize) -> Vec<RibbonGraph> {
    let adj = q.adjacency();
    let mut out = Vec::new();
    for (g, m) in feasible_types(max_edges, 2) {
        let p = EnumParams::new(g, m, 2, max_edges);
        if q.num_vertices() == 1 {
            if !adj.has_loop(0) {
                continue;
            }
            let lv = unlabeled_levels(&p).expect("feasible");
            out.extend(lv.into_values().flatten().filter(orientable));
        } else {
            for x in label_multisets(q.num_vertices(), m) {
                let c = classes(&ComplexParams::labeled(p, adj.clone(), x), None).expect("feasible");
                out.extend(c.into_values().flatten().filter(orientable));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CochainConfig {
    pub max_edges: usize,
    pub max_multiplicity: usize,
    pub random_tuples: usize,
    pub seed: u64,
}

impl Default for CochainConfig {
    fn default() -> Self {
        CochainConfig { max_edges: 3, max_multiplicity: 3, random_tuples: 20, seed: 0 }
    }
}

fn tuple_string(q: &Quiver, t: &[Necklace]) -> String {
    t.iter().map(|n| n.display(q)).collect::<Vec<_>>().join(", ")
}

/// `d_Lie Ψ_Γ = Σ_{Γ''} [dΓ'' : Γ] Ψ_{Γ''}` on tuples read off every
/// one-edge expansion of `Γ` plus random tuples, and `Ψ_Γ` is annihilated
/// by the action of every quadratic necklace.
pub fn cochain_suite(q: &Quiver, cfg: &CochainConfig) -> Report {
    let mut report = Report::new("cochain-map");
    let mut comm = Check::new("cochain-map-commutes");
    let mut inv = Check::new("quadratic-invariance");
    let mut nonzero = 0usize;
    let mut r = rng(cfg.seed);
    let base = cochain_instances(q, cfg.max_edges);
    for n in 1..=cfg.max_multiplicity {
        let qn = q.multiply(n);
        let quadratics = necklaces_of_length(&qn, 2);
        for g in &base {
            let g = canonical_form(g).graph;
            let psi = GraphCochain::new(&g);
            let ups = match coboundary_terms(&g) {
                Ok(u) => u,
                Err(e) => {
                    comm.record(false, || format!("{}: {e}", g.display()));
                    continue;
                }
            };
            let up_cochains: Vec<(GraphCochain, Q)> =
                ups.iter().map(|(x, k)| (GraphCochain::new(x), Q::from_integer((*k).into()))).collect();
            let mut seen = BTreeSet::new();
            let mut tuples = Vec::new();
            for x in g.expansions(2) {
                let x = canonical_form(&x).graph;
                if seen.insert(code_of(&x)) {
                    tuples.extend(pairing_tuples(&qn, &x));
                    for _ in 0..cfg.random_tuples {
                        let t: Option<Vec<Necklace>> =
                            x.valences().iter().map(|&l| random_necklace(&qn, l, &mut r)).collect();
                        tuples.extend(t);
                    }
                }
            }
            for t in &tuples {
                let lhs = lie_differential(&qn, |xs| psi.evaluate_lie(&qn, xs), t);
                let refs: Vec<&Necklace> = t.iter().collect();
                let mut rhs = Q::zero();
                for (c, k) in &up_cochains {
                    rhs += c.evaluate(&qn, &refs) * k;
                }
                nonzero += !lhs.is_zero() as usize;
                comm.record(lhs == rhs, || format!("N={n} graph {} tuple [{}]: {lhs} vs {rhs}", g.display(), tuple_string(&qn, t)));
            }
            for t in pairing_tuples(&qn, &g) {
                for f in &quadratics {
                    let d = action_defect(&qn, &psi, f, &t);
                    inv.record(d.is_zero(), || {
                        format!("N={n} graph {} f={} tuple [{}]: {d}", g.display(), f.display(&qn), tuple_string(&qn, &t))
                    });
                }
            }
        }
    }
    report.notes.push(format!("{} instances, {nonzero} nonzero coboundary evaluations", base.len()));
    report.checks.extend([comm, inv]);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multisets() {
        assert_eq!(label_multisets(2, 3), vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn small_polygons() {
        let r = polygon_suite(7);
        assert!(r.passed(), "{r}");
    }
}
