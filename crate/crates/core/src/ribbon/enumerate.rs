//! Enumeration of ribbon graph classes of fixed genus and face count.
//!
//! With `g` and `m` fixed, the vertex count is `2 − 2g − m + E`, so the
//! one-vertex graphs sit at `E = 2g + m − 1`. Every graph with two or more
//! vertices has a non-loop edge, and contracting it keeps `g`, `m` and the
//! valence bound, so each level is obtained by expanding the level below.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::canonical::{canonical_form, code_of};
use super::RibbonGraph;
use crate::error::{Error, Result};
use crate::quiver::AdjacencyGraph;

/// Refuse levels with more classes than this.
pub const LEVEL_GUARD: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EnumParams {
    pub genus: usize,
    pub faces: usize,
    pub min_valence: usize,
    pub max_edges: usize,
}

impl EnumParams {
    pub fn new(genus: usize, faces: usize, min_valence: usize, max_edges: usize) -> Self {
        EnumParams { genus, faces, min_valence, max_edges }
    }

    /// Stable (negative) Euler characteristic, or the polygon complex
    /// `(0, 2)` when two-valent vertices are allowed.
    pub fn check(&self) -> Result<()> {
        if !(2..=3).contains(&self.min_valence) {
            return Err(Error::Infeasible(format!("min valence {} (expected 2 or 3)", self.min_valence)));
        }
        if self.faces == 0 {
            return Err(Error::Infeasible("a ribbon graph has at least one face".into()));
        }
        let chi = 2 - 2 * self.genus as i64 - self.faces as i64;
        let polygon = self.min_valence == 2 && self.genus == 0 && self.faces == 2;
        if chi >= 0 && !polygon {
            return Err(Error::Infeasible(format!("2 - 2g - m = {chi} is not negative")));
        }
        Ok(())
    }

    pub fn min_edges(&self) -> usize {
        2 * self.genus + self.faces - 1
    }

    /// Top degree: `6g − 6 + 3m` for trivalent bounds, else `max_edges`.
    pub fn top_edges(&self) -> usize {
        if self.min_valence >= 3 {
            let top = 6 * self.genus + 3 * self.faces - 6;
            top.min(self.max_edges)
        } else {
            self.max_edges
        }
    }
}

fn matchings(n: usize, visit: &mut impl FnMut(&[(usize, usize)])) {
    fn rec(free: &mut Vec<usize>, acc: &mut Vec<(usize, usize)>, visit: &mut impl FnMut(&[(usize, usize)])) {
        if free.is_empty() {
            visit(acc);
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            acc.push((a, b));
            rec(free, acc, visit);
            acc.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    rec(&mut (0..n).collect(), &mut Vec::new(), visit);
}

fn dedup_canonical(graphs: impl IntoParallelIterator<Item = RibbonGraph>) -> Vec<RibbonGraph> {
    let keyed: Vec<(Vec<u32>, RibbonGraph)> = graphs
        .into_par_iter()
        .map(|g| {
            let c = canonical_form(&g).graph;
            (code_of(&c), c)
        })
        .collect();
    let mut map: HashMap<Vec<u32>, RibbonGraph> = HashMap::with_capacity(keyed.len());
    for (k, g) in keyed {
        map.entry(k).or_insert(g);
    }
    let mut out: Vec<(Vec<u32>, RibbonGraph)> = map.into_iter().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, g)| g).collect()
}

/// One-vertex graphs with `m` faces and `2g + m − 1` loops.
pub fn one_vertex_graphs(genus: usize, faces: usize) -> Vec<RibbonGraph> {
    let e = 2 * genus + faces - 1;
    if e == 0 {
        return Vec::new();
    }
    let n = 2 * e;
    let mut raw = Vec::new();
    matchings(n, &mut |m| {
        // position p holds half-edge at[p]
        let mut at = vec![0; n];
        for (k, &(a, b)) in m.iter().enumerate() {
            at[a] = 2 * k;
            at[b] = 2 * k + 1;
        }
        let mut gamma = vec![0; n];
        for p in 0..n {
            gamma[at[p]] = at[(p + 1) % n];
        }
        let g = RibbonGraph::from_parts_unchecked(gamma, vec![0; n]);
        if g.num_faces() == faces {
            raw.push(g);
        }
    });
    dedup_canonical(raw)
}

/// Unlabeled classes (orientable or not) per edge count.
pub fn unlabeled_levels(p: &EnumParams) -> Result<BTreeMap<usize, Vec<RibbonGraph>>> {
    p.check()?;
    let mut out = BTreeMap::new();
    let e0 = p.min_edges();
    let top = p.top_edges();
    if e0 > top {
        return Ok(out);
    }
    let mut level: Vec<RibbonGraph> =
        one_vertex_graphs(p.genus, p.faces).into_iter().filter(|g| 2 * g.num_edges() >= p.min_valence).collect();
    out.insert(e0, level.clone());
    for e in e0 + 1..=top {
        let cands: Vec<RibbonGraph> = level.par_iter().flat_map_iter(|g| g.expansions(p.min_valence)).collect();
        level = dedup_canonical(cands);
        if level.len() > LEVEL_GUARD {
            return Err(Error::SizeGuard(format!("{} classes with {e} edges", level.len())));
        }
        out.insert(e, level.clone());
    }
    Ok(out)
}

/// Distinct arrangements of a multiset, in lexicographic order.
fn arrangements(sorted: &[u32]) -> Vec<Vec<u32>> {
    let mut cur = sorted.to_vec();
    cur.sort();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Labeled classes over `G` with label multiset `x` built on the given
/// unlabeled classes.
pub fn labeled_classes(graphs: &[RibbonGraph], adj: &AdjacencyGraph, x: &[u32]) -> Vec<RibbonGraph> {
    let arr = arrangements(x);
    let cands: Vec<RibbonGraph> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let faces = g.faces();
            let fof = g.face_of();
            let mut local = Vec::new();
            if faces.len() != x.len() {
                return local;
            }
            for a in &arr {
                let labels: Vec<u32> = (0..g.num_half_edges()).map(|h| a[fof[h]]).collect();
                let lg = RibbonGraph::from_parts_unchecked(g.gamma().to_vec(), labels);
                if lg.labels_respect(|s, t| adj.adjacent(s as usize, t as usize)) {
                    local.push(lg);
                }
            }
            local
        })
        .collect();
    dedup_canonical(cands)
}

/// All connected classes meeting the parameters, per edge count. With a
/// constraint `(G, X)`, faces are labeled by `X` so that faces meeting
/// along an edge carry adjacent labels.
pub fn enumerate(p: &EnumParams, constraint: Option<(&AdjacencyGraph, &[u32])>) -> Result<BTreeMap<usize, Vec<RibbonGraph>>> {
    let levels = unlabeled_levels(p)?;
    let Some((adj, x)) = constraint else { return Ok(levels) };
    if x.len() != p.faces {
        return Err(Error::Infeasible(format!("{} labels for {} faces", x.len(), p.faces)));
    }
    if let Some(&bad) = x.iter().find(|&&v| v as usize >= adj.num_vertices()) {
        return Err(Error::Infeasible(format!("label {bad} is not a vertex of G")));
    }
    Ok(levels.into_iter().map(|(e, gs)| (e, labeled_classes(&gs, adj, x))).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::examples::*;

    fn key(g: &RibbonGraph) -> Vec<u32> {
        code_of(&canonical_form(g).graph)
    }

    #[test]
    fn genus_zero_three_faces() {
        let lv = unlabeled_levels(&EnumParams::new(0, 3, 3, 10)).unwrap();
        assert_eq!(lv.keys().copied().collect::<Vec<_>>(), vec![2, 3]);
        let top = &lv[&3];
        let keys: Vec<_> = top.iter().map(key).collect();
        assert!(keys.contains(&key(&theta())));
        assert!(keys.contains(&key(&dumbbell())));
        assert_eq!(top.len(), 2);
    }

    #[test]
    fn genus_one_one_face() {
        let lv = unlabeled_levels(&EnumParams::new(1, 1, 3, 10)).unwrap();
        assert!(lv[&2].iter().map(key).any(|k| k == key(&torus_one_vertex())));
        assert_eq!(*lv.keys().last().unwrap(), 3);
        assert!(lv[&3].iter().all(|g| g.valences() == vec![3, 3]));
    }

    #[test]
    fn polygons() {
        let lv = unlabeled_levels(&EnumParams::new(0, 2, 2, 6)).unwrap();
        for (e, gs) in lv {
            assert_eq!(gs.len(), 1);
            assert_eq!(key(&gs[0]), key(&polygon(e)));
        }
    }

    #[test]
    fn infeasible() {
        assert!(EnumParams::new(0, 2, 3, 5).check().is_err());
        assert!(EnumParams::new(0, 1, 2, 5).check().is_err());
        assert!(EnumParams::new(1, 1, 4, 5).check().is_err());
    }

    #[test]
    fn labels_respect_adjacency() {
        // G: one vertex without a loop. Every edge meets two faces with the
        // same label, so nothing survives.
        let adj = AdjacencyGraph::new(1, &[]);
        let lv = enumerate(&EnumParams::new(0, 3, 3, 3), Some((&adj, &[0, 0, 0]))).unwrap();
        assert!(lv.values().all(Vec::is_empty));
        // G: a loop; labeled classes coincide with unlabeled ones.
        let adj = AdjacencyGraph::new(1, &[(0, 0)]);
        let lv = enumerate(&EnumParams::new(0, 3, 3, 3), Some((&adj, &[0, 0, 0]))).unwrap();
        assert_eq!(lv[&3].len(), 2);
    }

    #[test]
    fn multiset_arrangements() {
        assert_eq!(arrangements(&[0, 0, 1]).len(), 3);
        assert_eq!(arrangements(&[0, 1, 2]).len(), 6);
    }
}
