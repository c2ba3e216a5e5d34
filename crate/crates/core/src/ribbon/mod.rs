//! Ribbon graphs as permutation pairs, their complexes, and the cochain
//! map into Lie algebra cochains.
//!
//! Half-edges are `0..2E`; the edge involution is fixed as `h ↦ h ^ 1`, so
//! edge `k` is `{2k, 2k+1}`. Faces are the orbits of `γ ∘ ι`, and a face
//! labeling is stored per half-edge (the label of the face containing it).

pub mod canonical;
pub mod cochain;
pub mod complex;
pub mod enumerate;
pub mod homology;
pub mod orientation;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canonical::{canonical_form, Canonical};
pub use complex::{build_complex, ChainComplex, ComplexParams};
pub use enumerate::{enumerate, EnumParams};
pub use homology::{homology_ranks, rank, BettiRow};
pub use orientation::{automorphism_sign, automorphism_sign_ef, contract_oriented, orientable, relabel_sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonGraph {
    gamma: Vec<usize>,
    labels: Vec<u32>,
}

fn cycles_of(perm: impl Fn(usize) -> usize, n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = perm(x);
        }
        out.push(c);
    }
    out
}

impl RibbonGraph {
    /// Builds a graph from `γ` and per-half-edge face labels, checking that
    /// `γ` is a permutation, the graph is connected and labels are constant
    /// on faces.
    pub fn new(gamma: Vec<usize>, labels: Vec<u32>) -> Result<Self> {
        let n = gamma.len();
        if n == 0 || n % 2 == 1 {
            return Err(Error::InvalidGraph(format!("{n} half-edges")));
        }
        if labels.len() != n {
            return Err(Error::InvalidGraph("one label per half-edge expected".into()));
        }
        let mut hit = vec![false; n];
        for &x in &gamma {
            if x >= n || hit[x] {
                return Err(Error::InvalidGraph("gamma is not a permutation".into()));
            }
            hit[x] = true;
        }
        let g = RibbonGraph { gamma, labels };
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        for f in g.faces() {
            if f.iter().any(|&h| g.labels[h] != g.labels[f[0]]) {
                return Err(Error::InvalidGraph("labels are not constant on a face".into()));
            }
        }
        Ok(g)
    }

    pub fn unlabeled(gamma: Vec<usize>) -> Result<Self> {
        let n = gamma.len();
        Self::new(gamma, vec![0; n])
    }

    pub(crate) fn from_parts_unchecked(gamma: Vec<usize>, labels: Vec<u32>) -> Self {
        RibbonGraph { gamma, labels }
    }

    fn is_connected(&self) -> bool {
        let n = self.gamma.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in [x ^ 1, self.gamma[x]] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    pub fn num_half_edges(&self) -> usize {
        self.gamma.len()
    }

    pub fn num_edges(&self) -> usize {
        self.gamma.len() / 2
    }

    pub fn gamma(&self) -> &[usize] {
        &self.gamma
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, h: usize) -> u32 {
        self.labels[h]
    }

    pub fn with_labels(&self, labels: Vec<u32>) -> Result<Self> {
        Self::new(self.gamma.clone(), labels)
    }

    /// `γ`-cycles, each starting at its smallest half-edge, ordered by that
    /// half-edge.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        cycles_of(|h| self.gamma[h], self.gamma.len())
    }

    /// Orbits of `γ ∘ ι`, ordered like `vertices`.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        cycles_of(|h| self.gamma[h ^ 1], self.gamma.len())
    }

    /// Index into `vertices()` of the vertex of each half-edge.
    pub fn vertex_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.gamma.len()];
        for (i, c) in self.vertices().iter().enumerate() {
            for &h in c {
                out[h] = i;
            }
        }
        out
    }

    pub fn face_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.gamma.len()];
        for (i, c) in self.faces().iter().enumerate() {
            for &h in c {
                out[h] = i;
            }
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces().len()
    }

    pub fn valences(&self) -> Vec<usize> {
        self.vertices().iter().map(Vec::len).collect()
    }

    /// `g = 1 − (V − E + F)/2`.
    pub fn genus(&self) -> usize {
        let chi = self.num_vertices() as i64 - self.num_edges() as i64 + self.num_faces() as i64;
        debug_assert!(chi % 2 == 0 && chi <= 2);
        (1 - chi / 2) as usize
    }

    /// Face orbits together with the genus.
    pub fn faces_genus(&self) -> (Vec<Vec<usize>>, usize) {
        (self.faces(), self.genus())
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let v = self.vertex_of();
        v[2 * edge] == v[2 * edge + 1]
    }

    /// Face labels of the two sides of every edge satisfy `adjacent`.
    pub fn labels_respect(&self, adjacent: impl Fn(u32, u32) -> bool) -> bool {
        (0..self.num_edges()).all(|k| adjacent(self.labels[2 * k], self.labels[2 * k + 1]))
    }

    /// `Γ/e` for a non-loop edge: the two endpoint cycles are spliced and
    /// the half-edges above `e` shift down by two.
    pub fn contract(&self, edge: usize) -> Result<RibbonGraph> {
        if edge >= self.num_edges() {
            return Err(Error::InvalidGraph(format!("no edge {edge}")));
        }
        if self.is_loop(edge) {
            return Err(Error::LoopContraction);
        }
        if self.num_edges() == 1 {
            return Err(Error::InvalidGraph("contracting the only edge".into()));
        }
        let (x, y) = (2 * edge, 2 * edge + 1);
        let n = self.gamma.len();
        let mut inv = vec![0; n];
        for h in 0..n {
            inv[self.gamma[h]] = h;
        }
        let mut g = self.gamma.clone();
        g[inv[x]] = self.gamma[y];
        g[inv[y]] = self.gamma[x];
        let shift = |h: usize| if h > y { h - 2 } else { h };
        let gamma: Vec<usize> = (0..n).filter(|&h| h != x && h != y).map(|h| shift(g[h])).collect();
        let labels: Vec<u32> = (0..n).filter(|&h| h != x && h != y).map(|h| self.labels[h]).collect();
        Ok(RibbonGraph { gamma, labels })
    }

    /// All graphs `Γ'` with a new edge `{2E, 2E+1}` such that contracting it
    /// gives back `self`, with both new vertices of valence `>= min_valence`.
    /// Labels of the new half-edges follow the faces they land in.
    pub fn expansions(&self, min_valence: usize) -> Vec<RibbonGraph> {
        let n = self.gamma.len();
        let (x, y) = (n, n + 1);
        let mut out = Vec::new();
        for c in self.vertices() {
            let d = c.len();
            if d + 2 < 2 * min_valence {
                continue;
            }
            for s in 0..d {
                // arc c[s..s+t] moves to the new vertex, which has valence t+1
                for t in min_valence.saturating_sub(1).max(1)..=(d + 1 - min_valence).min(d - 1) {
                    let mut g = self.gamma.clone();
                    g.push(0);
                    g.push(0);
                    let first = c[s];
                    let last = c[(s + t - 1) % d];
                    let after = c[(s + t) % d];
                    let before = c[(s + d - 1) % d];
                    g[last] = x;
                    g[x] = first;
                    g[before] = y;
                    g[y] = after;
                    let mut labels = self.labels.clone();
                    // x follows `last` around its vertex, so it lies in the
                    // face of `after`'s corner; similarly for y.
                    labels.push(self.labels[after]);
                    labels.push(self.labels[first]);
                    out.push(RibbonGraph { gamma: g, labels });
                }
            }
        }
        out
    }

    /// Text form: `γ` cycles, then face labels when any is nonzero.
    pub fn display(&self) -> String {
        let cyc: Vec<String> = self
            .vertices()
            .iter()
            .map(|c| format!("({})", c.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        let mut s = cyc.join("");
        if self.labels.iter().any(|&l| l != 0) {
            let fl: Vec<String> = self.faces().iter().map(|f| self.labels[f[0]].to_string()).collect();
            s.push_str(&format!(" faces[{}]", fl.join(",")));
        }
        s
    }

    /// Inverse of `display`: half-edges `2k, 2k+1` form edge `k`.
    pub fn from_display(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidGraph(format!("{m} in `{s}`"));
        let (cycles, faces) = match s.find("faces[") {
            Some(i) => (&s[..i], Some(s[i + 6..].trim().strip_suffix(']').ok_or_else(|| bad("unclosed faces"))?)),
            None => (s, None),
        };
        let mut gamma = Vec::new();
        for part in cycles.split(')') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let body = part.strip_prefix('(').ok_or_else(|| bad("expected `(`"))?;
            let hs: Vec<usize> =
                body.split_whitespace().map(|t| t.parse().map_err(|_| bad("bad half-edge"))).collect::<Result<_>>()?;
            for (i, &h) in hs.iter().enumerate() {
                if h >= gamma.len() {
                    gamma.resize(h + 1, usize::MAX);
                }
                if gamma[h] != usize::MAX {
                    return Err(bad("repeated half-edge"));
                }
                gamma[h] = hs[(i + 1) % hs.len()];
            }
        }
        if gamma.contains(&usize::MAX) {
            return Err(bad("missing half-edge"));
        }
        let g = RibbonGraph::unlabeled(gamma)?;
        let Some(faces) = faces else { return Ok(g) };
        let fl: Vec<u32> =
            faces.split(',').map(|t| t.trim().parse().map_err(|_| bad("bad face label"))).collect::<Result<_>>()?;
        let face = g.face_of();
        if fl.len() != g.num_faces() {
            return Err(bad("wrong number of face labels"));
        }
        g.with_labels((0..g.num_half_edges()).map(|h| fl[face[h]]).collect())
    }

    pub fn to_json(&self, label_names: Option<&[String]>) -> GraphJson {
        let half_edges: Vec<String> = (0..self.gamma.len()).map(|h| format!("h{h}")).collect();
        let iota = (0..self.num_edges()).map(|k| [format!("h{}", 2 * k), format!("h{}", 2 * k + 1)]).collect();
        let gamma = self.vertices().iter().map(|c| c.iter().map(|h| format!("h{h}")).collect()).collect();
        let labels = label_names.map(|names| {
            self.faces()
                .iter()
                .enumerate()
                .map(|(i, f)| (format!("face{i}"), names[self.labels[f[0]] as usize].clone()))
                .collect()
        });
        GraphJson { half_edges, iota, gamma, labels }
    }

    /// Reads the JSON form, renumbering half-edges so that `iota` pairs
    /// become `{2k, 2k+1}` in the listed order. Face names `faceI` refer to
    /// the faces in the order of their first half-edge in `half_edges`.
    pub fn from_json(j: &GraphJson, vertex_index: impl Fn(&str) -> Result<usize>) -> Result<Self> {
        let n = j.half_edges.len();
        let pos: BTreeMap<&str, usize> = j.half_edges.iter().enumerate().map(|(i, h)| (h.as_str(), i)).collect();
        if pos.len() != n {
            return Err(Error::InvalidGraph("duplicate half-edge ids".into()));
        }
        let look = |h: &str| pos.get(h).copied().ok_or_else(|| Error::InvalidGraph(format!("unknown half-edge `{h}`")));
        let mut new_of = vec![usize::MAX; n];
        for (k, [a, b]) in j.iota.iter().enumerate() {
            let (a, b) = (look(a)?, look(b)?);
            if a == b || new_of[a] != usize::MAX || new_of[b] != usize::MAX {
                return Err(Error::InvalidGraph("iota is not a fixed-point-free involution".into()));
            }
            new_of[a] = 2 * k;
            new_of[b] = 2 * k + 1;
        }
        if new_of.contains(&usize::MAX) {
            return Err(Error::InvalidGraph("iota does not cover every half-edge".into()));
        }
        let mut gamma = vec![usize::MAX; n];
        for c in &j.gamma {
            for i in 0..c.len() {
                let a = new_of[look(&c[i])?];
                let b = new_of[look(&c[(i + 1) % c.len()])?];
                if gamma[a] != usize::MAX {
                    return Err(Error::InvalidGraph("half-edge in two gamma cycles".into()));
                }
                gamma[a] = b;
            }
        }
        if gamma.contains(&usize::MAX) {
            return Err(Error::InvalidGraph("gamma does not cover every half-edge".into()));
        }
        let g = RibbonGraph::unlabeled(gamma)?;
        let Some(lab) = &j.labels else { return Ok(g) };
        // faces in order of first appearance in the input list
        let face = g.face_of();
        let mut order: Vec<usize> = Vec::new();
        for h in 0..n {
            let f = face[new_of[h]];
            if !order.contains(&f) {
                order.push(f);
            }
        }
        let mut face_label = vec![None; order.len()];
        for (name, v) in lab {
            let i: usize = name
                .strip_prefix("face")
                .and_then(|s| s.parse().ok())
                .filter(|&i| i < order.len())
                .ok_or_else(|| Error::InvalidGraph(format!("unknown face `{name}`")))?;
            face_label[order[i]] = Some(vertex_index(v)? as u32);
        }
        let labels = (0..n)
            .map(|h| face_label[face[h]].ok_or_else(|| Error::InvalidGraph("unlabeled face".into())))
            .collect::<Result<Vec<_>>>()?;
        g.with_labels(labels)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub half_edges: Vec<String>,
    pub iota: Vec<[String; 2]>,
    pub gamma: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, String>>,
}

/// Small named graphs used in tests and examples.
pub mod examples {
    use super::RibbonGraph;

    /// One vertex with a single loop.
    pub fn circle() -> RibbonGraph {
        RibbonGraph::unlabeled(vec![1, 0]).expect("valid")
    }

    /// One vertex, two interleaved loops: `γ = (0 2 1 3)`.
    pub fn torus_one_vertex() -> RibbonGraph {
        RibbonGraph::unlabeled(vec![2, 3, 1, 0]).expect("valid")
    }

    /// Two trivalent vertices joined by three edges, planar.
    pub fn theta() -> RibbonGraph {
        // vertex A = (0 2 4), vertex B = (1 5 3)
        RibbonGraph::unlabeled(vec![2, 5, 4, 1, 0, 3]).expect("valid")
    }

    /// Two loops joined by a bridge: edge 0 is the bridge.
    pub fn dumbbell() -> RibbonGraph {
        // A = (0 2 3), B = (1 4 5)
        RibbonGraph::unlabeled(vec![2, 4, 3, 0, 5, 1]).expect("valid")
    }

    /// Two four-valent vertices joined by four edges, drawn in the plane.
    pub fn planar_two_vertex_four_edge() -> RibbonGraph {
        // A = (0 2 4 6), B = (1 7 5 3)
        RibbonGraph::unlabeled(vec![2, 7, 4, 1, 6, 3, 0, 5]).expect("valid")
    }

    /// The `n`-gon: `n` two-valent vertices on a cycle.
    pub fn polygon(n: usize) -> RibbonGraph {
        // edge k = {2k, 2k+1}; vertex k joins 2k+1 and 2(k+1)
        let mut gamma = vec![0; 2 * n];
        for k in 0..n {
            let a = 2 * k + 1;
            let b = (2 * (k + 1)) % (2 * n);
            gamma[a] = b;
            gamma[b] = a;
        }
        RibbonGraph::unlabeled(gamma).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn display_round_trip() {
        let d = dumbbell();
        let labeled = d.with_labels(d.face_of().iter().map(|&f| f as u32).collect()).unwrap();
        for g in [theta(), torus_one_vertex(), polygon(4), labeled] {
            assert_eq!(RibbonGraph::from_display(&g.display()).unwrap(), g);
        }
        assert!(RibbonGraph::from_display("(0 1)(1 2 3)").is_err());
        assert!(RibbonGraph::from_display("(0 1 2 3) faces[0").is_err());
    }

    #[test]
    fn faces_and_genus() {
        let c = circle();
        assert_eq!((c.num_faces(), c.genus()), (2, 0));
        let t = torus_one_vertex();
        assert_eq!((t.num_faces(), t.genus()), (1, 1));
        let th = theta();
        assert_eq!((th.num_vertices(), th.num_faces(), th.genus()), (2, 3, 0));
        let d = dumbbell();
        assert_eq!((d.num_vertices(), d.num_faces(), d.genus()), (2, 3, 0));
        let p = planar_two_vertex_four_edge();
        assert_eq!((p.num_faces(), p.genus()), (4, 0));
        for n in 1..6 {
            let q = polygon(n);
            assert_eq!((q.num_vertices(), q.num_faces(), q.genus()), (n, 2, 0));
        }
    }

    #[test]
    fn contraction() {
        let d = dumbbell();
        assert!(d.is_loop(1));
        assert_eq!(d.contract(1), Err(Error::LoopContraction));
        let c = d.contract(0).unwrap();
        assert_eq!((c.num_vertices(), c.num_edges(), c.num_faces(), c.genus()), (1, 2, 3, 0));
        for e in 0..3 {
            let c = theta().contract(e).unwrap();
            assert_eq!((c.num_vertices(), c.num_edges(), c.num_faces()), (1, 2, 3));
        }
    }

    #[test]
    fn expansion_inverts_contraction() {
        let t = torus_one_vertex();
        for x in t.expansions(2) {
            let e = x.num_edges() - 1;
            assert_eq!(x.contract(e).unwrap(), t);
            assert_eq!((x.num_faces(), x.genus()), (1, 1));
        }
    }

    #[test]
    fn disconnected_rejected() {
        assert_eq!(RibbonGraph::unlabeled(vec![1, 0, 3, 2]), Err(Error::Disconnected));
    }

    #[test]
    fn json_round_trip() {
        let th = theta();
        let j = th.to_json(None);
        let back = RibbonGraph::from_json(&j, |_| Ok(0)).unwrap();
        assert_eq!(back, th);
    }
}
