//! Quivers, their doubles, and the underlying adjacency graph.
//!
//! Edges of the double quiver are encoded as [`Letter`]s: base edge `k` (in
//! lexicographic id order) is `2k`, its reverse `k*` is `2k + 1`. Comparing
//! letters therefore gives the fixed total order `a < a* < b < b* < ...`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An edge of the double quiver.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u32);

impl Letter {
    pub fn base(k: usize) -> Self {
        Letter(2 * k as u32)
    }

    pub fn star(k: usize) -> Self {
        Letter(2 * k as u32 + 1)
    }

    /// Index of the underlying edge of `Q`.
    pub fn edge(self) -> usize {
        (self.0 / 2) as usize
    }

    /// Whether this letter lies in `Q` (as opposed to `Q*`).
    pub fn in_q(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn rev(self) -> Self {
        Letter(self.0 ^ 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct QuiverFile {
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
}

/// A quiver with its double. Vertices keep their input order; edges are
/// sorted by id.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    edge_ids: Vec<String>,
    tails: Vec<usize>,
    heads: Vec<usize>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeRecord>) -> Result<Self> {
        let mut vidx = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.is_empty() || v.contains(|c: char| c.is_whitespace() || "()*&".contains(c)) {
                return Err(Error::InvalidQuiver(format!("bad vertex id `{v}`")));
            }
            if vidx.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate vertex `{v}`")));
            }
        }
        let mut edges = edges;
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        for w in edges.windows(2) {
            if w[0].id == w[1].id {
                return Err(Error::InvalidQuiver(format!("duplicate edge `{}`", w[0].id)));
            }
        }
        let mut q = Quiver {
            vertices,
            edge_ids: Vec::new(),
            tails: Vec::new(),
            heads: Vec::new(),
        };
        for e in edges {
            let bad = e.id.is_empty()
                || e.id.contains(|c: char| c.is_whitespace() || "()*&".contains(c))
                || e.id == "I";
            if bad {
                return Err(Error::InvalidQuiver(format!("bad edge id `{}`", e.id)));
            }
            let t = *vidx.get(&e.tail).ok_or_else(|| Error::UnknownVertex(e.tail.clone()))?;
            let h = *vidx.get(&e.head).ok_or_else(|| Error::UnknownVertex(e.head.clone()))?;
            q.edge_ids.push(e.id);
            q.tails.push(t);
            q.heads.push(h);
        }
        Ok(q)
    }

    /// Convenience constructor from `(id, tail, head)` triples.
    pub fn from_triples(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        Self::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(id, t, h)| EdgeRecord { id: id.to_string(), tail: t.to_string(), head: h.to_string() })
                .collect(),
        )
    }

    /// One vertex `v` carrying the given loops.
    pub fn loops(names: &[&str]) -> Self {
        let edges: Vec<_> = names.iter().map(|n| (*n, "v", "v")).collect();
        Self::from_triples(&["v"], &edges).expect("valid loop quiver")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: QuiverFile = serde_json::from_str(s)?;
        Self::new(f.vertices, f.edges)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let f = QuiverFile { vertices: self.vertices.clone(), edges: self.edge_records() };
        serde_json::to_string(&f).expect("serializable")
    }

    pub fn edge_records(&self) -> Vec<EdgeRecord> {
        (0..self.num_edges())
            .map(|k| EdgeRecord {
                id: self.edge_ids[k].clone(),
                tail: self.vertices[self.tails[k]].clone(),
                head: self.vertices[self.heads[k]].clone(),
            })
            .collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges of `Q` (not of the double).
    pub fn num_edges(&self) -> usize {
        self.edge_ids.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    /// All letters of the double quiver in the fixed order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..2 * self.num_edges() as u32).map(Letter)
    }

    /// Letters of `Q` only.
    pub fn base_letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.num_edges()).map(Letter::base)
    }

    pub fn tail(&self, a: Letter) -> usize {
        if a.in_q() {
            self.tails[a.edge()]
        } else {
            self.heads[a.edge()]
        }
    }

    pub fn head(&self, a: Letter) -> usize {
        self.tail(a.rev())
    }

    pub fn letter_name(&self, a: Letter) -> String {
        let id = &self.edge_ids[a.edge()];
        if a.in_q() {
            id.clone()
        } else {
            format!("{id}*")
        }
    }

    pub fn parse_letter(&self, s: &str) -> Result<Letter> {
        let (id, star) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        let k = self
            .edge_ids
            .binary_search_by(|x| x.as_str().cmp(id))
            .map_err(|_| Error::UnknownEdge(s.to_string()))?;
        Ok(if star { Letter::star(k) } else { Letter::base(k) })
    }

    /// Reversal on the double quiver, by name.
    pub fn reverse(&self, s: &str) -> Result<String> {
        Ok(self.letter_name(self.parse_letter(s)?.rev()))
    }

    /// The `n`-fold edge multiplication `nQ`: each edge `e` becomes
    /// `e#1, ..., e#n` with the same endpoints.
    pub fn multiply(&self, n: usize) -> Self {
        let mut edges = Vec::new();
        for r in self.edge_records() {
            for i in 1..=n {
                edges.push(EdgeRecord { id: format!("{}#{i}", r.id), tail: r.tail.clone(), head: r.head.clone() });
            }
        }
        Self::new(self.vertices.clone(), edges).expect("multiplied quiver is valid")
    }

    pub fn adjacency(&self) -> AdjacencyGraph {
        let mut adj = BTreeSet::new();
        for k in 0..self.num_edges() {
            let (a, b) = (self.tails[k], self.heads[k]);
            adj.insert((a.min(b), a.max(b)));
        }
        AdjacencyGraph { num_vertices: self.num_vertices(), adj }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// Undirected graph on the vertex set; loops allowed, multiplicity 0 or 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyGraph {
    num_vertices: usize,
    adj: BTreeSet<(usize, usize)>,
}

impl AdjacencyGraph {
    pub fn new(num_vertices: usize, pairs: &[(usize, usize)]) -> Self {
        let adj = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        AdjacencyGraph { num_vertices, adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj.contains(&(a.min(b), a.max(b)))
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.adjacent(v, v)
    }

    /// Unordered adjacent pairs `(a, b)` with `a <= b`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().copied()
    }

    /// A stable textual key, used for caching.
    pub fn key(&self) -> String {
        let mut s = format!("n{}", self.num_vertices);
        for (a, b) in &self.adj {
            s.push_str(&format!("-{a}.{b}"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_and_reverse() {
        let q = Quiver::from_triples(&["v1", "v2"], &[("a", "v1", "v2")]).unwrap();
        let a = q.parse_letter("a").unwrap();
        assert_eq!(q.letters().count(), 2);
        assert_eq!(q.tail(a.rev()), q.head(a));
        assert_eq!(q.head(a.rev()), 0);
        assert_eq!(q.reverse("a*").unwrap(), "a");
        assert_eq!(q.reverse("a").unwrap(), "a*");
        assert!(q.parse_letter("b").is_err());
    }

    #[test]
    fn letter_order() {
        let q = Quiver::loops(&["b", "a"]);
        let names: Vec<_> = q.letters().map(|l| q.letter_name(l)).collect();
        assert_eq!(names, ["a", "a*", "b", "b*"]);
    }

    #[test]
    fn adjacency_forgets_multiplicity() {
        let q = Quiver::loops(&["a", "b"]);
        let g = q.adjacency();
        assert!(g.has_loop(0));
        assert_eq!(g.pairs().count(), 1);
        let p = Quiver::from_triples(&["v1", "v2"], &[("a", "v1", "v2"), ("b", "v1", "v2")]).unwrap();
        assert_eq!(p.adjacency().pairs().collect::<Vec<_>>(), [(0, 1)]);
        assert_eq!(p.multiply(3).adjacency(), p.adjacency());
        assert_eq!(p.multiply(3).num_edges(), 6);
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"vertices":["v"],"edges":[{"id":"e","tail":"v","head":"v"}]}"#;
        let q = Quiver::from_json(s).unwrap();
        assert_eq!(Quiver::from_json(&q.to_json()).unwrap(), q);
        assert!(Quiver::from_json(r#"{"vertices":["v"],"edges":[{"id":"e","tail":"v","head":"w"}]}"#).is_err());
    }
}
