//! Canonical forms by rooted traversal.
//!
//! From a root half-edge `r`, half-edges are numbered in discovery order:
//! `r ↦ 0`, `ι r ↦ 1`, and scanning numbered half-edges in order, an
//! unnumbered `γ(x)` gets the next even number and its partner the next
//! odd one. The numbering keeps edges as `{2k, 2k+1}`. The code of a
//! rooting is the relabeled `γ` interleaved with the face labels; the
//! canonical form is the minimal code over all roots, and the roots that
//! attain it give the automorphisms.

use super::RibbonGraph;

#[derive(Clone, Debug)]
pub struct Canonical {
    pub graph: RibbonGraph,
    /// `relabel[h]` is the canonical number of the input half-edge `h`.
    pub relabel: Vec<usize>,
    /// Automorphisms of the input graph, as permutations of half-edges;
    /// the identity comes first.
    pub automorphisms: Vec<Vec<usize>>,
}

impl Canonical {
    /// Hashable key of the class.
    pub fn key(&self) -> Vec<u32> {
        code_of(&self.graph)
    }
}

fn rooted(g: &RibbonGraph, root: usize, order: &mut Vec<usize>, new_of: &mut [usize]) {
    let n = g.num_half_edges();
    order.clear();
    new_of.iter_mut().for_each(|x| *x = usize::MAX);
    order.push(root);
    order.push(root ^ 1);
    new_of[root] = 0;
    new_of[root ^ 1] = 1;
    let mut i = 0;
    while order.len() < n {
        let y = g.gamma()[order[i]];
        if new_of[y] == usize::MAX {
            new_of[y] = order.len();
            order.push(y);
            new_of[y ^ 1] = order.len();
            order.push(y ^ 1);
        }
        i += 1;
    }
}

/// Compares the code of a rooting against `best` without materializing it.
fn compare(g: &RibbonGraph, order: &[usize], new_of: &[usize], best: &[u32]) -> std::cmp::Ordering {
    for (i, &x) in order.iter().enumerate() {
        let a = new_of[g.gamma()[x]] as u32;
        let c = a.cmp(&best[2 * i]);
        if c.is_ne() {
            return c;
        }
        let c = g.label(x).cmp(&best[2 * i + 1]);
        if c.is_ne() {
            return c;
        }
    }
    std::cmp::Ordering::Equal
}

fn code_from(g: &RibbonGraph, order: &[usize], new_of: &[usize]) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * order.len());
    for &x in order {
        out.push(new_of[g.gamma()[x]] as u32);
        out.push(g.label(x));
    }
    out
}

/// The code of a graph as given (no minimization).
pub fn code_of(g: &RibbonGraph) -> Vec<u32> {
    let mut out = Vec::with_capacity(2 * g.num_half_edges());
    for h in 0..g.num_half_edges() {
        out.push(g.gamma()[h] as u32);
        out.push(g.label(h));
    }
    out
}

pub fn canonical_form(g: &RibbonGraph) -> Canonical {
    let n = g.num_half_edges();
    let mut order = Vec::with_capacity(n);
    let mut new_of = vec![0; n];
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    let mut ties: Vec<Vec<usize>> = Vec::new();
    for root in 0..n {
        rooted(g, root, &mut order, &mut new_of);
        match &best {
            None => {
                best = Some((code_from(g, &order, &new_of), order.clone()));
                ties = vec![order.clone()];
            }
            Some((code, _)) => match compare(g, &order, &new_of, code) {
                std::cmp::Ordering::Less => {
                    best = Some((code_from(g, &order, &new_of), order.clone()));
                    ties = vec![order.clone()];
                }
                std::cmp::Ordering::Equal => ties.push(order.clone()),
                std::cmp::Ordering::Greater => {}
            },
        }
    }
    let (code, first) = best.expect("nonempty graph");
    let mut relabel = vec![0; n];
    for (i, &x) in first.iter().enumerate() {
        relabel[x] = i;
    }
    let gamma: Vec<usize> = (0..n).map(|i| code[2 * i] as usize).collect();
    let labels: Vec<u32> = (0..n).map(|i| code[2 * i + 1]).collect();
    let automorphisms = ties
        .iter()
        .map(|t| {
            let mut phi = vec![0; n];
            for (i, &x) in first.iter().enumerate() {
                phi[x] = t[i];
            }
            phi
        })
        .collect();
    Canonical { graph: RibbonGraph::from_parts_unchecked(gamma, labels), relabel, automorphisms }
}

/// Applies a relabeling `h ↦ p[h]` to a graph.
pub fn relabeled(g: &RibbonGraph, p: &[usize]) -> RibbonGraph {
    let n = g.num_half_edges();
    let mut gamma = vec![0; n];
    let mut labels = vec![0; n];
    for h in 0..n {
        gamma[p[h]] = p[g.gamma()[h]];
        labels[p[h]] = g.label(h);
    }
    RibbonGraph::from_parts_unchecked(gamma, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::examples::*;

    fn is_automorphism(g: &RibbonGraph, phi: &[usize]) -> bool {
        (0..g.num_half_edges())
            .all(|h| phi[h ^ 1] == phi[h] ^ 1 && phi[g.gamma()[h]] == g.gamma()[phi[h]] && g.label(phi[h]) == g.label(h))
    }

    #[test]
    fn relabelings_agree() {
        let th = theta();
        let c = canonical_form(&th);
        // swap edges 0 and 2 and flip edge 1
        let p = vec![4, 5, 3, 2, 0, 1];
        let other = relabeled(&th, &p);
        assert_eq!(canonical_form(&other).graph, c.graph);
        assert_eq!(relabeled(&th, &c.relabel), c.graph);
        // idempotent
        assert_eq!(canonical_form(&c.graph).graph, c.graph);
    }

    #[test]
    fn automorphism_groups() {
        // theta: rotations of the three edges and the vertex swap, 6 in all
        let th = theta();
        let c = canonical_form(&th);
        assert_eq!(c.automorphisms.len(), 6);
        for phi in &c.automorphisms {
            assert!(is_automorphism(&th, phi));
        }
        let t = torus_one_vertex();
        let c = canonical_form(&t);
        assert_eq!(c.automorphisms.len(), 4);
        assert!(c.automorphisms.len() <= 4 * t.num_half_edges());
        assert_eq!(canonical_form(&polygon(5)).automorphisms.len(), 10);
    }
}
