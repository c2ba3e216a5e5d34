//! Graph cochains on necklace Lie algebras.
//!
//! An oriented labeled ribbon graph `Γ` gives an alternating functional
//! `±Π_e ω^e` on tuples of necklaces over `NQ`, one necklace per vertex
//! with length equal to the valence. A necklace is read around its vertex
//! from a ciliation and summed over all rotations (no averaging); tuples
//! are matched to vertices of equal valence in every way, with the sign of
//! the matching. The letter at slot `h` runs from the label of the face of
//! `h` to the label of the face of `γ h`, and terms inducing other labels
//! are dropped. Finally the sum is divided by the number of automorphisms,
//! so that the functional is dual to the class of `Γ`.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::canonical::{canonical_form, code_of};
use super::complex::boundary_terms;
use super::orientation::{edge_items, orientable, perm_sign};
use super::RibbonGraph;
use crate::error::{Error, Result};
use crate::necklace::{bracket, LieElement, Necklace};
use crate::poly::{q, Q};
use crate::quiver::{Letter, Quiver};

#[derive(Clone, Debug)]
pub struct GraphCochain {
    graph: RibbonGraph,
    /// Slots of each vertex in cyclic order from its ciliation.
    slots: Vec<Vec<usize>>,
    sign: i32,
    automorphisms: usize,
}

impl GraphCochain {
    /// The functional of `Γ` with its reference orientation. Labels are read
    /// as vertex indices of the quiver.
    pub fn new(g: &RibbonGraph) -> Self {
        let slots = g.vertices();
        let order: Vec<usize> = (0..slots.len()).collect();
        let firsts: Vec<usize> = (0..g.num_edges()).map(|k| 2 * k).collect();
        let sign = perm_sign(&edge_items(g, &order, &firsts));
        let automorphisms = canonical_form(g).automorphisms.len();
        GraphCochain { graph: g.clone(), slots, sign, automorphisms }
    }

    pub fn graph(&self) -> &RibbonGraph {
        &self.graph
    }

    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    pub fn valences(&self) -> Vec<usize> {
        self.slots.iter().map(Vec::len).collect()
    }

    /// Value on a tuple of necklaces; zero when the lengths do not match
    /// the valences.
    pub fn evaluate(&self, qv: &Quiver, args: &[&Necklace]) -> Q {
        if args.len() != self.arity() {
            return Q::zero();
        }
        let mut assigned: Vec<Option<usize>> = vec![None; args.len()];
        let mut used = vec![false; args.len()];
        let mut total = 0i64;
        self.match_vertices(qv, args, 0, &mut assigned, &mut used, &mut total);
        Q::new((self.sign as i64 * total).into(), (self.automorphisms as i64).into())
    }

    fn match_vertices(
        &self,
        qv: &Quiver,
        args: &[&Necklace],
        v: usize,
        assigned: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        total: &mut i64,
    ) {
        if v == self.slots.len() {
            let sigma: Vec<usize> = assigned.iter().map(|a| a.expect("complete")).collect();
            *total += perm_sign(&sigma) as i64 * self.rotation_sum(qv, args, &sigma);
            return;
        }
        for i in 0..args.len() {
            if used[i] || args[i].len() != self.slots[v].len() {
                continue;
            }
            used[i] = true;
            assigned[v] = Some(i);
            self.match_vertices(qv, args, v + 1, assigned, used, total);
            assigned[v] = None;
            used[i] = false;
        }
    }

    fn rotation_sum(&self, qv: &Quiver, args: &[&Necklace], sigma: &[usize]) -> i64 {
        let n = self.graph.num_half_edges();
        let mut letters = vec![Letter(0); n];
        let mut rot = vec![0usize; self.slots.len()];
        let mut total = 0;
        loop {
            for (v, slots) in self.slots.iter().enumerate() {
                let w = args[sigma[v]].word();
                for (j, &h) in slots.iter().enumerate() {
                    letters[h] = w[(rot[v] + j) % w.len()];
                }
            }
            total += self.term(qv, &letters);
            let mut v = 0;
            loop {
                if v == rot.len() {
                    return total;
                }
                rot[v] += 1;
                if rot[v] < self.slots[v].len() {
                    break;
                }
                rot[v] = 0;
                v += 1;
            }
        }
    }

    fn term(&self, qv: &Quiver, letters: &[Letter]) -> i64 {
        let g = &self.graph;
        for (h, &a) in letters.iter().enumerate() {
            if qv.tail(a) != g.label(h) as usize || qv.head(a) != g.label(g.gamma()[h]) as usize {
                return 0;
            }
        }
        let mut p = 1i64;
        for k in 0..g.num_edges() {
            p *= crate::necklace::symplectic_form(letters[2 * k], letters[2 * k + 1]) as i64;
            if p == 0 {
                return 0;
            }
        }
        p
    }

    /// Multilinear extension to combinations (constant coefficients).
    pub fn evaluate_lie(&self, qv: &Quiver, args: &[LieElement]) -> Q {
        fn rec(c: &GraphCochain, qv: &Quiver, args: &[LieElement], i: usize, picked: &mut Vec<Necklace>, coef: Q, out: &mut Q) {
            if i == args.len() {
                let refs: Vec<&Necklace> = picked.iter().collect();
                *out += coef * c.evaluate(qv, &refs);
                return;
            }
            for (n, x) in args[i].iter() {
                picked.push(n.clone());
                rec(c, qv, args, i + 1, picked, &coef * x.at_zero(), out);
                picked.pop();
            }
        }
        let mut out = Q::zero();
        rec(self, qv, args, 0, &mut Vec::new(), Q::one(), &mut out);
        out
    }
}

/// Checked evaluation: the length multiset of the arguments must be the
/// valence multiset of the graph.
pub fn graph_cochain(qv: &Quiver, g: &RibbonGraph, args: &[Necklace]) -> Result<Q> {
    let c = GraphCochain::new(g);
    let mut lens: Vec<usize> = args.iter().map(Necklace::len).collect();
    let mut vals = c.valences();
    lens.sort();
    vals.sort();
    if lens != vals {
        return Err(Error::ValenceMismatch(format!("necklace lengths {lens:?}, valences {vals:?}")));
    }
    let refs: Vec<&Necklace> = args.iter().collect();
    Ok(c.evaluate(qv, &refs))
}

/// Chevalley–Eilenberg differential of an alternating cochain with trivial
/// coefficients: `(dφ)(x_1..x_{n+1}) = Σ_{i<j} (−1)^{i+j} φ([x_i, x_j], ...)`.
pub fn lie_differential(qv: &Quiver, phi: impl Fn(&[LieElement]) -> Q, args: &[Necklace]) -> Q {
    let mut out = Q::zero();
    for i in 0..args.len() {
        for j in i + 1..args.len() {
            let mut xs = vec![bracket(qv, &args[i], &args[j])];
            if xs[0].is_zero() {
                continue;
            }
            xs.extend((0..args.len()).filter(|&k| k != i && k != j).map(|k| LieElement::basis(args[k].clone())));
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            out += q(s) * phi(&xs);
        }
    }
    out
}

/// `Σ_i φ(x_1, .., {f, x_i}, .., x_n)`: the action of `f` on a cochain,
/// up to sign.
pub fn action_defect(qv: &Quiver, c: &GraphCochain, f: &Necklace, args: &[Necklace]) -> Q {
    let mut out = Q::zero();
    for i in 0..args.len() {
        let b = bracket(qv, f, &args[i]);
        if b.is_zero() {
            continue;
        }
        let xs: Vec<LieElement> =
            args.iter().enumerate().map(|(k, n)| if k == i { b.clone() } else { LieElement::basis(n.clone()) }).collect();
        out += c.evaluate_lie(qv, &xs);
    }
    out
}

/// Orientable classes `Γ''` one edge above `Γ` (with valence at least 2),
/// each with the coefficient of `Γ` in `d Γ''`. `Γ` must be canonical.
pub fn coboundary_terms(g: &RibbonGraph) -> Result<Vec<(RibbonGraph, i64)>> {
    let key = code_of(g);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.expansions(2) {
        let c = canonical_form(&x).graph;
        if !seen.insert(code_of(&c)) || !orientable(&c) {
            continue;
        }
        let coef: i64 = boundary_terms(&c)?.iter().filter(|(t, _)| code_of(t) == key).map(|(_, s)| *s as i64).sum();
        if coef != 0 {
            out.push((c, coef));
        }
    }
    Ok(out)
}

/// Tuples on which `Γ` can pair nontrivially: every edge carries a letter
/// of `NQ` and its reverse, and each vertex reads off a necklace from its
/// ciliation. Assignments that do not compose are skipped.
pub fn pairing_tuples(qv: &Quiver, g: &RibbonGraph) -> Vec<Vec<Necklace>> {
    let letters: Vec<Letter> = qv.letters().collect();
    let e = g.num_edges();
    let verts = g.vertices();
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; e];
    let mut word = vec![Letter(0); g.num_half_edges()];
    if letters.is_empty() {
        return Vec::new();
    }
    'outer: loop {
        for k in 0..e {
            word[2 * k] = letters[idx[k]];
            word[2 * k + 1] = letters[idx[k]].rev();
        }
        let tuple: Option<Vec<Necklace>> =
            verts.iter().map(|c| Necklace::new(qv, c.iter().map(|&h| word[h]).collect()).ok()).collect();
        if let Some(t) = tuple {
            out.insert(t);
        }
        for k in 0..e {
            idx[k] += 1;
            if idx[k] < letters.len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::parse_necklace;
    use crate::ribbon::examples::*;

    #[test]
    fn vanishes_off_reverse_pairs() {
        let qv = Quiver::loops(&["e"]).multiply(2);
        let g = canonical_form(&torus_one_vertex()).graph;
        let n = parse_necklace(&qv, "(e#1 e#1 e#2 e#2)").unwrap();
        assert!(graph_cochain(&qv, &g, &[n]).unwrap().is_zero());
        assert!(graph_cochain(&qv, &g, &[parse_necklace(&qv, "(e#1 e#1)").unwrap()]).is_err());
    }

    #[test]
    fn one_vertex_torus_pairs_to_zero() {
        // its rotation swaps the two edges, so every pairing cancels
        let qv = Quiver::loops(&["e"]).multiply(2);
        let g = canonical_form(&torus_one_vertex()).graph;
        let c = GraphCochain::new(&g);
        let tuples = pairing_tuples(&qv, &g);
        assert!(!tuples.is_empty());
        for t in tuples {
            let refs: Vec<&Necklace> = t.iter().collect();
            assert!(c.evaluate(&qv, &refs).is_zero());
        }
    }

    #[test]
    fn trivalent_torus_pairs_nontrivially() {
        let qv = Quiver::loops(&["e"]).multiply(2);
        let lv = crate::ribbon::enumerate::unlabeled_levels(&crate::ribbon::EnumParams::new(1, 1, 3, 3)).unwrap();
        let g = &lv[&3][0];
        let c = GraphCochain::new(g);
        let hit = pairing_tuples(&qv, g).iter().any(|t| {
            let refs: Vec<&Necklace> = t.iter().collect();
            !c.evaluate(&qv, &refs).is_zero()
        });
        assert!(hit);
    }
}
