//! Orientations as orientations of `ℝ^{V ⊔ H}`.
//!
//! Since every `H_e` has two elements, `det ℝ^H = ⊗_e det ℝ^{H_e}`, so an
//! orientation of `ℝ^V ⊕ ⊗_e det ℝ^{H_e}` is a total order of `V ⊔ H` up to
//! even permutations. Items are numbered `0..V` for vertices (in the order
//! of `vertices()`) and `V + h` for half-edges; the reference orientation
//! of a graph is the identity order, and an oriented graph is a graph with
//! a sign relative to it.
//!
//! Two derived orderings matter downstream: blocks `[v, H_v in cyclic
//! order]` (swapping two blocks costs a sign iff both valences are even;
//! rotating a block costs a sign iff the valence is even) and
//! `[v_1..v_V, h_1, ι h_1, ...]` (vertex order plus edge orientations).

use super::canonical::canonical_form;
use super::RibbonGraph;
use crate::error::{Error, Result};

/// Sign of a permutation of `0..n` given as a sequence.
pub fn perm_sign(seq: &[usize]) -> i32 {
    let n = seq.len();
    let mut seen = vec![false; n];
    let mut sign = 1;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = seq[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Sign of a listing of the items of `g` relative to its reference order.
pub fn ordering_sign(g: &RibbonGraph, items: &[usize]) -> i32 {
    debug_assert_eq!(items.len(), g.num_vertices() + g.num_half_edges());
    perm_sign(items)
}

/// Item listing `[v, H_v, v', H_{v'}, ...]` for a vertex order and a
/// ciliation (starting half-edge) of each vertex.
pub fn block_items(g: &RibbonGraph, vertex_order: &[usize], cilia: &[usize]) -> Vec<usize> {
    let nv = g.num_vertices();
    let mut out = Vec::with_capacity(nv + g.num_half_edges());
    for (k, &v) in vertex_order.iter().enumerate() {
        out.push(v);
        let start = cilia[k];
        let mut h = start;
        loop {
            out.push(nv + h);
            h = g.gamma()[h];
            if h == start {
                break;
            }
        }
    }
    out
}

/// Item listing `[v_1..v_V, h_1, ι h_1, h_2, ι h_2, ...]` where `firsts`
/// lists one chosen half-edge per edge, in the chosen edge order.
pub fn edge_items(g: &RibbonGraph, vertex_order: &[usize], firsts: &[usize]) -> Vec<usize> {
    let nv = g.num_vertices();
    let mut out: Vec<usize> = vertex_order.to_vec();
    for &h in firsts {
        out.push(nv + h);
        out.push(nv + (h ^ 1));
    }
    out
}

fn vertex_map(g: &RibbonGraph, phi: &[usize]) -> Vec<usize> {
    let vof = g.vertex_of();
    g.vertices().iter().map(|c| vof[phi[c[0]]]).collect()
}

/// Sign of an automorphism on `det ℝ^{V ⊔ H}`.
pub fn automorphism_sign(g: &RibbonGraph, phi: &[usize]) -> i32 {
    perm_sign(&vertex_map(g, phi)) * perm_sign(phi)
}

/// Sign of an automorphism on `det(ℝ^E ⊕ ℝ^F)`, the defining form.
pub fn automorphism_sign_ef(g: &RibbonGraph, phi: &[usize]) -> i32 {
    let edges: Vec<usize> = (0..g.num_edges()).map(|k| phi[2 * k] / 2).collect();
    let fof = g.face_of();
    let faces: Vec<usize> = g.faces().iter().map(|f| fof[phi[f[0]]]).collect();
    perm_sign(&edges) * perm_sign(&faces)
}

/// No automorphism reverses the orientation.
pub fn orientable(g: &RibbonGraph) -> bool {
    canonical_form(g).automorphisms.iter().all(|phi| automorphism_sign(g, phi) == 1)
}

/// Sign carried by a relabeling `h ↦ p[h]`: the reference orientation of
/// `g`, transported, compared with the reference orientation of the image.
pub fn relabel_sign(g: &RibbonGraph, p: &[usize]) -> i32 {
    let image = super::canonical::relabeled(g, p);
    let nv = g.num_vertices();
    let vof_new = image.vertex_of();
    let mut items = Vec::with_capacity(nv + p.len());
    for c in g.vertices() {
        items.push(vof_new[p[c[0]]]);
    }
    for &x in p {
        items.push(nv + x);
    }
    perm_sign(&items)
}

/// `Γ/e` with the orientation induced from the reference orientation of
/// `Γ`: writing it as `±[v_1, h_1, v_2, h_2, rest]` with `e = {h_1, h_2}`,
/// the contracted graph gets `±[w, rest]`. The order within the edge does
/// not matter, since swapping the two pairs is even.
pub fn contract_oriented(g: &RibbonGraph, edge: usize) -> Result<(RibbonGraph, i32)> {
    let out = g.contract(edge)?;
    let nv = g.num_vertices();
    let vof = g.vertex_of();
    let (h1, h2) = (2 * edge, 2 * edge + 1);
    let (v1, v2) = (vof[h1], vof[h2]);
    let head = [v1, nv + h1, v2, nv + h2];
    let mut seq: Vec<usize> = head.to_vec();
    seq.extend((0..nv + g.num_half_edges()).filter(|x| !head.contains(x)));
    let s1 = perm_sign(&seq);

    // Map the surviving items into the contracted graph.
    let shift = |h: usize| if h > h2 { h - 2 } else { h };
    let nv2 = out.num_vertices();
    let vof2 = out.vertex_of();
    let verts = g.vertices();
    let rep = verts[v1].iter().chain(&verts[v2]).find(|&&h| h != h1 && h != h2);
    let Some(&rep) = rep else {
        return Err(Error::InvalidGraph("contraction leaves an empty vertex".into()));
    };
    let mut mapped = vec![vof2[shift(rep)]];
    for &x in &seq[4..] {
        if x < nv {
            mapped.push(vof2[shift(verts[x][0])]);
        } else {
            mapped.push(nv2 + shift(x - nv));
        }
    }
    Ok((out, s1 * perm_sign(&mapped)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::examples::*;

    #[test]
    fn two_vertex_four_edge_is_nonorientable() {
        let g = planar_two_vertex_four_edge();
        assert!(!orientable(&g));
    }

    #[test]
    fn orientability_examples() {
        assert!(orientable(&polygon(3)));
        assert!(orientable(&theta()));
        assert!(!orientable(&circle()));
        // asymmetric after labeling: trivial automorphism group
        let d = dumbbell();
        let fof = d.face_of();
        assert_eq!(d.num_faces(), 3);
        let lab = d.with_labels(fof.iter().map(|&f| f as u32).collect()).unwrap();
        assert_eq!(canonical_form(&lab).automorphisms.len(), 1);
        assert!(orientable(&lab));
    }

    #[test]
    fn two_models_agree_on_automorphisms() {
        for g in [theta(), dumbbell(), torus_one_vertex(), planar_two_vertex_four_edge(), polygon(3), polygon(4)] {
            for phi in canonical_form(&g).automorphisms {
                assert_eq!(automorphism_sign(&g, &phi), automorphism_sign_ef(&g, &phi), "{}", g.display());
            }
        }
    }

    #[test]
    fn block_rotation_sign_tracks_valence() {
        let g = theta();
        let base = block_items(&g, &[0, 1], &[0, 1]);
        let rot = block_items(&g, &[0, 1], &[2, 1]);
        assert_eq!(perm_sign(&base), perm_sign(&rot));
        let p = planar_two_vertex_four_edge();
        let base = block_items(&p, &[0, 1], &[0, 1]);
        let rot = block_items(&p, &[0, 1], &[2, 1]);
        assert_eq!(perm_sign(&base), -perm_sign(&rot));
        let swapped = block_items(&p, &[1, 0], &[1, 0]);
        assert_eq!(perm_sign(&base), -perm_sign(&swapped));
    }
}
