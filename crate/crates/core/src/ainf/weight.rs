//! Weights `W(Γ, or)` by graded contraction, and the chain
//! `Σ W(Γ, or)/|Aut Γ| (Γ, or)` over isomorphism classes.
//!
//! For a vertex order and a ciliation, `M = ⊗_v m̃_v` has its slots labeled
//! by half-edges; for an edge order and orientation, so does `C^{⊗E}`.
//! The vectors of `C^{⊗E}` are moved into the slot order of `M` with Koszul
//! signs and `M` is applied (functionals first), with the sign
//! `(−1)^{|f_j||x_i|}` for each block `x_i` passing a functional `f_j`,
//! `i < j`. Slot `h` lives in `V_{λ(h), λ(γh)}` where `λ` is the face label.
//! The result is multiplied by the sign of the ordering
//! `[v, H_v in cyclic order, ...]` against the orientation, which makes it
//! independent of all choices.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use super::CyclicAInf;
use crate::error::{Error, Result};
use crate::poly::Q;
use crate::ribbon::canonical::canonical_form;
use crate::ribbon::complex::{build_complex, ChainComplex, ComplexParams};
use crate::ribbon::orientation::{block_items, ordering_sign, perm_sign};
use crate::ribbon::RibbonGraph;

/// The choices entering one evaluation of the contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Choices {
    /// Vertices (indices into `vertices()`) in order.
    pub vertex_order: Vec<usize>,
    /// Starting half-edge of each vertex, aligned with `vertex_order`.
    pub cilia: Vec<usize>,
    /// One half-edge per edge, in edge order.
    pub edge_firsts: Vec<usize>,
}

impl Choices {
    pub fn reference(g: &RibbonGraph) -> Self {
        let verts = g.vertices();
        Choices {
            vertex_order: (0..verts.len()).collect(),
            cilia: verts.iter().map(|c| c[0]).collect(),
            edge_firsts: (0..g.num_edges()).map(|k| 2 * k).collect(),
        }
    }

    pub fn random<R: Rng>(g: &RibbonGraph, rng: &mut R) -> Self {
        let verts = g.vertices();
        let mut vertex_order: Vec<usize> = (0..verts.len()).collect();
        vertex_order.shuffle(rng);
        let cilia = vertex_order.iter().map(|&v| *verts[v].choose(rng).expect("nonempty")).collect();
        let mut edge_firsts: Vec<usize> = (0..g.num_edges()).map(|k| 2 * k + rng.gen_range(0..2)).collect();
        edge_firsts.shuffle(rng);
        Choices { vertex_order, cilia, edge_firsts }
    }
}

struct Layout<'a> {
    data: &'a CyclicAInf,
    g: &'a RibbonGraph,
    /// Slot order of `M`: half-edges block by block.
    slots: Vec<usize>,
    pos: Vec<usize>,
    blocks: Vec<std::ops::Range<usize>>,
    block_objects: Vec<Vec<usize>>,
    /// Index into `edge_firsts` after which each block is complete.
    ready_after: Vec<usize>,
    firsts: Vec<usize>,
}

impl Layout<'_> {
    fn parity(&self, h: usize, b: usize) -> usize {
        let lab = |x: usize| self.g.label(x) as usize;
        self.data.parities(lab(h), lab(self.g.gamma()[h])).expect("checked")[b] as usize
    }

    fn block_value(&self, k: usize, basis: &[usize]) -> Q {
        let ix: Vec<usize> = self.slots[self.blocks[k].clone()].iter().map(|&h| basis[h]).collect();
        self.data.m_tilde(&self.block_objects[k], &ix)
    }

    fn sign(&self, basis: &[usize]) -> i32 {
        let par: Vec<usize> = (0..basis.len()).map(|h| self.parity(h, basis[h])).collect();
        // Koszul sign of moving [h_1, ι h_1, h_2, ...] into slot order
        let seq: Vec<usize> = self.firsts.iter().flat_map(|&h| [h, h ^ 1]).collect();
        let mut exp = 0;
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if self.pos[seq[i]] > self.pos[seq[j]] {
                    exp += par[seq[i]] * par[seq[j]];
                }
            }
        }
        // functionals first
        let block_par: Vec<usize> = self.blocks.iter().map(|r| self.slots[r.clone()].iter().map(|&h| par[h]).sum()).collect();
        for i in 0..self.blocks.len() {
            for j in i + 1..self.blocks.len() {
                exp += ((self.blocks[j].len() - 1) % 2) * block_par[i];
            }
        }
        if exp % 2 == 0 {
            1
        } else {
            -1
        }
    }

    fn search(&self, t: usize, basis: &mut Vec<usize>, coef: Q, out: &mut Q) {
        if t == self.firsts.len() {
            *out += coef * Q::from_integer(self.sign(basis).into());
            return;
        }
        let h = self.firsts[t];
        let lab = |x: usize| self.g.label(x) as usize;
        let c = self.data.inverse_form(lab(h), lab(self.g.gamma()[h])).expect("checked");
        for (a, row) in c.iter().enumerate() {
            for (b, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                basis[h] = a;
                basis[h ^ 1] = b;
                let mut next = &coef * x;
                for k in 0..self.blocks.len() {
                    if self.ready_after[k] == t && !next.is_zero() {
                        next *= self.block_value(k, basis);
                    }
                }
                if !next.is_zero() {
                    self.search(t + 1, basis, next, out);
                }
            }
        }
    }
}

/// The bare contraction `⟨M, C^{⊗E}⟩` for given choices, without the
/// orientation sign.
pub fn contraction(g: &RibbonGraph, data: &CyclicAInf, ch: &Choices) -> Result<Q> {
    let n_obj = data.objects().len();
    for h in 0..g.num_half_edges() {
        let (i, k) = (g.label(h) as usize, g.label(g.gamma()[h]) as usize);
        if i >= n_obj || k >= n_obj {
            return Err(Error::InvalidData(format!("face label {} is not an object", i.max(k))));
        }
        if data.dim(i, k) == 0 {
            return Err(Error::InvalidData(format!(
                "faces labeled {} and {} meet, but the space between them is zero",
                data.objects()[i],
                data.objects()[k]
            )));
        }
    }
    let mut slots = Vec::with_capacity(g.num_half_edges());
    let mut blocks = Vec::new();
    let mut block_objects = Vec::new();
    for &c in &ch.cilia {
        let start = slots.len();
        let mut h = c;
        loop {
            slots.push(h);
            h = g.gamma()[h];
            if h == c {
                break;
            }
        }
        blocks.push(start..slots.len());
        block_objects.push(slots[start..].iter().map(|&h| g.label(h) as usize).collect::<Vec<_>>());
    }
    if block_objects.iter().any(|o| data.m_tilde_table(o).is_none()) {
        return Ok(Q::zero());
    }
    let mut pos = vec![0; slots.len()];
    for (i, &h) in slots.iter().enumerate() {
        pos[h] = i;
    }
    let mut edge_index = vec![0; g.num_edges()];
    for (t, &h) in ch.edge_firsts.iter().enumerate() {
        edge_index[h / 2] = t;
    }
    let ready_after = blocks.iter().map(|r| slots[r.clone()].iter().map(|&h| edge_index[h / 2]).max().expect("nonempty")).collect();
    let layout = Layout { data, g, slots, pos, blocks, block_objects, ready_after, firsts: ch.edge_firsts.clone() };
    let mut raw = Q::zero();
    layout.search(0, &mut vec![0; g.num_half_edges()], Q::one(), &mut raw);
    Ok(raw)
}

/// Weight for given choices, normalized to the reference orientation.
pub fn weight_with(g: &RibbonGraph, data: &CyclicAInf, ch: &Choices) -> Result<Q> {
    let raw = contraction(g, data, ch)?;
    let eps = perm_sign(&block_items(g, &ch.vertex_order, &ch.cilia));
    Ok(if eps == 1 { raw } else { -raw })
}

pub fn weight(g: &RibbonGraph, data: &CyclicAInf) -> Result<Q> {
    weight_with(g, data, &Choices::reference(g))
}

/// Weight for the orientation given by an ordering of the items of `g`.
pub fn weight_oriented(g: &RibbonGraph, items: &[usize], data: &CyclicAInf) -> Result<Q> {
    if items.len() != g.num_vertices() + g.num_half_edges() {
        return Err(Error::InvalidData(format!("orientation lists {} items", items.len())));
    }
    let w = weight(g, data)?;
    Ok(if ordering_sign(g, items) == 1 { w } else { -w })
}

/// The chain on the basis of each degree. Classes carry `W/|Aut Γ|`: the
/// boundary counts each contracted edge of a class once, so this is the
/// normalization in which expansions of a vertex are summed once each.
#[derive(Clone, Debug)]
pub struct Cycle {
    pub complex: ChainComplex,
    pub coefficients: BTreeMap<usize, Vec<Q>>,
}

impl Cycle {
    pub fn is_zero(&self) -> bool {
        self.coefficients.values().flatten().all(Zero::is_zero)
    }
}

pub fn build_cycle(p: &ComplexParams, data: &CyclicAInf, cache: Option<&Path>) -> Result<Cycle> {
    let complex = build_complex(p, cache)?;
    let mut coefficients = BTreeMap::new();
    for (&k, basis) in &complex.bases {
        let w: Vec<Q> = basis
            .par_iter()
            .map(|g| Ok(weight(g, data)? / Q::from_integer((canonical_form(g).automorphisms.len() as i64).into())))
            .collect::<Result<_>>()?;
        coefficients.insert(k, w);
    }
    Ok(Cycle { complex, coefficients })
}

/// `d` of the chain, per target degree.
pub fn cycle_boundary(c: &Cycle) -> BTreeMap<usize, Vec<Q>> {
    let mut out = BTreeMap::new();
    for (&k, d) in &c.complex.boundaries {
        let coef = &c.coefficients[&k];
        let mut v = vec![Q::zero(); d.rows];
        for (j, col) in d.cols.iter().enumerate() {
            if coef[j].is_zero() {
                continue;
            }
            for &(i, x) in col {
                v[i] += &coef[j] * Q::from_integer(x.into());
            }
        }
        out.insert(k - 1, v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainf::examples::*;
    use crate::ribbon::examples::*;

    #[test]
    fn theta_over_the_ground_field() {
        let w = weight(&canonical_form(&theta()).graph, &ground_field()).unwrap();
        assert!(w == Q::one() || w == -Q::one(), "{w}");
        // valence 2 needs m_1, which is zero
        assert!(weight(&polygon(3), &ground_field()).unwrap().is_zero());
    }

    #[test]
    fn choices_do_not_matter() {
        let mut r = crate::verify::rng(1);
        for data in [dual_numbers(), exterior_two()] {
            for g in [theta(), dumbbell()] {
                let w = weight(&g, &data).unwrap();
                for _ in 0..20 {
                    assert_eq!(weight_with(&g, &data, &Choices::random(&g, &mut r)).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn reversed_orientation_negates() {
        let g = theta();
        let n = g.num_vertices() + g.num_half_edges();
        let mut items: Vec<usize> = (0..n).collect();
        let w = weight_oriented(&g, &items, &ground_field()).unwrap();
        items.swap(0, 1);
        assert_eq!(weight_oriented(&g, &items, &ground_field()).unwrap(), -w);
    }

    /// Exterior data plus a cyclic `m̃_3` (not an A∞ structure, only used
    /// to exercise four-valent vertices).
    fn with_quartic() -> CyclicAInf {
        use crate::ainf::{ProductJson, Scalar};
        let mut j = exterior_two().to_json_struct();
        let par = [0usize, 1, 1, 0];
        let mut values: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for code in 0..256usize {
            let t: Vec<usize> = (0..4).map(|k| (code >> (2 * k)) & 3).collect();
            if values.contains_key(&t) || t.iter().map(|&x| par[x]).sum::<usize>() % 2 == 0 {
                continue;
            }
            let (mut v, mut val, mut orbit) = (t.clone(), 1i64, Vec::new());
            loop {
                orbit.push((v.clone(), val));
                let rest: usize = v[1..].iter().map(|&x| par[x]).sum();
                if (3 + par[v[0]] * rest) % 2 == 1 {
                    val = -val;
                }
                v.rotate_left(1);
                if v == t {
                    break;
                }
            }
            let consistent = val == 1;
            for (v, x) in orbit {
                values.insert(v, if consistent { x } else { 0 });
            }
        }
        let entries = values.into_iter().filter(|e| e.1 != 0).map(|(ix, x)| (ix, Scalar::Int(x))).collect();
        j.products.push(ProductJson { objects: vec!["v".into(); 4], entries });
        CyclicAInf::from_json_struct(&j).unwrap()
    }

    #[test]
    fn swapping_vertices_of_even_valence_flips_the_contraction() {
        let data = with_quartic();
        assert!(crate::ainf::cyclicity_check(&data).passed());
        let swap = |ch: &Choices| Choices {
            vertex_order: vec![ch.vertex_order[1], ch.vertex_order[0]],
            cilia: vec![ch.cilia[1], ch.cilia[0]],
            edge_firsts: ch.edge_firsts.clone(),
        };
        let g = canonical_form(&theta()).graph;
        let ch = Choices::reference(&g);
        let a = contraction(&g, &ground_field(), &ch).unwrap();
        assert!(!a.is_zero());
        assert_eq!(contraction(&g, &ground_field(), &swap(&ch)).unwrap(), a);

        let mut graphs = Vec::new();
        for (genus, faces) in [(0, 4), (1, 2)] {
            let levels = crate::ribbon::complex::classes(&ComplexParams::unlabeled(genus, faces, 3, 4), None).unwrap();
            graphs.extend(levels[&4].iter().filter(|g| g.valences() == [4, 4]).cloned());
        }
        let mut seen = 0;
        for g in &graphs {
            let ch = Choices::reference(g);
            let a = contraction(g, &data, &ch).unwrap();
            if !a.is_zero() {
                seen += 1;
                assert_eq!(contraction(g, &data, &swap(&ch)).unwrap(), -a);
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn zero_products_give_zero() {
        let mut j = dual_numbers().to_json_struct();
        j.products.clear();
        let zero = CyclicAInf::from_json_struct(&j).unwrap();
        let c = build_cycle(&ComplexParams::unlabeled(0, 3, 3, 4), &zero, None).unwrap();
        assert!(c.is_zero());
        // valence two would need m_1
        assert!(weight(&circle(), &dual_numbers()).unwrap().is_zero());
    }

    #[test]
    fn labels_must_meet_the_data() {
        let g = theta().with_labels(vec![0; 6]).unwrap();
        assert!(weight(&g, &single_edge_category()).is_err());
    }
}
