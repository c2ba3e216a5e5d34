//! Chain complexes spanned by oriented classes, with the contraction
//! differential `d(Γ, or) = Σ_e (Γ/e, or_e)` over non-loop edges.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canonical::{canonical_form, code_of};
use super::enumerate::{labeled_classes, unlabeled_levels, EnumParams};
use super::homology::SparseMatrix;
use super::orientation::{contract_oriented, orientable, relabel_sign};
use super::RibbonGraph;
use crate::error::{Error, Result};
use crate::quiver::AdjacencyGraph;

pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexParams {
    pub enumeration: EnumParams,
    /// `(G, X)` for a labeled complex; `X` is a sorted label multiset.
    pub labels: Option<(AdjacencyGraph, Vec<u32>)>,
}

impl ComplexParams {
    pub fn unlabeled(genus: usize, faces: usize, min_valence: usize, max_edges: usize) -> Self {
        ComplexParams { enumeration: EnumParams::new(genus, faces, min_valence, max_edges), labels: None }
    }

    pub fn labeled(p: EnumParams, adj: AdjacencyGraph, mut x: Vec<u32>) -> Self {
        x.sort();
        ComplexParams { enumeration: p, labels: Some((adj, x)) }
    }

    pub fn cache_key(&self) -> String {
        let p = &self.enumeration;
        let mut s = format!("v{CACHE_VERSION}-g{}-m{}-val{}-e{}", p.genus, p.faces, p.min_valence, p.top_edges());
        if let Some((adj, x)) = &self.labels {
            let xs: Vec<String> = x.iter().map(|v| v.to_string()).collect();
            s.push_str(&format!("-G{}-X{}", adj.key(), xs.join(".")));
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub params: ComplexParams,
    /// Orientable classes per degree (edge count), in canonical form; each
    /// stands for itself with its reference orientation.
    pub bases: BTreeMap<usize, Vec<RibbonGraph>>,
    /// Number of enumerated classes left out as nonorientable.
    pub nonorientable: BTreeMap<usize, usize>,
    /// `d_k : C_k → C_{k−1}`, present when both degrees are built.
    pub boundaries: BTreeMap<usize, SparseMatrix>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    key: String,
    levels: BTreeMap<usize, Vec<(Vec<usize>, Vec<u32>)>>,
}

fn cache_path(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!("ribbon-{key}.json"))
}

fn load_cache(dir: &Path, key: &str) -> Option<BTreeMap<usize, Vec<RibbonGraph>>> {
    let text = fs::read_to_string(cache_path(dir, key)).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.version != CACHE_VERSION || file.key != key {
        return None;
    }
    Some(
        file.levels
            .into_iter()
            .map(|(e, gs)| (e, gs.into_iter().map(|(g, l)| RibbonGraph::from_parts_unchecked(g, l)).collect()))
            .collect(),
    )
}

/// Writes through a temporary file and a rename, so readers never see a
/// partial file.
fn store_cache(dir: &Path, key: &str, levels: &BTreeMap<usize, Vec<RibbonGraph>>) -> Result<()> {
    fs::create_dir_all(dir)?;
    let file = CacheFile {
        version: CACHE_VERSION,
        key: key.to_string(),
        levels: levels
            .iter()
            .map(|(&e, gs)| (e, gs.iter().map(|g| (g.gamma().to_vec(), g.labels().to_vec())).collect()))
            .collect(),
    };
    let path = cache_path(dir, key);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&file)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// All enumerated classes per degree, orientable or not, through the cache
/// when a directory is given.
pub fn classes(p: &ComplexParams, cache: Option<&Path>) -> Result<BTreeMap<usize, Vec<RibbonGraph>>> {
    let key = p.cache_key();
    if let Some(dir) = cache {
        if let Some(levels) = load_cache(dir, &key) {
            return Ok(levels);
        }
    }
    let levels = match &p.labels {
        None => unlabeled_levels(&p.enumeration)?,
        Some((adj, x)) => {
            if x.len() != p.enumeration.faces {
                return Err(Error::Infeasible(format!("{} labels for {} faces", x.len(), p.enumeration.faces)));
            }
            if let Some(&bad) = x.iter().find(|&&v| v as usize >= adj.num_vertices()) {
                return Err(Error::Infeasible(format!("label {bad} is not a vertex of G")));
            }
            let base = ComplexParams { enumeration: p.enumeration, labels: None };
            let unl = classes(&base, cache)?;
            unl.iter().map(|(&e, gs)| (e, labeled_classes(gs, adj, x))).collect()
        }
    };
    if let Some(dir) = cache {
        store_cache(dir, &key, &levels)?;
    }
    Ok(levels)
}

pub fn build_complex(p: &ComplexParams, cache: Option<&Path>) -> Result<ChainComplex> {
    let levels = classes(p, cache)?;
    let mut bases = BTreeMap::new();
    let mut nonorientable = BTreeMap::new();
    for (e, gs) in levels {
        let flags: Vec<bool> = gs.par_iter().map(orientable).collect();
        let (keep, drop): (Vec<_>, Vec<_>) = gs.into_iter().zip(flags).partition(|(_, f)| *f);
        nonorientable.insert(e, drop.len());
        bases.insert(e, keep.into_iter().map(|(g, _)| g).collect::<Vec<_>>());
    }
    let mut boundaries = BTreeMap::new();
    for (&k, basis) in &bases {
        let Some(target) = bases.get(&(k.wrapping_sub(1))) else { continue };
        boundaries.insert(k, boundary_matrix(basis, target)?);
    }
    Ok(ChainComplex { params: p.clone(), bases, nonorientable, boundaries })
}

/// Boundary of one oriented class, as `(canonical target, sign)` terms.
/// Targets that are nonorientable are dropped.
pub fn boundary_terms(g: &RibbonGraph) -> Result<Vec<(RibbonGraph, i32)>> {
    let mut out = Vec::new();
    for e in 0..g.num_edges() {
        if g.is_loop(e) {
            continue;
        }
        let (h, s1) = contract_oriented(g, e)?;
        let c = canonical_form(&h);
        if !orientable(&c.graph) {
            continue;
        }
        let s2 = relabel_sign(&h, &c.relabel);
        out.push((c.graph, s1 * s2));
    }
    Ok(out)
}

pub fn boundary_matrix(source: &[RibbonGraph], target: &[RibbonGraph]) -> Result<SparseMatrix> {
    let index: HashMap<Vec<u32>, usize> = target.iter().enumerate().map(|(i, g)| (code_of(g), i)).collect();
    let cols: Vec<Result<Vec<(usize, i64)>>> = source
        .par_iter()
        .map(|g| {
            let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
            for (t, s) in boundary_terms(g)? {
                let Some(&i) = index.get(&code_of(&t)) else {
                    return Err(Error::InvalidGraph(format!(
                        "enumeration not closed under contraction: {} -> {}",
                        g.display(),
                        t.display()
                    )));
                };
                *acc.entry(i).or_default() += s as i64;
            }
            Ok(acc.into_iter().filter(|(_, v)| *v != 0).collect())
        })
        .collect();
    Ok(SparseMatrix { rows: target.len(), cols: cols.into_iter().collect::<Result<_>>()? })
}

impl ChainComplex {
    /// Degrees `k` where `d_{k−1} ∘ d_k ≠ 0`.
    pub fn d_squared_failures(&self) -> Vec<usize> {
        let mut bad = Vec::new();
        for (&k, dk) in &self.boundaries {
            if let Some(dk1) = self.boundaries.get(&(k - 1)) {
                if !dk1.compose(dk).is_zero() {
                    bad.push(k);
                }
            }
        }
        bad
    }

    pub fn dims(&self) -> BTreeMap<usize, usize> {
        self.bases.iter().map(|(&k, b)| (k, b.len())).collect()
    }

    /// Index of a class (any representative) in the basis of its degree.
    pub fn find(&self, g: &RibbonGraph) -> Option<(usize, usize)> {
        let c = canonical_form(g).graph;
        let k = c.num_edges();
        let key = code_of(&c);
        self.bases.get(&k)?.iter().position(|b| code_of(b) == key).map(|i| (k, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::homology::homology_ranks;

    #[test]
    fn small_complexes_square_to_zero() {
        for (g, m) in [(0, 3), (0, 4), (1, 1), (1, 2)] {
            for val in [2, 3] {
                let c = build_complex(&ComplexParams::unlabeled(g, m, val, 5), None).unwrap();
                assert!(c.d_squared_failures().is_empty(), "g={g} m={m} val={val}");
            }
        }
    }

    #[test]
    fn euler_characteristic_identity() {
        let c = build_complex(&ComplexParams::unlabeled(0, 4, 3, 6), None).unwrap();
        let rows = homology_ranks(&c);
        let (a, b) = crate::ribbon::homology::euler_characteristics(&rows);
        assert_eq!(a, b);
    }

    #[test]
    fn cache_round_trip() {
        let dir = std::env::temp_dir().join(format!("nlab-cache-test-{}", std::process::id()));
        let p = ComplexParams::unlabeled(1, 1, 3, 3);
        let a = build_complex(&p, Some(&dir)).unwrap();
        let b = build_complex(&p, Some(&dir)).unwrap();
        assert_eq!(a.bases, b.bases);
        fs::remove_dir_all(&dir).ok();
    }
}
