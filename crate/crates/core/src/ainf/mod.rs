//! Finite-dimensional cyclic A∞ categories with an even inner product,
//! whose objects are the vertices of a graph `G` and whose morphisms
//! between non-adjacent objects vanish.
//!
//! Products are given by the cyclic tensors `m̃_n` on
//! `V_{i_1 i_2} ⊗ ⋯ ⊗ V_{i_{n+1} i_1}`; the maps `m_n` are recovered through
//! the inverse of the pairing.

pub mod examples;
pub mod weight;

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{fmt_q, Q};
use crate::quiver::AdjacencyGraph;
use crate::verify::Check;

pub use weight::{build_cycle, cycle_boundary, weight, weight_with, Choices, Cycle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn parse(&self) -> Result<Q> {
        match self {
            Scalar::Int(n) => Ok(crate::poly::q(*n)),
            Scalar::Text(s) => {
                let bad = || Error::InvalidData(format!("bad scalar `{s}`"));
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s.trim(), "1"),
                };
                let n: num_bigint::BigInt = n.parse().map_err(|_| bad())?;
                let d: num_bigint::BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(Q::new(n, d))
            }
        }
    }

    fn from_q(x: &Q) -> Self {
        if x.is_integer() {
            if let Ok(n) = x.numer().to_string().parse::<i64>() {
                return Scalar::Int(n);
            }
        }
        Scalar::Text(fmt_q(x))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub from: String,
    pub to: String,
    pub parities: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingJson {
    pub from: String,
    pub to: String,
    pub matrix: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub objects: Vec<String>,
    pub entries: Vec<(Vec<usize>, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AInfJson {
    pub objects: Vec<String>,
    pub spaces: Vec<SpaceJson>,
    pub pairings: Vec<PairingJson>,
    pub products: Vec<ProductJson>,
}

type Matrix = Vec<Vec<Q>>;

/// A validated data set.
#[derive(Clone, Debug)]
pub struct CyclicAInf {
    objects: Vec<String>,
    spaces: BTreeMap<(usize, usize), Vec<u8>>,
    /// `pairings[(i, j)][a][b] = ⟨a, b⟩` for `a ∈ V_ij`, `b ∈ V_ji`.
    pairings: BTreeMap<(usize, usize), Matrix>,
    /// `inverses[(i, j)]`: the inverse form `C` restricted to
    /// `V_ij ⊗ V_ji`, i.e. the inverse matrix of the pairing on `(j, i)`.
    inverses: BTreeMap<(usize, usize), Matrix>,
    /// `m̃` by object cycle `(i_1, .., i_{n+1})`, sparse in basis indices.
    products: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, Q>>,
}

fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

impl CyclicAInf {
    pub fn from_json_struct(j: &AInfJson) -> Result<Self> {
        let objects = j.objects.clone();
        let idx = |s: &str| -> Result<usize> {
            objects.iter().position(|o| o == s).ok_or_else(|| Error::InvalidData(format!("unknown object `{s}`")))
        };
        let mut spaces = BTreeMap::new();
        for s in &j.spaces {
            let key = (idx(&s.from)?, idx(&s.to)?);
            if s.parities.iter().any(|&p| p > 1) {
                return Err(Error::InvalidData(format!("parities of {}->{} must be 0 or 1", s.from, s.to)));
            }
            if s.parities.is_empty() {
                continue;
            }
            if spaces.insert(key, s.parities.clone()).is_some() {
                return Err(Error::InvalidData(format!("space {}->{} given twice", s.from, s.to)));
            }
        }
        for &(i, k) in spaces.keys() {
            if !spaces.contains_key(&(k, i)) {
                return Err(Error::InvalidData(format!(
                    "space {}->{} has no partner {}->{}",
                    objects[i], objects[k], objects[k], objects[i]
                )));
            }
        }
        let mut given: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
        for p in &j.pairings {
            let key = (idx(&p.from)?, idx(&p.to)?);
            let m: Matrix = p.matrix.iter().map(|r| r.iter().map(Scalar::parse).collect()).collect::<Result<_>>()?;
            given.insert(key, m);
        }
        let mut pairings = BTreeMap::new();
        for (&(i, k), pa) in &spaces {
            let pb = &spaces[&(k, i)];
            let m = match (given.get(&(i, k)), given.get(&(k, i))) {
                (Some(m), _) => m.clone(),
                (None, Some(t)) => {
                    // ⟨a, b⟩ = (−1)^{|a||b|} ⟨b, a⟩
                    (0..pa.len())
                        .map(|a| {
                            (0..pb.len())
                                .map(|b| {
                                    let x = t.get(b).and_then(|r| r.get(a)).cloned().unwrap_or_default();
                                    if pa[a] * pb[b] == 1 {
                                        -x
                                    } else {
                                        x
                                    }
                                })
                                .collect()
                        })
                        .collect()
                }
                (None, None) => {
                    return Err(Error::InvalidData(format!("no pairing between {} and {}", objects[i], objects[k])))
                }
            };
            if m.len() != pa.len() || m.iter().any(|r| r.len() != pb.len()) {
                return Err(Error::InvalidData(format!("pairing {}->{} has the wrong shape", objects[i], objects[k])));
            }
            for a in 0..pa.len() {
                for b in 0..pb.len() {
                    if pa[a] != pb[b] && !m[a][b].is_zero() {
                        return Err(Error::InvalidData(format!("pairing {}->{} is not even", objects[i], objects[k])));
                    }
                }
            }
            pairings.insert((i, k), m);
        }
        for (&(i, k), m) in &pairings {
            let t = &pairings[&(k, i)];
            let (pa, pb) = (&spaces[&(i, k)], &spaces[&(k, i)]);
            for a in 0..pa.len() {
                for b in 0..pb.len() {
                    let s = if pa[a] * pb[b] == 1 { -t[b][a].clone() } else { t[b][a].clone() };
                    if m[a][b] != s {
                        return Err(Error::InvalidData(format!(
                            "pairings {}->{} and back are not graded symmetric",
                            objects[i], objects[k]
                        )));
                    }
                }
            }
        }
        let mut inverses = BTreeMap::new();
        for (&(i, k), m) in &pairings {
            let inv = inverse(m)
                .ok_or_else(|| Error::InvalidData(format!("pairing {}->{} is degenerate", objects[i], objects[k])))?;
            inverses.insert((k, i), inv);
        }
        let mut products: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, Q>> = BTreeMap::new();
        for p in &j.products {
            let objs: Vec<usize> = p.objects.iter().map(|s| idx(s)).collect::<Result<_>>()?;
            let n = objs.len();
            if n < 3 {
                return Err(Error::InvalidData("products need at least three slots (m_1 = 0)".into()));
            }
            let mut dims = Vec::with_capacity(n);
            let mut pars = Vec::with_capacity(n);
            for s in 0..n {
                let key = (objs[s], objs[(s + 1) % n]);
                let Some(sp) = spaces.get(&key) else {
                    return Err(Error::InvalidData(format!(
                        "product on {:?} uses the zero space {}->{}",
                        p.objects, objects[key.0], objects[key.1]
                    )));
                };
                dims.push(sp.len());
                pars.push(sp.clone());
            }
            let slot = products.entry(objs.clone()).or_default();
            for (ix, c) in &p.entries {
                let c = c.parse()?;
                if ix.len() != n || ix.iter().zip(&dims).any(|(&i, &d)| i >= d) {
                    return Err(Error::InvalidData(format!("entry {ix:?} out of range for {:?}", p.objects)));
                }
                let parity: usize = ix.iter().zip(&pars).map(|(&i, ps)| ps[i] as usize).sum();
                if !c.is_zero() && parity % 2 != (n - 1) % 2 {
                    return Err(Error::InvalidData(format!(
                        "entry {ix:?} of {:?} has the wrong parity for m_{}",
                        p.objects,
                        n - 1
                    )));
                }
                if !c.is_zero() {
                    *slot.entry(ix.clone()).or_default() += c;
                }
            }
        }
        Ok(CyclicAInf { objects, spaces, pairings, inverses, products })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let j: AInfJson = serde_json::from_str(s)?;
        Self::from_json_struct(&j)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_struct(&self) -> AInfJson {
        let name = |i: usize| self.objects[i].clone();
        AInfJson {
            objects: self.objects.clone(),
            spaces: self
                .spaces
                .iter()
                .map(|(&(i, k), p)| SpaceJson { from: name(i), to: name(k), parities: p.clone() })
                .collect(),
            pairings: self
                .pairings
                .iter()
                .filter(|(&(i, k), _)| i <= k)
                .map(|(&(i, k), m)| PairingJson {
                    from: name(i),
                    to: name(k),
                    matrix: m.iter().map(|r| r.iter().map(Scalar::from_q).collect()).collect(),
                })
                .collect(),
            products: self
                .products
                .iter()
                .map(|(objs, e)| ProductJson {
                    objects: objs.iter().map(|&i| name(i)).collect(),
                    entries: e.iter().map(|(ix, c)| (ix.clone(), Scalar::from_q(c))).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_struct()).expect("serializable")
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.objects.iter().position(|o| o == name).ok_or_else(|| Error::InvalidData(format!("unknown object `{name}`")))
    }

    /// `G`: objects are adjacent when the morphism spaces between them are
    /// nonzero.
    pub fn adjacency(&self) -> AdjacencyGraph {
        let pairs: Vec<(usize, usize)> = self.spaces.keys().copied().collect();
        AdjacencyGraph::new(self.objects.len(), &pairs)
    }

    pub fn parities(&self, i: usize, k: usize) -> Option<&[u8]> {
        self.spaces.get(&(i, k)).map(Vec::as_slice)
    }

    pub fn dim(&self, i: usize, k: usize) -> usize {
        self.spaces.get(&(i, k)).map_or(0, Vec::len)
    }

    /// `C` on `V_ij ⊗ V_ji`.
    pub fn inverse_form(&self, i: usize, k: usize) -> Option<&Matrix> {
        self.inverses.get(&(i, k))
    }

    pub fn pairing(&self, i: usize, k: usize) -> Option<&Matrix> {
        self.pairings.get(&(i, k))
    }

    /// Arities `n` (valence `n + 1`) with a nonzero tensor.
    pub fn arities(&self) -> BTreeSet<usize> {
        self.products.iter().filter(|(_, e)| !e.is_empty()).map(|(o, _)| o.len() - 1).collect()
    }

    /// `m̃(v_1, .., v_{n+1})` for basis indices along an object cycle.
    pub fn m_tilde(&self, objs: &[usize], ix: &[usize]) -> Q {
        self.products.get(objs).and_then(|e| e.get(ix)).cloned().unwrap_or_default()
    }

    pub fn m_tilde_table(&self, objs: &[usize]) -> Option<&BTreeMap<Vec<usize>, Q>> {
        self.products.get(objs)
    }

    /// `m_n(v_1, .., v_n) ∈ V_{i_1 i_{n+1}}` along objects `i_1..i_{n+1}`;
    /// `None` when that space is zero.
    pub fn m(&self, objs: &[usize], ix: &[usize]) -> Option<Vec<Q>> {
        let (first, last) = (objs[0], *objs.last().expect("nonempty"));
        let out_dim = self.dim(first, last);
        if out_dim == 0 {
            return None;
        }
        let c = &self.inverses[&(last, first)];
        let table = self.products.get(objs);
        let mut out = vec![Q::zero(); out_dim];
        let Some(table) = table else { return Some(out) };
        let mut key = ix.to_vec();
        key.push(0);
        for b in 0..c.len() {
            *key.last_mut().expect("nonempty") = b;
            let Some(x) = table.get(&key) else { continue };
            for (a, o) in out.iter_mut().enumerate() {
                if !c[b][a].is_zero() {
                    *o += x * &c[b][a];
                }
            }
        }
        Some(out)
    }

    /// Object sequences `i_1..i_len` with every consecutive space nonzero.
    fn paths(&self, len: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.objects.len()).map(|i| vec![i]).collect();
        for _ in 1..len {
            out = out
                .into_iter()
                .flat_map(|p| {
                    let last = *p.last().expect("nonempty");
                    (0..self.objects.len()).filter(move |&k| self.dim(last, k) > 0).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn basis_tuples(&self, objs: &[usize], closed: bool) -> Vec<Vec<usize>> {
        let n = objs.len();
        let slots = if closed { n } else { n - 1 };
        let dims: Vec<usize> = (0..slots).map(|s| self.dim(objs[s], objs[(s + 1) % n])).collect();
        let mut out = vec![Vec::new()];
        for d in dims {
            out = out.into_iter().flat_map(|t| (0..d).map(move |i| [t.clone(), vec![i]].concat())).collect();
        }
        out
    }
}

/// The A∞ relations `Σ_{k,ℓ} (−1)^{ℓ(d_1+⋯+d_k)+(k+1)(ℓ+1)}
/// m_{n−ℓ+1}(1^k ⊗ m_ℓ ⊗ 1^{n−ℓ−k}) = 0` for `3 <= n <= n_max`, on basis
/// inputs along every object path; `m_1 = 0`.
pub fn check_ainf(data: &CyclicAInf, n_max: usize) -> Check {
    let mut check = Check::new("ainf-relations");
    for n in 3..=n_max {
        for objs in data.paths(n + 1) {
            if data.dim(objs[0], objs[n]) == 0 {
                continue;
            }
            for ix in data.basis_tuples(&objs, false) {
                let total = ainf_defect(data, &objs, &ix);
                let ok = total.iter().all(Zero::is_zero);
                check.record(ok, || {
                    let names: Vec<&str> = objs.iter().map(|&i| data.objects[i].as_str()).collect();
                    format!("n={n} objects {names:?} inputs {ix:?}: {:?}", total.iter().map(fmt_q).collect::<Vec<_>>())
                });
            }
        }
    }
    check
}

fn ainf_defect(data: &CyclicAInf, objs: &[usize], ix: &[usize]) -> Vec<Q> {
    let n = ix.len();
    let parity = |s: usize| data.spaces[&(objs[s], objs[s + 1])][ix[s]] as usize;
    let mut total = vec![Q::zero(); data.dim(objs[0], objs[n])];
    for l in 2..n {
        for k in 0..=n - l {
            let d: usize = (0..k).map(parity).sum();
            let sign = if (l * d + (k + 1) * (l + 1)) % 2 == 0 { Q::one() } else { -Q::one() };
            let Some(inner) = data.m(&objs[k..=k + l], &ix[k..k + l]) else { continue };
            let mut outer_objs = objs[..=k].to_vec();
            outer_objs.extend_from_slice(&objs[k + l..]);
            for (w, c) in inner.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut outer_ix = ix[..k].to_vec();
                outer_ix.push(w);
                outer_ix.extend_from_slice(&ix[k + l..]);
                if let Some(v) = data.m(&outer_objs, &outer_ix) {
                    for (t, x) in total.iter_mut().zip(v) {
                        *t += &sign * c * x;
                    }
                }
            }
        }
    }
    total
}

/// `m̃_n(v_2, .., v_{n+1}, v_1) = (−1)^{n + d_1(d_2+⋯+d_{n+1})} m̃_n(v_1, ..,
/// v_{n+1})` on every basis tuple of every closed object sequence.
pub fn cyclicity_check(data: &CyclicAInf) -> Check {
    let mut check = Check::new("cyclicity");
    let mut lens: BTreeSet<usize> = data.products.keys().map(Vec::len).collect();
    lens.retain(|&l| l >= 3);
    for len in lens {
        let n = len - 1;
        for objs in data.paths(len) {
            if data.dim(objs[len - 1], objs[0]) == 0 {
                continue;
            }
            let mut rot_objs = objs[1..].to_vec();
            rot_objs.push(objs[0]);
            for ix in data.basis_tuples(&objs, true) {
                let par = |s: usize| data.spaces[&(objs[s], objs[(s + 1) % len])][ix[s]] as usize;
                let rest: usize = (1..len).map(par).sum();
                let sign = (n + par(0) * rest) % 2;
                let mut rot_ix = ix[1..].to_vec();
                rot_ix.push(ix[0]);
                let a = data.m_tilde(&objs, &ix);
                let b = data.m_tilde(&rot_objs, &rot_ix);
                let expect = if sign == 0 { a.clone() } else { -a.clone() };
                check.record(b == expect, || {
                    let names: Vec<&str> = objs.iter().map(|&i| data.objects[i].as_str()).collect();
                    format!("objects {names:?} inputs {ix:?}: rotated {} expected {}", fmt_q(&b), fmt_q(&expect))
                });
            }
        }
    }
    check
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn examples_are_cyclic_ainf() {
        for (name, d) in all() {
            let n = 2 * d.arities().iter().max().copied().unwrap_or(2) - 1;
            let a = check_ainf(&d, n.max(3));
            let c = cyclicity_check(&d);
            assert!(a.passed(), "{name}: {:?}", a.failure);
            assert!(c.passed(), "{name}: {:?}", c.failure);
        }
    }

    #[test]
    fn broken_examples_fail() {
        assert!(!check_ainf(&nonassociative(), 3).passed());
        assert!(!cyclicity_check(&noninvariant()).passed());
    }

    #[test]
    fn json_round_trip() {
        for (_, d) in all() {
            let back = CyclicAInf::from_json(&d.to_json()).unwrap();
            assert_eq!(back.to_json(), d.to_json());
        }
    }

    #[test]
    fn load_time_validation() {
        // |1| = 0 and |x| = 1 with ⟨1, x⟩ = 1 is an odd pairing
        let odd = r#"{"objects":["v"],"spaces":[{"from":"v","to":"v","parities":[0,1]}],
            "pairings":[{"from":"v","to":"v","matrix":[[0,1],[1,0]]}],"products":[]}"#;
        assert!(matches!(CyclicAInf::from_json(odd), Err(Error::InvalidData(_))));
        let degenerate = r#"{"objects":["v"],"spaces":[{"from":"v","to":"v","parities":[0,0]}],
            "pairings":[{"from":"v","to":"v","matrix":[[1,1],[1,1]]}],"products":[]}"#;
        assert!(CyclicAInf::from_json(degenerate).is_err());
        let nonadjacent = r#"{"objects":["a","b"],"spaces":[{"from":"a","to":"a","parities":[0]}],
            "pairings":[{"from":"a","to":"a","matrix":[[1]]}],
            "products":[{"objects":["a","b","a"],"entries":[[[0,0,0],"1"]]}]}"#;
        assert!(CyclicAInf::from_json(nonadjacent).is_err());
    }
}
