//! Small data sets: Frobenius algebras and categories (only `m_2`), and
//! two deliberately broken ones.

use super::{AInfJson, CyclicAInf, PairingJson, ProductJson, Scalar, SpaceJson};

type Mult = dyn Fn(usize, usize, usize, usize, usize) -> Vec<(usize, i64)>;

/// `m̃_2(a, b, c) = ⟨ab, c⟩` from structure constants: `mult(i, j, k, a, b)`
/// is the product of `a ∈ V_ij` and `b ∈ V_jk` in `V_ik`, and
/// `pairing(i, k, a, b)` is `⟨a, b⟩` for `a ∈ V_ik`, `b ∈ V_ki`.
fn frobenius(
    objects: &[&str],
    spaces: &[(usize, usize, Vec<u8>)],
    pairing: &dyn Fn(usize, usize, usize, usize) -> i64,
    mult: &Mult,
) -> CyclicAInf {
    let name = |i: usize| objects[i].to_string();
    let dim = |i: usize, k: usize| spaces.iter().find(|s| s.0 == i && s.1 == k).map_or(0, |s| s.2.len());
    let mut pairings = Vec::new();
    for (i, k, p) in spaces {
        if i <= k {
            let other = dim(*k, *i);
            let matrix = (0..p.len()).map(|a| (0..other).map(|b| Scalar::Int(pairing(*i, *k, a, b))).collect()).collect();
            pairings.push(PairingJson { from: name(*i), to: name(*k), matrix });
        }
    }
    let n = objects.len();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (dij, djk, dki) = (dim(i, j), dim(j, k), dim(k, i));
                if dij * djk * dki == 0 {
                    continue;
                }
                let mut entries = Vec::new();
                for a in 0..dij {
                    for b in 0..djk {
                        for c in 0..dki {
                            let v: i64 = mult(i, j, k, a, b).iter().map(|&(t, x)| x * pairing(i, k, t, c)).sum();
                            if v != 0 {
                                entries.push((vec![a, b, c], Scalar::Int(v)));
                            }
                        }
                    }
                }
                if !entries.is_empty() {
                    products.push(ProductJson { objects: vec![name(i), name(j), name(k)], entries });
                }
            }
        }
    }
    let json = AInfJson {
        objects: objects.iter().map(|s| s.to_string()).collect(),
        spaces: spaces.iter().map(|(i, k, p)| SpaceJson { from: name(*i), to: name(*k), parities: p.clone() }).collect(),
        pairings,
        products,
    };
    CyclicAInf::from_json_struct(&json).expect("valid example data")
}

/// The ground field, `⟨1, 1⟩ = 1`.
pub fn ground_field() -> CyclicAInf {
    frobenius(&["v"], &[(0, 0, vec![0])], &|_, _, _, _| 1, &|_, _, _, _, _| vec![(0, 1)])
}

/// `k[x]/(x²)` with `x` even and `⟨1, x⟩ = 1`; basis `(1, x)`.
pub fn dual_numbers() -> CyclicAInf {
    frobenius(&["v"], &[(0, 0, vec![0, 0])], &|_, _, a, b| (a + b == 1) as i64, &|_, _, _, a, b| {
        if a + b <= 1 {
            vec![(a + b, 1)]
        } else {
            vec![]
        }
    })
}

/// The exterior algebra on two odd generators with `⟨a, b⟩` the top
/// coefficient of `ab`; basis `(1, ξ_1, ξ_2, ξ_1ξ_2)`.
pub fn exterior_two() -> CyclicAInf {
    // basis elements as bit masks: 0 = 1, 1 = ξ_1, 2 = ξ_2, 3 = ξ_1ξ_2
    fn mul(a: usize, b: usize) -> Option<(usize, i64)> {
        if a & b != 0 {
            return None;
        }
        // moving ξ_1 in b past ξ_2 in a
        let sign = if a & 2 != 0 && b & 1 != 0 { -1 } else { 1 };
        Some((a | b, sign))
    }
    let pairing = |_: usize, _: usize, a: usize, b: usize| match mul(a, b) {
        Some((3, s)) => s,
        _ => 0,
    };
    frobenius(&["v"], &[(0, 0, vec![0, 1, 1, 0])], &pairing, &|_, _, _, a, b| mul(a, b).into_iter().collect())
}

/// Matrix units of `M_2(k)` as a category on two objects, all spaces
/// one-dimensional and even, with the trace pairing.
pub fn matrix_category() -> CyclicAInf {
    let spaces: Vec<(usize, usize, Vec<u8>)> = [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(i, k)| (i, k, vec![0])).collect();
    frobenius(&["v1", "v2"], &spaces, &|_, _, _, _| 1, &|_, _, _, _, _| vec![(0, 1)])
}

/// Matrix units of `End(k^{1|1})`: the second object is odd, `e_ij` has
/// parity `p_i + p_j`, and the pairing is the supertrace.
pub fn super_matrix_category() -> CyclicAInf {
    let p = [0u8, 1];
    let spaces: Vec<(usize, usize, Vec<u8>)> =
        [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(i, k)| (i, k, vec![(p[i] + p[k]) % 2])).collect();
    frobenius(&["v1", "v2"], &spaces, &|i, _, _, _| if p[i] == 0 { 1 } else { -1 }, &|_, _, _, _, _| vec![(0, 1)])
}

/// Two objects joined by one edge with one-dimensional even spaces both
/// ways. Every product runs around a cycle of even length, so it has odd
/// arity and must be odd on even inputs; all products vanish.
pub fn single_edge_category() -> CyclicAInf {
    frobenius(&["v1", "v2"], &[(0, 1, vec![0]), (1, 0, vec![0])], &|_, _, _, _| 1, &|_, _, _, _, _| vec![])
}

/// Data sets expected to pass every check.
pub fn all() -> Vec<(&'static str, CyclicAInf)> {
    vec![
        ("ground-field", ground_field()),
        ("dual-numbers", dual_numbers()),
        ("exterior-two", exterior_two()),
        ("matrix-category", matrix_category()),
        ("super-matrix-category", super_matrix_category()),
        ("single-edge-category", single_edge_category()),
    ]
}

/// A cyclic but nonassociative `m_2` on a two-dimensional space.
pub fn nonassociative() -> CyclicAInf {
    let mut j = dual_numbers().to_json_struct();
    j.pairings[0].matrix = vec![vec![Scalar::Int(1), Scalar::Int(0)], vec![Scalar::Int(0), Scalar::Int(1)]];
    let entries = [[0, 0, 1], [0, 1, 0], [1, 0, 0]];
    j.products = vec![ProductJson {
        objects: vec!["v".into(); 3],
        entries: entries.iter().map(|e| (e.to_vec(), Scalar::Int(1))).collect(),
    }];
    CyclicAInf::from_json_struct(&j).expect("valid")
}

/// `k[x]/(x²)` with one entry of `m̃_2` dropped, so the form is not
/// invariant.
pub fn noninvariant() -> CyclicAInf {
    let mut j = dual_numbers().to_json_struct();
    j.products[0].entries.remove(0);
    CyclicAInf::from_json_struct(&j).expect("valid")
}
