use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::{iota, op_mul, op_one, Coord, DiffOp, DimVec};
use crate::error::{Error, Result};
use crate::hopf::glue::AbstractEdges;
use crate::necklace::{Element, Monomial};
use crate::poly::{HPoly, Q};
use crate::quiver::Quiver;

/// Above this many letters, height averaging groups index tuples by their
/// multiset of generators and enumerates distinct arrangements only.
pub const FULL_HEIGHT_LIMIT: usize = 8;

/// A necklace multiset with a height `1..=N` on each of its letters, in the
/// flattened order of its factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightWord {
    pub mono: Monomial,
    pub heights: Vec<usize>,
}

impl HeightWord {
    pub fn new(mono: Monomial, heights: Vec<usize>) -> Result<Self> {
        let n = mono.weight();
        let mut seen = vec![false; n];
        if heights.len() != n {
            return Err(Error::InvalidData(format!("{} heights for {n} letters", heights.len())));
        }
        for &h in &heights {
            if h == 0 || h > n || seen[h - 1] {
                return Err(Error::InvalidData("heights must be a bijection onto 1..N".into()));
            }
            seen[h - 1] = true;
        }
        Ok(HeightWord { mono, heights })
    }
}

fn idempotent_factor(ab: &AbstractEdges, l: &DimVec) -> HPoly {
    let mut c = Q::one();
    for n in &ab.idempotents {
        c *= Q::from_integer(BigInt::from(l.at(n.vertex())));
    }
    HPoly::constant(c)
}

/// For each joint index assignment, the generator `ι(a_x)_{i_x, i_{x+1}}`
/// of every letter position.
fn generator_lists(q: &Quiver, ab: &AbstractEdges, l: &DimVec) -> Vec<Vec<Coord>> {
    let n = ab.len();
    let ranges: Vec<u32> = ab.letters.iter().map(|a| l.at(q.tail(*a)) as u32).collect();
    if ranges.iter().any(|&r| r == 0) {
        return Vec::new();
    }
    let mut idx = vec![0u32; n];
    let mut out = Vec::new();
    loop {
        out.push((0..n).map(|x| Coord::new(ab.letters[x], idx[x], idx[ab.succ[x]])).collect());
        let mut k = 0;
        while k < n && idx[k] + 1 == ranges[k] {
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            return out;
        }
        idx[k] += 1;
    }
}

/// `ρ_l` of a height word: per index assignment, the composition of the
/// letter operators with lower heights to the left.
pub fn rho(q: &Quiver, w: &HeightWord, l: &DimVec) -> DiffOp {
    let ab = AbstractEdges::of_monomial(&w.mono);
    let mut order: Vec<usize> = (0..ab.len()).collect();
    order.sort_by_key(|&x| w.heights[x]);
    let mut out = DiffOp::zero();
    for gens in generator_lists(q, &ab, l) {
        let mut op = op_one();
        for &x in &order {
            op = op_mul(&op, &iota(gens[x]));
        }
        out.add_scaled(&op, &HPoly::one());
    }
    out.scale(&idempotent_factor(&ab, l))
}

/// Sum of the compositions over all orderings of `gens` (over distinct
/// arrangements only when `distinct`), with the number of orderings.
fn sum_orderings(gens: &[Coord], distinct: bool) -> (DiffOp, u64) {
    fn rec(gens: &[Coord], used: &mut Vec<bool>, prefix: &DiffOp, distinct: bool, out: &mut DiffOp, count: &mut u64) {
        if used.iter().all(|u| *u) {
            out.add_scaled(prefix, &HPoly::one());
            *count += 1;
            return;
        }
        for i in 0..gens.len() {
            if used[i] {
                continue;
            }
            if distinct && (0..i).any(|j| !used[j] && gens[j] == gens[i]) {
                continue;
            }
            used[i] = true;
            let next = op_mul(prefix, &iota(gens[i]));
            rec(gens, used, &next, distinct, out, count);
            used[i] = false;
        }
    }
    let mut out = DiffOp::zero();
    let mut count = 0;
    rec(gens, &mut vec![false; gens.len()], &op_one(), distinct, &mut out, &mut count);
    (out, count)
}

/// The average of `ρ_l` over all height assignments of one multiset.
pub fn phi_w_monomial(q: &Quiver, m: &Monomial, l: &DimVec) -> DiffOp {
    let ab = AbstractEdges::of_monomial(m);
    let lists = generator_lists(q, &ab, l);
    let mut out = DiffOp::zero();
    if ab.len() <= FULL_HEIGHT_LIMIT {
        for gens in &lists {
            let (s, count) = sum_orderings(gens, false);
            out.add_scaled(&s, &HPoly::constant(Q::new(BigInt::one(), BigInt::from(count))));
        }
    } else {
        let mut groups: BTreeMap<Vec<Coord>, u64> = BTreeMap::new();
        for mut gens in lists {
            gens.sort();
            *groups.entry(gens).or_default() += 1;
        }
        for (gens, mult) in groups {
            let (s, count) = sum_orderings(&gens, true);
            out.add_scaled(&s, &HPoly::constant(Q::new(BigInt::from(mult), BigInt::from(count))));
        }
    }
    out.scale(&idempotent_factor(&ab, l))
}

/// `ρ_l ∘ Φ_W`, realized by averaging over heights.
pub fn phi_w_realized(q: &Quiver, p: &Element, l: &DimVec) -> DiffOp {
    p.map_linear(|m| phi_w_monomial(q, m, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_rep::{format_op, op_x};
    use crate::necklace::{parse_element, parse_necklace};

    #[test]
    fn calibration() {
        let q = Quiver::loops(&["e"]);
        let l1 = DimVec::uniform(&q, 1);
        let m = Monomial::single(parse_necklace(&q, "(e e*)").unwrap());
        let a = rho(&q, &HeightWord::new(m.clone(), vec![1, 2]).unwrap(), &l1);
        assert_eq!(format_op(&q, &a), "M[e][1][1] Y[e][1][1]");
        let b = rho(&q, &HeightWord::new(m.clone(), vec![2, 1]).unwrap(), &l1);
        assert_eq!(format_op(&q, &b), "M[e][1][1] Y[e][1][1] - h");
        let single = Monomial::single(parse_necklace(&q, "(e)").unwrap());
        let c = rho(&q, &HeightWord::new(single, vec![1]).unwrap(), &l1);
        assert_eq!(c, op_x(Coord::new(q.parse_letter("e").unwrap(), 0, 0)));
    }

    #[test]
    fn realized_examples() {
        let q = Quiver::loops(&["e"]);
        let l1 = DimVec::uniform(&q, 1);
        let p = parse_element(&q, "(e e*)").unwrap();
        assert_eq!(format_op(&q, &phi_w_realized(&q, &p, &l1)), "M[e][1][1] Y[e][1][1] - 1/2 h");
        let i = parse_element(&q, "I(v)").unwrap();
        assert_eq!(format_op(&q, &phi_w_realized(&q, &i, &DimVec::uniform(&q, 3))), "3");
    }

    #[test]
    fn grouped_average_matches_full() {
        let q = Quiver::loops(&["e"]);
        let l2 = DimVec::uniform(&q, 2);
        let m = parse_element(&q, "(e e* e)&(e*)").unwrap();
        let (mono, _) = m.iter().next().unwrap();
        let ab = AbstractEdges::of_monomial(mono);
        let mut full = DiffOp::zero();
        let mut grouped = DiffOp::zero();
        for gens in generator_lists(&q, &ab, &l2) {
            let (s, c) = sum_orderings(&gens, false);
            full.add_scaled(&s, &HPoly::constant(Q::new(BigInt::one(), BigInt::from(c))));
            let mut g = gens.clone();
            g.sort();
            let (s, c) = sum_orderings(&g, true);
            grouped.add_scaled(&s, &HPoly::constant(Q::new(BigInt::one(), BigInt::from(c))));
        }
        assert_eq!(full, grouped);
    }
}
