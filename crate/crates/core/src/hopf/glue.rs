//! Cut-and-glue of necklace collections along pairs of reverse letters.

use crate::necklace::{Monomial, Necklace};
use crate::quiver::{Letter, Quiver};

/// The abstract edges of a collection of necklaces: every letter occurrence,
/// flattened, with its successor inside its own necklace. Idempotent
/// factors carry no abstract edges and are kept aside.
#[derive(Clone, Debug)]
pub struct AbstractEdges {
    pub letters: Vec<Letter>,
    pub succ: Vec<usize>,
    pub idempotents: Vec<Necklace>,
}

impl AbstractEdges {
    pub fn new<'a>(parts: impl IntoIterator<Item = &'a Necklace>) -> Self {
        let mut letters = Vec::new();
        let mut succ = Vec::new();
        let mut idempotents = Vec::new();
        for n in parts {
            if n.is_idempotent() {
                idempotents.push(n.clone());
                continue;
            }
            let base = letters.len();
            let l = n.len();
            for (j, &a) in n.word().iter().enumerate() {
                letters.push(a);
                succ.push(base + (j + 1) % l);
            }
        }
        AbstractEdges { letters, succ, idempotents }
    }

    pub fn of_monomial(m: &Monomial) -> Self {
        Self::new(m.factors())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// Result of gluing: one necklace per orbit of the next-edge map `f`, and
/// the orbit index of every abstract edge.
#[derive(Clone, Debug)]
pub struct Glued {
    pub orbits: Vec<Necklace>,
    pub orbit_of: Vec<usize>,
}

/// Cuts the edges with `partner[x] = Some(y)` (an involution with
/// `pr(y) = pr(x)*`) and glues. `f(x) = succ(x)` for uncut `x` and
/// `f(x) = succ(partner(x))` for cut `x`; each `f`-orbit gives the
/// necklace of its uncut letters, or the idempotent at the common tail
/// when every letter in it is cut.
pub fn glue(q: &Quiver, ab: &AbstractEdges, partner: &[Option<usize>]) -> Glued {
    let n = ab.len();
    let f = |x: usize| match partner[x] {
        Some(y) => ab.succ[y],
        None => ab.succ[x],
    };
    let mut orbit_of = vec![usize::MAX; n];
    let mut orbits = Vec::new();
    for s in 0..n {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut word = Vec::new();
        let mut x = s;
        loop {
            orbit_of[x] = id;
            if partner[x].is_none() {
                word.push(ab.letters[x]);
            }
            x = f(x);
            if x == s {
                break;
            }
        }
        let nk = if word.is_empty() {
            Necklace::idempotent(q.tail(ab.letters[s]))
        } else {
            debug_assert!(
                word.iter().zip(word.iter().cycle().skip(1)).all(|(a, b)| q.head(*a) == q.tail(*b)),
                "glued word is composable"
            );
            Necklace::from_closed_unchecked(q, word)
        };
        orbits.push(nk);
    }
    Glued { orbits, orbit_of }
}

/// Calls `visit` with every partial matching between positions `0..nx` and
/// `nx..nx+ny` of `ab` pairing reverse letters. The slice passed is the
/// partner involution; the count is the number of pairs.
pub fn for_each_cross_matching(
    ab: &AbstractEdges,
    nx: usize,
    visit: &mut dyn FnMut(&[Option<usize>], usize),
) {
    let mut partner = vec![None; ab.len()];
    fn rec(
        ab: &AbstractEdges,
        nx: usize,
        x: usize,
        k: usize,
        partner: &mut Vec<Option<usize>>,
        visit: &mut dyn FnMut(&[Option<usize>], usize),
    ) {
        if x == nx {
            visit(partner, k);
            return;
        }
        rec(ab, nx, x + 1, k, partner, visit);
        let want = ab.letters[x].rev();
        for y in nx..ab.len() {
            if partner[y].is_none() && ab.letters[y] == want {
                partner[x] = Some(y);
                partner[y] = Some(x);
                rec(ab, nx, x + 1, k + 1, partner, visit);
                partner[x] = None;
                partner[y] = None;
            }
        }
    }
    rec(ab, nx, 0, 0, &mut partner, visit);
}

/// Calls `visit` with every partial involution on the positions of `ab`
/// pairing reverse letters.
pub fn for_each_self_matching(ab: &AbstractEdges, visit: &mut dyn FnMut(&[Option<usize>], usize)) {
    let mut partner = vec![None; ab.len()];
    let mut used = vec![false; ab.len()];
    fn rec(
        ab: &AbstractEdges,
        x: usize,
        k: usize,
        partner: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[Option<usize>], usize),
    ) {
        if x == ab.len() {
            visit(partner, k);
            return;
        }
        if used[x] {
            rec(ab, x + 1, k, partner, used, visit);
            return;
        }
        rec(ab, x + 1, k, partner, used, visit);
        let want = ab.letters[x].rev();
        for y in x + 1..ab.len() {
            if !used[y] && ab.letters[y] == want {
                partner[x] = Some(y);
                partner[y] = Some(x);
                used[y] = true;
                rec(ab, x + 1, k + 1, partner, used, visit);
                used[y] = false;
                partner[x] = None;
                partner[y] = None;
            }
        }
    }
    rec(ab, 0, 0, &mut partner, &mut used, visit);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::parse_necklace;

    #[test]
    fn glue_examples() {
        let q = Quiver::loops(&["e"]);
        let p = parse_necklace(&q, "(e e*)").unwrap();
        let ab = AbstractEdges::new([&p, &p]);
        // No cut: the two necklaces themselves.
        let g = glue(&q, &ab, &[None; 4]);
        assert_eq!(g.orbits, vec![p.clone(), p.clone()]);
        // Cut e in the first with e* in the second: one necklace (e e*).
        let g = glue(&q, &ab, &[Some(3), None, None, Some(0)]);
        assert_eq!(g.orbits, vec![p.clone()]);
        // Cut both pairs: two idempotents.
        let g = glue(&q, &ab, &[Some(3), Some(2), Some(1), Some(0)]);
        assert_eq!(g.orbits, vec![Necklace::idempotent(0), Necklace::idempotent(0)]);
    }

    #[test]
    fn matching_counts() {
        let q = Quiver::loops(&["e"]);
        let p = parse_necklace(&q, "(e e*)").unwrap();
        let ab = AbstractEdges::new([&p, &p]);
        let mut counts = [0; 3];
        for_each_cross_matching(&ab, 2, &mut |_, k| counts[k] += 1);
        assert_eq!(counts, [1, 2, 1]);
        let mut counts = [0; 3];
        for_each_self_matching(&ab, &mut |_, k| counts[k] += 1);
        // Pairs: e with either e*, and e' with either e*: 4 single pairs, 2 perfect.
        assert_eq!(counts, [1, 4, 2]);
    }
}
