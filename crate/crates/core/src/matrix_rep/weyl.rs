//! The Weyl algebra generated by coordinates `x_c = (M_e)_{ij}` (`e ∈ Q`)
//! and `D_c = −h ∂/∂x_c`, with `[D_c, x_c] = −h`. Operators are kept in
//! normal order: all coordinates left of all derivatives.
//!
//! The operator `ι(e*)_{ij}` is `D` of the coordinate `(M_e)_{ji}`; it is
//! printed `Y[e][i][j]`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::One;

use super::{coord_name, mono_mul, Coord, RepMono, RepPoly};
use crate::necklace::format_combination;
use crate::poly::{Combination, HPoly, Q};
use crate::quiver::Quiver;

/// `x^α D^β` with `α`, `β` sorted exponent lists over base coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OpMono {
    pub x: RepMono,
    pub d: RepMono,
}

impl OpMono {
    fn degree(&self) -> u32 {
        self.x.iter().chain(&self.d).map(|(_, e)| e).sum()
    }
}

pub type DiffOp = Combination<OpMono>;

pub fn op_one() -> DiffOp {
    DiffOp::basis(OpMono::default())
}

pub fn op_x(c: Coord) -> DiffOp {
    debug_assert!(c.letter.in_q());
    DiffOp::basis(OpMono { x: vec![(c, 1)], d: Vec::new() })
}

/// `D_c = −h ∂/∂x_c`.
pub fn op_d(c: Coord) -> DiffOp {
    debug_assert!(c.letter.in_q());
    DiffOp::basis(OpMono { x: Vec::new(), d: vec![(c, 1)] })
}

/// The operator `ι(a)_{ij}`: multiplication for `a ∈ Q`, and `D` of the
/// coordinate `(M_e)_{ji}` for `a = e*`.
pub fn iota(c: Coord) -> DiffOp {
    if c.letter.in_q() {
        op_x(c)
    } else {
        op_d(c.dual())
    }
}

fn exp_of(m: &RepMono, c: &Coord) -> u32 {
    m.iter().find(|(x, _)| x == c).map_or(0, |(_, e)| *e)
}

fn with_exp(m: &RepMono, c: Coord, e: u32) -> RepMono {
    let mut out: RepMono = m.iter().copied().filter(|(x, _)| *x != c).collect();
    if e > 0 {
        out.push((c, e));
        out.sort();
    }
    out
}

/// `D^b x^g = Σ_k C(b,k) C(g,k) k! (−h)^k x^{g−k} D^{b−k}` for one
/// coordinate; distinct coordinates commute.
fn op_mono_mul(a: &OpMono, b: &OpMono) -> DiffOp {
    // Reorder a.d past b.x coordinate by coordinate.
    let mut terms: Vec<(RepMono, RepMono, HPoly)> = vec![(b.x.clone(), a.d.clone(), HPoly::one())];
    for &(c, bd) in &a.d {
        let gx = exp_of(&b.x, &c);
        if gx == 0 {
            continue;
        }
        let mut next = Vec::new();
        for (xs, ds, coeff) in terms {
            for k in 0..=bd.min(gx) {
                let mut w = binomial(BigInt::from(bd), BigInt::from(k)) * binomial(BigInt::from(gx), BigInt::from(k));
                for t in 1..=k {
                    w *= BigInt::from(t);
                }
                if k % 2 == 1 {
                    w = -w;
                }
                let c2 = &coeff * &HPoly::monomial(Q::from_integer(w), k as usize);
                next.push((with_exp(&xs, c, gx - k), with_exp(&ds, c, bd - k), c2));
            }
        }
        terms = next;
    }
    let mut out = DiffOp::zero();
    for (xs, ds, coeff) in terms {
        let m = OpMono { x: mono_mul(&a.x, &xs), d: mono_mul(&ds, &b.d) };
        out.add_term(m, &coeff);
    }
    out
}

/// Composition of operators.
pub fn op_mul(a: &DiffOp, b: &DiffOp) -> DiffOp {
    let mut out = DiffOp::zero();
    for (m, c) in a.iter() {
        for (n, d) in b.iter() {
            out.add_scaled(&op_mono_mul(m, n), &(c * d));
        }
    }
    out
}

/// Splits a commutative monomial into its `Q` part and the base
/// coordinates dual to its `Q*` part.
fn split(m: &RepMono) -> (RepMono, RepMono) {
    let mut x = Vec::new();
    let mut d = Vec::new();
    for &(c, e) in m {
        if c.letter.in_q() {
            x.push((c, e));
        } else {
            d.push((c.dual(), e));
        }
    }
    d.sort();
    (x, d)
}

/// Average over all distinct orderings of `a` copies of `x` and `b` copies
/// of `D` for a single coordinate.
fn sym_single(c: Coord, a: u32, b: u32) -> DiffOp {
    let n = (a + b) as usize;
    let mut out = DiffOp::zero();
    let mut count = 0u64;
    // positions of the D's: all b-subsets of 0..n
    let mut pos: Vec<usize> = (0..b as usize).collect();
    loop {
        let mut op = op_one();
        for i in 0..n {
            let g = if pos.contains(&i) { op_d(c) } else { op_x(c) };
            op = op_mul(&op, &g);
        }
        out.add_scaled(&op, &HPoly::one());
        count += 1;
        // next subset
        let mut k = pos.len();
        loop {
            if k == 0 {
                return out.scale_q(&Q::new(BigInt::one(), BigInt::from(count)));
            }
            k -= 1;
            if pos[k] < n - (pos.len() - k) {
                pos[k] += 1;
                for t in k + 1..pos.len() {
                    pos[t] = pos[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `φ_W` on one monomial: the average over all orderings of its letters.
/// Letters of distinct coordinates commute, so the average factors over
/// coordinates.
pub fn weyl_monomial(m: &RepMono) -> DiffOp {
    let (x, d) = split(m);
    let mut coords: Vec<Coord> = x.iter().chain(&d).map(|(c, _)| *c).collect();
    coords.sort();
    coords.dedup();
    let mut out = op_one();
    for c in coords {
        out = op_mul(&out, &sym_single(c, exp_of(&x, &c), exp_of(&d, &c)));
    }
    out
}

/// The Weyl symmetrization `φ_W`.
pub fn weyl_symmetrize(p: &RepPoly) -> DiffOp {
    p.map_linear(weyl_monomial)
}

/// Inverse of `φ_W`, by peeling off top-degree terms.
pub fn weyl_unsymmetrize(op: &DiffOp) -> RepPoly {
    let mut rest = op.clone();
    let mut out = RepPoly::zero();
    while let Some((m, c)) = rest.iter().max_by_key(|(m, _)| m.degree()).map(|(m, c)| (m.clone(), c.clone())) {
        let mut mono: RepMono = m.x.clone();
        for &(c, e) in &m.d {
            mono = mono_mul(&mono, &vec![(c.dual(), e)]);
        }
        out.add_term(mono.clone(), &c);
        rest.add_scaled(&weyl_monomial(&mono), &-&c);
    }
    out
}

pub fn format_op(q: &Quiver, op: &DiffOp) -> String {
    format_combination(op, |m| {
        if m.x.is_empty() && m.d.is_empty() {
            return ("1".into(), true);
        }
        let mut s: Vec<String> = Vec::new();
        for (c, e) in &m.x {
            let n = coord_name(q, c);
            s.push(if *e == 1 { n } else { format!("{n}^{e}") });
        }
        for (c, e) in &m.d {
            let n = format!("Y[{}][{}][{}]", q.letter_name(c.letter), c.j + 1, c.i + 1);
            s.push(if *e == 1 { n } else { format!("{n}^{e}") });
        }
        (s.join(" "), false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix_rep::{moyal_star, rep_mul, rep_var};
    use crate::quiver::Letter;

    fn c() -> Coord {
        Coord::new(Letter::base(0), 0, 0)
    }

    #[test]
    fn commutator() {
        let q = Quiver::loops(&["e"]);
        let dx = op_mul(&op_d(c()), &op_x(c()));
        assert_eq!(format_op(&q, &dx), "M[e][1][1] Y[e][1][1] - h");
    }

    #[test]
    fn symmetrization_examples() {
        let q = Quiver::loops(&["e"]);
        let x = rep_var(c());
        let y = rep_var(c().dual());
        assert_eq!(weyl_symmetrize(&x), op_x(c()));
        let xy = rep_mul(&x, &y);
        assert_eq!(format_op(&q, &weyl_symmetrize(&xy)), "M[e][1][1] Y[e][1][1] - 1/2 h");
        let lhs = weyl_symmetrize(&moyal_star(&xy, &xy));
        let w = weyl_symmetrize(&xy);
        assert_eq!(lhs, op_mul(&w, &w));
        assert_eq!(format_op(&q, &lhs), "M[e][1][1]^2 Y[e][1][1]^2 - 2 h M[e][1][1] Y[e][1][1] + 1/4 h^2");
    }

    #[test]
    fn round_trip() {
        let x = rep_var(c());
        let y = rep_var(c().dual());
        let p = rep_mul(&rep_mul(&x, &x), &rep_mul(&y, &rep_mul(&y, &y)));
        assert_eq!(weyl_unsymmetrize(&weyl_symmetrize(&p)), p);
    }
}
