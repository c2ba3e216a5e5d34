use num_bigint::BigInt;

use super::{coord_name, index_tuples, Coord, DimVec};
use crate::necklace::{format_combination, Element, Monomial};
use crate::poly::{Combination, HPoly, Q};
use crate::quiver::Quiver;

/// A commutative monomial: sorted `(coordinate, exponent)` pairs.
pub type RepMono = Vec<(Coord, u32)>;
/// A polynomial in matrix coordinates with `ℚ[h]` coefficients.
pub type RepPoly = Combination<RepMono>;

pub fn mono_mul(a: &RepMono, b: &RepMono) -> RepMono {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn rep_mul(a: &RepPoly, b: &RepPoly) -> RepPoly {
    let mut out = RepPoly::zero();
    for (m, c) in a.iter() {
        for (n, d) in b.iter() {
            out.add_term(mono_mul(m, n), &(c * d));
        }
    }
    out
}

pub fn rep_constant(c: HPoly) -> RepPoly {
    RepPoly::term(Vec::new(), c)
}

pub fn rep_var(c: Coord) -> RepPoly {
    RepPoly::basis(vec![(c, 1)])
}

/// `∂/∂c` of a monomial, as (multiplicity, monomial).
fn derive(m: &RepMono, c: Coord) -> Option<(u32, RepMono)> {
    let k = m.iter().position(|(x, _)| *x == c)?;
    let e = m[k].1;
    let mut out = m.clone();
    if e == 1 {
        out.remove(k);
    } else {
        out[k].1 -= 1;
    }
    Some((e, out))
}

/// The constant bivector: `π((M_e)_{ij}, (M_{e*})_{ji}) = 1` for `e ∈ Q`,
/// and antisymmetric.
pub fn bivector(a: Coord, b: Coord) -> i64 {
    if b != a.dual() {
        0
    } else if a.letter.in_q() {
        1
    } else {
        -1
    }
}

/// The classical Moyal product `m ∘ exp((h/2)π)`.
pub fn moyal_star(a: &RepPoly, b: &RepPoly) -> RepPoly {
    let mut out = RepPoly::zero();
    // Terms of π^d (f ⊗ g), as pairs of monomials.
    let mut layer: Combination<(RepMono, RepMono)> = Combination::zero();
    for (m, c) in a.iter() {
        for (n, d) in b.iter() {
            layer.add_term((m.clone(), n.clone()), &(c * d));
        }
    }
    let mut d = 0usize;
    let mut factor = Q::from_integer(BigInt::from(1));
    while !layer.is_zero() {
        let coeff = HPoly::monomial(factor.clone(), d);
        for ((m, n), c) in layer.iter() {
            out.add_term(mono_mul(m, n), &(c * &coeff));
        }
        let mut next = Combination::zero();
        for ((m, n), c) in layer.iter() {
            for &(x, _) in m {
                let y = x.dual();
                let s = bivector(x, y);
                let (Some((e1, m1)), Some((e2, n1))) = (derive(m, x), derive(n, y)) else { continue };
                let k = Q::from_integer(BigInt::from(s * e1 as i64 * e2 as i64));
                next.add_term((m1, n1), &c.scale(&k));
            }
        }
        layer = next;
        d += 1;
        factor = factor / Q::from_integer(BigInt::from(2 * d as i64));
    }
    out
}

/// The trace representation `tr_l`: necklaces to traces of matrix
/// products, idempotents `1_v` to `l_v`, multiplicative on multisets.
pub fn trace_rep(q: &Quiver, p: &Element, l: &DimVec) -> RepPoly {
    let mut out = RepPoly::zero();
    for (m, c) in p.iter() {
        out.add_scaled(&trace_monomial(q, m, l), c);
    }
    out
}

pub fn trace_monomial(q: &Quiver, m: &Monomial, l: &DimVec) -> RepPoly {
    let mut out = rep_constant(HPoly::one());
    for n in m.factors() {
        let t = if n.is_idempotent() {
            rep_constant(HPoly::constant(Q::from_integer(BigInt::from(l.at(n.vertex())))))
        } else {
            let w = n.word();
            let mut s = RepPoly::zero();
            for idx in index_tuples(q, w, l) {
                let mut mono = Vec::new();
                for r in 0..w.len() {
                    let c = Coord::new(w[r], idx[r], idx[(r + 1) % w.len()]);
                    mono = mono_mul(&mono, &vec![(c, 1)]);
                }
                s.add_term(mono, &HPoly::one());
            }
            s
        };
        out = rep_mul(&out, &t);
    }
    out
}

pub fn format_rep(q: &Quiver, p: &RepPoly) -> String {
    format_combination(p, |m| {
        if m.is_empty() {
            return ("1".into(), true);
        }
        let s: Vec<String> = m
            .iter()
            .map(|(c, e)| if *e == 1 { coord_name(q, c) } else { format!("{}^{e}", coord_name(q, c)) })
            .collect();
        (s.join(" "), false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::parse_element;
    use crate::quiver::Letter;

    fn xy() -> (RepPoly, RepPoly) {
        (rep_var(Coord::new(Letter::base(0), 0, 0)), rep_var(Coord::new(Letter::star(0), 0, 0)))
    }

    #[test]
    fn moyal_examples() {
        let q = Quiver::loops(&["e"]);
        let (x, y) = xy();
        assert_eq!(format_rep(&q, &moyal_star(&x, &y)), "M[e][1][1] M[e*][1][1] + 1/2 h");
        assert_eq!(moyal_star(&x, &x), rep_mul(&x, &x));
        let p = rep_mul(&x, &y);
        assert_eq!(format_rep(&q, &moyal_star(&p, &p)), "M[e][1][1]^2 M[e*][1][1]^2 - 1/4 h^2");
    }

    #[test]
    fn trace_examples() {
        let q = Quiver::loops(&["e"]);
        let l2 = DimVec::uniform(&q, 2);
        let t = trace_rep(&q, &parse_element(&q, "I(v)").unwrap(), &l2);
        assert_eq!(format_rep(&q, &t), "2");
        let t = trace_rep(&q, &parse_element(&q, "(e)").unwrap(), &DimVec::uniform(&q, 1));
        assert_eq!(format_rep(&q, &t), "M[e][1][1]");
        let t = trace_rep(&q, &parse_element(&q, "(e e*)").unwrap(), &l2);
        assert_eq!(t.len(), 4);
    }
}
