use num_traits::One;
use rayon::prelude::*;

use super::glue::{for_each_cross_matching, glue, AbstractEdges};
use crate::necklace::{Element, Monomial, Tensor};
use crate::poly::{qfrac, HPoly, Q};
use crate::quiver::Quiver;

/// `(h/2)^k` with a sign.
pub(crate) fn half_h_power(k: usize, negative: bool) -> HPoly {
    let mut c = Q::one();
    for _ in 0..k {
        c *= qfrac(1, 2);
    }
    if negative {
        c = -c;
    }
    HPoly::monomial(c, k)
}

/// The star product of two necklace multisets: the sum over partial
/// matchings `φ` between the letters of `p` and the reverse letters of `r`
/// of `(h/2)^{#φ} · (−1)^{#(matched letters of r in Q)}` times the glued
/// multiset.
pub fn star_monomials(q: &Quiver, p: &Monomial, r: &Monomial) -> Element {
    let abp = AbstractEdges::of_monomial(p);
    let nx = abp.len();
    let ab = AbstractEdges::new(p.factors().iter().chain(r.factors()));
    let mut out = Element::zero();
    for_each_cross_matching(&ab, nx, &mut |partner, k| {
        let neg = (nx..ab.len()).filter(|&y| partner[y].is_some() && ab.letters[y].in_q()).count() % 2 == 1;
        let g = glue(q, &ab, partner);
        let mut factors = g.orbits;
        factors.extend(ab.idempotents.iter().cloned());
        out.add_term(Monomial::new(factors), &half_h_power(k, neg));
    });
    out
}

/// The star product, extended `ℚ[h]`-bilinearly.
pub fn star(q: &Quiver, a: &Element, b: &Element) -> Element {
    let pairs: Vec<_> = a.iter().flat_map(|(m, c)| b.iter().map(move |(n, d)| (m, n, c * d))).collect();
    pairs
        .par_iter()
        .map(|(m, n, c)| star_monomials(q, m, n).scale(c))
        .reduce(Element::zero, |x, y| &x + &y)
}

/// Componentwise star product on `Sym L[h] ⊗ Sym L[h]`.
pub fn star_tensor(q: &Quiver, a: &Tensor, b: &Tensor) -> Tensor {
    let pairs: Vec<_> = a.iter().flat_map(|(m, c)| b.iter().map(move |(n, d)| (m, n, c * d))).collect();
    pairs
        .par_iter()
        .map(|((m1, m2), (n1, n2), c)| {
            let left = star_monomials(q, m1, n1);
            let right = star_monomials(q, m2, n2);
            let mut out = Tensor::zero();
            for (x, u) in left.iter() {
                for (y, v) in right.iter() {
                    out.add_term((x.clone(), y.clone()), &(&(u * v) * c));
                }
            }
            out
        })
        .reduce(Tensor::zero, |x, y| &x + &y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::{format_element, parse_element, unit};

    #[test]
    fn worked_value() {
        let q = Quiver::loops(&["e"]);
        let p = parse_element(&q, "(e e*)").unwrap();
        let s = star(&q, &p, &p);
        assert_eq!(format_element(&q, &s), "(e e*)&(e e*) - 1/4 h^2 I(v)&I(v)");
        assert!(s.h_coefficient(1).is_zero());
    }

    #[test]
    fn unit_is_neutral() {
        let q = Quiver::loops(&["a", "b"]);
        let p = parse_element(&q, "(a b a* b*) + 2 h (a a*)&I(v)").unwrap();
        assert_eq!(star(&q, &p, &unit()), p);
        assert_eq!(star(&q, &unit(), &p), p);
    }
}
