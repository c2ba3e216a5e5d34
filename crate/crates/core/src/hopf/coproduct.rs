use rayon::prelude::*;

use super::glue::{for_each_self_matching, glue, AbstractEdges};
use super::star::half_h_power;
use crate::necklace::{Element, Monomial, Necklace, Tensor, Tensor3};
use crate::poly::{Combination, HPoly};
use crate::quiver::Quiver;

/// A tensor with `k` factors, keyed by a vector of monomials.
pub type TensorK = Combination<Vec<Monomial>>;

/// The `k`-coloured coproduct of a monomial. For `k = 2` this is `Δ_h`; for
/// `k = 3` it is the single-pass formula for the iterated coproduct.
///
/// Sums over partial involutions `φ` of the abstract edges pairing reverse
/// letters, and over colourings `c` of the glued necklaces. Each pair
/// contributes the sign of `c(target) − c(start)` of its member in `Q`,
/// where the start of `x` lies in the orbit of `x` and the target in the
/// orbit of `x + 1`.
pub fn coproduct_colored(q: &Quiver, p: &Monomial, k: usize) -> TensorK {
    let ab = AbstractEdges::of_monomial(p);
    let mut out = TensorK::zero();
    for_each_self_matching(&ab, &mut |partner, npairs| {
        let g = glue(q, &ab, partner);
        let mut pieces: Vec<Necklace> = g.orbits.clone();
        pieces.extend(ab.idempotents.iter().cloned());
        // (start orbit, target orbit) for the Q-member of each pair.
        let arrows: Vec<(usize, usize)> = (0..ab.len())
            .filter(|&x| partner[x].is_some() && ab.letters[x].in_q())
            .map(|x| (g.orbit_of[x], g.orbit_of[ab.succ[x]]))
            .collect();
        if arrows.iter().any(|(s, t)| s == t) {
            return;
        }
        let m = pieces.len();
        let mut c = vec![0usize; m];
        loop {
            let mut sign = 1i32;
            for &(s, t) in &arrows {
                sign *= (c[t] as i32 - c[s] as i32).signum();
                if sign == 0 {
                    break;
                }
            }
            if sign != 0 {
                let mut slots = vec![Vec::new(); k];
                for (i, n) in pieces.iter().enumerate() {
                    slots[c[i]].push(n.clone());
                }
                let key: Vec<Monomial> = slots.into_iter().map(Monomial::new).collect();
                out.add_term(key, &half_h_power(npairs, sign < 0));
            }
            // next colouring
            let mut i = 0;
            while i < m && c[i] == k - 1 {
                c[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
            c[i] += 1;
        }
    });
    out
}

fn colored(q: &Quiver, a: &Element, k: usize) -> TensorK {
    let terms: Vec<_> = a.iter().collect();
    terms
        .par_iter()
        .map(|(m, c)| coproduct_colored(q, m, k).scale(c))
        .reduce(TensorK::zero, |x, y| &x + &y)
}

/// The coproduct `Δ_h`.
pub fn coproduct(q: &Quiver, a: &Element) -> Tensor {
    colored(q, a, 2).map_keys(|v| (v[0].clone(), v[1].clone()))
}

/// The counit: the coefficient of the empty monomial.
pub fn counit(a: &Element) -> HPoly {
    a.coeff(&Monomial::one())
}

/// The antipode: `(−1)^m` on a multiset of `m` necklaces.
pub fn antipode(a: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in a.iter() {
        if m.degree() % 2 == 0 {
            out.add_term(m.clone(), c);
        } else {
            out.add_term(m.clone(), &-c);
        }
    }
    out
}

/// `(1 ⊗ Δ_h)Δ_h`, `(Δ_h ⊗ 1)Δ_h`, and the single-pass three-colour formula.
pub fn coassoc_probe(q: &Quiver, a: &Element) -> (Tensor3, Tensor3, Tensor3) {
    let d = coproduct(q, a);
    let mut left = Tensor3::zero();
    let mut right = Tensor3::zero();
    for ((x, y), c) in d.iter() {
        for ((y1, y2), e) in coproduct(q, &Element::basis(y.clone())).iter() {
            left.add_term((x.clone(), y1.clone(), y2.clone()), &(c * e));
        }
        for ((x1, x2), e) in coproduct(q, &Element::basis(x.clone())).iter() {
            right.add_term((x1.clone(), x2.clone(), y.clone()), &(c * e));
        }
    }
    let single = colored(q, a, 3).map_keys(|v| (v[0].clone(), v[1].clone(), v[2].clone()));
    (left, right, single)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::{format_tensor, parse_element, unit};

    #[test]
    fn coproduct_examples() {
        let q = Quiver::loops(&["e"]);
        let t = coproduct(&q, &parse_element(&q, "(e e*)").unwrap());
        assert_eq!(format_tensor(&q, &t), "1 ⊗ (e e*) + (e e*) ⊗ 1");
        let t = coproduct(&q, &parse_element(&q, "I(v)").unwrap());
        assert_eq!(format_tensor(&q, &t), "1 ⊗ I(v) + I(v) ⊗ 1");
        let t = coproduct(&q, &unit());
        assert_eq!(format_tensor(&q, &t), "1 ⊗ 1");
    }

    #[test]
    fn antipode_and_counit() {
        let q = Quiver::loops(&["e"]);
        let p = parse_element(&q, "(e e*) + 2 (e)&(e*) + 3").unwrap();
        assert_eq!(
            antipode(&p),
            parse_element(&q, "-(e e*) + 2 (e)&(e*) + 3").unwrap()
        );
        assert_eq!(antipode(&antipode(&p)), p);
        assert_eq!(counit(&p), HPoly::constant(crate::poly::q(3)));
    }

    #[test]
    fn probe_agrees_on_small_element() {
        let q = Quiver::loops(&["e"]);
        let p = parse_element(&q, "(e e*)&(e e*)").unwrap();
        let (l, r, s) = coassoc_probe(&q, &p);
        assert_eq!(l, r);
        assert_eq!(l, s);
    }
}
