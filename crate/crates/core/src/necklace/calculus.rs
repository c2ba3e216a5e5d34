use super::{Element, LieElement, LieTensor, Monomial, Necklace, Path, Tensor};
use crate::poly::{Combination, HPoly};
use crate::quiver::{Letter, Quiver};

pub type PathComb = Combination<Path>;
pub type PathTensor = Combination<(Path, Path)>;

fn minus_one() -> HPoly {
    HPoly::constant(crate::poly::q(-1))
}

/// `∂f/∂e`: for each occurrence of `e`, the rest of the cyclic word read
/// from the following letter. A path from `h(e)` to `t(e)`.
pub fn cyclic_derivative(q: &Quiver, f: &Necklace, e: Letter) -> PathComb {
    let w = f.word();
    let n = w.len();
    let mut out = PathComb::zero();
    for r in 0..n {
        if w[r] != e {
            continue;
        }
        let word: Vec<Letter> = (1..n).map(|k| w[(r + k) % n]).collect();
        out.add_term(Path { start: q.head(e), word }, &HPoly::one());
    }
    out
}

/// `D_e(p) = Σ_{a_r = e} a_1⋯a_{r−1} ⊗ a_{r+1}⋯a_p`.
pub fn double_derivation(q: &Quiver, p: &Path, e: Letter) -> PathTensor {
    let mut out = PathTensor::zero();
    for (r, &a) in p.word.iter().enumerate() {
        if a != e {
            continue;
        }
        let left = Path { start: p.start, word: p.word[..r].to_vec() };
        let right = Path { start: q.head(e), word: p.word[r + 1..].to_vec() };
        out.add_term((left, right), &HPoly::one());
    }
    out
}

/// Product in the path algebra, extended bilinearly.
pub fn path_product(q: &Quiver, a: &PathComb, b: &PathComb) -> PathComb {
    let mut out = PathComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            if let Some(p) = x.concat(y, q) {
                out.add_term(p, &(c * d));
            }
        }
    }
    out
}

/// `pr_L` on a combination of closed paths.
///
/// Panics on an open path: callers only project closed paths.
pub fn pr_comb(q: &Quiver, a: &PathComb) -> LieElement {
    a.map_keys(|p| p.pr(q).expect("projection of a closed path"))
}

/// The necklace bracket `{f, g}`.
pub fn bracket(q: &Quiver, f: &Necklace, g: &Necklace) -> LieElement {
    if f.is_idempotent() || g.is_idempotent() {
        return LieElement::zero();
    }
    let mut sum = PathComb::zero();
    for e in q.base_letters() {
        let es = e.rev();
        let t1 = path_product(q, &cyclic_derivative(q, f, e), &cyclic_derivative(q, g, es));
        let t2 = path_product(q, &cyclic_derivative(q, f, es), &cyclic_derivative(q, g, e));
        sum.add_scaled(&t1, &HPoly::one());
        sum.add_scaled(&t2, &minus_one());
    }
    pr_comb(q, &sum)
}

/// The bracket extended bilinearly to `L[h]`.
pub fn bracket_lie(q: &Quiver, a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (f, c) in a.iter() {
        for (g, d) in b.iter() {
            out.add_scaled(&bracket(q, f, g), &(c * d));
        }
    }
    out
}

/// The bracket on `Sym L[h]`, extended from `L` as a biderivation.
pub fn bracket_sym(q: &Quiver, a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in a.iter() {
        for (n, d) in b.iter() {
            let cd = c * d;
            for (i, f) in m.factors().iter().enumerate() {
                for (j, g) in n.factors().iter().enumerate() {
                    let rest = m.without(i).mul(&n.without(j));
                    for (k, x) in bracket(q, f, g).iter() {
                        out.add_term(rest.mul(&Monomial::single(k.clone())), &(x * &cd));
                    }
                }
            }
        }
    }
    out
}

/// `(pr ⊗ pr)` of a combination of pairs of closed paths.
fn pr_tensor(q: &Quiver, t: &PathTensor) -> LieTensor {
    t.map_keys(|(a, b)| {
        (a.pr(q).expect("closed left factor"), b.pr(q).expect("closed right factor"))
    })
}

/// The necklace cobracket `δ(f)`, as an antisymmetric element of `L ⊗ L`.
pub fn cobracket(q: &Quiver, f: &Necklace) -> LieTensor {
    let mut sum = PathTensor::zero();
    for e in q.base_letters() {
        let es = e.rev();
        for (p, c) in cyclic_derivative(q, f, es).iter() {
            sum.add_scaled(&double_derivation(q, p, e), c);
        }
        for (p, c) in cyclic_derivative(q, f, e).iter() {
            sum.add_scaled(&double_derivation(q, p, es), &-c);
        }
    }
    pr_tensor(q, &sum)
}

pub fn cobracket_lie(q: &Quiver, a: &LieElement) -> LieTensor {
    a.map_linear(|f| cobracket(q, f))
}

/// The cobracket on `Sym L[h]`: `δ(P_1⋯P_k) = Σ_i δ(P_i) · Π_{j≠i} Δ_0(P_j)`
/// with `Δ_0(N) = N ⊗ 1 + 1 ⊗ N`.
pub fn cobracket_sym(q: &Quiver, a: &Element) -> Tensor {
    let mut out = Tensor::zero();
    for (m, c) in a.iter() {
        let k = m.degree();
        for i in 0..k {
            let d = cobracket(q, &m.factors()[i]);
            if d.is_zero() {
                continue;
            }
            let others: Vec<&Necklace> =
                m.factors().iter().enumerate().filter(|(j, _)| *j != i).map(|(_, n)| n).collect();
            for mask in 0u32..(1 << others.len()) {
                let mut left = Vec::new();
                let mut right = Vec::new();
                for (j, n) in others.iter().enumerate() {
                    if mask >> j & 1 == 0 {
                        left.push((*n).clone());
                    } else {
                        right.push((*n).clone());
                    }
                }
                let (l, r) = (Monomial::new(left), Monomial::new(right));
                for ((x, y), v) in d.iter() {
                    let key = (l.mul(&Monomial::single(x.clone())), r.mul(&Monomial::single(y.clone())));
                    out.add_term(key, &(v * c));
                }
            }
        }
    }
    out
}

/// Image of a single letter under the Hamiltonian derivation of `f`:
/// `e ↦ −∂f/∂e*`, `e* ↦ ∂f/∂e` for `e ∈ Q`.
fn hamiltonian_letter(q: &Quiver, f: &Necklace, a: Letter) -> PathComb {
    let d = cyclic_derivative(q, f, a.rev());
    if a.in_q() {
        d.scale(&minus_one())
    } else {
        d
    }
}

/// The Hamiltonian derivation of `f` applied to a path.
pub fn hamiltonian_action(q: &Quiver, f: &Necklace, p: &Path) -> PathComb {
    let mut out = PathComb::zero();
    for (r, &a) in p.word.iter().enumerate() {
        let img = hamiltonian_letter(q, f, a);
        if img.is_zero() {
            continue;
        }
        let left = PathComb::basis(Path { start: p.start, word: p.word[..r].to_vec() });
        let right = PathComb::basis(Path { start: q.head(a), word: p.word[r + 1..].to_vec() });
        out.add_scaled(&path_product(q, &path_product(q, &left, &img), &right), &HPoly::one());
    }
    out
}

/// The symplectic form on letters.
pub fn symplectic_form(e: Letter, f: Letter) -> i32 {
    if f != e.rev() {
        0
    } else if e.in_q() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::{format_lie, format_lie_tensor, parse_necklace};

    fn n(q: &Quiver, s: &str) -> Necklace {
        parse_necklace(q, s).unwrap()
    }

    #[test]
    fn derivatives() {
        let q = Quiver::loops(&["a", "e"]);
        let e = q.parse_letter("e").unwrap();
        let a = q.parse_letter("a").unwrap();
        let d = cyclic_derivative(&q, &n(&q, "(e e*)"), e);
        assert_eq!(d, PathComb::basis(Path { start: 0, word: vec![e.rev()] }));
        let d = cyclic_derivative(&q, &n(&q, "(a a)"), a);
        assert_eq!(d, PathComb::term(Path { start: 0, word: vec![a] }, HPoly::constant(crate::poly::q(2))));
        assert!(cyclic_derivative(&q, &n(&q, "(e e*)"), a).is_zero());
    }

    #[test]
    fn double_derivation_examples() {
        let q = Quiver::loops(&["e", "f"]);
        let e = q.parse_letter("e").unwrap();
        let f = q.parse_letter("f").unwrap();
        let d = double_derivation(&q, &Path { start: 0, word: vec![e] }, e);
        assert_eq!(d, PathTensor::basis((Path::idempotent(0), Path::idempotent(0))));
        let d = double_derivation(&q, &Path { start: 0, word: vec![e, f] }, e);
        assert_eq!(d, PathTensor::basis((Path::idempotent(0), Path { start: 0, word: vec![f] })));
        assert!(double_derivation(&q, &Path { start: 0, word: vec![f] }, e).is_zero());
    }

    #[test]
    fn bracket_examples() {
        let q = Quiver::loops(&["a", "b"]);
        let r = bracket(&q, &n(&q, "(a b)"), &n(&q, "(a* b*)"));
        assert_eq!(format_lie(&q, &r), "(a a*) + (b b*)");
        assert!(bracket(&q, &n(&q, "(a a*)"), &n(&q, "(a a*)")).is_zero());
        assert!(bracket(&q, &n(&q, "(a a)"), &n(&q, "(b b)")).is_zero());
    }

    #[test]
    fn cobracket_examples() {
        let q = Quiver::loops(&["a", "b"]);
        assert!(cobracket(&q, &n(&q, "(a a*)")).is_zero());
        assert!(cobracket(&q, &Necklace::idempotent(0)).is_zero());
        let d = cobracket(&q, &n(&q, "(a a* b b*)"));
        assert_eq!(
            format_lie_tensor(&q, &d),
            "-I(v) ⊗ (a a*) - I(v) ⊗ (b b*) + (a a*) ⊗ I(v) + (b b*) ⊗ I(v)"
        );
    }

    #[test]
    fn action_examples() {
        let q = Quiver::loops(&["e", "f"]);
        let e = q.parse_letter("e").unwrap();
        let f = q.parse_letter("f").unwrap();
        let ee = n(&q, "(e e*)");
        let r = hamiltonian_action(&q, &ee, &Path { start: 0, word: vec![e] });
        assert_eq!(r, PathComb::term(Path { start: 0, word: vec![e] }, minus_one()));
        assert!(hamiltonian_action(&q, &ee, &Path::idempotent(0)).is_zero());
        assert!(hamiltonian_action(&q, &ee, &Path { start: 0, word: vec![f, f] }).is_zero());
    }

    #[test]
    fn symplectic_values() {
        let e = Letter::base(0);
        assert_eq!(symplectic_form(e, e.rev()), 1);
        assert_eq!(symplectic_form(e.rev(), e), -1);
        assert_eq!(symplectic_form(e, Letter::base(1)), 0);
    }
}
