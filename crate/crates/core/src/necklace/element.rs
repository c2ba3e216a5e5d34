use std::cmp::Ordering;

use num_traits::{One, Signed};

use super::Necklace;
use crate::poly::{fmt_q, Combination, HPoly, Q};
use crate::quiver::Quiver;

/// A multiset of necklaces, kept sorted. The empty multiset is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Necklace>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut factors: Vec<Necklace>) -> Self {
        factors.sort();
        Monomial(factors)
    }

    pub fn single(n: Necklace) -> Self {
        Monomial(vec![n])
    }

    pub fn factors(&self) -> &[Necklace] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of necklace factors (idempotents included).
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Total number of letters.
    pub fn weight(&self) -> usize {
        self.0.iter().map(Necklace::len).sum()
    }

    /// Symmetric product.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Monomial::new(v)
    }

    /// The monomial with factor `i` removed.
    pub fn without(&self, i: usize) -> Monomial {
        let mut v = self.0.clone();
        v.remove(i);
        Monomial(v)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0.iter().map(|n| n.display(q)).collect::<Vec<_>>().join("&")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.0.len().cmp(&other.0.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `(Sym L)[h]`.
pub type Element = Combination<Monomial>;
/// An element of `(Sym L)[h] ⊗ (Sym L)[h]`.
pub type Tensor = Combination<(Monomial, Monomial)>;
/// An element of the triple tensor power.
pub type Tensor3 = Combination<(Monomial, Monomial, Monomial)>;
/// An element of `L[h]`.
pub type LieElement = Combination<Necklace>;
/// An element of `L ⊗ L`.
pub type LieTensor = Combination<(Necklace, Necklace)>;

pub fn unit() -> Element {
    Element::basis(Monomial::one())
}

pub fn necklace_element(n: Necklace) -> Element {
    Element::basis(Monomial::single(n))
}

/// Embeds `L` into `Sym L`.
pub fn lie_to_element(x: &LieElement) -> Element {
    x.map_keys(|n| Monomial::single(n.clone()))
}

/// Embeds `L ⊗ L` into `Sym L ⊗ Sym L`.
pub fn lie_tensor_to_tensor(x: &LieTensor) -> Tensor {
    x.map_keys(|(a, b)| (Monomial::single(a.clone()), Monomial::single(b.clone())))
}

/// The symmetric (commutative) product, extended bilinearly.
pub fn sym_product(a: &Element, b: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in a.iter() {
        for (n, d) in b.iter() {
            out.add_term(m.mul(n), &(c * d));
        }
    }
    out
}

/// Componentwise symmetric product on tensors.
pub fn tensor_sym_product(a: &Tensor, b: &Tensor) -> Tensor {
    let mut out = Tensor::zero();
    for ((m1, m2), c) in a.iter() {
        for ((n1, n2), d) in b.iter() {
            out.add_term((m1.mul(n1), m2.mul(n2)), &(c * d));
        }
    }
    out
}

/// The flip of tensor factors.
pub fn flip(t: &Tensor) -> Tensor {
    t.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// Writes `c · h^d` in front of a basis label, as part of a signed sum.
fn push_term(out: &mut String, coeff: &Q, deg: usize, label: &str, label_is_one: bool) {
    let neg = coeff.is_negative();
    let a = coeff.abs();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let mut parts: Vec<String> = Vec::new();
    let h = match deg {
        0 => None,
        1 => Some("h".to_string()),
        d => Some(format!("h^{d}")),
    };
    if !a.is_one() || (h.is_none() && label_is_one) {
        parts.push(fmt_q(&a));
    }
    if let Some(h) = h {
        parts.push(h);
    }
    if !label_is_one || parts.is_empty() {
        parts.push(label.to_string());
    }
    out.push_str(&parts.join(" "));
}

/// Formats a combination with terms sorted by (h-degree, basis order).
pub fn format_combination<K: Ord + Clone>(
    x: &Combination<K>,
    mut label: impl FnMut(&K) -> (String, bool),
) -> String {
    let mut terms: Vec<(usize, &K, &Q)> = Vec::new();
    for (k, p) in x.iter() {
        for (d, c) in p.terms() {
            terms.push((d, k, c));
        }
    }
    terms.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(b.1)));
    let mut out = String::new();
    for (d, k, c) in terms {
        let (s, is_one) = label(k);
        push_term(&mut out, c, d, &s, is_one);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_element(q: &Quiver, x: &Element) -> String {
    format_combination(x, |m| (m.display(q), m.is_one()))
}

pub fn format_tensor(q: &Quiver, x: &Tensor) -> String {
    format_combination(x, |(a, b)| (format!("{} ⊗ {}", a.display(q), b.display(q)), false))
}

pub fn format_tensor3(q: &Quiver, x: &Tensor3) -> String {
    format_combination(x, |(a, b, c)| {
        (format!("{} ⊗ {} ⊗ {}", a.display(q), b.display(q), c.display(q)), false)
    })
}

pub fn format_lie(q: &Quiver, x: &LieElement) -> String {
    format_combination(x, |n| (n.display(q), false))
}

pub fn format_lie_tensor(q: &Quiver, x: &LieTensor) -> String {
    format_combination(x, |(a, b)| (format!("{} ⊗ {}", a.display(q), b.display(q)), false))
}

/// The `h = 0` specialization of an element, still as an element.
pub fn at_h_zero<K: Ord + Clone>(x: &Combination<K>) -> Combination<K> {
    x.h_coefficient(0)
}

/// Sum of coefficients on the empty monomial; used by the counit.
pub fn unit_coefficient(x: &Element) -> HPoly {
    x.coeff(&Monomial::one())
}

/// Whether every coefficient is a constant (no positive powers of `h`).
pub fn is_classical<K: Ord + Clone>(x: &Combination<K>) -> bool {
    x.iter().all(|(_, p)| p.degree().unwrap_or(0) == 0)
}

pub fn scalar(c: i64) -> HPoly {
    if c == 0 {
        return HPoly::zero();
    }
    HPoly::constant(crate::poly::q(c))
}

