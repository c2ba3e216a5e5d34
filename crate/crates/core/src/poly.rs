//! Exact scalars: rationals, polynomials in the formal parameter `h`, and
//! finitely supported linear combinations with `ℚ[h]` coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qfrac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Prints a rational as `n` or `n/d`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// A polynomial in `h` with rational coefficients, dense by degree, with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HPoly {
    coeffs: Vec<Q>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · h^deg`
    pub fn monomial(c: Q, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); deg + 1];
        coeffs[deg] = c;
        HPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        let mut p = HPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> Q {
        self.coeffs.get(deg).cloned().unwrap_or_else(Q::zero)
    }

    /// Iterates over `(degree, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        HPoly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Multiplies by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Q::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        HPoly { coeffs }
    }

    /// Value at `h = 0`.
    pub fn at_zero(&self) -> Q {
        self.coeff(0)
    }
}

impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.terms() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match d {
                0 => write!(f, "{}", fmt_q(&a))?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{} ", fmt_q(&a))?;
                    }
                    if d == 1 {
                        write!(f, "h")?;
                    } else {
                        write!(f, "h^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn add(self, rhs: &HPoly) -> HPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&HPoly> for HPoly {
    fn add_assign(&mut self, rhs: &HPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Q::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        self.trim();
    }
}

impl<'a> Sub<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn sub(self, rhs: &HPoly) -> HPoly {
        self + &(-rhs)
    }
}

impl Neg for &HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a HPoly> for &'a HPoly {
    type Output = HPoly;
    fn mul(self, rhs: &HPoly) -> HPoly {
        if self.is_zero() || rhs.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Q::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HPoly::from_coeffs(coeffs)
    }
}

/// A finitely supported `ℚ[h]`-linear combination of basis keys. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination<K: Ord> {
    terms: BTreeMap<K, HPoly>,
}

impl<K: Ord> Default for Combination<K> {
    fn default() -> Self {
        Combination { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Combination<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        Self::term(k, HPoly::one())
    }

    pub fn term(k: K, c: HPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: K, c: &HPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &HPoly) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), &(v * c));
        }
    }

    pub fn coeff(&self, k: &K) -> HPoly {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &HPoly)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &HPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.scale(&HPoly::constant(c.clone()))
    }

    /// The coefficient of `h^d`, as a combination with constant coefficients.
    pub fn h_coefficient(&self, d: usize) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), &HPoly::constant(v.coeff(d)));
        }
        out
    }

    /// Largest power of `h` occurring.
    pub fn h_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(HPoly::degree).max()
    }

    /// Applies a linear map given on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Combination<L>) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, v) in &self.terms {
            out.add_scaled(&f(k), v);
        }
        out
    }

    /// Relabels keys; coefficients of keys mapping together are summed.
    pub fn map_keys<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> L) -> Combination<L> {
        let mut out = Combination::zero();
        for (k, v) in &self.terms {
            out.add_term(f(k), v);
        }
        out
    }
}

impl<K: Ord + Clone> Add<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;
    fn add(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &HPoly::one());
        out
    }
}

impl<K: Ord + Clone> Sub<&Combination<K>> for &Combination<K> {
    type Output = Combination<K>;
    fn sub(self, rhs: &Combination<K>) -> Combination<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &HPoly::constant(-Q::one()));
        out
    }
}

impl<K: Ord + Clone> Neg for &Combination<K> {
    type Output = Combination<K>;
    fn neg(self) -> Combination<K> {
        self.scale_q(&-Q::one())
    }
}

impl<K: Ord + Clone> FromIterator<(K, HPoly)> for Combination<K> {
    fn from_iter<T: IntoIterator<Item = (K, HPoly)>>(iter: T) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, &v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hpoly_arithmetic() {
        let a = HPoly::from_coeffs(vec![q(1), q(0), qfrac(-1, 4)]);
        let b = HPoly::monomial(q(2), 1);
        let p = &a * &b;
        assert_eq!(p.coeff(1), q(2));
        assert_eq!(p.coeff(3), qfrac(-1, 2));
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "1 - 1/4 h^2");
    }

    #[test]
    fn combination_cancels() {
        let mut c: Combination<u32> = Combination::basis(3);
        c.add_term(3, &HPoly::constant(q(-1)));
        assert!(c.is_zero());
    }
}
