//! Text grammar for elements:
//!
//! ```text
//! expr     := sign? term (sign term)*
//! term     := rational? ("h" ("^" int)?)? monomial?     (nonempty)
//! monomial := factor ("&" factor)*
//! factor   := "(" letter+ ")" | "I(" vertex ")"
//! ```

use num_bigint::BigInt;
use num_traits::One;

use super::{Element, Monomial, Necklace};
use crate::error::{Error, Result};
use crate::poly::{HPoly, Q};
use crate::quiver::Quiver;

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    q: &'a Quiver,
}

fn is_ident_byte(b: u8) -> bool {
    !b.is_ascii_whitespace() && !b"()&+^".contains(&b) && b != b'-'
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && is_ident_byte(self.s[self.pos]) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected identifier");
        }
        Ok(String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    /// `I(v)` starts here, as opposed to an ordinary identifier.
    fn at_idempotent(&mut self) -> bool {
        self.skip_ws();
        self.s[self.pos..].starts_with(b"I") && {
            let mut k = self.pos + 1;
            while k < self.s.len() && self.s[k].is_ascii_whitespace() {
                k += 1;
            }
            self.s.get(k) == Some(&b'(')
        }
    }

    fn factor(&mut self) -> Result<Necklace> {
        if self.at_idempotent() {
            self.pos += 1;
            self.eat(b'(');
            let v = self.ident()?;
            if !self.eat(b')') {
                return self.err("expected `)`");
            }
            return Ok(Necklace::idempotent(self.q.vertex_index(&v)?));
        }
        if !self.eat(b'(') {
            return self.err("expected `(` or `I(`");
        }
        let mut word = Vec::new();
        while self.peek() != Some(b')') {
            if self.peek().is_none() {
                return self.err("unterminated necklace");
            }
            let id = self.ident()?;
            word.push(self.q.parse_letter(&id)?);
        }
        self.pos += 1;
        if word.is_empty() {
            return self.err("empty necklace; write I(v) for an idempotent");
        }
        Necklace::new(self.q, word)
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut v = vec![self.factor()?];
        while self.eat(b'&') {
            v.push(self.factor()?);
        }
        Ok(Monomial::new(v))
    }

    fn term(&mut self) -> Result<(HPoly, Monomial)> {
        let start = self.pos;
        let mut coeff = Q::one();
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let n = self.integer()?;
            let d = if self.eat(b'/') { self.integer()? } else { BigInt::one() };
            if d == BigInt::from(0) {
                return self.err("zero denominator");
            }
            coeff = Q::new(n, d);
        }
        let mut deg = 0;
        self.skip_ws();
        let at_h = self.s[self.pos..].starts_with(b"h")
            && self.s.get(self.pos + 1).is_none_or(|b| !is_ident_byte(*b) || *b == b'^');
        if at_h {
            self.pos += 1;
            deg = 1;
            if self.eat(b'^') {
                let k = self.integer()?;
                deg = k.try_into().map_err(|_| Error::Parse { pos: self.pos, msg: "h exponent too large".into() })?;
            }
        }
        let mono = match self.peek() {
            Some(b'(') => self.monomial()?,
            Some(b'I') if self.at_idempotent() => self.monomial()?,
            _ => Monomial::one(),
        };
        if self.pos == start {
            return self.err("expected a term");
        }
        Ok((HPoly::monomial(coeff, deg), mono))
    }

    fn expr(&mut self) -> Result<Element> {
        let mut out = Element::zero();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let (c, m) = self.term()?;
            let c = if sign < 0 { -&c } else { c };
            out.add_term(m, &c);
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        if self.peek().is_some() {
            return self.err("trailing input");
        }
        Ok(out)
    }
}

/// Parses an element of `(Sym L)[h]`. The literal `0` is the zero element.
pub fn parse_element(q: &Quiver, s: &str) -> Result<Element> {
    if s.trim() == "0" {
        return Ok(Element::zero());
    }
    Parser { s: s.as_bytes(), pos: 0, q }.expr()
}

/// Parses a single necklace `(a b ...)` or `I(v)`.
pub fn parse_necklace(q: &Quiver, s: &str) -> Result<Necklace> {
    let mut p = Parser { s: s.as_bytes(), pos: 0, q };
    let n = p.factor()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::necklace::format_element;

    #[test]
    fn round_trip() {
        let q = Quiver::loops(&["e"]);
        for s in [
            "(e e*)&(e e*) - 1/4 h^2 I(v)&I(v)",
            "3/2 h^2 I(v)&(e e*)",
            "1 + h",
            "-(e)",
            "0",
        ] {
            let x = parse_element(&q, s).unwrap();
            assert_eq!(format_element(&q, &x), s);
        }
    }

    #[test]
    fn normalizes() {
        let q = Quiver::loops(&["e"]);
        let x = parse_element(&q, "(e* e) & I(v) + (e e*)&I(v)").unwrap();
        assert_eq!(format_element(&q, &x), "2 I(v)&(e e*)");
    }

    #[test]
    fn errors() {
        let q = Quiver::loops(&["e"]);
        assert!(matches!(parse_element(&q, "(e f)"), Err(Error::UnknownEdge(_))));
        assert!(matches!(parse_element(&q, "(e"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&q, "()"), Err(Error::Parse { .. })));
        assert!(matches!(parse_element(&q, "I(w)"), Err(Error::UnknownVertex(_))));
        let a2 = Quiver::from_triples(&["1", "2"], &[("a", "1", "2")]).unwrap();
        assert!(matches!(parse_element(&a2, "(a)"), Err(Error::NotClosed)));
    }
}
