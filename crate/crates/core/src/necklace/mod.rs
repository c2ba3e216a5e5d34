//! Paths, necklaces and elements of `(Sym L)[h]`.

mod calculus;
mod element;
mod parse;

pub use calculus::*;
pub use element::*;
pub use parse::{parse_element, parse_necklace};

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::quiver::{Letter, Quiver};

/// A path in the double quiver, or the idempotent `1_start` when `word` is
/// empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub start: usize,
    pub word: Vec<Letter>,
}

impl Path {
    pub fn idempotent(v: usize) -> Self {
        Path { start: v, word: Vec::new() }
    }

    pub fn new(q: &Quiver, word: Vec<Letter>) -> Result<Self> {
        let start = *word.first().map(|a| q.tail(*a)).as_ref().ok_or(Error::NotComposable(0))?;
        for (i, w) in word.windows(2).enumerate() {
            if q.head(w[0]) != q.tail(w[1]) {
                return Err(Error::NotComposable(i + 1));
            }
        }
        Ok(Path { start, word })
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.word.last().map_or(self.start, |a| q.head(*a))
    }

    pub fn is_closed(&self, q: &Quiver) -> bool {
        self.end(q) == self.start
    }

    /// Concatenation in the path algebra; `None` when not composable.
    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.end(q) != other.start {
            return None;
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Some(Path { start: self.start, word })
    }

    /// The projection `pr_L` to necklaces.
    pub fn pr(&self, q: &Quiver) -> Result<Necklace> {
        if !self.is_closed(q) {
            return Err(Error::NotClosed);
        }
        if self.word.is_empty() {
            return Ok(Necklace::idempotent(self.start));
        }
        Ok(Necklace::from_closed_unchecked(q, self.word.clone()))
    }
}

/// A cyclic word stored as its minimal rotation, or a vertex idempotent
/// when `word` is empty. For nonempty words `vertex` is the tail of the
/// first stored letter.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Necklace {
    vertex: usize,
    word: Vec<Letter>,
}

impl Ord for Necklace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.vertex.cmp(&other.vertex))
    }
}

impl PartialOrd for Necklace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Index of the lexicographically least rotation.
pub fn min_rotation<T: Ord>(w: &[T]) -> usize {
    let n = w.len();
    let mut best = 0;
    for s in 1..n {
        for k in 0..n {
            match w[(s + k) % n].cmp(&w[(best + k) % n]) {
                Ordering::Less => {
                    best = s;
                    break;
                }
                Ordering::Greater => break,
                Ordering::Equal => {}
            }
        }
    }
    best
}

impl Necklace {
    pub fn idempotent(v: usize) -> Self {
        Necklace { vertex: v, word: Vec::new() }
    }

    /// Canonical necklace of a closed path given as a word.
    pub fn new(q: &Quiver, word: Vec<Letter>) -> Result<Self> {
        let p = Path::new(q, word)?;
        if !p.is_closed(q) {
            return Err(Error::NotClosed);
        }
        Ok(Self::from_closed_unchecked(q, p.word))
    }

    pub(crate) fn from_closed_unchecked(q: &Quiver, mut word: Vec<Letter>) -> Self {
        let r = min_rotation(&word);
        word.rotate_left(r);
        Necklace { vertex: q.tail(word[0]), word }
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_idempotent(&self) -> bool {
        self.word.is_empty()
    }

    /// The vertex of an idempotent, or the tail of the first stored letter.
    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// The closed path starting at letter `r` of the stored word.
    pub fn rotation(&self, q: &Quiver, r: usize) -> Path {
        if self.word.is_empty() {
            return Path::idempotent(self.vertex);
        }
        let mut word = self.word.clone();
        let n = word.len();
        word.rotate_left(r % n);
        Path { start: q.tail(word[0]), word }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.word.is_empty() {
            return format!("I({})", q.vertex_name(self.vertex));
        }
        let names: Vec<_> = self.word.iter().map(|a| q.letter_name(*a)).collect();
        format!("({})", names.join(" "))
    }
}

/// All necklaces of length exactly `len` (for `len = 0`, the idempotents).
pub fn necklaces_of_length(q: &Quiver, len: usize) -> Vec<Necklace> {
    if len == 0 {
        return (0..q.num_vertices()).map(Necklace::idempotent).collect();
    }
    let letters: Vec<Letter> = q.letters().collect();
    let mut out = BTreeSet::new();
    let mut word = Vec::with_capacity(len);
    fn rec(q: &Quiver, letters: &[Letter], len: usize, word: &mut Vec<Letter>, out: &mut BTreeSet<Necklace>) {
        if word.len() == len {
            if q.head(word[len - 1]) == q.tail(word[0]) {
                out.insert(Necklace::from_closed_unchecked(q, word.clone()));
            }
            return;
        }
        for &a in letters {
            if let Some(&last) = word.last() {
                if q.head(last) != q.tail(a) {
                    continue;
                }
            }
            word.push(a);
            rec(q, letters, len, word, out);
            word.pop();
        }
    }
    rec(q, &letters, len, &mut word, &mut out);
    out.into_iter().collect()
}

/// All non-idempotent necklaces of length `1..=max_len`.
pub fn necklaces_up_to(q: &Quiver, max_len: usize) -> Vec<Necklace> {
    (1..=max_len).flat_map(|l| necklaces_of_length(q, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotation() {
        let q = Quiver::loops(&["a", "e"]);
        let l = |s: &str| q.parse_letter(s).unwrap();
        let n = Necklace::new(&q, vec![l("e*"), l("e")]).unwrap();
        assert_eq!(n.display(&q), "(e e*)");
        let n = Necklace::new(&q, vec![l("e"), l("a"), l("a")]).unwrap();
        assert_eq!(n.display(&q), "(a a e)");
        let n = Necklace::new(&q, vec![l("a"), l("e"), l("a"), l("e")]).unwrap();
        assert_eq!(n.display(&q), "(a e a e)");
    }

    #[test]
    fn not_closed_rejected() {
        let q = Quiver::from_triples(&["v1", "v2"], &[("a", "v1", "v2")]).unwrap();
        let a = q.parse_letter("a").unwrap();
        assert_eq!(Necklace::new(&q, vec![a]), Err(Error::NotClosed));
        assert!(Necklace::new(&q, vec![a, a]).is_err());
        assert!(Necklace::new(&q, vec![a, a.rev()]).is_ok());
    }

    #[test]
    fn necklace_counts() {
        // Necklaces over a 2-letter alphabet: 2, 3, 4, 6.
        let q = Quiver::loops(&["e"]);
        let counts: Vec<_> = (1..=4).map(|l| necklaces_of_length(&q, l).len()).collect();
        assert_eq!(counts, [2, 3, 4, 6]);
    }
}
