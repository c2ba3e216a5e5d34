//! Representation-space oracles: traces into polynomial rings in matrix
//! coordinates, the classical Moyal product, the Weyl algebra, and height
//! words realized as differential operators.
//!
//! Matrix coordinates are indexed so that products of paths compose:
//! `(M_a)_{ij}` has `i ≤ l_{t(a)}` and `j ≤ l_{h(a)}`, and the trace of a
//! necklace `a_1⋯a_m` is `Σ Π (M_{a_r})_{i_r i_{r+1}}`.

mod polynomial;
mod rho;
mod weyl;

pub use polynomial::*;
pub use rho::*;
pub use weyl::*;

use crate::error::{Error, Result};
use crate::quiver::{Letter, Quiver};

/// A matrix coordinate `(M_a)_{ij}` (indices from 0).
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub letter: Letter,
    pub i: u32,
    pub j: u32,
}

impl Coord {
    pub fn new(letter: Letter, i: u32, j: u32) -> Self {
        Coord { letter, i, j }
    }

    /// The coordinate paired with this one by the bivector.
    pub fn dual(self) -> Coord {
        Coord { letter: self.letter.rev(), i: self.j, j: self.i }
    }
}

/// Dimension vector: one matrix size per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DimVec(pub Vec<usize>);

impl DimVec {
    pub fn uniform(q: &Quiver, l: usize) -> Self {
        DimVec(vec![l; q.num_vertices()])
    }

    pub fn at(&self, v: usize) -> usize {
        self.0[v]
    }

    /// Parses `2` (uniform) or `1:2:1` (per vertex).
    pub fn parse(q: &Quiver, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse { pos: 0, msg: format!("bad dimension vector `{s}`") })?;
        match nums.len() {
            1 => Ok(Self::uniform(q, nums[0])),
            n if n == q.num_vertices() => Ok(DimVec(nums)),
            _ => Err(Error::Parse { pos: 0, msg: format!("dimension vector `{s}` has wrong length") }),
        }
    }
}

/// All index tuples for a cyclic word: `i_r ≤ l_{t(a_r)}`.
pub(crate) fn index_tuples(q: &Quiver, word: &[Letter], l: &DimVec) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &a in word {
        let n = l.at(q.tail(a)) as u32;
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub(crate) fn coord_name(q: &Quiver, c: &Coord) -> String {
    format!("M[{}][{}][{}]", q.letter_name(c.letter), c.i + 1, c.j + 1)
}
