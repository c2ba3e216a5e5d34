//! Property suites shared by the command line and the test targets.

pub mod ainf;
pub mod diagram;
pub mod hopf;
pub mod lie;
pub mod ribbon;

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::necklace::{necklaces_of_length, necklaces_up_to, Monomial, Necklace};
use crate::quiver::Quiver;

/// Name of the pseudorandom generator used by every randomized sweep.
pub const RNG_NAME: &str = "ChaCha8";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Outcome of one property over a sweep.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    /// Description of the first counterexample, with the arguments that
    /// reproduce it.
    pub failure: Option<String>,
}

impl Check {
    pub fn new(name: &str) -> Self {
        Check { name: name.to_string(), cases: 0, failure: None }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records one case; keeps only the first failure.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub suite: String,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report { suite: suite.to_string(), notes: Vec::new(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn merge(&mut self, other: Report) {
        self.notes.extend(other.notes);
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.suite)?;
        for n in &self.notes {
            writeln!(f, "note {n}")?;
        }
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            if c.cases == 0 {
                writeln!(f, "{status} {} (0 cases)", c.name)?;
            } else {
                writeln!(f, "{status} {} ({} cases)", c.name, c.cases)?;
            }
            if let Some(msg) = &c.failure {
                writeln!(f, "  counterexample: {msg}")?;
            }
        }
        Ok(())
    }
}

/// All necklace multisets of total length `<= max_weight` built from
/// non-idempotent necklaces, each optionally multiplied by one vertex
/// idempotent when `with_idempotent` is set.
pub fn monomials_up_to(q: &Quiver, max_weight: usize, with_idempotent: bool) -> Vec<Monomial> {
    let pool = necklaces_up_to(q, max_weight);
    let mut out = Vec::new();
    fn rec(pool: &[Necklace], from: usize, budget: usize, cur: &mut Vec<Necklace>, out: &mut Vec<Monomial>) {
        out.push(Monomial::new(cur.clone()));
        for i in from..pool.len() {
            if pool[i].len() <= budget {
                cur.push(pool[i].clone());
                rec(pool, i, budget - pool[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    rec(&pool, 0, max_weight, &mut Vec::new(), &mut out);
    if with_idempotent {
        let base = out.clone();
        for v in necklaces_of_length(q, 0) {
            for m in &base {
                out.push(m.mul(&Monomial::single(v.clone())));
            }
        }
    }
    out.sort();
    out
}

/// A random multiset of total length `<= max_weight`, occasionally with an
/// idempotent factor.
pub fn random_monomial<R: Rng>(q: &Quiver, max_weight: usize, rng: &mut R) -> Monomial {
    let pool = necklaces_up_to(q, max_weight);
    let target = rng.gen_range(0..=max_weight);
    let mut budget = target;
    let mut parts = Vec::new();
    while budget > 0 {
        let fits: Vec<&Necklace> = pool.iter().filter(|n| n.len() <= budget).collect();
        let Some(n) = fits.choose(rng) else { break };
        budget -= n.len();
        parts.push((*n).clone());
    }
    if rng.gen_bool(0.2) {
        let v = rng.gen_range(0..q.num_vertices());
        parts.push(Necklace::idempotent(v));
    }
    Monomial::new(parts)
}

/// The quivers of the standard sweeps: one loop, two loops, and a
/// two-vertex quiver with an arrow and a loop.
pub fn standard_quivers() -> Vec<(&'static str, Quiver)> {
    vec![
        ("one-loop", Quiver::loops(&["e"])),
        ("two-loop", Quiver::loops(&["a", "b"])),
        (
            "two-vertex",
            Quiver::from_triples(&["v1", "v2"], &[("a", "v1", "v2"), ("l", "v2", "v2")]).expect("valid"),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_counts() {
        let q = Quiver::loops(&["e"]);
        // weight 0: 1; weight 1: e, e*; weight 2: three necklaces plus three pairs.
        assert_eq!(monomials_up_to(&q, 2, false).len(), 1 + 2 + 6);
        assert_eq!(monomials_up_to(&q, 2, true).len(), 18);
    }
}
