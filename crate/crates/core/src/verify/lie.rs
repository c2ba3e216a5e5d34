//! Lie bialgebra axioms for the necklace bracket and cobracket.

use rand::seq::SliceRandom;
use rayon::prelude::*;

use super::{rng, Check, Report, RNG_NAME};
use crate::necklace::{
    bracket, bracket_lie, cobracket, cobracket_lie, hamiltonian_action, necklaces_up_to, pr_comb, LieElement,
    LieTensor, Necklace,
};
use crate::poly::Combination;
use crate::quiver::Quiver;

type LieTensor3 = Combination<(Necklace, Necklace, Necklace)>;

#[derive(Clone, Debug)]
pub struct LieConfig {
    /// Bound on the length of each necklace.
    pub max_len: usize,
    /// Bound on the total length of a pair or triple.
    pub max_total: usize,
    pub random_cases: usize,
    pub seed: u64,
}

impl LieConfig {
    pub fn exhaustive(max_len: usize) -> Self {
        LieConfig { max_len, max_total: 3 * max_len, random_cases: 0, seed: 0 }
    }
}

pub fn antisymmetry_case(q: &Quiver, f: &Necklace, g: &Necklace) -> bool {
    bracket(q, f, g) == -&bracket(q, g, f)
}

pub fn jacobi_case(q: &Quiver, f: &Necklace, g: &Necklace, k: &Necklace) -> bool {
    let b = |x: &Necklace, y: &Necklace, z: &Necklace| {
        bracket_lie(q, &LieElement::basis(x.clone()), &bracket(q, y, z))
    };
    let sum = &(&b(f, g, k) + &b(g, k, f)) + &b(k, f, g);
    sum.is_zero()
}

pub fn cobracket_antisymmetry_case(q: &Quiver, f: &Necklace) -> bool {
    let d = cobracket(q, f);
    d == -&d.map_keys(|(a, b)| (b.clone(), a.clone()))
}

/// `(1 + τ + τ²)(δ ⊗ 1)δ(f) = 0` with `τ` the cyclic permutation.
pub fn co_jacobi_case(q: &Quiver, f: &Necklace) -> bool {
    let mut t = LieTensor3::zero();
    for ((x, y), c) in cobracket(q, f).iter() {
        for ((x1, x2), d) in cobracket(q, x).iter() {
            let v = c * d;
            t.add_term((x1.clone(), x2.clone(), y.clone()), &v);
            t.add_term((y.clone(), x1.clone(), x2.clone()), &v);
            t.add_term((x2.clone(), y.clone(), x1.clone()), &v);
        }
    }
    t.is_zero()
}

/// `f · (x ⊗ y) = {f, x} ⊗ y + x ⊗ {f, y}`.
fn ad(q: &Quiver, f: &Necklace, t: &LieTensor) -> LieTensor {
    let mut out = LieTensor::zero();
    for ((x, y), c) in t.iter() {
        for (z, d) in bracket(q, f, x).iter() {
            out.add_term((z.clone(), y.clone()), &(c * d));
        }
        for (z, d) in bracket(q, f, y).iter() {
            out.add_term((x.clone(), z.clone()), &(c * d));
        }
    }
    out
}

/// `δ({f, g}) = f · δ(g) − g · δ(f)`.
pub fn cocycle_case(q: &Quiver, f: &Necklace, g: &Necklace) -> bool {
    let lhs = cobracket_lie(q, &bracket(q, f, g));
    let rhs = &ad(q, f, &cobracket(q, g)) - &ad(q, g, &cobracket(q, f));
    lhs == rhs
}

/// `pr(action(f, p)) = {f, pr(p)}` for every rotation `p` of `g`.
pub fn action_case(q: &Quiver, f: &Necklace, g: &Necklace) -> bool {
    let expect = bracket(q, f, g);
    (0..g.len().max(1)).all(|r| {
        let p = g.rotation(q, r);
        pr_comb(q, &hamiltonian_action(q, f, &p)) == expect
    })
}

fn record_all<T: Sync>(
    check: &mut Check,
    cases: &[T],
    f: impl Fn(&T) -> bool + Sync,
    describe: impl Fn(&T) -> String,
) {
    let results: Vec<bool> = cases.par_iter().map(&f).collect();
    for (c, ok) in cases.iter().zip(results) {
        check.record(ok, || describe(c));
    }
}

pub fn lie_suite(q: &Quiver, cfg: &LieConfig) -> Report {
    let mut rep = Report::new("lie");
    rep.notes.push(format!(
        "necklaces of length <= {}, pairs and triples of total length <= {}; {} random triples ({RNG_NAME}, seed {})",
        cfg.max_len, cfg.max_total, cfg.random_cases, cfg.seed
    ));
    let pool = necklaces_up_to(q, cfg.max_len);
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for (i, f) in pool.iter().enumerate() {
        for (j, g) in pool.iter().enumerate() {
            if f.len() + g.len() > cfg.max_total {
                continue;
            }
            pairs.push((f.clone(), g.clone()));
            // Jacobi is symmetric under cyclic rotation and antisymmetric
            // under swaps, so ordered i <= j <= k suffices.
            if i > j {
                continue;
            }
            for k in pool.iter().skip(j) {
                if f.len() + g.len() + k.len() <= cfg.max_total {
                    triples.push((f.clone(), g.clone(), k.clone()));
                }
            }
        }
    }
    if cfg.random_cases > 0 {
        let mut r = rng(cfg.seed);
        for _ in 0..cfg.random_cases {
            let t: Vec<&Necklace> = (0..3).map(|_| pool.choose(&mut r).expect("nonempty pool")).collect();
            triples.push((t[0].clone(), t[1].clone(), t[2].clone()));
        }
    }
    let show = |n: &Necklace| format!("--case \"{}\"", n.display(q));
    let show2 = |p: &(Necklace, Necklace)| format!("{} {}", show(&p.0), show(&p.1));

    let mut c = Check::new("bracket-antisymmetry");
    record_all(&mut c, &pairs, |(f, g)| antisymmetry_case(q, f, g), show2);
    rep.checks.push(c);

    let mut c = Check::new("jacobi");
    record_all(
        &mut c,
        &triples,
        |(f, g, k)| jacobi_case(q, f, g, k),
        |t| format!("{} {} {}", show(&t.0), show(&t.1), show(&t.2)),
    );
    rep.checks.push(c);

    let mut c = Check::new("cobracket-antisymmetry");
    record_all(&mut c, &pool, |f| cobracket_antisymmetry_case(q, f), show);
    rep.checks.push(c);

    let mut c = Check::new("co-jacobi");
    record_all(&mut c, &pool, |f| co_jacobi_case(q, f), show);
    rep.checks.push(c);

    let mut c = Check::new("cocycle");
    record_all(&mut c, &pairs, |(f, g)| cocycle_case(q, f, g), show2);
    rep.checks.push(c);

    let mut c = Check::new("hamiltonian-action");
    record_all(&mut c, &pairs, |(f, g)| action_case(q, f, g), show2);
    rep.checks.push(c);
    rep
}

