//! Hopf axioms and classical limits of the star product and coproduct.

use rayon::prelude::*;

use super::{monomials_up_to, random_monomial, rng, Check, Report, RNG_NAME};
use crate::hopf::{antipode, coassoc_probe, coproduct, counit, star, star_tensor};
use crate::necklace::{
    bracket_sym, cobracket_sym, flip, format_element, sym_product, unit, Element, Monomial, Tensor,
};
use crate::poly::{qfrac, HPoly};
use crate::quiver::Quiver;

#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Exhaustive bound on the total length of all arguments of a case.
    pub max_len: usize,
    /// Whether exhaustive cases may carry one vertex idempotent factor.
    pub with_idempotent: bool,
    pub random_cases: usize,
    pub random_max_len: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { max_len: 4, with_idempotent: true, random_cases: 0, random_max_len: 6, seed: 0 }
    }
}

fn el(m: &Monomial) -> Element {
    Element::basis(m.clone())
}

fn case_args(q: &Quiver, args: &[&Monomial]) -> String {
    args.iter()
        .map(|m| format!("--case \"{}\"", m.display(q)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn associativity_case(q: &Quiver, p: &Element, r: &Element, s: &Element) -> bool {
    star(q, &star(q, p, r), s) == star(q, p, &star(q, r, s))
}

pub fn coassociativity_case(q: &Quiver, p: &Element) -> bool {
    let (l, r, single) = coassoc_probe(q, p);
    l == r && l == single
}

pub fn counit_case(q: &Quiver, p: &Element) -> bool {
    let d = coproduct(q, p);
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, b), c) in d.iter() {
        left.add_term(b.clone(), &(c * &counit(&el(a))));
        right.add_term(a.clone(), &(c * &counit(&el(b))));
    }
    &left == p && &right == p
}

pub fn bialgebra_case(q: &Quiver, p: &Element, r: &Element) -> bool {
    coproduct(q, &star(q, p, r)) == star_tensor(q, &coproduct(q, p), &coproduct(q, r))
}

/// `m(S ⊗ 1)Δ(p) = ε(p)·1 = m(1 ⊗ S)Δ(p)` with `m` the star product.
pub fn antipode_case(q: &Quiver, p: &Element) -> bool {
    let d = coproduct(q, p);
    let mut left = Element::zero();
    let mut right = Element::zero();
    for ((a, b), c) in d.iter() {
        left.add_scaled(&star(q, &antipode(&el(a)), &el(b)), c);
        right.add_scaled(&star(q, &el(a), &antipode(&el(b))), c);
    }
    let expect = unit().scale(&counit(p));
    left == expect && right == expect
}

pub fn antipode_involution_case(p: &Element) -> bool {
    &antipode(&antipode(p)) == p
}

pub fn h0_case(q: &Quiver, p: &Element, r: &Element) -> bool {
    star(q, p, r).h_coefficient(0) == sym_product(p, r).h_coefficient(0)
}

pub fn h1_bracket_case(q: &Quiver, p: &Element, r: &Element) -> bool {
    let half = HPoly::constant(qfrac(1, 2));
    let pr = star(q, p, r);
    let rp = star(q, r, p);
    let br = bracket_sym(q, p, r);
    pr.h_coefficient(1) == br.scale(&half) && (&pr - &rp).h_coefficient(1) == br
}

pub fn h1_cobracket_case(q: &Quiver, p: &Element) -> bool {
    let d = coproduct(q, p);
    let diff: Tensor = &d - &flip(&d);
    diff.h_coefficient(1) == cobracket_sym(q, p).h_coefficient(0) && diff.h_coefficient(0).is_zero()
}

/// Cases of the sweep: triples, pairs and singles with bounded total length.
struct Cases {
    singles: Vec<Vec<Monomial>>,
    pairs: Vec<Vec<Monomial>>,
    triples: Vec<Vec<Monomial>>,
}

fn exhaustive_cases(q: &Quiver, cfg: &SweepConfig) -> Cases {
    let all = monomials_up_to(q, cfg.max_len, cfg.with_idempotent);
    let nontrivial: Vec<&Monomial> = all.iter().filter(|m| !m.is_one()).collect();
    let singles = all.iter().map(|m| vec![m.clone()]).collect();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for a in &nontrivial {
        for b in &nontrivial {
            if a.weight() + b.weight() > cfg.max_len {
                continue;
            }
            pairs.push(vec![(*a).clone(), (*b).clone()]);
            for c in &nontrivial {
                if a.weight() + b.weight() + c.weight() <= cfg.max_len {
                    triples.push(vec![(*a).clone(), (*b).clone(), (*c).clone()]);
                }
            }
        }
    }
    Cases { singles, pairs, triples }
}

fn random_cases(q: &Quiver, cfg: &SweepConfig) -> Cases {
    let mut r = rng(cfg.seed);
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    let mut triples = Vec::new();
    for _ in 0..cfg.random_cases {
        let a = random_monomial(q, cfg.random_max_len, &mut r);
        singles.push(vec![a]);
        let a = random_monomial(q, cfg.random_max_len / 2, &mut r);
        let b = random_monomial(q, cfg.random_max_len - a.weight(), &mut r);
        pairs.push(vec![a, b]);
        let a = random_monomial(q, cfg.random_max_len / 3, &mut r);
        let b = random_monomial(q, (cfg.random_max_len - a.weight()) / 2, &mut r);
        let c = random_monomial(q, cfg.random_max_len - a.weight() - b.weight(), &mut r);
        triples.push(vec![a, b, c]);
    }
    Cases { singles, pairs, triples }
}

/// Runs `f` on every case in parallel and records the outcomes in order.
fn run(check: &mut Check, q: &Quiver, cases: &[Vec<Monomial>], f: impl Fn(&[Element]) -> bool + Sync) {
    let results: Vec<bool> = cases
        .par_iter()
        .map(|c| {
            let els: Vec<Element> = c.iter().map(el).collect();
            f(&els)
        })
        .collect();
    for (c, ok) in cases.iter().zip(results) {
        check.record(ok, || {
            let refs: Vec<&Monomial> = c.iter().collect();
            case_args(q, &refs)
        });
    }
}

fn hopf_checks(q: &Quiver, cases: &Cases, tag: &str) -> Vec<Check> {
    let mut assoc = Check::new(&format!("associativity{tag}"));
    run(&mut assoc, q, &cases.triples, |a| associativity_case(q, &a[0], &a[1], &a[2]));
    let mut coassoc = Check::new(&format!("coassociativity{tag}"));
    run(&mut coassoc, q, &cases.singles, |a| coassociativity_case(q, &a[0]));
    let mut counit = Check::new(&format!("counit{tag}"));
    run(&mut counit, q, &cases.singles, |a| counit_case(q, &a[0]));
    let mut bialg = Check::new(&format!("bialgebra{tag}"));
    run(&mut bialg, q, &cases.pairs, |a| bialgebra_case(q, &a[0], &a[1]));
    let mut anti = Check::new(&format!("antipode{tag}"));
    run(&mut anti, q, &cases.singles, |a| antipode_case(q, &a[0]));
    let mut s2 = Check::new(&format!("antipode-involution{tag}"));
    run(&mut s2, q, &cases.singles, |a| antipode_involution_case(&a[0]));
    vec![assoc, coassoc, counit, bialg, anti, s2]
}

fn limit_checks(q: &Quiver, cases: &Cases, tag: &str) -> Vec<Check> {
    let mut h0 = Check::new(&format!("h0-symmetric-product{tag}"));
    run(&mut h0, q, &cases.pairs, |a| h0_case(q, &a[0], &a[1]));
    let mut h1 = Check::new(&format!("h1-bracket{tag}"));
    run(&mut h1, q, &cases.pairs, |a| h1_bracket_case(q, &a[0], &a[1]));
    let mut cob = Check::new(&format!("h1-cobracket{tag}"));
    run(&mut cob, q, &cases.singles, |a| h1_cobracket_case(q, &a[0]));
    vec![h0, h1, cob]
}

fn note(cfg: &SweepConfig) -> String {
    format!(
        "exhaustive total length <= {}{}; {} random cases of length <= {} ({RNG_NAME}, seed {})",
        cfg.max_len,
        if cfg.with_idempotent { " (one idempotent factor allowed)" } else { "" },
        cfg.random_cases,
        cfg.random_max_len,
        cfg.seed
    )
}

/// Associativity, coassociativity, counit, bialgebra, antipode and `S² = 1`.
pub fn hopf_suite(q: &Quiver, cfg: &SweepConfig) -> Report {
    let mut rep = Report::new("hopf");
    rep.notes.push(note(cfg));
    rep.checks.extend(hopf_checks(q, &exhaustive_cases(q, cfg), ""));
    if cfg.random_cases > 0 {
        rep.checks.extend(hopf_checks(q, &random_cases(q, cfg), " [random]"));
    }
    rep
}

/// Classical limits of the product and coproduct.
pub fn limits_suite(q: &Quiver, cfg: &SweepConfig) -> Report {
    let mut rep = Report::new("limits");
    rep.notes.push(note(cfg));
    rep.checks.extend(limit_checks(q, &exhaustive_cases(q, cfg), ""));
    if cfg.random_cases > 0 {
        rep.checks.extend(limit_checks(q, &random_cases(q, cfg), " [random]"));
    }
    rep
}

/// The single-case variants: one, two or three arguments select which
/// properties apply.
pub fn single_case(q: &Quiver, args: &[Element], hopf: bool) -> Report {
    let mut rep = Report::new(if hopf { "hopf" } else { "limits" });
    let describe = || args.iter().map(|a| format!("--case \"{}\"", format_element(q, a))).collect::<Vec<_>>().join(" ");
    let mut push = |name: &str, ok: bool| {
        let mut c = Check::new(name);
        c.record(ok, describe);
        rep.checks.push(c);
    };
    match (hopf, args) {
        (true, [p]) => {
            push("coassociativity", coassociativity_case(q, p));
            push("counit", counit_case(q, p));
            push("antipode", antipode_case(q, p));
            push("antipode-involution", antipode_involution_case(p));
        }
        (true, [p, r]) => push("bialgebra", bialgebra_case(q, p, r)),
        (true, [p, r, s]) => push("associativity", associativity_case(q, p, r, s)),
        (false, [p]) => push("h1-cobracket", h1_cobracket_case(q, p)),
        (false, [p, r]) => {
            push("h0-symmetric-product", h0_case(q, p, r));
            push("h1-bracket", h1_bracket_case(q, p, r));
        }
        _ => {}
    }
    rep
}
