//! Trace and Weyl-operator oracles for the star product.

use rayon::prelude::*;

use super::{monomials_up_to, Check, Report};
use crate::hopf::star;
use crate::matrix_rep::{
    bivector, moyal_star, op_mul, phi_w_realized, rep_mul, trace_rep, weyl_symmetrize, weyl_unsymmetrize, Coord,
    DimVec, RepMono, RepPoly,
};
use crate::necklace::{bracket_sym, parse_element, Element, Monomial};
use crate::poly::HPoly;
use crate::quiver::Quiver;

pub fn algebra_map_case(q: &Quiver, p: &Element, r: &Element, l: &DimVec) -> bool {
    trace_rep(q, &star(q, p, r), l) == moyal_star(&trace_rep(q, p, l), &trace_rep(q, r, l))
}

pub fn closure_case(q: &Quiver, p: &Element, l: &DimVec) -> bool {
    phi_w_realized(q, p, l) == weyl_symmetrize(&trace_rep(q, p, l))
}

pub fn realized_product_case(q: &Quiver, p: &Element, r: &Element, l: &DimVec) -> bool {
    phi_w_realized(q, &star(q, p, r), l) == op_mul(&phi_w_realized(q, p, l), &phi_w_realized(q, r, l))
}

/// The Poisson bracket of the constant bivector, from first derivatives.
pub fn poisson(a: &RepPoly, b: &RepPoly) -> RepPoly {
    let vars = |p: &RepPoly| {
        let mut v: Vec<Coord> = p.iter().flat_map(|(m, _)| m.iter().map(|(c, _)| *c)).collect();
        v.sort();
        v.dedup();
        v
    };
    let d = |p: &RepPoly, c: Coord| -> RepPoly {
        let mut out = RepPoly::zero();
        for (m, k) in p.iter() {
            if let Some(pos) = m.iter().position(|(x, _)| *x == c) {
                let e = m[pos].1;
                let mut n = m.clone();
                if e == 1 {
                    n.remove(pos);
                } else {
                    n[pos].1 -= 1;
                }
                out.add_term(n, &k.scale(&crate::poly::q(e as i64)));
            }
        }
        out
    };
    let mut out = RepPoly::zero();
    for u in vars(a) {
        let v = u.dual();
        let s = bivector(u, v);
        out.add_scaled(&rep_mul(&d(a, u), &d(b, v)), &HPoly::constant(crate::poly::q(s)));
    }
    out
}

/// `h⁰` of `f ⋆ g` is `fg`, and `h¹` of `f ⋆ g − g ⋆ f` is `{f, g}`.
pub fn moyal_limit_case(a: &RepPoly, b: &RepPoly) -> bool {
    let ab = moyal_star(a, b);
    let ba = moyal_star(b, a);
    ab.h_coefficient(0) == rep_mul(a, b).h_coefficient(0) && (&ab - &ba).h_coefficient(1) == poisson(a, b)
}

/// `tr{P, R} = {tr P, tr R}`.
pub fn trace_poisson_case(q: &Quiver, p: &Element, r: &Element, l: &DimVec) -> bool {
    trace_rep(q, &bracket_sym(q, p, r), l) == poisson(&trace_rep(q, p, l), &trace_rep(q, r, l))
}

/// All commutative monomials of degree `<= max_deg` in the given coordinates.
pub fn rep_monomials(coords: &[Coord], max_deg: u32) -> Vec<RepMono> {
    let mut out = Vec::new();
    fn rec(coords: &[Coord], i: usize, budget: u32, cur: &mut RepMono, out: &mut Vec<RepMono>) {
        if i == coords.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=budget {
            if e > 0 {
                cur.push((coords[i], e));
            }
            rec(coords, i + 1, budget - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    rec(coords, 0, max_deg, &mut Vec::new(), &mut out);
    out
}

fn all_coords(q: &Quiver, l: &DimVec) -> Vec<Coord> {
    let mut out = Vec::new();
    for a in q.letters() {
        for i in 0..l.at(q.tail(a)) as u32 {
            for j in 0..l.at(q.head(a)) as u32 {
                out.push(Coord::new(a, i, j));
            }
        }
    }
    out
}

fn record_par<T: Sync>(check: &mut Check, cases: &[T], f: impl Fn(&T) -> bool + Sync, describe: impl Fn(&T) -> String) {
    let results: Vec<bool> = cases.par_iter().map(&f).collect();
    for (c, ok) in cases.iter().zip(results) {
        check.record(ok, || describe(c));
    }
}

/// The diagram suite over monomials of total length `<= max_len` at each
/// dimension vector.
pub fn diagram_suite(q: &Quiver, max_len: usize, dims: &[DimVec]) -> Report {
    let mut rep = Report::new("diagram");
    rep.notes.push(format!("total length <= {max_len}; dimension vectors {:?}", dims.iter().map(|d| &d.0).collect::<Vec<_>>()));
    let all = monomials_up_to(q, max_len, true);
    let mut pairs: Vec<(Monomial, Monomial)> = Vec::new();
    for a in &all {
        for b in &all {
            if a.weight() + b.weight() <= max_len && !a.is_one() && !b.is_one() {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    let el = |m: &Monomial| Element::basis(m.clone());
    for l in dims {
        let tag = format!(" l={}", l.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":"));
        let dims_arg = l.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":");
        let show2 = |p: &(Monomial, Monomial)| {
            format!("--dims {dims_arg} -l \"{}\" -r \"{}\"", p.0.display(q), p.1.display(q))
        };

        let mut c = Check::new(&format!("trace-algebra-map{tag}"));
        record_par(&mut c, &pairs, |(a, b)| algebra_map_case(q, &el(a), &el(b), l), show2);
        rep.checks.push(c);

        let mut c = Check::new(&format!("trace-poisson{tag}"));
        record_par(&mut c, &pairs, |(a, b)| trace_poisson_case(q, &el(a), &el(b), l), show2);
        rep.checks.push(c);

        let mut c = Check::new(&format!("height-average-closure{tag}"));
        record_par(&mut c, &all, |a| closure_case(q, &el(a), l), |a| {
            format!("--dims {dims_arg} -l \"{}\"", a.display(q))
        });
        rep.checks.push(c);
    }

    // Weyl/Moyal consistency on coordinate monomials at the first dimension
    // vector.
    if let Some(l) = dims.first() {
        let coords = all_coords(q, l);
        let small: Vec<Coord> = coords.into_iter().take(4).collect();
        let monos = rep_monomials(&small, 4);
        let mut mpairs = Vec::new();
        for a in &monos {
            for b in &monos {
                let da: u32 = a.iter().map(|x| x.1).sum();
                let db: u32 = b.iter().map(|x| x.1).sum();
                if da + db <= 4 {
                    mpairs.push((a.clone(), b.clone()));
                }
            }
        }
        let poly = |m: &RepMono| RepPoly::basis(m.clone());
        let mut c = Check::new("weyl-moyal-homomorphism");
        record_par(
            &mut c,
            &mpairs,
            |(a, b)| {
                weyl_symmetrize(&moyal_star(&poly(a), &poly(b)))
                    == op_mul(&weyl_symmetrize(&poly(a)), &weyl_symmetrize(&poly(b)))
            },
            |(a, b)| format!("{a:?} {b:?}"),
        );
        rep.checks.push(c);

        let mut c = Check::new("moyal-classical-limit");
        record_par(&mut c, &mpairs, |(a, b)| moyal_limit_case(&poly(a), &poly(b)), |(a, b)| format!("{a:?} {b:?}"));
        rep.checks.push(c);

        let deg6 = rep_monomials(&small, 6);
        let mut c = Check::new("weyl-round-trip");
        record_par(&mut c, &deg6, |a| weyl_unsymmetrize(&weyl_symmetrize(&poly(a))) == poly(a), |a| format!("{a:?}"));
        rep.checks.push(c);
    }
    rep
}

/// The worked value `(e e*) *_h (e e*) = (e e*)&(e e*) − h²/4 I(v)&I(v)`
/// on the one-loop quiver, checked through the trace and Weyl oracles at
/// `l = 1, 2`.
pub fn worked_value_check(q: &Quiver) -> Check {
    let mut c = Check::new("worked-value (e e*) * (e e*)");
    let p = parse_element(q, "(e e*)").expect("one-loop quiver with edge e");
    let expect = parse_element(q, "(e e*)&(e e*) - 1/4 h^2 I(v)&I(v)").expect("valid");
    c.record(star(q, &p, &p) == expect, || "star product differs".into());
    for l in [1, 2] {
        let dv = DimVec::uniform(q, l);
        c.record(
            trace_rep(q, &expect, &dv) == moyal_star(&trace_rep(q, &p, &dv), &trace_rep(q, &p, &dv)),
            || format!("trace oracle at l={l}"),
        );
        c.record(
            phi_w_realized(q, &expect, &dv) == op_mul(&phi_w_realized(q, &p, &dv), &phi_w_realized(q, &p, &dv)),
            || format!("Weyl oracle at l={l}"),
        );
        c.record(realized_product_case(q, &p, &p, &dv), || format!("realized product at l={l}"));
    }
    // l distinguishes I(v) from I(v)&I(v): the glued term has coefficient l².
    let one = trace_rep(q, &parse_element(q, "I(v)").expect("valid"), &DimVec::uniform(q, 2));
    let two = trace_rep(q, &parse_element(q, "I(v)&I(v)").expect("valid"), &DimVec::uniform(q, 2));
    c.record(one != two, || "trace does not separate idempotent counts".into());
    c
}
