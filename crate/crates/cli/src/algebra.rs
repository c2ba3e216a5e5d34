use std::path::PathBuf;

use clap::{Args, ValueEnum};
use nlab_core::hopf::{antipode, coproduct, star};
use nlab_core::matrix_rep::{format_op, format_rep, moyal_star, phi_w_realized, trace_rep, weyl_symmetrize, DimVec};
use nlab_core::necklace::{bracket_sym, cobracket_sym, format_element, format_tensor, parse_element, Element};
use nlab_core::quiver::Quiver;

use crate::{load_quiver, Format, Global, Outcome};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum AlgebraOp {
    Star,
    Coprod,
    Antipode,
    Bracket,
    Cobracket,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    pub op: AlgebraOp,
    #[arg(short, long)]
    pub quiver: Option<PathBuf>,
    #[arg(short, long)]
    pub lhs: String,
    #[arg(short, long)]
    pub rhs: Option<String>,
}

#[derive(Args, Debug)]
pub struct RepArgs {
    #[arg(short, long)]
    pub quiver: Option<PathBuf>,
    #[arg(short, long)]
    pub lhs: String,
    #[arg(short, long)]
    pub rhs: Option<String>,
    /// Dimension vector: `2` for all vertices or `1:2` per vertex.
    #[arg(long, default_value = "1")]
    pub dims: String,
}

fn parse(q: &Quiver, s: &str) -> Result<Element, String> {
    parse_element(q, s).map_err(|e| format!("`{s}`: {e}"))
}

fn rhs(q: &Quiver, r: &Option<String>) -> Result<Element, String> {
    parse(q, r.as_deref().ok_or("this operation needs -r/--rhs")?)
}

fn emit(g: &Global, text: &str) {
    match g.format {
        Format::Json => println!("{}", serde_json::json!({ "result": text })),
        _ => println!("{text}"),
    }
}

pub fn algebra(a: &AlgebraArgs, g: &Global) -> Outcome {
    let q = load_quiver(&a.quiver)?;
    let l = parse(&q, &a.lhs)?;
    let out = match a.op {
        AlgebraOp::Star => format_element(&q, &star(&q, &l, &rhs(&q, &a.rhs)?)),
        AlgebraOp::Coprod => format_tensor(&q, &coproduct(&q, &l)),
        AlgebraOp::Antipode => format_element(&q, &antipode(&l)),
        AlgebraOp::Bracket => format_element(&q, &bracket_sym(&q, &l, &rhs(&q, &a.rhs)?)),
        AlgebraOp::Cobracket => format_tensor(&q, &cobracket_sym(&q, &l)),
    };
    emit(g, &out);
    Ok(true)
}

fn setup(a: &RepArgs) -> Result<(Quiver, Element, DimVec), String> {
    let q = load_quiver(&a.quiver)?;
    let l = parse(&q, &a.lhs)?;
    let d = DimVec::parse(&q, &a.dims).map_err(|e| e.to_string())?;
    Ok((q, l, d))
}

pub fn trace(a: &RepArgs, g: &Global) -> Outcome {
    let (q, l, d) = setup(a)?;
    emit(g, &format_rep(&q, &trace_rep(&q, &l, &d)));
    Ok(true)
}

pub fn moyal_classical(a: &RepArgs, g: &Global) -> Outcome {
    let (q, l, d) = setup(a)?;
    let r = rhs(&q, &a.rhs)?;
    emit(g, &format_rep(&q, &moyal_star(&trace_rep(&q, &l, &d), &trace_rep(&q, &r, &d))));
    Ok(true)
}

pub fn weyl(a: &RepArgs, g: &Global) -> Outcome {
    let (q, l, d) = setup(a)?;
    emit(g, &format_op(&q, &weyl_symmetrize(&trace_rep(&q, &l, &d))));
    Ok(true)
}

pub fn rho(a: &RepArgs, g: &Global) -> Outcome {
    let (q, l, d) = setup(a)?;
    emit(g, &format_op(&q, &phi_w_realized(&q, &l, &d)));
    Ok(true)
}
