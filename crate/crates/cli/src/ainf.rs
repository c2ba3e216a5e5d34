use std::path::PathBuf;

use clap::{Args, ValueEnum};
use nlab_core::ainf::{build_cycle, check_ainf, cycle_boundary, cyclicity_check, CyclicAInf};
use nlab_core::poly::fmt_q;
use nlab_core::verify::Report;
use num_traits::Zero;

use crate::ribbon::complex_params;
use crate::{print_reports, Format, Global, Outcome};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum AinfOp {
    Check,
    Cycle,
}

#[derive(Args, Debug)]
pub struct AinfArgs {
    pub op: AinfOp,
    #[arg(long)]
    pub data: PathBuf,
    /// Highest `n` for the A∞ relations (default: one more than the
    /// largest arity supplied).
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub genus: Option<usize>,
    #[arg(long)]
    pub faces: Option<usize>,
    /// Comma-separated face labels (object names); required with more
    /// than one object.
    #[arg(long)]
    pub labels: Option<String>,
    #[arg(long)]
    pub max_edges: Option<usize>,
}

pub fn ainf(a: &AinfArgs, g: &Global) -> Outcome {
    let data = CyclicAInf::load(&a.data).map_err(|e| format!("{}: {e}", a.data.display()))?;
    match a.op {
        AinfOp::Check => {
            let n_max = a.n_max.unwrap_or_else(|| data.arities().iter().max().map_or(3, |&n| (n + 1).max(3)));
            let mut r = Report::new("ainf-check");
            r.notes.push(format!("relations for n <= {n_max}"));
            r.checks.push(check_ainf(&data, n_max));
            r.checks.push(cyclicity_check(&data));
            Ok(print_reports(&[r], g, false))
        }
        AinfOp::Cycle => {
            let labels = match &a.labels {
                Some(s) => {
                    let x = s
                        .split(',')
                        .map(|n| data.object_index(n.trim()).map(|i| i as u32).map_err(|e| e.to_string()))
                        .collect::<Result<Vec<_>, _>>()?;
                    Some((data.adjacency(), x))
                }
                None if data.objects().len() > 1 => return Err("data with several objects needs --labels".into()),
                None => None,
            };
            let p = complex_params(a.genus, a.faces, 3, a.max_edges, labels)?;
            let c = build_cycle(&p, &data, g.cache_dir.as_deref()).map_err(|e| e.to_string())?;
            let boundary = cycle_boundary(&c);
            let zero = boundary.values().flatten().all(Zero::is_zero);
            match g.format {
                Format::Json => {
                    let terms: Vec<_> = c
                        .complex
                        .bases
                        .iter()
                        .flat_map(|(k, gs)| {
                            gs.iter().zip(&c.coefficients[k]).filter(|(_, w)| !w.is_zero()).map(move |(x, w)| {
                                serde_json::json!({"edges": k, "graph": x.display(), "coefficient": fmt_q(w)})
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&serde_json::json!({"chain": terms, "boundary_zero": zero})).expect("serializable"));
                }
                _ => {
                    println!("edges\tcoefficient\tgraph");
                    for (k, gs) in &c.complex.bases {
                        for (x, w) in gs.iter().zip(&c.coefficients[k]) {
                            if !w.is_zero() {
                                println!("{k}\t{}\t{}", fmt_q(w), x.display());
                            }
                        }
                    }
                    for (k, v) in &boundary {
                        let bad = v.iter().filter(|x| !x.is_zero()).count();
                        println!("boundary in degree {k}: {}", if bad == 0 { "zero".to_string() } else { format!("{bad} nonzero entries") });
                    }
                }
            }
            Ok(zero)
        }
    }
}
