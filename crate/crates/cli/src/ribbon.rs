use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use nlab_core::necklace::{parse_necklace, Necklace};
use nlab_core::poly::fmt_q;
use nlab_core::quiver::Quiver;
use nlab_core::ribbon::cochain::graph_cochain;
use nlab_core::ribbon::complex::{boundary_terms, classes};
use nlab_core::ribbon::{build_complex, canonical_form, homology_ranks, orientable, ComplexParams, EnumParams, GraphJson, RibbonGraph};

use crate::{load_quiver, Format, Global, Outcome};

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum RibbonOp {
    Enum,
    Boundary,
    Homology,
    Cochain,
}

#[derive(Args, Debug)]
pub struct RibbonArgs {
    pub op: RibbonOp,
    #[arg(long)]
    pub genus: Option<usize>,
    #[arg(long)]
    pub faces: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub min_valence: usize,
    /// Largest number of edges (default: 6g-6+3m for trivalent bounds).
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// A graph as a JSON file or in the text form `(0 1 2)(3 4 5)`.
    #[arg(long)]
    pub graph: Option<String>,
    /// Comma-separated face labels (vertex names of the quiver).
    #[arg(long)]
    pub labels: Option<String>,
    #[arg(short, long)]
    pub quiver: Option<PathBuf>,
    /// Necklaces for `cochain`, one per vertex of the graph.
    #[arg(short = 'l', long = "lhs")]
    pub necklaces: Vec<String>,
}

/// Reads `--graph`; face label names go through `index`.
pub fn read_graph(spec: &str, index: impl Fn(&str) -> Result<usize, String>) -> Result<RibbonGraph, String> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| format!("{spec}: {e}"))?;
        let j: GraphJson = serde_json::from_str(&text).map_err(|e| format!("{spec}: {e}"))?;
        RibbonGraph::from_json(&j, |s| index(s).map_err(nlab_core::Error::LabelMismatch)).map_err(|e| e.to_string())
    } else {
        RibbonGraph::from_display(spec).map_err(|e| e.to_string())
    }
}

/// `(g, m)` parameters, optionally labeled by a multiset over an adjacency
/// graph.
pub fn complex_params(
    genus: Option<usize>,
    faces: Option<usize>,
    min_valence: usize,
    max_edges: Option<usize>,
    labels: Option<(nlab_core::quiver::AdjacencyGraph, Vec<u32>)>,
) -> Result<ComplexParams, String> {
    let g = genus.ok_or("needs --genus")?;
    let m = faces.ok_or("needs --faces")?;
    if m == 0 {
        return Err("--faces must be positive".into());
    }
    let max = match max_edges {
        Some(e) => e,
        None if min_valence >= 3 && 6 * g + 3 * m > 6 => 6 * g + 3 * m - 6,
        None => return Err("needs --max-edges".into()),
    };
    let p = EnumParams::new(g, m, min_valence, max);
    p.check().map_err(|e| e.to_string())?;
    Ok(match labels {
        None => ComplexParams::unlabeled(g, m, min_valence, max),
        Some((adj, x)) => {
            if x.len() != m {
                return Err(format!("{} labels given for {m} faces", x.len()));
            }
            ComplexParams::labeled(p, adj, x)
        }
    })
}

fn quiver_labels(a: &RibbonArgs) -> Result<(Option<Quiver>, Option<(nlab_core::quiver::AdjacencyGraph, Vec<u32>)>), String> {
    let q = match &a.quiver {
        Some(_) => Some(load_quiver(&a.quiver)?),
        None => None,
    };
    let labels = match &a.labels {
        None => None,
        Some(s) => {
            let q = q.as_ref().ok_or("--labels needs -q/--quiver for the adjacency graph")?;
            let x = s
                .split(',')
                .map(|n| q.vertex_index(n.trim()).map(|i| i as u32).map_err(|e| e.to_string()))
                .collect::<Result<Vec<_>, _>>()?;
            Some((q.adjacency(), x))
        }
    };
    Ok((q, labels))
}

fn graph_arg(a: &RibbonArgs, q: &Option<Quiver>) -> Result<RibbonGraph, String> {
    let spec = a.graph.as_deref().ok_or("needs --graph")?;
    read_graph(spec, |name| match q {
        Some(q) => q.vertex_index(name).map_err(|e| e.to_string()),
        None => Err(format!("face label `{name}` needs -q/--quiver")),
    })
}

pub fn ribbon(a: &RibbonArgs, g: &Global) -> Outcome {
    let cache = g.cache_dir.as_deref();
    let (q, labels) = quiver_labels(a)?;
    let names: Option<Vec<String>> = q.as_ref().map(|q| q.vertex_names().to_vec());
    match a.op {
        RibbonOp::Enum => {
            let p = complex_params(a.genus, a.faces, a.min_valence, a.max_edges, labels)?;
            let levels = classes(&p, cache).map_err(|e| e.to_string())?;
            match g.format {
                Format::Json => {
                    let label_names = names.as_deref().filter(|_| p.labels.is_some());
                    let v: Vec<_> = levels
                        .iter()
                        .flat_map(|(k, gs)| {
                            gs.iter().map(move |x| {
                                serde_json::json!({
                                    "edges": k,
                                    "orientable": orientable(x),
                                    "graph": x.to_json(label_names),
                                })
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
                }
                Format::Tsv => {
                    println!("edges\torientable\tgraph");
                    for (k, gs) in &levels {
                        for x in gs {
                            println!("{k}\t{}\t{}", orientable(x), x.display());
                        }
                    }
                }
                Format::Text => {
                    for (k, gs) in &levels {
                        let o = gs.iter().filter(|x| orientable(x)).count();
                        println!("{k} edges: {} classes, {o} orientable", gs.len());
                        for x in gs {
                            let tag = if orientable(x) { "" } else { "  nonorientable" };
                            println!("  {}{tag}", x.display());
                        }
                    }
                }
            }
        }
        RibbonOp::Homology => {
            let p = complex_params(a.genus, a.faces, a.min_valence, a.max_edges, labels)?;
            let c = build_complex(&p, cache).map_err(|e| e.to_string())?;
            let rows = homology_ranks(&c);
            if g.format == Format::Json {
                let v: Vec<_> = rows.iter().map(|r| serde_json::json!({"degree": r.degree, "dim": r.dim, "betti": r.betti})).collect();
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                println!("degree\tdim\tbetti");
                for r in rows {
                    println!("{}\t{}\t{}", r.degree, r.dim, r.betti);
                }
            }
        }
        RibbonOp::Boundary => {
            let x = canonical_form(&graph_arg(a, &q)?).graph;
            if !orientable(&x) {
                return Err("graph is not orientable".into());
            }
            let terms = boundary_terms(&x).map_err(|e| e.to_string())?;
            if g.format == Format::Json {
                let v: Vec<_> = terms.iter().map(|(t, c)| serde_json::json!({"coefficient": c, "graph": t.display()})).collect();
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                println!("source\t{}", x.display());
                for (t, c) in terms {
                    println!("{c}\t{}", t.display());
                }
            }
        }
        RibbonOp::Cochain => {
            let q = q.as_ref().ok_or("cochain needs -q/--quiver")?.clone();
            let x = graph_arg(a, &Some(q.clone()))?;
            let ns: Vec<Necklace> = a
                .necklaces
                .iter()
                .map(|s| parse_necklace(&q, s).map_err(|e| format!("`{s}`: {e}")))
                .collect::<Result<_, _>>()?;
            let v = graph_cochain(&q, &x, &ns).map_err(|e| e.to_string())?;
            match g.format {
                Format::Json => println!("{}", serde_json::json!({ "value": fmt_q(&v) })),
                _ => println!("{}", fmt_q(&v)),
            }
        }
    }
    Ok(true)
}
