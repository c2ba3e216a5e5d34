//! `nlab`: command-line front end to nlab-core.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on bad
//! arguments or input.

mod ainf;
mod algebra;
mod ribbon;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nlab_core::quiver::Quiver;
use nlab_core::verify::{Report, RNG_NAME};

#[derive(Parser, Debug)]
#[command(name = "nlab", version, about = "Necklace Lie bialgebras, their quantization, and ribbon graph complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Seed for every randomized sweep.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Where enumerated ribbon graph classes are cached.
    #[arg(long, global = true, env = "NLAB_CACHE")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Products, coproducts and brackets of elements.
    Algebra(algebra::AlgebraArgs),
    /// Property suites; exit 1 on any failure.
    Verify(verify::VerifyArgs),
    /// `tr_l` of an element as a polynomial in the matrix coordinates.
    Trace(algebra::RepArgs),
    /// Classical Moyal product of two traces.
    MoyalClassical(algebra::RepArgs),
    /// Weyl symmetrization of a trace.
    Weyl(algebra::RepArgs),
    /// The height-averaged operator of an element.
    Rho(algebra::RepArgs),
    /// Ribbon graph enumeration, boundaries, homology and cochains.
    Ribbon(ribbon::RibbonArgs),
    /// Cyclic A∞ data: axioms and cycles.
    Ainf(ainf::AinfArgs),
}

/// Outcome of a command: `Ok(true)` success, `Ok(false)` a failed
/// verification, `Err` bad input.
pub type Outcome = Result<bool, String>;

pub fn load_quiver(path: &Option<PathBuf>) -> Result<Quiver, String> {
    let p = path.as_ref().ok_or("this command needs -q/--quiver")?;
    Quiver::load(p).map_err(|e| format!("{}: {e}", p.display()))
}

pub fn print_reports(reports: &[Report], g: &Global, randomized: bool) -> bool {
    let ok = reports.iter().all(Report::passed);
    match g.format {
        Format::Json => {
            let v: Vec<_> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "suite": r.suite,
                        "rng": RNG_NAME,
                        "seed": g.seed,
                        "notes": r.notes,
                        "checks": r.checks.iter().map(|c| serde_json::json!({
                            "name": c.name,
                            "cases": c.cases,
                            "passed": c.passed(),
                            "counterexample": c.failure,
                        })).collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        Format::Tsv => {
            println!("suite\tcheck\tcases\tstatus\tcounterexample");
            for r in reports {
                for c in &r.checks {
                    let status = if c.passed() { "PASS" } else { "FAIL" };
                    println!("{}\t{}\t{}\t{status}\t{}", r.suite, c.name, c.cases, c.failure.as_deref().unwrap_or(""));
                }
            }
        }
        Format::Text => {
            if randomized {
                println!("rng {RNG_NAME} seed {}", g.seed);
            }
            for r in reports {
                print!("{r}");
            }
        }
    }
    ok
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.global.jobs {
        if n == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool set once");
    }
    let g = &cli.global;
    let outcome = match &cli.cmd {
        Cmd::Algebra(a) => algebra::algebra(a, g),
        Cmd::Verify(a) => verify::verify(a, g),
        Cmd::Trace(a) => algebra::trace(a, g),
        Cmd::MoyalClassical(a) => algebra::moyal_classical(a, g),
        Cmd::Weyl(a) => algebra::weyl(a, g),
        Cmd::Rho(a) => algebra::rho(a, g),
        Cmd::Ribbon(a) => ribbon::ribbon(a, g),
        Cmd::Ainf(a) => ainf::ainf(a, g),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
