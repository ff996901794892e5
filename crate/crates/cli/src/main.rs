//! `balprod`: build, verify and inspect balanced-product quantum LDPC codes.

mod build;
mod error;
mod recipe;
mod spectrum;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use balprod::quantum::SearchOptions;
use clap::{Parser, Subcommand, ValueEnum};

use crate::build::BuildOptions;
use crate::error::{CliError, Exit};
use crate::recipe::{Labeling, Recipe, MAX_DEGREE, MAX_VERTICES};

#[derive(Parser)]
#[command(name = "balprod", version, about = "Balanced-product quantum LDPC codes from LPS expanders")]
struct Cli {
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Canonical,
    Search,
}

#[derive(Subcommand)]
enum Command {
    /// Build C(X_{p,q}, L) ⊗_{Z_q} C(C_q) and write a code bundle.
    #[command(after_help = format!(
        "Supported envelope: |PGL(2,q)| ≤ {MAX_VERTICES} vertices and s = p + 1 ≤ {MAX_DEGREE}. \
         Larger recipes, such as p = 401, are rejected."
    ))]
    Build {
        #[arg(long, required_unless_present = "toy")]
        p: Option<u64>,
        #[arg(long, required_unless_present = "toy")]
        q: Option<u64>,
        /// Cycle length; must equal q.
        #[arg(long)]
        ell: Option<u64>,
        /// hamming7 | bch:S,T | goppa:M,G0.G1... | gv:DELTA,SEED | check:ROW,ROW,...
        #[arg(long, required_unless_present = "toy")]
        local: Option<String>,
        #[arg(long, value_enum, default_value = "canonical")]
        labeling: LabelingArg,
        /// Build the C_9 / Z_3 toy instance with L = [2,1,2] instead.
        #[arg(long, conflicts_with_all = ["p", "q", "local"])]
        toy: bool,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1e-3)]
        alpha_ho: f64,
        #[arg(long, default_value_t = 1e-5)]
        alpha_co: f64,
        /// Supports enumerated per distance search before falling back to bounds.
        #[arg(long, default_value_t = 20_000_000)]
        distance_cap: u64,
        /// Random information sets drawn for upper bounds.
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an invariant suite and print one JSON line per check.
    Verify {
        /// kunneth | toric | klein | quotient | equivalence | gv | all
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random trials for the Künneth suite.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Print (graph, n, s, λ₂, 2√(s−1)) as CSV.
    Spectrum {
        /// lps:P,Q | cycle:N | complete:N | petersen | klein | cayley-z:N,G1,...
        #[arg(long, required = true)]
        graph: Vec<String>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    if cli.jobs > 0 {
        balprod::par::configure_threads(cli.jobs);
    }
    match cli.command {
        Command::Build { p, q, ell, local, labeling, toy, out, alpha_ho, alpha_co, distance_cap, samples, seed } => {
            let opts = BuildOptions {
                alpha_ho,
                alpha_co,
                search: SearchOptions { cap: distance_cap, samples, seed, ..SearchOptions::default() },
            };
            let params = if toy {
                build::build_toy(&out, &opts)?
            } else {
                let labeling = match labeling {
                    LabelingArg::Canonical => Labeling::Canonical,
                    LabelingArg::Search => Labeling::Search,
                };
                let recipe = Recipe::new(p.unwrap(), q.unwrap(), ell, local.as_deref().unwrap(), labeling)?;
                build::build_lps(&recipe, &out, &opts)?
            };
            println!("{}", serde_json::to_string_pretty(&params)?);
            Ok(())
        }
        Command::Verify { suite, seed, trials } => {
            let checks = verify::run(&suite, seed, trials)?;
            for c in &checks {
                println!("{}", serde_json::to_string(c)?);
            }
            let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::VerificationFailed(failed.join(", ")))
            }
        }
        Command::Spectrum { graph } => {
            let rows = graph.iter().map(|g| spectrum::row(g)).collect::<Result<Vec<_>, _>>()?;
            spectrum::write_csv(&rows, std::io::stdout().lock())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { Exit::Usage.into() } else { Exit::Success.into() };
        }
    };
    match run(cli) {
        Ok(()) => Exit::Success.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.exit().into()
        }
    }
}
