//! `leibniz-kit`: command-line front end for the `leibniz-kit` library.

mod commands;
mod input;
mod run_report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use run_report::{Outcome, RunReport};

#[derive(Parser, Debug)]
#[command(name = "leibniz-kit", version, about = "Exact computations with Leibniz algebras")]
pub struct Cli {
    /// Print a JSON run report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Leibniz identity, left center, derived subalgebra and Lie test.
    Check {
        /// Algebra JSON file, or `-` for standard input.
        algebra: String,
    },
    /// Build the Lie 2-algebra of the skew-symmetrization and verify its axioms.
    Lie2 { algebra: String },
    /// Betti numbers of Leibniz (and naive) cohomology.
    Cohomology {
        algebra: String,
        /// `trivial`, `adjoint`, or a representation JSON file.
        #[arg(long, default_value = "trivial")]
        rep: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Also compute naive cohomology of the matching naive representation.
        #[arg(long)]
        naive: bool,
        /// Compare naive and Leibniz cohomology degree by degree (trivial or adjoint only).
        #[arg(long)]
        compare: bool,
    },
    /// Maurer–Cartan equation for the right action of a representation.
    Mc {
        algebra: String,
        /// `adjoint`, `trivial`, or a representation JSON file.
        #[arg(default_value = "adjoint")]
        rep: String,
    },
    /// Semidirect product `g + V`, written as algebra JSON.
    Semidirect {
        algebra: String,
        /// `adjoint`, `trivial`, or a representation JSON file.
        #[arg(default_value = "adjoint")]
        rep: String,
        /// `lr` for `[x,y] + l_x v + r_y u`, `l0` for `[x,y] + l_x v`.
        #[arg(long, default_value = "lr")]
        mode: String,
    },
    /// Omni-Lie algebra `gl(V) + V`, written as algebra JSON.
    Omni {
        #[arg(long)]
        dim: usize,
    },
    /// Graph condition for `phi: V -> gl(V)` and the cohomology comparison of
    /// its tautological naive representation.
    Graph {
        /// Graph map JSON file, or `-` for standard input.
        phi: String,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
    },
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = Cli::parse();
    let mut report = RunReport::new(&argv);
    let started = std::time::Instant::now();
    let outcome = commands::run(&cli.command, &mut report);
    report.finish(&outcome, started.elapsed());

    if cli.json {
        println!("{}", leibniz_kit::io::to_text(&report.to_json()));
    } else {
        print!("{}", report.text());
    }
    if let Outcome::Error { message, .. } = &outcome {
        eprintln!("error: {message}");
    }
    ExitCode::from(outcome.exit_code())
}
