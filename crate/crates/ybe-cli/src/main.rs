//! `ybe` — build, verify, analyze and transform Yang-Baxter objects stored as
//! JSON files: finite braces and rings, set-theoretic solutions, weight
//! systems and complex matrices.

mod analyze;
mod build;
mod example;
mod transform;
mod util;
mod verify;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "ybe",
    about = "Yang-Baxter toolkit: braces, set-theoretic solutions, weights and R-matrices",
    version
)]
struct Cli {
    /// Numeric tolerance for all comparisons (also honours YBE_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct an object and write it to a file.
    Build(build::BuildArgs),
    /// Check the invariants of an object file (exit 0 pass / 1 fail / 2 bad input).
    Verify(verify::VerifyArgs),
    /// Analyze an object: orbits, mpl, svd, triviality, classify, permgroup.
    Analyze(analyze::AnalyzeArgs),
    /// Combine or transform objects into new ones.
    Transform(transform::TransformArgs),
    /// Reproduce the printed example matrices and verify them.
    Example(example::ExampleArgs),
}

fn main() {
    let cli = Cli::parse();
    let result = (|| -> anyhow::Result<i32> {
        let tol = util::resolve_tol(cli.tol)?;
        match cli.command {
            Command::Build(args) => build::run(args, tol),
            Command::Verify(args) => verify::run(args, tol),
            Command::Analyze(args) => analyze::run(args, tol),
            Command::Transform(args) => transform::run(args, tol),
            Command::Example(args) => example::run(args, tol),
        }
    })();
    match result {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
