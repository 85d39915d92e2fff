//! `egk`: certify `δα ≤ Δμ` and its extremal cases from the command line.
//!
//! Exit codes: 0 verified / tight, 1 usage or input error, 2 internal
//! inconsistency (a violated inequality or a certificate failing its own
//! check), 3 not tight or negative answer, 4 oracle-only verdict.

mod commands;
mod generate;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::input::Format;

#[derive(Parser)]
#[command(
    name = "egk",
    version,
    about = "Certify δ(G)·α(G) ≤ Δ(G)·μ(G) and its extremal graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact α and μ with both sides of the inequality.
    Check(InputArgs),
    /// Decide equality, with a biregular, special or cycle certificate.
    Extremal(InputArgs),
    /// Recognize a bubble and print its (z, I, R, xy) certificate.
    Bubble(InputArgs),
    /// Equal-size independent set and matching for a special cubic graph.
    Witness(InputArgs),
    /// Every intermediate quantity of the counting argument.
    Trace(InputArgs),
    /// Exact α and μ with an optimal independent set and matching.
    Oracle(InputArgs),
    /// Generate graphs.
    Generate(generate::GenerateArgs),
}

#[derive(Args, Clone)]
pub struct InputArgs {
    /// Input file; stdin when absent or `-`. graph6 files may hold one graph per line.
    pub input: Option<PathBuf>,
    /// Input format; inferred from the extension (.el, .txt: edge list) otherwise graph6.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// One JSON document per graph, one per line.
    #[arg(long)]
    pub json: bool,
    /// Worker threads for multi-graph inputs; output keeps input order.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Largest order handed to the exact independence-number oracle (at most 64).
    #[arg(long, default_value_t = egk_core::exact::DEFAULT_ALPHA_BOUND)]
    pub max_oracle: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let code = match cli.command {
        Command::Check(a) => commands::run(&a, commands::Kind::Check),
        Command::Extremal(a) => commands::run(&a, commands::Kind::Extremal),
        Command::Bubble(a) => commands::run(&a, commands::Kind::Bubble),
        Command::Witness(a) => commands::run(&a, commands::Kind::Witness),
        Command::Trace(a) => commands::run(&a, commands::Kind::Trace),
        Command::Oracle(a) => commands::run(&a, commands::Kind::Oracle),
        Command::Generate(a) => generate::run(&a),
    };
    ExitCode::from(code)
}
