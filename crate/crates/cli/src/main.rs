use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flagtype::{CliError, Format, Output, Request};

#[derive(Parser)]
#[command(
    name = "flagtype",
    version,
    about = "Cartan matrices, flag manifolds and FT verdicts"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Shorthand for `--format dot`.
    #[arg(long, global = true)]
    dot: bool,
    /// Matrix as JSON (`[[2,-1],[-1,2]]` or `{"matrix": ...}`), or `@file`.
    #[arg(long, global = true)]
    matrix: Option<String>,
    /// Diagram DSL such as `A3` or `A2xA1`, a marked-diagram JSON object, or `@file`.
    #[arg(long, global = true)]
    diagram: Option<String>,
    /// Marked nodes, e.g. `1,4`.
    #[arg(long, global = true)]
    mark: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Finite / affine / indefinite verdict with components.
    Classify { spec: Option<String> },
    /// Positive roots, heights, anticanonical coefficients and filtration.
    Roots { spec: Option<String> },
    /// Dimension of the flag manifold of a marked diagram.
    Dim { spec: Option<String> },
    /// Chain-locus dimension of a word: `chain A2 1 2 1`.
    Chain {
        #[arg(num_args = 0..)]
        args: Vec<String>,
        /// Compare with a second word, e.g. `2,1,2`.
        #[arg(long)]
        equal: Option<String>,
    },
    /// Reduced words of the Demazure product of a word.
    HeckeWords {
        #[arg(num_args = 0..)]
        args: Vec<String>,
    },
    /// Verify an intersection-matrix file `{"intersection_matrix": [[...]]}`.
    FtVerify { path: String },
    /// Induction sequence of marked diagrams ending at the full marking.
    Induct { spec: Option<String> },
    /// Picard-number-two numerics: `NU1 NU2 [MU1 MU2 [M]]`.
    Pic2 {
        #[arg(num_args = 2..=5)]
        args: Vec<String>,
    },
    /// Dynkin diagram of a spec, as JSON or DOT.
    Diagram { spec: Option<String> },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let req = Request {
        format: match (cli.dot, cli.format) {
            (true, _) | (_, FormatArg::Dot) => Format::Dot,
            _ => Format::Json,
        },
        matrix: cli.matrix,
        diagram: cli.diagram,
        mark: cli.mark,
    };
    match &cli.command {
        Command::Classify { spec } => flagtype::cmd_classify(&req, spec.as_deref()),
        Command::Roots { spec } => flagtype::cmd_roots(&req, spec.as_deref()),
        Command::Dim { spec } => flagtype::cmd_dim(&req, spec.as_deref()),
        Command::Chain { args, equal } => flagtype::cmd_chain(&req, args, equal.as_deref()),
        Command::HeckeWords { args } => flagtype::cmd_hecke_words(&req, args),
        Command::FtVerify { path } => flagtype::cmd_ft_verify(&req, path),
        Command::Induct { spec } => flagtype::cmd_induct(&req, spec.as_deref()),
        Command::Pic2 { args } => flagtype::cmd_pic2(&req, args),
        Command::Diagram { spec } => flagtype::cmd_diagram(&req, spec.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.text.as_bytes());
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
