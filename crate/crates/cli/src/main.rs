use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use scalg_cli::{execute, Command};

/// Exact structure-constant computer algebra for Hopf algebras: verify
/// axioms, compute full centres of module algebras, build Drinfeld doubles,
/// and run the cross-pipeline consistency checks.
#[derive(Parser)]
#[command(name = "scalg", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Run every applicable axiom suite on the objects of a file.
    Verify { file: PathBuf },
    /// Compute the full centre of each action or grading object.
    Centre {
        file: PathBuf,
        /// Serialize the computed centres (as Yetter-Drinfeld algebra
        /// declarations) to this path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify the Drinfeld double of each hopf object.
    Double { file: PathBuf },
    /// Run the cross-pipeline oracles: the left-centre comparison, the
    /// two-variable antipode identity, adjunction identities, Morita
    /// amplification, and the group-flavoured specializations.
    Crosscheck { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        CliCommand::Verify { file } => Command::Verify { file },
        CliCommand::Centre { file, out } => Command::Centre { file, out },
        CliCommand::Double { file } => Command::Double { file },
        CliCommand::Crosscheck { file } => Command::Crosscheck { file },
    };
    let (code, report) = execute(&command);
    print!("{report}");
    ExitCode::from(code as u8)
}
