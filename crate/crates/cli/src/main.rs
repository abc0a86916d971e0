use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monideal_cli::commands::{self, ReconstructMode};
use monideal::LatticePoint;
use monideal_cli::format::parse_vector;
use monideal_cli::verify::{self, Suite, VerifyConfig};
use monideal_cli::{AntichainDocument, CliError};

/// Socles and generators of monomial ideals, as antichains in Z^d.
#[derive(Debug, Parser)]
#[command(name = "monideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Io {
    /// Input document; `-` reads standard input.
    #[arg(default_value = "-")]
    input: PathBuf,
    /// Write the result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Maximal points outside the upset of a generator file.
    Socle(Io),
    /// Generators whose socle is the given antichain.
    Reconstruct {
        #[command(flatten)]
        io: Io,
        /// Zero-dimensional ideal in N^d; input must be nonnegative.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        zero_dim: bool,
        /// Lower augmentation bound, e.g. `0,0,1`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        a: Option<LatticePoint>,
        /// Upper augmentation bound, e.g. `5,6,7`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        b: Option<LatticePoint>,
    },
    /// Zero-dimensionality, type and Gorenstein property of a generator file.
    Classify(Io),
    /// Run a seeded property suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long)]
        dmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Number of weak orderings of a k-element set.
    Bell { k: usize },
}

fn parse_point(s: &str) -> Result<LatticePoint, String> {
    LatticePoint::new(parse_vector(s)?).map_err(|e| e.to_string())
}

fn read_doc(path: &PathBuf) -> Result<AntichainDocument, CliError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    Ok(text.parse()?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Socle(io) => emit(&io.output, &commands::socle(&read_doc(&io.input)?)?.to_string()),
        Command::Reconstruct { io, zero_dim, a, b } => {
            let mode = match (zero_dim, a, b) {
                (true, _, _) => ReconstructMode::ZeroDim,
                (false, None, None) => ReconstructMode::Default,
                (false, a, b) => ReconstructMode::Bounds { a, b },
            };
            emit(&io.output, &commands::reconstruct(&read_doc(&io.input)?, &mode)?.to_string())
        }
        Command::Classify(io) => emit(&io.output, &commands::classify(&read_doc(&io.input)?)?.to_string()),
        Command::Verify { suite, seed, trials, dmax, kmax } => {
            let report = verify::run(&VerifyConfig { suite, seed, trials, dmax, kmax })?;
            emit(&None, &report.to_string())?;
            if report.ok() {
                Ok(())
            } else {
                Err(CliError::Failed(format!("{} of {trials} trials failed", report.failures.len())))
            }
        }
        Command::Bell { k } => emit(&None, &format!("{}\n", commands::bell(k)?)),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
