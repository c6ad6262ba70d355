mod commands;
mod failure;
mod problem;

use std::io::Write;
use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use failure::{Failure, Kind};
use problem::ProblemFile;

/// Standard bases, multiplicities and cyclic-cover stabilization for local rings.
#[derive(Parser)]
#[command(name = "covercone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard basis, leading ideal and chain length of the ideal.
    Std { file: PathBuf },
    /// Dimension and Hilbert-Samuel multiplicity of the local ring.
    Mult {
        file: PathBuf,
        /// Cross-check against linear algebra in K[x]/m^(s+1).
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 12, requires = "oracle")]
        oracle_degree: u32,
    },
    /// Threshold N, stable tangent cone and the per-n table for I + <g - y^n>.
    Cover {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let path = match &cli.command {
        Command::Std { file } | Command::Mult { file, .. } | Command::Cover { file, .. } => file,
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(Kind::Parse, format!("{}: {e}", path.display())))?;
    let problem = ProblemFile::parse(&text)?;
    match &cli.command {
        Command::Std { .. } => commands::cmd_std(&problem),
        Command::Mult { oracle, oracle_degree, .. } => {
            commands::cmd_mult(&problem, oracle.then_some(*oracle_degree))
        }
        Command::Cover { json, .. } => commands::cmd_cover(&problem, *json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    panic::set_hook(Box::new(|_| {}));
    let outcome = panic::catch_unwind(|| run(&cli)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "unknown panic".into());
        Err(Failure::new(Kind::Internal, format!("internal error: {msg}")))
    });
    match outcome {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.kind.exit_code() as u8)
        }
    }
}
