use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pfaff_cli::commands::{self, DetAlgo, PfAlgo};
use pfaff_cli::registry::{self, ShapeArgs};
use pfaff_cli::verify::{self, NumericOptions, VerificationReport};
use pfaff_cli::{CliError, CliResult};
use pfaff_core::algebra::parse_scalar;
use pfaff_core::Scalar;

#[derive(Parser)]
#[command(name = "pfaff", version, about = "Exact Pfaffians, determinants and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Pfaffian of the skew-symmetric matrix in a matrix file
    Pf {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "recursive")]
        algo: PfAlgo,
    },
    /// Determinant of the square matrix in a matrix file
    Det {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "elimination")]
        algo: DetAlgo,
    },
    /// List the signed perfect matchings of a word such as "0 1 2 3"
    Matchings { word: String },
    /// List the identities known to `verify`
    List,
    /// Check an identity on seeded random rational instances
    Verify {
        name: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads (defaults to one per core)
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        shape: ShapeFlags,
        /// Write one JSON record per trial to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Expand an identity's residual over generic indeterminates
    VerifySymbolic {
        name: String,
        #[command(flatten)]
        shape: ShapeFlags,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ShapeFlags {
    #[arg(long)]
    alpha_len: Option<usize>,
    #[arg(long)]
    beta_len: Option<usize>,
    #[arg(long)]
    gamma_len: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<u32>,
    /// Family parameters a b c
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true, value_parser = scalar_arg)]
    params: Option<Vec<Scalar>>,
}

fn scalar_arg(text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|e| e.to_string())
}

impl ShapeFlags {
    fn into_args(self) -> ShapeArgs {
        ShapeArgs {
            alpha_len: self.alpha_len,
            beta_len: self.beta_len,
            gamma_len: self.gamma_len,
            n: self.n,
            k: self.k,
            params: self.params.map(|p| (p[0].clone(), p[1].clone(), p[2].clone())),
        }
    }
}

fn write_report(report: &VerificationReport, path: Option<PathBuf>) -> CliResult<()> {
    if let Some(path) = path {
        fs::write(&path, report.to_jsonl()).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    Ok(())
}

fn finish(report: VerificationReport, path: Option<PathBuf>) -> CliResult<ExitCode> {
    write_report(&report, path)?;
    print!("{}", report.summary());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Pf { input, algo } => {
            println!("{}", commands::pfaffian(commands::read_matrix(&input)?, algo)?);
        }
        Command::Det { input, algo } => {
            println!("{}", commands::determinant(&commands::read_matrix(&input)?, algo)?);
        }
        Command::Matchings { word } => print!("{}", commands::matchings_listing(&word)?),
        Command::List => {
            for ident in registry::REGISTRY {
                let tag = if ident.has_symbolic() { "numeric, symbolic" } else { "numeric" };
                println!("{:<20} {} [{tag}]", ident.name, ident.about);
            }
        }
        Command::Verify { name, trials, seed, workers, shape, report } => {
            let ident = registry::lookup(&name)?;
            let shape = ident.resolve(&shape.into_args())?;
            let result = verify::run_numeric(ident, &shape, NumericOptions { trials, seed, workers })?;
            return finish(result, report);
        }
        Command::VerifySymbolic { name, shape, report } => {
            let ident = registry::lookup(&name)?;
            let shape = ident.resolve(&shape.into_args())?;
            return finish(verify::run_symbolic(ident, &shape)?, report);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
