use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eulerpath::rational::parse_rational;
use eulerpath::Rational;

mod commands;
mod render;

use commands::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "eulerpath", version, about = "Exact higher-order Euler and Bernoulli polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// E_n^(p)(x) from one or all pipelines.
    Euler(EulerArgs),
    /// Monic orthogonal polynomials and their orthogonality residuals.
    Ortho(OrthoArgs),
    /// Weighted lattice paths from (0,0) to (n,k).
    Paths(PathsArgs),
    /// Recurrence coefficients b_n^(p) of the higher-order Bernoulli family.
    Btable(BtableArgs),
    /// Compare the b table with the closed forms for rows 1 to 5.
    Conjecture(ConjectureArgs),
    /// Run the cross-validation suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pipeline {
    Egf,
    Motzkin,
    Matrix,
    Jfraction,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Euler,
    Carlitz,
    Bernoulli,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Weights {
    Unit,
    Euler,
    Bernoulli,
    DyckEuler,
    IntegerEuler,
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
pub struct EulerArgs {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub p: u32,
    /// Highest index n (order N).
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(0..=64))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = Pipeline::Egf)]
    pub pipeline: Pipeline,
    /// Evaluate at this rational x.
    #[arg(long, value_parser = rational_arg)]
    pub x: Option<Rational>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OrthoArgs {
    #[arg(long, value_enum, default_value_t = Family::Euler)]
    pub family: Family,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub p: u32,
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(0..=64))]
    pub n: u32,
    #[arg(long, value_parser = rational_arg)]
    pub x: Option<Rational>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PathsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(0..=14))]
    pub n: u32,
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long, value_enum, default_value_t = Weights::Unit)]
    pub weights: Weights,
    /// Order used by the euler weights.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub p: u32,
    /// Also write the diagrams as SVG to this file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct BtableArgs {
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub nmax: u32,
    #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub pmax: u32,
    /// Exit nonzero when any column fails to compute.
    #[arg(long)]
    pub strict: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub pmax: u32,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub n: u32,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=16))]
    pub pmax: u32,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Run a single check by name.
    #[arg(long)]
    pub only: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn emit(report: &Report, output: &OutputArgs) -> Result<(), CliError> {
    let text = report.render(output.format)?;
    match &output.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let (report, output) = match &cli.command {
        Command::Euler(a) => (commands::euler(a)?, &a.output),
        Command::Ortho(a) => (commands::ortho(a)?, &a.output),
        Command::Paths(a) => (commands::paths(a)?, &a.output),
        Command::Btable(a) => (commands::btable(a)?, &a.output),
        Command::Conjecture(a) => (commands::conjecture(a)?, &a.output),
        Command::Verify(a) => (commands::verify(a)?, &a.output),
    };
    emit(&report, output)?;
    Ok(report.ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
