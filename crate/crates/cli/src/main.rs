//! `abfrac`: evaluate Mittag-Leffler functions, apply operators, run the
//! identity suites and solve discrete Sturm-Liouville problems.
//!
//! Exit codes: 0 success, 1 input or usage error, 2 a residual contract was
//! exceeded (the report is still written).

mod apply;
mod error;
mod output;
mod slp;
mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "abfrac", version, about = "Fractional operators with Mittag-Leffler kernels")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate E^rho_{alpha,beta}(z), or the discrete E_{alpha,beta}(lambda, z)
    Ml(MlArgs),
    /// Apply an operator to a function read from CSV
    Apply(ApplyArgs),
    /// Run identity-verification suites and write a JSON report
    Verify(VerifyArgs),
    /// Solve a discrete fractional Sturm-Liouville eigenproblem
    Slp(SlpArgs),
}

#[derive(Args, Debug)]
struct MlArgs {
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    beta: f64,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    z: f64,
    /// Evaluate the discrete function at this lambda; z must be a nonnegative integer
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    /// Operator name; run with an unknown name to list them
    #[arg(long)]
    pub op: String,
    /// CSV `t,value` (discrete) or `t,value[,dvalue]` (continuous)
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: f64,
    #[arg(long = "B", default_value_t = 1.0, allow_hyphen_values = true)]
    pub b_of_alpha: f64,
    /// Treat the input as a function on a uniform mesh
    #[arg(long)]
    pub continuous: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run one suite; without it every suite of the selected family runs
    #[arg(long)]
    pub suite: Option<String>,
    /// Print the suite names and exit
    #[arg(long)]
    pub list: bool,
    /// Select the continuous suites
    #[arg(long)]
    pub continuous: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long = "B", default_value_t = 1.0, allow_hyphen_values = true)]
    pub b_of_alpha: f64,
    /// Discrete grid `a:b`
    #[arg(long, default_value = "0:21", allow_hyphen_values = true)]
    pub grid: String,
    /// Coarsest continuous mesh `a:b:n`; the suites also use 2n-1 and 4n-3 points
    #[arg(long, default_value = "0:1:501", allow_hyphen_values = true)]
    pub mesh: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Multiplies every residual tolerance
    #[arg(long = "tol-scale", default_value_t = 1.0)]
    pub tol_scale: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SlpArgs {
    /// JSON problem file
    #[arg(long)]
    pub input: PathBuf,
    /// JSON result; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Eigenvector table `t,v1,v2,...`
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Multiplies every residual tolerance
    #[arg(long = "tol-scale", default_value_t = 1.0)]
    pub tol_scale: f64,
}

/// Whether every residual contract held.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    ContractExceeded,
}

impl Outcome {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::ContractExceeded
        }
    }
}

fn ml(args: &MlArgs) -> CliResult<Outcome> {
    let trunc = abfrac::MLTruncation::default();
    let value = match (args.lambda, args.rho) {
        (Some(lam), rho) => {
            if !(args.z >= 0.0 && args.z.fract() == 0.0 && args.z <= u64::MAX as f64) {
                return Err(CliError::new(format!("--z: the discrete function needs a nonnegative integer, got {}", args.z)));
            }
            abfrac::discrete::discrete_ml3(args.alpha, args.beta, rho.unwrap_or(1.0), lam, args.z as u64, &trunc)?
        }
        (None, Some(rho)) => abfrac::ml_three(&abfrac::MLArgs::new(args.alpha, args.beta, rho, args.z)?, &trunc)?,
        (None, None) => abfrac::ml_two(args.alpha, args.beta, args.z, &trunc)?,
    };
    output::emit(None, format!("{value}\n").as_bytes())?;
    Ok(Outcome::Pass)
}

fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Ml(a) => ml(&a),
        Command::Apply(a) => apply::run(&a),
        Command::Verify(a) => suites::run(&a),
        Command::Slp(a) => slp::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::ContractExceeded) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
