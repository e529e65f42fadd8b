//! Command-line front end: argument parsing, config resolution, report and
//! CSV emission, and the scripted acceptance suite.
//!
//! Exit codes: 0 all checks pass, 1 an inequality/verdict check failed,
//! 2 configuration or usage error, 3 a solver did not converge.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub mod commands;
pub mod config;
pub mod report;
pub mod suite;

#[derive(Parser)]
#[command(
    name = "trigapprox",
    version,
    about = "Norms, best approximation, smoothness moduli, and sharp Jackson-type \
             constants over Fourier coefficient windows"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Luxemburg and Orlicz norms of a coefficient window
    Norm(NormArgs),
    /// Best-approximation errors E_n (tail norms) up to a degree
    Bestapprox(BestApproxArgs),
    /// Generalized modulus of smoothness at a step cap
    Modulus(ModulusArgs),
    /// Sharp Jackson-type constant with its extremal mix and measure
    Jackson(JacksonArgs),
    /// Check E_n <= K * omega(tau/n) over a degree range
    VerifyDirect(VerifyDirectArgs),
    /// Check omega at tau/n against the weighted best-approximation sum
    VerifyInverse(VerifyInverseArgs),
    /// Decay-rate fits or majorant-class membership
    Classify(ClassifyArgs),
    /// Run the scripted acceptance suite
    Suite(SuiteArgs),
}

#[derive(Args, Clone, Default)]
pub struct CommonArgs {
    /// Config file: flat `key = value` with [section] headers
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Also write the CSV here (config key: [run] out)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Norm kind: luxemburg | orlicz
    #[arg(long)]
    pub kind: Option<String>,
    /// Coefficient rule: delta | geometric | powerdecay | lacunary | explicit | samples
    #[arg(long)]
    pub rule: Option<String>,
    /// Two-sided window half-width
    #[arg(long)]
    pub window: Option<usize>,
    /// delta rule: the one nonzero frequency
    #[arg(long)]
    pub k0: Option<i64>,
    /// geometric rule: ratio in (0, 1)
    #[arg(long)]
    pub ratio: Option<f64>,
    /// powerdecay rule: decay exponent s
    #[arg(long)]
    pub decay: Option<f64>,
    /// samples rule: file of `x real imag` lines on the uniform grid over [0, 2 pi)
    #[arg(long)]
    pub sample_file: Option<PathBuf>,
    /// Space exponent: family p, and the game's p for `jackson`
    #[arg(long)]
    pub p: Option<f64>,
    /// Classical multiplier order alpha
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Step-cap scale tau; the literal `pi` is accepted
    #[arg(long)]
    pub tau: Option<String>,
    /// Step-grid resolution for modulus suprema
    #[arg(long)]
    pub h_grid: Option<usize>,
}

#[derive(Args, Default)]
pub struct NormArgs {
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Default)]
pub struct BestApproxArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Highest degree to report (default: window + 1)
    #[arg(long)]
    pub n_max: Option<usize>,
}

#[derive(Args, Default)]
pub struct ModulusArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Step cap delta; the literal `pi` is accepted (default: tau)
    #[arg(long)]
    pub delta: Option<String>,
}

#[derive(Args, Default)]
pub struct JacksonArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Degree of the approximating polynomials' index
    #[arg(long)]
    pub n: Option<usize>,
    /// Node grid for the discretized game
    #[arg(long)]
    pub grid: Option<usize>,
    /// Highest frequency offered to the game (default: 64 n)
    #[arg(long)]
    pub j_max: Option<usize>,
    /// Re-solve at doubled grid and doubled j_max and report both values
    #[arg(long)]
    pub sensitivity: bool,
    /// Uniform-measure cross-check with this many nodes (0 skips it)
    #[arg(long)]
    pub measure_m: Option<usize>,
    /// Two-stage extremal-function search with this pair budget (0 skips it)
    #[arg(long)]
    pub sharpness: Option<usize>,
}

#[derive(Args, Default)]
pub struct VerifyDirectArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// First degree to check
    #[arg(long)]
    pub n: Option<usize>,
    /// Last degree to check (default: n)
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Node grid for game-derived constants
    #[arg(long)]
    pub grid: Option<usize>,
    /// Highest frequency offered to the game
    #[arg(long)]
    pub j_max: Option<usize>,
    /// Inequality form: auto | lp | orlicz
    #[arg(long)]
    pub form: Option<String>,
    /// Constant source: lp | uniform:M | fixed:C
    #[arg(long)]
    pub source: Option<String>,
    /// Shorthand for `--source fixed:C` (fault injection)
    #[arg(long)]
    pub constant: Option<f64>,
}

#[derive(Args, Default)]
pub struct VerifyInverseArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// First degree to check
    #[arg(long)]
    pub n: Option<usize>,
    /// Last degree to check (default: n)
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Use the order-alpha corollary weights instead of the general form
    #[arg(long)]
    pub corollary: bool,
}

#[derive(Args, Default)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// rates | membership
    #[arg(long)]
    pub mode: Option<String>,
    /// Membership majorant: power:R | powerlog:R
    #[arg(long)]
    pub majorant: Option<String>,
    /// Membership scan depth
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Comma-separated degree ladder for rate fits
    #[arg(long)]
    pub degrees: Option<String>,
    /// Expected verdict: bounded | growing (exit 1 on mismatch)
    #[arg(long)]
    pub expect: Option<String>,
}

#[derive(Args, Default)]
pub struct SuiteArgs {
    /// Base seed for every randomized criterion
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for per-criterion CSVs
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Comma-separated criterion ids to run (default: all)
    #[arg(long)]
    pub only: Option<String>,
}

pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Norm(a) => commands::norm(a),
        Command::Bestapprox(a) => commands::bestapprox(a),
        Command::Modulus(a) => commands::modulus_cmd(a),
        Command::Jackson(a) => commands::jackson(a),
        Command::VerifyDirect(a) => commands::verify_direct_cmd(a),
        Command::VerifyInverse(a) => commands::verify_inverse_cmd(a),
        Command::Classify(a) => commands::classify(a),
        Command::Suite(a) => suite::run(a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
