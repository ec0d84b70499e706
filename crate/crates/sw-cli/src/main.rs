//! Command-line frontend: every computation is exposed as a reproducible
//! subcommand with machine-readable output (JSON by default, Markdown with
//! `--format md`), plus a one-shot verification suite.

mod render;
mod run;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "sw",
    version,
    about = "Exact fusion rings, Fuchsian connection data and Dotsenko-Fateev integrals \
             for the N=1 triplet superalgebra family"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Working precision in mantissa bits (>= 53)
    #[arg(long, global = true, default_value_t = 53)]
    pub precision: u32,
    /// Series length / quadrature depth selector
    #[arg(long, global = true)]
    pub terms: Option<usize>,
    /// Tolerance for pass/fail checks
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Seed for randomized property checks
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Md,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fusion products in the basis of simples and projective covers
    Fusion(FusionArgs),
    /// Chebyshev quotient-ring presentations and reduced bases
    Ring(RingArgs),
    /// Central charge, conformal weights, blocks and decompositions
    Weights(WeightsArgs),
    /// The fourth-order operator: coefficients, exponents, resonances
    Ode(OdeArgs),
    /// Connection matrix between the series bases at 0 and 1
    Connection(ConnectionArgs),
    /// Dotsenko-Fateev integrals and their identity checks
    Df(DfArgs),
    /// Run the verification checks applicable at the given parameter
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct FusionArgs {
    /// Family parameter m >= 1
    #[arg(long)]
    pub m: usize,
    /// Print the full basis multiplication table
    #[arg(long, default_value_t = false)]
    pub table: bool,
    /// Left factor, e.g. X2 or P1
    #[arg(long)]
    pub left: Option<String>,
    /// Right factor
    #[arg(long)]
    pub right: Option<String>,
}

#[derive(Args, Debug)]
pub struct RingArgs {
    #[arg(long)]
    pub m: usize,
    /// Which ring: the full one (P) or the composition-factor one (K)
    #[arg(long, default_value = "P")]
    pub kind: String,
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[arg(long)]
    pub m: usize,
    /// Truncation level of the decomposition listings
    #[arg(long, default_value_t = 3)]
    pub n_max: usize,
}

#[derive(Args, Debug)]
pub struct OdeArgs {
    #[arg(long)]
    pub m: usize,
}

#[derive(Args, Debug)]
pub struct ConnectionArgs {
    #[arg(long)]
    pub m: usize,
    /// Matching point in (0,1) as a fraction, e.g. 1/2
    #[arg(long, default_value = "1/2")]
    pub matching_point: String,
}

#[derive(Args, Debug)]
pub struct DfArgs {
    /// One of: region, forrester, transform, contour, series, locus, symmetry
    #[arg(long)]
    pub mode: String,
    /// Region label like +00, -10 (for region mode)
    #[arg(long)]
    pub region: Option<String>,
    /// Geometry kind for region mode: J (two-point) or I (three-point)
    #[arg(long, default_value = "J")]
    pub kind: String,
    /// Comma-separated key=value parameters, e.g. a1=-0.3,b1=-0.2,gamma=0.1
    #[arg(long, default_value = "")]
    pub params: String,
    #[arg(long, default_value_t = 1.0)]
    pub z1: f64,
    #[arg(long, default_value_t = 0.5)]
    pub z2: f64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub m: usize,
    /// Skip the quadrature-heavy identity checks
    #[arg(long, default_value_t = false)]
    pub quick: bool,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // usage problems exit 2; help/version exit 0
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if cli.precision < 53 {
        eprintln!("error: --precision must be at least 53 bits");
        std::process::exit(2);
    }
    if let Some(t) = cli.terms {
        if t < 16 {
            eprintln!("error: --terms must be at least 16");
            std::process::exit(2);
        }
    }
    match run::dispatch(&cli) {
        Ok(exit) => std::process::exit(exit),
        Err(msg) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
