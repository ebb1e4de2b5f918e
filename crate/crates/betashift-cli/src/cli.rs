//! Argument surface: subcommands and their shared flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

const EXIT_HELP: &str = "Exit codes:\n  0  success\n  2  usage error\n  3  domain error (bad value, spec, digits, or config)\n  4  divergence guard (a series tail could not be certified)\n  5  consistency failure (internal check or oracle suite)\n  6  i/o error";

#[derive(Parser, Debug)]
#[command(
    name = "betashift",
    version,
    about = "Transfer-operator analysis of beta-shifts on two symbols",
    after_help = EXIT_HELP
)]
pub struct Cli {
    /// JSON config file with default flag values (falls back to the path
    /// in the BETASHIFT_CONFIG environment variable). Explicit flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Leading eigenvalue, pressure, and error bound over a t-grid
    Lambda(JobArgs),
    /// Dimension spectrum sweep: t-rows (t, lambda, pressure, alpha, dim)
    /// or, with --alpha-grid, rows (alpha, dim, t, extrapolated)
    DimSweep(JobArgs),
    /// Eigenmeasure distribution function D_t (--t) or F_p (--p) on an x-grid
    Distfn(JobArgs),
    /// Generalized Takagi function on an x-grid
    Takagi(JobArgs),
    /// Cross-validation suite: enumeration counts, brute-force pressure,
    /// eigenmeasure recursion, eigenfunction equation
    Oracle(JobArgs),
    /// Maximal digit-1 frequency report: run-length bounds, exact family
    /// values, numeric estimate
    Cbeta(JobArgs),
    /// Subleading zeros of the eigenvalue series and the mixing-rate bound
    Zeros(JobArgs),
}

impl Command {
    pub fn job(&self) -> &JobArgs {
        match self {
            Command::Lambda(j)
            | Command::DimSweep(j)
            | Command::Distfn(j)
            | Command::Takagi(j)
            | Command::Oracle(j)
            | Command::Cbeta(j)
            | Command::Zeros(j) => j,
        }
    }
}

#[derive(Args, Debug, Default, Clone)]
pub struct JobArgs {
    /// Numeric beta in (1, 2]
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,

    /// Integer coefficients c_0,c_1,...,c_d of c_0 + c_1 x + ... + c_d x^d;
    /// beta is the unique root in (1, 2]
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1..)]
    pub poly: Option<Vec<i64>>,

    /// Named family: dyadic | golden | tribonacci | multinacci-N | parry-M
    #[arg(long)]
    pub family: Option<String>,

    /// Digit override for the expansion of 1: "11(01)" is preperiod 11 with
    /// period 01; a plain word like "1101" means the word followed by zeros
    #[arg(long)]
    pub digits: Option<String>,

    /// Single t value
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,

    /// Linear t-grid LO:HI:N; default is a geometric 257-point grid on
    /// [-12, 12] refined near 0
    #[arg(long = "t-grid", allow_hyphen_values = true)]
    pub t_grid: Option<String>,

    /// Linear frequency grid LO:HI:N for dim-sweep inversion targets
    #[arg(long = "alpha-grid", allow_hyphen_values = true)]
    pub alpha_grid: Option<String>,

    /// Bernoulli parameter p in (0, 1): distfn emits F_p instead of D_t
    #[arg(long)]
    pub p: Option<f64>,

    /// Linear x-grid LO:HI:N on [0, 1]; default 0:1:257
    #[arg(long = "x-grid", allow_hyphen_values = true)]
    pub x_grid: Option<String>,

    /// Solver tolerance, at least 1e-13
    #[arg(long)]
    pub tol: Option<f64>,

    /// Series truncation depth
    #[arg(long)]
    pub depth: Option<usize>,

    /// CSV output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// SVG output path for the command's curve
    #[arg(long)]
    pub svg: Option<PathBuf>,
}
