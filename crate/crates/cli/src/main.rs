//! `mlstab` command-line front end.

mod commands;
mod config;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::Settings;

/// Failure with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn solver(message: impl Into<String>) -> Self {
        Self { code: 3, message: message.into() }
    }

    pub fn tolerance(message: impl Into<String>) -> Self {
        Self { code: 4, message: message.into() }
    }

    pub fn io(e: std::io::Error, what: &str) -> Self {
        Self { code: 1, message: format!("{what}: {e}") }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<mlstab::Error> for CliError {
    fn from(e: mlstab::Error) -> Self {
        use mlstab::Error::*;
        match e {
            InvalidParameter(_) | UnsupportedScheme(_) | UnsupportedGamma(_) | InsufficientRange(_) | DimensionMismatch(_) => {
                Self::usage(e.to_string())
            }
            _ => Self::solver(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "mlstab", version, about = "Fractional ODE schemes and long-time decay diagnostics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weight tables n, mu, omega, sigma of one scheme.
    Weights(Flags),
    /// Run a scheme on a named problem and report the decay index.
    Solve(Flags),
    /// Recompute a reference index table (T2..T7).
    Reproduce {
        /// Table id: T2, T3, T4, T5, T6 or T7.
        table: String,
        #[command(flatten)]
        flags: Flags,
    },
    /// Stability region boundary of a scheme.
    Region(Flags),
    /// Discrete resolvents of a problem's linear part.
    Resolvent(Flags),
}

#[derive(Args, Debug, Default, Clone)]
struct Flags {
    /// key=value file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    scheme: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long)]
    h: Option<f64>,
    #[arg(long = "t-end")]
    t_end: Option<f64>,
    #[arg(long = "n-steps")]
    n_steps: Option<usize>,
    /// Number of weight terms.
    #[arg(long)]
    n: Option<usize>,
    /// scalar, advdiff, lorenz or linear.
    #[arg(long)]
    problem: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long = "D")]
    d: Option<f64>,
    #[arg(long)]
    nx: Option<usize>,
    /// Lorenz feedback on or off.
    #[arg(long)]
    control: Option<bool>,
    /// Eigenvalue of the linear problem as `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Index offset of p_alpha.
    #[arg(long)]
    m: Option<usize>,
    /// Comma-separated times at which p_alpha is reported.
    #[arg(long)]
    checkpoints: Option<String>,
    /// exact or lagged.
    #[arg(long)]
    alignment: Option<String>,
    /// Output directory; nothing is written to disk without it.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    tolerance: Option<f64>,
    #[arg(long = "n-theta")]
    n_theta: Option<usize>,
    #[arg(long = "n-terms")]
    n_terms: Option<usize>,
    /// Also write an SVG of the region boundary.
    #[arg(long)]
    svg: bool,
}

impl Flags {
    fn settings(&self) -> Result<Settings, CliError> {
        let mut s = match &self.config {
            Some(path) => Settings::load(path)?,
            None => Settings::default(),
        };
        s.overlay("scheme", self.scheme.as_ref());
        s.overlay("alpha", self.alpha);
        s.overlay("h", self.h);
        s.overlay("t-end", self.t_end);
        s.overlay("n-steps", self.n_steps);
        s.overlay("n", self.n);
        s.overlay("problem", self.problem.as_ref());
        s.overlay("b", self.b);
        s.overlay("a", self.a);
        s.overlay("D", self.d);
        s.overlay("nx", self.nx);
        s.overlay("control", self.control);
        s.overlay("lambda", self.lambda.as_ref());
        s.overlay("m", self.m);
        s.overlay("checkpoints", self.checkpoints.as_ref());
        s.overlay("alignment", self.alignment.as_ref());
        s.overlay("out", self.out.as_ref().map(|p| p.display().to_string()));
        s.overlay("tolerance", self.tolerance);
        s.overlay("n-theta", self.n_theta);
        s.overlay("n-terms", self.n_terms);
        s.overlay("svg", self.svg.then_some(true));
        Ok(s)
    }
}

fn configure_threads() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("MLSTAB_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| CliError::usage(format!("MLSTAB_THREADS must be a positive integer, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::usage(format!("cannot size thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_threads()?;
    match cli.command {
        Command::Weights(f) => commands::weights(&f.settings()?),
        Command::Solve(f) => commands::solve(&f.settings()?),
        Command::Reproduce { table, flags } => commands::reproduce(&table, &flags.settings()?),
        Command::Region(f) => commands::region(&f.settings()?),
        Command::Resolvent(f) => commands::resolvent(&f.settings()?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("mlstab: {e}");
            ExitCode::from(e.code)
        }
    }
}
