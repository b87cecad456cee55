//! `invseries`: limited expansions, the Invert transform, Hankel determinants
//! and continuous iteration from the command line.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage error, 3 a size
//! budget was exceeded.

mod commands;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use invseries::hankel::Budget;

#[derive(Parser, Debug)]
#[command(
    name = "invseries",
    version,
    about = "Exact limited expansions and the Invert transform"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format; JSON goes to stdout, diagnostics to stderr.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,

    /// Largest symbolic determinant size.
    #[arg(long, global = true, env = "INVSERIES_MAX_SYMBOLIC", default_value_t = Budget::default().symbolic)]
    pub max_symbolic: usize,

    /// Largest numeric determinant size.
    #[arg(long, global = true, env = "INVSERIES_MAX_NUMERIC", default_value_t = Budget::default().numeric)]
    pub max_numeric: usize,
}

impl Global {
    pub fn budget(&self) -> Budget {
        Budget {
            symbolic: self.max_symbolic,
            numeric: self.max_numeric,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
}

/// An iteration count: an integer or the indeterminate `x`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Power {
    Int(i64),
    X,
}

impl FromStr for Power {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "x" => Ok(Power::X),
            other => other
                .parse()
                .map(Power::Int)
                .map_err(|_| format!("expected an integer or `x`, got `{other}`")),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The polynomials P_n = ⌊P_(n-1)·s⌋_n and Q_n(x) = x^n P_n(1/x).
    Pq(PqArgs),
    /// The Invert transform, its integer and continuous iterates.
    Invert(InvertArgs),
    /// Hankel transform det((s_(i+j+k)))_(n = 1..count).
    Hankel(HankelArgs),
    /// Iterates f^(∘k) and the continuous coefficients C_n(x) for f = t + a2 t^2 + ….
    Compose(ComposeArgs),
    /// Run the identity battery.
    Verify(VerifyArgs),
    /// Exploratory Hankel-determinant reports; never asserts.
    Conjecture(ConjectureArgs),
}

#[derive(Args, Debug)]
pub struct PqArgs {
    /// Use s = 1 + s1 x + s2 x^2 + … with symbolic coefficients.
    #[arg(long, conflicts_with = "series", required_unless_present = "series")]
    pub symbolic: bool,
    /// Coefficients s_0, s_1, … (s_0 must be 1), e.g. "1,1,1".
    #[arg(long)]
    pub series: Option<String>,
    #[arg(long, default_value_t = 4)]
    pub order: usize,
}

#[derive(Args, Debug)]
pub struct InvertArgs {
    /// Sequence a_0, a_1, … as rationals, e.g. "1,2,5/3".
    #[arg(long, conflicts_with = "symbolic")]
    pub seq: Option<String>,
    /// Use symbolic a0 … aN.
    #[arg(long)]
    pub symbolic: bool,
    /// Highest index; defaults to the length of --seq minus one, or 4.
    #[arg(long)]
    pub order: Option<usize>,
    /// Iteration count k in I^k (may be negative), or `x` for the continuous iterate.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub power: Power,
    /// Print the partition closed form of I_n(x) (a_0 = 1) instead.
    #[arg(long, conflicts_with_all = ["seq", "symbolic", "toeplitz"])]
    pub closed: bool,
    /// Treat the input as b = I(a) and recover a_n as Toeplitz determinants.
    #[arg(long)]
    pub toeplitz: bool,
}

#[derive(Args, Debug)]
pub struct HankelArgs {
    #[arg(
        long,
        conflicts_with = "symbolic",
        required_unless_present = "symbolic"
    )]
    pub seq: Option<String>,
    /// Use symbolic s0 … sN.
    #[arg(long)]
    pub symbolic: bool,
    /// Index N for --symbolic; defaults to the smallest one that fits.
    #[arg(long)]
    pub order: Option<usize>,
    /// Number of determinants; defaults to as many as the input allows.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub shift: usize,
}

#[derive(Args, Debug)]
pub struct ComposeArgs {
    /// `a` for symbolic a2 … aN, or the numeric list a_2, a_3, ….
    #[arg(long)]
    pub coeffs: String,
    /// Truncation order N; defaults to 4 (symbolic) or the list length + 1.
    #[arg(long)]
    pub order: Option<usize>,
    /// Integer k for f^(∘k), or `x` for the C_n(x).
    #[arg(long, default_value = "x", allow_hyphen_values = true)]
    pub power: Power,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only the named checks (repeatable); `--only list` prints the names.
    #[arg(long)]
    pub only: Vec<String>,
    #[arg(long, default_value_t = 8)]
    pub order: usize,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest partition weight for the R_ν identity.
    #[arg(long, default_value_t = 6)]
    pub weight: u32,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    I,
    Ii,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long, default_value_t = 2)]
    pub kmax: usize,
    #[arg(long, default_value_t = 3)]
    pub nmax: usize,
    /// Numeric sequence for (i); symbolic a0 … aN when absent.
    #[arg(long)]
    pub seq: Option<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] invseries::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(invseries::Error::Budget { .. }) => 3,
            _ => 2,
        }
    }
}

/// What a command prints: the same data as text and as JSON.
pub struct Output {
    pub pretty: String,
    pub json: serde_json::Value,
    /// Nonzero when the command itself signals failure (identity mismatch).
    pub code: u8,
}

impl Output {
    pub fn ok(pretty: String, json: serde_json::Value) -> Self {
        Output {
            pretty,
            json,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Pq(a) => commands::pq(a),
        Command::Invert(a) => commands::invert(a),
        Command::Hankel(a) => commands::hankel(a, g),
        Command::Compose(a) => commands::compose(a),
        Command::Verify(a) => verify::run(a, g),
        Command::Conjecture(a) => commands::conjecture(a, g),
    };
    match result {
        Ok(out) => {
            match g.format {
                Format::Pretty => print!("{}", out.pretty),
                Format::Json => println!("{}", out.json),
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Lib(invseries::Error::Budget { .. }) = e {
                eprintln!("hint: raise INVSERIES_MAX_SYMBOLIC / INVSERIES_MAX_NUMERIC to allow larger sizes");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
