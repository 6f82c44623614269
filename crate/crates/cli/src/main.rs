//! `k0ring`: command-line access to the Grothendieck ring of `SL2(F_q)`.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Failure, Report};

#[derive(Parser, Debug)]
#[command(name = "k0ring", version, about = "Exact computations in K0(SL2(F_q)) = Z[x]/(f^[g](x) - x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized trials; echoed in every record.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest q = p^g any command will accept.
    #[arg(long, global = true, env = "K0RING_Q_CAP", default_value_t = 100_000)]
    pub q_cap: u64,
    /// Write the record to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub g: u32,
}

/// One ring element: a symmetric power class, a Steinberg tuple product or
/// an explicit polynomial in `x`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct EltArgs {
    /// The class M_k of the k-th symmetric power.
    #[arg(long, allow_negative_numbers = true)]
    pub sym: Option<i64>,
    /// Comma-separated k_0,k_1,... meaning M_{k_0} (x) M_{k_1}^[1] (x) ...
    #[arg(long)]
    pub tuple: Option<String>,
    /// A polynomial in x, such as "x^3 - 2*x" or "[0,-2,0,1]".
    #[arg(long)]
    pub poly: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print f, f^[g] and the modulus f^[g](x) - x.
    Present(FieldArgs),
    /// Composition factors in the Steinberg basis.
    Decompose {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        elt: EltArgs,
        /// Allow negative indices and skip the check that the result is an
        /// actual module.
        #[arg(long = "virtual")]
        virtual_: bool,
    },
    /// Check the defining identities, at given indices or at random ones.
    Verify(commands::VerifyArgs),
    /// Apply the Frobenius twist M -> M^[i].
    Twist {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        elt: EltArgs,
        #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
        i: i64,
    },
    /// Structure of the ring modulo p.
    Modp(FieldArgs),
    /// Rational and real roots of f(x) - x.
    Roots {
        #[arg(long)]
        p: u64,
        /// Search bound for integer roots.
        #[arg(long, default_value_t = 2)]
        bound: u64,
    },
    /// Formal character of an element.
    Char {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        elt: EltArgs,
    },
    /// Compare two elements through their Brauer characters.
    CharEqual(commands::CharEqualArgs),
    /// Run every check over a grid of fields.
    Sweep(commands::GridArgs),
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let g = &cli.global;
    match &cli.command {
        Command::Present(f) => commands::present(f, g),
        Command::Decompose { field, elt, virtual_ } => commands::decompose_cmd(field, elt, *virtual_, g),
        Command::Verify(args) => commands::verify(args, g),
        Command::Twist { field, elt, i } => commands::twist(field, elt, *i, g),
        Command::Modp(f) => commands::modp(f, g),
        Command::Roots { p, bound } => commands::roots(*p, *bound, g),
        Command::Char { field, elt } => commands::character(field, elt, g),
        Command::CharEqual(args) => commands::char_equal(args, g),
        Command::Sweep(args) => commands::sweep(args, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => match report.emit(&cli.global) {
            Ok(()) if report.ok => ExitCode::SUCCESS,
            Ok(()) => ExitCode::from(1),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
