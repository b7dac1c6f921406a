//! `riordan`: triangles, sub-array extraction, A-sequences, hypergeometric
//! expansions and identity checks over exact rationals.
//!
//! Exit status: 0 on success, 1 when a check finds a counterexample, 2 on a
//! usage or specification error.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact Riordan array and power series toolkit"
)]
pub struct Cli {
    /// Output format. Numbers are always exact decimal strings.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Working series precision. Defaults to what the command needs; a
    /// smaller value is rejected.
    #[arg(long, global = true)]
    pub precision: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the leading rows of a Riordan array.
    Triangle {
        #[command(flatten)]
        spec: TriangleSpec,
        #[arg(long, default_value_t = 6)]
        rows: usize,
    },
    /// Keep rows p*n + r of an array, shifted left by (p-1)*n + r.
    Extract {
        #[command(flatten)]
        spec: TriangleSpec,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Rows of the extracted array to print.
        #[arg(long)]
        rows: Option<usize>,
        /// Also recover the A-sequence of the extracted array and compare it
        /// with the p-th power of the base A-sequence.
        #[arg(long)]
        aseq: bool,
        /// Number of A-sequence terms.
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Recover the A-sequence of an array from its entries.
    Aseq {
        #[command(flatten)]
        spec: TriangleSpec,
        /// Triangle file: whitespace-separated rows, or JSON lines of
        /// `{"row": n, "entries": [...]}`. `-` reads standard input.
        #[arg(long, conflicts_with_all = ["builtin", "d", "a"])]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        terms: usize,
    },
    /// Check registered identities over a parameter grid.
    Check(CheckArgs),
    /// Expand scale^n (a_1)_n ... (a_p)_n / ((b_1)_n ... (b_q)_n n!) t^n.
    Hyper {
        /// Upper parameters, comma-separated rationals.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        upper: String,
        /// Lower parameters, comma-separated rationals.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        lower: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        scale: String,
        #[arg(long)]
        terms: Option<usize>,
    },
}

/// A built-in array by name, or an explicit first column `d` and A-sequence.
#[derive(Debug, Clone, Args)]
pub struct TriangleSpec {
    /// pascal, catalan42 or ballot43.
    #[arg(conflicts_with_all = ["d", "a"])]
    pub builtin: Option<String>,
    /// Coefficients of d(t), comma-separated; higher terms are zero.
    #[arg(long, requires = "a", allow_hyphen_values = true)]
    pub d: Option<String>,
    /// Coefficients of A(t), comma-separated; higher terms are zero.
    #[arg(long, requires = "d", allow_hyphen_values = true)]
    pub a: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    /// Identity id, as listed by --list.
    #[arg(required_unless_present_any = ["all", "list"], conflicts_with_all = ["all", "list"])]
    pub id: Option<String>,
    #[arg(long, conflicts_with = "list")]
    pub all: bool,
    /// List the registered identities with their formulas and parameters.
    #[arg(long)]
    pub list: bool,
    #[arg(long, alias = "n-max", default_value_t = 20)]
    pub max_n: usize,
    /// Comma-separated values; each overrides the entry's default sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub y: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub z: Option<String>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::exit_status(&e))
        }
    }
}
