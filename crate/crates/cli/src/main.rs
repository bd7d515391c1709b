//! `cantab`: Cantorian tableaux from the command line.

mod commands;

use std::process::ExitCode;

use cantor_tableaux::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "cantab", version, about = "Exact enumeration of Cantorian and bi-Cantorian tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    pub format: Format,

    /// Worker threads for census runs (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,

    /// Largest orbit or class expansion to materialize.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_orbit: Option<u64>,

    /// Largest s^(n^2) for exhaustive enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_cells: Option<u64>,

    /// Wall-clock limit in seconds for census runs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub time_budget: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cantorian and bi-Cantorian verdicts for a tableau.
    Check {
        /// Tableau file, `-` for stdin, or an inline tableau such as `12/21`.
        input: String,
        /// Alphabet size for inline tableaux.
        #[arg(short, long)]
        alphabet: Option<usize>,
        /// Show the offending word and the rows realizing it.
        #[arg(long)]
        witness: bool,
    },
    /// The permanent of a tableau, or membership of one word.
    Permanent {
        input: String,
        #[arg(short, long)]
        alphabet: Option<usize>,
        /// Word to test, e.g. `121`.
        #[arg(long)]
        word: Option<String>,
    },
    /// Minimal reduced form of a tableau.
    Reduce {
        input: String,
        #[arg(short, long)]
        alphabet: Option<usize>,
    },
    /// Class invariant, orbit data and class size.
    Classify {
        input: String,
        #[arg(short, long)]
        alphabet: Option<usize>,
    },
    /// Cantorian classes and totals for n x n tableaux over s letters.
    Census {
        n: usize,
        s: usize,
        /// Also count bi-Cantorian tableaux.
        #[arg(long)]
        bicantorian: bool,
        /// List every class in plain output.
        #[arg(long)]
        classes: bool,
    },
    /// Bi-Cantorian total.
    Bicensus { n: usize, s: usize },
    /// Classes of the bi-Cantorian set under ~b.
    Bclasses { n: usize, s: usize },
    /// Colored hypergraph of a tableau.
    Hypergraph {
        input: String,
        #[arg(short, long)]
        alphabet: Option<usize>,
    },
    /// Cross-checks against brute force and the published tables.
    Verify {
        #[arg(value_enum, default_value = "quick")]
        level: Level,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Quick,
    Full,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Refusal(_) => 3,
        Error::Internal(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("cantab: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
